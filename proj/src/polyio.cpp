#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "melnik/poly.hpp"

namespace melnik {

namespace {

std::string term_str(const Ctx& ctx, const Exps& e, const Rational& c,
                     bool leading) {
  std::ostringstream os;
  Rational a = c.abs();
  if (leading) {
    if (c.sign() < 0) os << "-";
  }
  bool constant = true;
  for (int k = 0; k < ctx->size(); ++k)
    if (e[k] != 0) constant = false;
  bool needCoef = constant || !a.is_one();
  if (needCoef) os << a.str();
  bool first = !needCoef;
  for (int k = 0; k < ctx->size(); ++k) {
    if (e[k] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << ctx->name(k);
    if (e[k] > 1) os << "^" << e[k];
  }
  return os.str();
}

}  // namespace

std::string MPoly::str(const MonomialOrder& ord) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exps, Rational>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](auto* a, auto* b) { return ord.less(b->first, a->first); });
  std::ostringstream os;
  for (size_t i = 0; i < sorted.size(); ++i) {
    const auto& [e, c] = *sorted[i];
    if (i == 0) {
      os << term_str(ctx_, e, c, true);
    } else {
      os << (c.sign() < 0 ? " - " : " + ") << term_str(ctx_, e, c, false);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) {
  return os << p.str();
}

namespace {

// Recursive-descent parser. Accepts the canonical text form plus
// parenthesized expressions, e.g. "3/4*x^2*y - (x + 1)*(x - 1)".
class Parser {
 public:
  Parser(const Ctx& ctx, const std::string& s) : ctx_(ctx), s_(s) {}

  MPoly parse() {
    MPoly r = expr();
    skip_ws();
    if (pos_ != s_.size())
      fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("MPoly::parse: " + msg + " at position " +
                                std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  MPoly expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    MPoly acc = product();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+'))
        acc += product();
      else if (eat('-'))
        acc -= product();
      else
        break;
    }
    return acc;
  }

  MPoly product() {
    MPoly acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  MPoly power() {
    MPoly base = atom();
    if (eat('^')) {
      int e = read_uint();
      base = base.pow(e);
    }
    return base;
  }

  MPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_atom();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return var_atom();
    fail(std::string("unexpected character '") + c + "'");
  }

  int read_uint() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  MPoly rational_atom() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    std::string num = s_.substr(start, pos_ - start);
    std::string text = num;
    size_t save = pos_;
    if (eat('/')) {
      skip_ws();
      size_t dstart = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (dstart == pos_) {
        pos_ = save;  // "/" belonged to something else; not valid here anyway
      } else {
        text += "/" + s_.substr(dstart, pos_ - dstart);
      }
    }
    return MPoly::constant(ctx_, Rational(text));
  }

  MPoly var_atom() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (!ctx_->has(name)) fail("unknown variable '" + name + "'");
    return MPoly::variable(ctx_, name);
  }

  const Ctx& ctx_;
  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

MPoly MPoly::parse(const Ctx& ctx, const std::string& text) {
  return Parser(ctx, text).parse();
}

}  // namespace melnik
