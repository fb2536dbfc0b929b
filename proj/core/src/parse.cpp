#include <cctype>

#include "fibfull/error.hpp"
#include "fibfull/poly.hpp"

namespace fibfull {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& names)
      : s_(text), names_(names), n_(names.size()) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("cannot parse polynomial '" + s_ + "' at column " + std::to_string(pos_ + 1) +
                     ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Poly expr() {
    Poly acc(n_);
    bool first = true;
    while (true) {
      skip();
      bool neg = false;
      if (peek('+') || peek('-')) {
        neg = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Poly t = term();
      acc += neg ? -t : t;
      first = false;
      if (!peek('+') && !peek('-')) break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (peek('/')) {
        ++pos_;
        Poly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by a nonzero constant");
        acc = acc.scaled(d.terms()[0].coef.inverse());
      } else if (starts_atom()) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(s_.substr(start, pos_ - start));
      Poly r = Poly::constant(n_, Scalar(1));
      for (unsigned long k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(s_.substr(start, pos_ - start));
      return Poly::constant(n_, Scalar(mpq_class(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      // Longest variable name match, so x1 and x10 are distinguished.
      std::size_t best = names_.size(), best_len = 0;
      for (std::size_t i = 0; i < names_.size(); ++i) {
        const auto& nm = names_[i];
        if (nm.size() > best_len && s_.compare(pos_, nm.size(), nm) == 0) {
          std::size_t after = pos_ + nm.size();
          bool boundary = after >= s_.size() ||
                          !(std::isdigit(static_cast<unsigned char>(s_[after])) && nm.back() != '_' &&
                            std::isdigit(static_cast<unsigned char>(nm.back())));
          if (boundary) {
            best = i;
            best_len = nm.size();
          }
        }
      }
      if (best == names_.size()) {
        std::size_t end = pos_;
        while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
        fail("unknown variable '" + s_.substr(pos_, end - pos_) + "'");
      }
      pos_ += best_len;
      return Poly::variable(n_, best);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const std::vector<std::string>& names_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

}  // namespace fibfull
