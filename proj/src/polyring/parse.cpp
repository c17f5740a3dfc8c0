#include <cctype>
#include <optional>
#include <sstream>

#include "jaclef/errors.hpp"
#include "jaclef/poly.hpp"

namespace jaclef {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int num_vars) : text_(text), num_vars_(num_vars) {}

  struct Term {
    Scalar coeff;
    Exponent exponent;
  };

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = next() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_term();
      t.coeff *= sign;
      terms.push_back(std::move(t));
      first = false;
      skip_ws();
    }
    return terms;
  }

 private:
  Term parse_term() {
    Term t{Scalar(1), Exponent(num_vars_, 0)};
    bool any = false;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= parse_number();
      } else if (c == 'x') {
        ++pos_;
        int var = static_cast<int>(parse_uint("variable index"));
        if (var >= num_vars_) {
          fail("variable x" + std::to_string(var) + " out of range for " +
               std::to_string(num_vars_) + " variables");
        }
        long e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_uint("exponent");
        }
        t.exponent[var] += static_cast<int>(e);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("missing term");
    return t;
  }

  Scalar parse_number() {
    mpz_class num(parse_digits("coefficient"));
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      mpz_class den(parse_digits("denominator"));
      if (den == 0) fail("zero denominator");
      Scalar q(num, den);
      q.canonicalize();
      return q;
    }
    return Scalar(num);
  }

  std::string parse_digits(const char* what) {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  long parse_uint(const char* what) {
    std::string digits = parse_digits(what);
    if (digits.size() > 6) fail(std::string(what) + " too large");
    return std::stol(digits);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char next() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  int num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

HomogeneousPoly parse_poly(std::string_view text, int num_vars, const FieldSpec& field) {
  if (num_vars < 1) throw PreconditionError("need at least one variable");
  auto terms = Parser(text, num_vars).parse();
  std::optional<int> degree;
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    int deg = 0;
    for (int e : t.exponent) deg += e;
    if (degree && *degree != deg) {
      throw ParseError("inhomogeneous polynomial: terms of degree " + std::to_string(*degree) +
                       " and " + std::to_string(deg));
    }
    degree = deg;
  }
  HomogeneousPoly f(num_vars, degree.value_or(0), field);
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    f.add_term(t.exponent, t.coeff);
  }
  return f;
}

std::string to_string(const HomogeneousPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    bool wrote = false;
    if (mag != 1 || constant) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << '*';
      out << 'x' << i;
      if (e[i] > 1) out << '^' << e[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace jaclef
