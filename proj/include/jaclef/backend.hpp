#pragma once

#include <cstdint>
#include <string>

#include "jaclef/field.hpp"

namespace jaclef {

/// Arithmetic in F_p for a word-size prime, Barrett-reduced.
struct ModP {
  using Elem = std::uint32_t;

  explicit ModP(std::uint32_t prime)
      : p(prime), barrett(~std::uint64_t{0} / prime) {}

  std::uint32_t p;
  std::uint64_t barrett;  // floor((2^64 - 1) / p)

  Elem reduce(std::uint64_t x) const {
    auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett) >> 64);
    std::uint64_t r = x - q * p;
    while (r >= p) r -= p;
    return static_cast<Elem>(r);
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return reduce(static_cast<std::uint64_t>(a) * b); }
  /// a - c*b
  Elem submul(Elem a, Elem c, Elem b) const { return sub(a, mul(c, b)); }
  Elem inv(Elem a) const { return inverse_mod(a, p); }

  Elem from(const Scalar& x) const { return reduce_mod(x, p); }
  Scalar to_scalar(Elem a) const { return Scalar(static_cast<unsigned long>(a)); }
  FieldSpec field() const { return FieldSpec::prime_field(p); }
  std::string name() const { return "fp:" + std::to_string(p); }
};

/// Exact rational arithmetic.
struct QQ {
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem submul(const Elem& a, const Elem& c, const Elem& b) const { return a - c * b; }
  Elem inv(const Elem& a) const { return 1 / a; }

  Elem from(const Scalar& x) const { return x; }
  Scalar to_scalar(const Elem& a) const { return a; }
  FieldSpec field() const { return FieldSpec::rationals(); }
  std::string name() const { return "qq"; }
};

}  // namespace jaclef
