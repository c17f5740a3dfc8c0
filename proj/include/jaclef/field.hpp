#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace jaclef {

using Scalar = mpq_class;

/// Coefficient field: the rationals or a word-size prime field F_p with
/// 2^30 < p < 2^31. Elements of F_p are stored as canonical integers in [0, p).
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime_field(std::uint32_t p);
  /// Accepts "qq" or "fp:<p>".
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t prime() const { return p_; }

  /// Canonical representative of x in this field.
  Scalar normalize(const Scalar& x) const;
  Scalar inverse(const Scalar& x) const;

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);
std::uint32_t next_prime(std::uint64_t start);

/// Deterministic prime in (2^30, 2^31) derived from a seed.
std::uint32_t draw_prime(std::uint64_t seed);

/// x mod p for a rational x; throws BadPrimeError when p divides the denominator.
std::uint32_t reduce_mod(const Scalar& x, std::uint32_t p);

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace jaclef
