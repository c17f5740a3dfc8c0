#include "jaclef/field.hpp"

#include <charconv>

#include "jaclef/errors.hpp"

namespace jaclef {

namespace {

constexpr std::uint64_t kPrimeLow = 1ULL << 30;
constexpr std::uint64_t kPrimeHigh = 1ULL << 31;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic for 64-bit inputs
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint32_t next_prime(std::uint64_t start) {
  for (std::uint64_t n = start;; ++n) {
    if (is_prime(n)) return static_cast<std::uint32_t>(n);
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint32_t draw_prime(std::uint64_t seed) {
  std::uint64_t span = kPrimeHigh - kPrimeLow - 1024;
  std::uint64_t start = kPrimeLow + 1 + splitmix64(seed) % span;
  return next_prime(start);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error("inverse of zero in F_p");
  return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

std::uint32_t reduce_mod(const Scalar& x, std::uint32_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class den = x.get_den() % pz;
  if (den == 0) {
    throw BadPrimeError("prime " + std::to_string(p) + " divides a denominator");
  }
  mpz_class num = x.get_num() % pz;
  if (num < 0) num += pz;
  auto n = static_cast<std::uint64_t>(num.get_ui());
  auto dinv = inverse_mod(static_cast<std::uint32_t>(den.get_ui()), p);
  return static_cast<std::uint32_t>(n * dinv % p);
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (p <= kPrimeLow || p >= kPrimeHigh || !is_prime(p)) {
    throw PreconditionError("prime field needs a prime p with 2^30 < p < 2^31, got " +
                            std::to_string(p));
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "qq") return rationals();
  if (text.starts_with("fp:")) {
    std::uint64_t p = 0;
    auto body = text.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size()) {
      throw ParseError("bad prime in field spec '" + std::string(text) + "'");
    }
    return prime_field(static_cast<std::uint32_t>(p));
  }
  throw ParseError("unknown field spec '" + std::string(text) + "' (expected qq or fp:<p>)");
}

Scalar FieldSpec::normalize(const Scalar& x) const {
  if (is_rational()) {
    Scalar q = x;  // values built as mpq_class(a, b) are not reduced
    q.canonicalize();
    return q;
  }
  return Scalar(static_cast<unsigned long>(reduce_mod(x, p_)));
}

Scalar FieldSpec::inverse(const Scalar& x) const {
  if (x == 0) throw Error("division by zero");
  if (is_rational()) return 1 / x;
  return Scalar(static_cast<unsigned long>(inverse_mod(reduce_mod(x, p_), p_)));
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("qq") : "fp:" + std::to_string(p_);
}

}  // namespace jaclef
