#pragma once

// Coefficient fields: prime residues and arbitrary-precision rationals.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace sing {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Residues modulo a prime p, stored in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;
  static constexpr bool kExact = true;
  static constexpr bool kModular = true;

  explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
    if (p <= 20000 || p >= (1u << 31) || !is_prime(p)) {
      throw FieldError("prime field modulus must be a prime in (20000, 2^31): " + std::to_string(p));
    }
  }

  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "p:" + std::to_string(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Element inv(Element a) const {
    if (a == 0) throw FieldError("division by zero in " + name());
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }
  Element from_rational(const mpq_class& q) const {
    mpz_class num = q.get_num() % p_;
    mpz_class den = q.get_den() % p_;
    if (num < 0) num += p_;
    if (den == 0) throw FieldError("denominator vanishes modulo " + std::to_string(p_));
    return div(static_cast<Element>(num.get_ui()), static_cast<Element>(den.get_ui()));
  }

  /// Symmetric representative, used for printing.
  std::string to_string(Element a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }
  bool is_negative(Element a) const { return a > p_ / 2; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  std::uint32_t p_;
};

/// The rational numbers; values are kept canonical (lowest terms, positive denominator) by GMP.
class RationalField {
 public:
  using Element = mpq_class;
  static constexpr bool kExact = true;
  static constexpr bool kModular = false;

  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "q"; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw FieldError("division by zero in q");
    return Element(1) / a;
  }
  Element div(const Element& a, const Element& b) const {
    if (sgn(b) == 0) throw FieldError("division by zero in q");
    return a / b;
  }

  Element from_int(std::int64_t v) const { return Element(mpz_class(std::to_string(v))); }
  Element from_rational(const mpq_class& q) const { return q; }

  std::string to_string(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  bool operator==(const RationalField&) const { return true; }
};

}  // namespace sing
