#pragma once

// Packed monomials in at most 15 variables and the monomial orders used on them.
//
// A monomial occupies 16 byte lanes in two big-endian 64-bit words.  Lane 0 holds
// the total degree; lane 15 - i holds the exponent of variable i.  Every lane must
// stay below 128, which lets divisibility and lcm run lane-parallel on whole words.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sing {

inline constexpr int kMaxVars = 15;
inline constexpr int kMaxDegree = 127;

class MonomialOverflow : public std::overflow_error {
 public:
  MonomialOverflow() : std::overflow_error("monomial degree exceeds 127") {}
};

class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial from_exponents(std::span<const int> exps) {
    if (exps.size() > static_cast<std::size_t>(kMaxVars)) {
      throw std::invalid_argument("too many variables for a packed monomial");
    }
    Monomial m;
    int deg = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) throw std::invalid_argument("negative exponent");
      deg += exps[i];
      if (deg > kMaxDegree) throw MonomialOverflow();
      m.set_lane(lane_of(static_cast<int>(i)), exps[i]);
    }
    m.set_lane(0, deg);
    return m;
  }

  static Monomial variable(int i, int power = 1) {
    std::array<int, kMaxVars> e{};
    e.at(static_cast<std::size_t>(i)) = power;
    return from_exponents(std::span<const int>(e.data(), static_cast<std::size_t>(i) + 1));
  }

  int degree() const { return static_cast<int>(w_[0] >> 56); }
  int exponent(int var) const { return lane(lane_of(var)); }
  bool is_one() const { return w_[0] == 0 && w_[1] == 0; }

  std::vector<int> exponents(int nvars) const {
    std::vector<int> e(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) e[static_cast<std::size_t>(i)] = exponent(i);
    return e;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.degree() + b.degree() > kMaxDegree) throw MonomialOverflow();
    Monomial r;
    r.w_[0] = a.w_[0] + b.w_[0];
    r.w_[1] = a.w_[1] + b.w_[1];
    return r;
  }

  /// True iff *this divides m.
  bool divides(const Monomial& m) const {
    return (((m.w_[0] | kHigh) - w_[0]) & kHigh) == kHigh && (((m.w_[1] | kHigh) - w_[1]) & kHigh) == kHigh;
  }

  /// m / *this; requires divides(m).
  Monomial quotient_of(const Monomial& m) const {
    Monomial r;
    r.w_[0] = m.w_[0] - w_[0];
    r.w_[1] = m.w_[1] - w_[1];
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int k = 0; k < 2; ++k) {
      const std::uint64_t d = (a.w_[k] | kHigh) - b.w_[k];
      const std::uint64_t ge = ((d & kHigh) >> 7) * 0xFF;
      r.w_[k] = (a.w_[k] & ge) | (b.w_[k] & ~ge);
    }
    r.w_[0] &= ~kDegreeMask;
    const std::uint64_t deg = byte_sum(r.w_[0]) + byte_sum(r.w_[1]);
    if (deg > static_cast<std::uint64_t>(kMaxDegree)) throw MonomialOverflow();
    r.w_[0] |= deg << 56;
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    const std::uint64_t x0 = nonzero_lanes(a.w_[0]) & nonzero_lanes(b.w_[0]) & ~kDegreeMask;
    const std::uint64_t x1 = nonzero_lanes(a.w_[1]) & nonzero_lanes(b.w_[1]);
    return (x0 | x1) == 0;
  }

  /// Grevlex with x_0 > x_1 > ...; returns -1, 0, 1.
  friend int grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.w_[0] == b.w_[0] && a.w_[1] == b.w_[1]) return 0;
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    if (a.w_[0] != b.w_[0]) return a.w_[0] < b.w_[0] ? 1 : -1;
    return a.w_[1] < b.w_[1] ? 1 : -1;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::size_t hash() const {
    std::uint64_t h = w_[0] * 0x9E3779B97F4A7C15ull;
    h ^= (w_[1] + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h ^ (h >> 31));
  }

  /// Words exposed for strict total ordering in containers (not a monomial order).
  std::pair<std::uint64_t, std::uint64_t> raw() const { return {w_[0], w_[1]}; }

 private:
  static constexpr std::uint64_t kHigh = 0x8080808080808080ull;
  static constexpr std::uint64_t kDegreeMask = 0xFF00000000000000ull;

  static constexpr int lane_of(int var) { return 15 - var; }

  int lane(int l) const {
    if (l < 8) return static_cast<int>((w_[0] >> (8 * (7 - l))) & 0xFF);
    return static_cast<int>((w_[1] >> (8 * (15 - l))) & 0xFF);
  }
  void set_lane(int l, int v) {
    const auto uv = static_cast<std::uint64_t>(v);
    if (l < 8) {
      const int s = 8 * (7 - l);
      w_[0] = (w_[0] & ~(0xFFull << s)) | (uv << s);
    } else {
      const int s = 8 * (15 - l);
      w_[1] = (w_[1] & ~(0xFFull << s)) | (uv << s);
    }
  }
  static std::uint64_t byte_sum(std::uint64_t w) {
    w = (w & 0x00FF00FF00FF00FFull) + ((w >> 8) & 0x00FF00FF00FF00FFull);
    w = (w & 0x0000FFFF0000FFFFull) + ((w >> 16) & 0x0000FFFF0000FFFFull);
    return (w & 0xFFFFFFFFull) + (w >> 32);
  }
  static std::uint64_t nonzero_lanes(std::uint64_t w) { return (w + 0x7F7F7F7F7F7F7F7Full) & kHigh; }

  std::array<std::uint64_t, 2> w_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial orders on a polynomial ring.  Elimination orders compare the first
/// `block` variables by grevlex, then the remaining ones by grevlex.
struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Elimination };
  Kind kind = Kind::Grevlex;
  int block = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder elimination(int k) { return {Kind::Elimination, k}; }

  std::string name() const {
    switch (kind) {
      case Kind::Grevlex: return "grevlex";
      case Kind::Lex: return "lex";
      case Kind::Elimination: return "elim" + std::to_string(block);
    }
    return "?";
  }

  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;
};

namespace detail {

inline int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    const int ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

}  // namespace detail

/// Compares two monomials in `nvars` variables; returns -1, 0, 1.
inline int compare(const MonomialOrder& order, int nvars, const Monomial& a, const Monomial& b) {
  switch (order.kind) {
    case MonomialOrder::Kind::Grevlex:
      return grevlex_cmp(a, b);
    case MonomialOrder::Kind::Lex:
      for (int i = 0; i < nvars; ++i) {
        const int ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea > eb ? 1 : -1;
      }
      return 0;
    case MonomialOrder::Kind::Elimination: {
      if (a == b) return 0;
      const int c = detail::grevlex_range(a, b, 0, order.block);
      if (c != 0) return c;
      return detail::grevlex_range(a, b, order.block, nvars);
    }
  }
  return 0;
}

}  // namespace sing
