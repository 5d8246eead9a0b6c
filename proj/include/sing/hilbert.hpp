#pragma once

// Hilbert series of R/I from the leading-term ideal, Hilbert polynomials and the
// index of regularity.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sing/ideal.hpp"

namespace sing {

/// All monomials of degree d in nvars variables (empty for d < 0).
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
    e[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, d);
  return out;
}

/// Integer polynomials in t as coefficient vectors, lowest degree first.
using IntPoly = std::vector<mpz_class>;

namespace detail {

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly times_one_minus_tk(const IntPoly& p, int k) {
  IntPoly r(p.size() + static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i] += p[i];
    r[i + static_cast<std::size_t>(k)] -= p[i];
  }
  trim(r);
  return r;
}

inline void add_shifted(IntPoly& acc, const IntPoly& p, int shift) {
  if (acc.size() < p.size() + static_cast<std::size_t>(shift)) acc.resize(p.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + static_cast<std::size_t>(shift)] += p[i];
  trim(acc);
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.raw() < b.raw();
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

inline int support_size(const Monomial& m, int nvars) {
  int s = 0;
  for (int i = 0; i < nvars; ++i) s += m.exponent(i) > 0 ? 1 : 0;
  return s;
}

// Numerator N with HS(R/M) = N(t) / (1-t)^nvars, for minimal generators `gens`.
inline IntPoly numerator_rec(const std::vector<Monomial>& gens, int nvars) {
  if (gens.empty()) return {1};
  bool simple = true;
  for (std::size_t i = 0; i < gens.size() && simple; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && simple; ++j) simple = coprime(gens[i], gens[j]);
  }
  if (simple) {
    IntPoly r{1};
    for (const auto& g : gens) r = times_one_minus_tk(r, g.degree());
    return r;
  }
  // Pivot on a power of the variable occurring in the most non-pure-power generators.
  std::vector<int> count(static_cast<std::size_t>(nvars), 0);
  for (const auto& g : gens) {
    if (support_size(g, nvars) < 2) continue;
    for (int i = 0; i < nvars; ++i) count[static_cast<std::size_t>(i)] += g.exponent(i) > 0 ? 1 : 0;
  }
  const int x = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<int> exps;
  for (const auto& g : gens) {
    if (support_size(g, nvars) >= 2 && g.exponent(x) > 0) exps.push_back(g.exponent(x));
  }
  std::sort(exps.begin(), exps.end());
  const Monomial p = Monomial::variable(x, exps[exps.size() / 2]);

  std::vector<Monomial> plus{p};
  std::vector<Monomial> quot;
  for (const auto& g : gens) {
    if (!p.divides(g)) plus.push_back(g);
    quot.push_back(p.quotient_of(lcm(g, p)));
  }
  IntPoly r = numerator_rec(minimalize(std::move(plus)), nvars);
  add_shifted(r, numerator_rec(minimalize(std::move(quot)), nvars), p.degree());
  return r;
}

inline mpz_class binomial(long top, long k) {
  if (k < 0 || top < k) return 0;
  if (top < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
  return r;
}

}  // namespace detail

/// Hilbert series numerator of R/M for a monomial ideal M in nvars variables.
inline IntPoly hilbert_numerator(const std::vector<Monomial>& gens, int nvars) {
  auto r = detail::numerator_rec(detail::minimalize(gens), nvars);
  detail::trim(r);
  return r;
}

struct HilbertData {
  int nvars = 0;
  IntPoly numerator;  // HS = numerator / (1-t)^nvars
  IntPoly h;          // HS = h / (1-t)^dim
  int dim = -1;       // Krull dimension of R/I; -1 when I is the unit ideal
  std::vector<mpq_class> polynomial;  // Hilbert polynomial coefficients, index = power of t
  int regularity_index = 0;

  /// Hilbert function value dim_k (R/I)_s.
  mpz_class value(int s) const {
    mpz_class v = 0;
    for (std::size_t i = 0; i < numerator.size(); ++i) {
      v += numerator[i] * detail::binomial(s - static_cast<long>(i) + nvars - 1, nvars - 1);
    }
    return v;
  }

  mpq_class polynomial_value(int s) const {
    mpq_class v = 0, p = 1;
    for (const auto& c : polynomial) {
      v += c * p;
      p *= s;
    }
    return v;
  }

  /// (a, b) with HP = a t + b, when the polynomial has degree <= 1 and integer coefficients.
  std::optional<std::pair<mpz_class, mpz_class>> linear() const {
    if (polynomial.size() > 2) return std::nullopt;
    mpq_class a = polynomial.size() > 1 ? polynomial[1] : mpq_class(0);
    mpq_class b = polynomial.empty() ? mpq_class(0) : polynomial[0];
    if (a.get_den() != 1 || b.get_den() != 1) return std::nullopt;
    return std::pair(a.get_num(), b.get_num());
  }

  /// e.g. "130t - 1150", "t^2 + 3t + 1", "(1/2)t^2 + (3/2)t + 1".
  std::string polynomial_string() const {
    std::string s;
    for (int k = static_cast<int>(polynomial.size()) - 1; k >= 0; --k) {
      const mpq_class& c = polynomial[static_cast<std::size_t>(k)];
      if (sgn(c) == 0) continue;
      mpq_class mag = abs(c);
      if (s.empty()) {
        if (sgn(c) < 0) s += "-";
      } else {
        s += sgn(c) < 0 ? " - " : " + ";
      }
      std::string coef = mag.get_den() == 1 ? mag.get_num().get_str() : "(" + mag.get_str() + ")";
      if (k == 0) {
        s += mag.get_str();
      } else {
        if (mag != 1) s += coef;
        s += k == 1 ? "t" : "t^" + std::to_string(k);
      }
    }
    return s.empty() ? "0" : s;
  }
};

/// Hilbert data of R/M for a monomial ideal M.
inline HilbertData hilbert_from_monomials(const std::vector<Monomial>& gens, int nvars) {
  HilbertData H;
  H.nvars = nvars;
  H.numerator = hilbert_numerator(gens, nvars);
  if (H.numerator.empty()) return H;  // unit ideal
  // Divide by (1 - t) while the value at 1 vanishes.
  IntPoly h = H.numerator;
  int divisions = 0;
  while (true) {
    mpz_class at1 = 0;
    for (const auto& c : h) at1 += c;
    if (at1 != 0) break;
    IntPoly q(h.size() - 1, 0);
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
      acc += h[i];
      q[i] = acc;
    }
    h = std::move(q);
    ++divisions;
  }
  H.h = h;
  H.dim = nvars - divisions;
  const int d = H.dim;
  if (d >= 1) {
    mpz_class fact = 1;
    for (int j = 2; j <= d - 1; ++j) fact *= j;
    std::vector<mpq_class> hp(static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < h.size(); ++i) {
      // binom(s - i + d - 1, d - 1) = prod_{j=1}^{d-1} (s - i + j) / (d-1)!
      std::vector<mpq_class> p{1};
      for (int j = 1; j <= d - 1; ++j) {
        const mpq_class c0 = j - static_cast<long>(i);
        std::vector<mpq_class> q(p.size() + 1, 0);
        for (std::size_t k = 0; k < p.size(); ++k) {
          q[k] += p[k] * c0;
          q[k + 1] += p[k];
        }
        p = std::move(q);
      }
      for (std::size_t k = 0; k < p.size(); ++k) hp[k] += p[k] * h[i] / fact;
    }
    while (!hp.empty() && sgn(hp.back()) == 0) hp.pop_back();
    H.polynomial = std::move(hp);
  }
  int s0 = std::max(0, static_cast<int>(h.size()) - 1 - d + 1);
  while (s0 > 0 && H.value(s0 - 1) == H.polynomial_value(s0 - 1)) --s0;
  H.regularity_index = s0;
  return H;
}

/// Hilbert data of R/I (I homogeneous), read off the grevlex leading-term ideal.
template <class Field>
HilbertData hilbert(const Ideal<Field>& I) {
  if (!I.is_homogeneous()) throw std::invalid_argument("Hilbert data needs a homogeneous ideal");
  std::vector<Monomial> leads;
  for (const auto& g : I.groebner(MonomialOrder::grevlex()).polys) leads.push_back(g.lead_monomial());
  return hilbert_from_monomials(leads, I.ring().nvars());
}

}  // namespace sing
