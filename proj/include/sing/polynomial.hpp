#pragma once

// Sparse multivariate polynomials over a coefficient field and the ring context
// (variables, monomial order, grading) that owns their arithmetic.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <type_traits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sing/field.hpp"
#include "sing/monomial.hpp"
#include "sing/sparse.hpp"

namespace sing {

class RingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class E>
struct Term {
  Monomial m;
  E c;
};

/// Terms sorted strictly descending in the owning ring's order; no zero coefficients.
template <class Field>
class Polynomial {
 public:
  using Element = typename Field::Element;
  using TermT = Term<Element>;

  Polynomial() = default;
  explicit Polynomial(std::vector<TermT> sorted_terms) : terms_(std::move(sorted_terms)) {}

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermT& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().m; }
  const Element& lead_coeff() const { return terms_.front().c; }
  const std::vector<TermT>& terms() const { return terms_; }
  std::vector<TermT>& mutable_terms() { return terms_; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
    }
    return true;
  }

 private:
  std::vector<TermT> terms_;
};

template <class Field>
class Ring {
 public:
  using Element = typename Field::Element;
  using Poly = Polynomial<Field>;
  using TermT = Term<Element>;

  Ring(Field field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex(),
       std::vector<int> weights = {})
      : field_(std::move(field)), names_(std::move(names)), order_(order), weights_(std::move(weights)) {
    if (names_.empty() || names_.size() > static_cast<std::size_t>(kMaxVars)) {
      throw RingError("a ring needs between 1 and 15 variables");
    }
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size()) throw RingError("weight vector length mismatch");
    standard_grading_ = std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
  }

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<int>& weights() const { return weights_; }

  /// Same variables and field, different order.
  Ring with_order(MonomialOrder order) const { return Ring(field_, names_, order, weights_); }

  int cmp(const Monomial& a, const Monomial& b) const {
    if (order_.kind == MonomialOrder::Kind::Grevlex) return grevlex_cmp(a, b);
    return compare(order_, nvars(), a, b);
  }

  auto term_cmp() const {
    return [this](const TermT& a, const TermT& b) { return cmp(a.m, b.m); };
  }

  int weighted_degree(const Monomial& m) const {
    if (standard_grading_) return m.degree();
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += weights_[static_cast<std::size_t>(i)] * m.exponent(i);
    return d;
  }

  // --- construction -------------------------------------------------------

  Poly zero() const { return Poly(); }
  Poly constant(const Element& c) const {
    if (field_.is_zero(c)) return Poly();
    return Poly({TermT{Monomial(), c}});
  }
  Poly one() const { return constant(field_.one()); }
  Poly variable(int i) const {
    check_var(i);
    return Poly({TermT{Monomial::variable(i), field_.one()}});
  }
  Poly monomial(const Monomial& m, const Element& c) const {
    if (field_.is_zero(c)) return Poly();
    return Poly({TermT{m, c}});
  }

  /// Builds a polynomial from arbitrary terms: sorts and combines duplicates.
  Poly from_terms(std::vector<TermT> terms) const {
    std::sort(terms.begin(), terms.end(), [this](const TermT& a, const TermT& b) { return cmp(a.m, b.m) > 0; });
    std::vector<TermT> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().m == t.m) {
        out.back().c = field_.add(out.back().c, t.c);
        if (field_.is_zero(out.back().c)) out.pop_back();
      } else if (!field_.is_zero(t.c)) {
        out.push_back(std::move(t));
      }
    }
    return Poly(std::move(out));
  }

  /// Re-sorts a polynomial that was built under another order on the same variables.
  Poly adopt(const Poly& f) const { return from_terms(f.terms()); }

  // --- arithmetic -----------------------------------------------------------

  Poly add(const Poly& f, const Poly& g) const {
    const auto& a = f.terms();
    const auto& b = g.terms();
    return Poly(merge_add(field_, term_cmp(), a.data(), a.size(), b.data(), b.size()));
  }
  Poly neg(const Poly& f) const {
    auto t = f.terms();
    for (auto& x : t) x.c = field_.neg(x.c);
    return Poly(std::move(t));
  }
  Poly sub(const Poly& f, const Poly& g) const { return add(f, neg(g)); }

  Poly scale(const Poly& f, const Element& c) const {
    if (field_.is_zero(c)) return Poly();
    auto t = f.terms();
    for (auto& x : t) x.c = field_.mul(x.c, c);
    return Poly(std::move(t));
  }

  /// c * m * f; monomial orders are multiplicative so the result stays sorted.
  std::vector<TermT> mul_term_raw(const Poly& f, const Element& c, const Monomial& m) const {
    std::vector<TermT> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back(TermT{t.m * m, field_.mul(t.c, c)});
    return out;
  }
  Poly mul_term(const Poly& f, const Element& c, const Monomial& m) const {
    if (field_.is_zero(c)) return Poly();
    return Poly(mul_term_raw(f, c, m));
  }

  Poly mul(const Poly& f, const Poly& g) const {
    if (f.is_zero() || g.is_zero()) return Poly();
    const Poly& small = f.size() <= g.size() ? f : g;
    const Poly& big = f.size() <= g.size() ? g : f;
    Geobucket<TermT, Field, decltype(term_cmp())> acc(field_, term_cmp());
    for (const auto& t : small.terms()) acc.add(mul_term_raw(big, t.c, t.m));
    return Poly(acc.flatten());
  }

  Poly pow(const Poly& f, int e) const {
    Poly r = one();
    for (int i = 0; i < e; ++i) r = mul(r, f);
    return r;
  }

  Poly make_monic(const Poly& f) const {
    if (f.is_zero() || field_.is_one(f.lead_coeff())) return f;
    return scale(f, field_.inv(f.lead_coeff()));
  }

  /// Formal partial derivative with respect to variable i.
  Poly derivative(const Poly& f, int i) const {
    check_var(i);
    std::vector<TermT> out;
    const Monomial xi = Monomial::variable(i);
    for (const auto& t : f.terms()) {
      const int e = t.m.exponent(i);
      if (e == 0) continue;
      auto c = field_.mul(t.c, field_.from_int(e));
      if (field_.is_zero(c)) continue;
      out.push_back(TermT{xi.quotient_of(t.m), c});
    }
    // Dividing every monomial by x_i preserves relative order, so no re-sort is needed.
    return Poly(std::move(out));
  }

  /// Ring homomorphism into `target` sending variable i to images[i].
  template <class TargetRing>
  typename TargetRing::Poly substitute(const Poly& f, const std::vector<typename TargetRing::Poly>& images,
                                       const TargetRing& target) const {
    if (images.size() != static_cast<std::size_t>(nvars())) {
      throw RingError("substitution needs one image per variable");
    }
    using TPoly = typename TargetRing::Poly;
    // Cache powers of images; degrees are small.
    std::vector<std::vector<TPoly>> powers(images.size());
    auto power = [&](std::size_t v, int e) -> const TPoly& {
      auto& pv = powers[v];
      if (pv.empty()) pv.push_back(target.one());
      while (static_cast<int>(pv.size()) <= e) pv.push_back(target.mul(pv.back(), images[v]));
      return pv[static_cast<std::size_t>(e)];
    };
    Geobucket<typename TargetRing::TermT, std::remove_cvref_t<decltype(target.field())>, decltype(target.term_cmp())> acc(
        target.field(), target.term_cmp());
    for (const auto& t : f.terms()) {
      TPoly prod = target.constant(t.c);
      for (int v = 0; v < nvars(); ++v) {
        const int e = t.m.exponent(v);
        if (e > 0) prod = target.mul(prod, power(static_cast<std::size_t>(v), e));
      }
      acc.add(prod.terms());
    }
    return TPoly(acc.flatten());
  }

  // --- queries ---------------------------------------------------------------

  /// Total degree of a homogeneous polynomial (max degree otherwise); nullopt for zero.
  std::optional<int> degree(const Poly& f) const {
    if (f.is_zero()) return std::nullopt;
    int d = 0;
    for (const auto& t : f.terms()) d = std::max(d, weighted_degree(t.m));
    return d;
  }

  bool is_homogeneous(const Poly& f) const {
    if (f.is_zero()) return true;
    const int d = weighted_degree(f.terms().front().m);
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const TermT& t) { return weighted_degree(t.m) == d; });
  }

  Element evaluate_coefficient(const Poly& f, const Monomial& m) const {
    for (const auto& t : f.terms()) {
      if (t.m == m) return t.c;
    }
    return field_.zero();
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
      const int e = m.exponent(i);
      if (e == 0) continue;
      if (!s.empty()) s += "*";
      s += names_[static_cast<std::size_t>(i)];
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
  }

  std::string to_string(const Poly& f) const {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : f.terms()) {
      const bool negative = field_.is_negative(t.c);
      auto mag = negative ? field_.neg(t.c) : t.c;
      if (first) {
        if (negative) s += "-";
      } else {
        s += negative ? " - " : " + ";
      }
      first = false;
      if (t.m.is_one()) {
        s += field_.to_string(mag);
      } else {
        if (!field_.is_one(mag)) s += field_.to_string(mag) + "*";
        s += monomial_string(t.m);
      }
    }
    return s;
  }

 private:
  void check_var(int i) const {
    if (i < 0 || i >= nvars()) throw RingError("variable index out of range: " + std::to_string(i));
  }

  Field field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<int> weights_;
  bool standard_grading_ = true;
};

template <class Field>
using RingPtr = std::shared_ptr<const Ring<Field>>;

/// Compares monomials with a ring order, checking the exponent-vector lengths first.
template <class Field>
int mono_compare(const Ring<Field>& ring, std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size() || a.size() != static_cast<std::size_t>(ring.nvars())) {
    throw RingError("monomial length does not match the ring");
  }
  return ring.cmp(Monomial::from_exponents(a), Monomial::from_exponents(b));
}

}  // namespace sing
