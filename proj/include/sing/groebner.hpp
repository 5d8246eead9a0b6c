#pragma once

// Buchberger's algorithm with Gebauer-Moeller pair elimination and the sugar
// selection strategy, plus normal forms and exact division.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sing/polynomial.hpp"

namespace sing {

class InternalLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Field>
class Buchberger {
 public:
  using Poly = Polynomial<Field>;
  using Element = typename Field::Element;
  using TermT = Term<Element>;

  explicit Buchberger(const Ring<Field>& ring) : ring_(ring) {}

  /// Reduced Groebner basis of the ideal generated by `gens`, sorted by increasing
  /// leading monomial.  A basis containing a unit is returned as {1}.
  std::vector<Poly> compute(const std::vector<Poly>& gens) {
    basis_.clear();
    leads_.clear();
    live_.clear();
    sugar_.clear();
    pairs_.clear();
    inputs_.clear();
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      inputs_.push_back(ring_.make_monic(g));
      const int s = *ring_.degree(inputs_.back());
      pairs_.push_back(Pair{static_cast<int>(inputs_.size()) - 1, -1, inputs_.back().lead_monomial(), s});
    }
    while (!pairs_.empty()) {
      int d = pairs_.front().sugar;
      for (const auto& p : pairs_) d = std::min(d, p.sugar);
      std::vector<Pair> batch;
      std::vector<Pair> rest;
      for (auto& p : pairs_) (p.sugar == d ? batch : rest).push_back(std::move(p));
      pairs_ = std::move(rest);
      std::sort(batch.begin(), batch.end(), [this](const Pair& a, const Pair& b) {
        const int c = ring_.cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
      });
      for (const auto& p : batch) {
        if (p.j >= 0 && !still_needed(p)) continue;
        auto [h, s] = p.j < 0 ? reduce_input(p.i) : reduce_spair(p);
        if (h.is_zero()) continue;
        if (h.lead_monomial().is_one()) return {ring_.one()};
        insert(ring_.make_monic(h), std::max(s, p.sugar));
      }
    }
    return finish();
  }

 private:
  struct Pair {
    int i;
    int j;  // -1 marks an input generator i
    Monomial lcm;
    int sugar;
  };

  // Pairs dropped by the B-filter are removed eagerly, so every queued pair is needed.
  bool still_needed(const Pair&) const { return true; }

  std::pair<Poly, int> reduce_input(int i) {
    Geobucket<TermT, Field, decltype(ring_.term_cmp())> bucket(ring_.field(), ring_.term_cmp());
    bucket.add(inputs_[static_cast<std::size_t>(i)].terms());
    int s = *ring_.degree(inputs_[static_cast<std::size_t>(i)]);
    return {top_reduce(bucket, s), s};
  }

  std::pair<Poly, int> reduce_spair(const Pair& p) {
    const Poly& fi = basis_[static_cast<std::size_t>(p.i)];
    const Poly& fj = basis_[static_cast<std::size_t>(p.j)];
    Geobucket<TermT, Field, decltype(ring_.term_cmp())> bucket(ring_.field(), ring_.term_cmp());
    bucket.add(tail_multiple(fi, ring_.field().one(), leads_[static_cast<std::size_t>(p.i)].quotient_of(p.lcm)));
    bucket.add(tail_multiple(fj, ring_.field().neg(ring_.field().one()),
                             leads_[static_cast<std::size_t>(p.j)].quotient_of(p.lcm)));
    int s = p.sugar;
    return {top_reduce(bucket, s), s};
  }

  std::vector<TermT> tail_multiple(const Poly& f, const Element& c, const Monomial& m) const {
    std::vector<TermT> out;
    out.reserve(f.size());
    const auto& t = f.terms();
    for (std::size_t k = 1; k < t.size(); ++k) out.push_back(TermT{t[k].m * m, ring_.field().mul(t[k].c, c)});
    return out;
  }

  int find_reducer(const Monomial& m) const {
    int best = -1;
    for (std::size_t k = 0; k < leads_.size(); ++k) {
      if (!live_[k] || !leads_[k].divides(m)) continue;
      if (best < 0 || basis_[k].size() < basis_[static_cast<std::size_t>(best)].size()) best = static_cast<int>(k);
    }
    return best;
  }

  template <class Bucket>
  Poly top_reduce(Bucket& bucket, int& sugar) {
    while (auto t = bucket.pop_lead()) {
      const int r = find_reducer(t->m);
      if (r < 0) {
        std::vector<TermT> out{*t};
        auto rest = bucket.flatten();
        out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
        return Poly(std::move(out));
      }
      const Monomial q = leads_[static_cast<std::size_t>(r)].quotient_of(t->m);
      sugar = std::max(sugar, ring_.weighted_degree(q) + sugar_[static_cast<std::size_t>(r)]);
      bucket.add(tail_multiple(basis_[static_cast<std::size_t>(r)], ring_.field().neg(t->c), q));
    }
    return Poly();
  }

  void insert(Poly h, int sugar) {
    const Monomial lh = h.lead_monomial();
    const int hidx = static_cast<int>(basis_.size());
    struct Cand {
      int g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < basis_.size(); ++g) {
      if (!live_[g]) continue;
      cands.push_back(Cand{static_cast<int>(g), lcm(leads_[g], lh), coprime(leads_[g], lh)});
    }
    // Gebauer-Moeller: keep (g, h) only if no other new pair's lcm divides its lcm.
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const Cand& p = cands[a];
      bool keep = p.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b) {
          if (cands[b].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < kept.size() && keep; ++b) {
          if (kept[b].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }
    // Drop old pairs whose lcm is strictly divisible by lt(h) in the chain sense.
    std::vector<Pair> filtered;
    filtered.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (p.j >= 0 && lh.divides(p.lcm)) {
        const Monomial li = lcm(leads_[static_cast<std::size_t>(p.i)], lh);
        const Monomial lj = lcm(leads_[static_cast<std::size_t>(p.j)], lh);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      filtered.push_back(std::move(p));
    }
    pairs_ = std::move(filtered);
    basis_.push_back(std::move(h));
    leads_.push_back(lh);
    live_.push_back(1);
    sugar_.push_back(sugar);
    for (const auto& c : kept) {
      if (c.coprime) continue;
      const Monomial& lg = leads_[static_cast<std::size_t>(c.g)];
      const int s = std::max(sugar_[static_cast<std::size_t>(c.g)] + ring_.weighted_degree(lg.quotient_of(c.lcm)),
                             sugar + ring_.weighted_degree(lh.quotient_of(c.lcm)));
      pairs_.push_back(Pair{c.g, hidx, c.lcm, s});
    }
    for (std::size_t g = 0; g + 1 < basis_.size(); ++g) {
      if (live_[g] && lh.divides(leads_[g])) live_[g] = 0;
    }
  }

  std::vector<Poly> finish() {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (live_[k]) idx.push_back(k);
    }
    std::vector<Poly> out;
    out.reserve(idx.size());
    for (std::size_t k : idx) {
      // Tail-reduce against the other minimal elements.
      const Poly& f = basis_[k];
      std::vector<TermT> res{f.lead()};
      Geobucket<TermT, Field, decltype(ring_.term_cmp())> bucket(ring_.field(), ring_.term_cmp());
      bucket.add(std::vector<TermT>(f.terms().begin() + 1, f.terms().end()));
      while (auto t = bucket.pop_lead()) {
        const int r = find_reducer(t->m);
        if (r < 0) {
          res.push_back(*t);
          continue;
        }
        const Monomial q = leads_[static_cast<std::size_t>(r)].quotient_of(t->m);
        bucket.add(tail_multiple(basis_[static_cast<std::size_t>(r)], ring_.field().neg(t->c), q));
      }
      out.push_back(Poly(std::move(res)));
    }
    std::sort(out.begin(), out.end(),
              [this](const Poly& a, const Poly& b) { return ring_.cmp(a.lead_monomial(), b.lead_monomial()) < 0; });
    return out;
  }

  const Ring<Field>& ring_;
  std::vector<Poly> inputs_;
  std::vector<Poly> basis_;
  std::vector<Monomial> leads_;
  std::vector<char> live_;
  std::vector<int> sugar_;
  std::vector<Pair> pairs_;
};

/// Full normal form of f against a Groebner basis (any basis works; the result is
/// canonical only when `basis` is a Groebner basis).
template <class Field>
Polynomial<Field> normal_form(const Ring<Field>& ring, const Polynomial<Field>& f,
                              const std::vector<Polynomial<Field>>& basis) {
  using TermT = Term<typename Field::Element>;
  const auto& field = ring.field();
  Geobucket<TermT, Field, decltype(ring.term_cmp())> bucket(field, ring.term_cmp());
  bucket.add(f.terms());
  std::vector<TermT> res;
  while (auto t = bucket.pop_lead()) {
    int r = -1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k].lead_monomial().divides(t->m)) {
        r = static_cast<int>(k);
        break;
      }
    }
    if (r < 0) {
      res.push_back(*t);
      continue;
    }
    const auto& g = basis[static_cast<std::size_t>(r)];
    const auto c = field.neg(field.div(t->c, g.lead_coeff()));
    const Monomial q = g.lead_monomial().quotient_of(t->m);
    std::vector<TermT> mult;
    mult.reserve(g.size());
    for (std::size_t k = 1; k < g.terms().size(); ++k) {
      mult.push_back(TermT{g.terms()[k].m * q, field.mul(g.terms()[k].c, c)});
    }
    bucket.add(std::move(mult));
  }
  return Polynomial<Field>(std::move(res));
}

/// Exact quotient f / g; throws if g does not divide f.
template <class Field>
Polynomial<Field> divide_exact(const Ring<Field>& ring, const Polynomial<Field>& f, const Polynomial<Field>& g) {
  using TermT = Term<typename Field::Element>;
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const auto& field = ring.field();
  Geobucket<TermT, Field, decltype(ring.term_cmp())> bucket(field, ring.term_cmp());
  bucket.add(f.terms());
  std::vector<TermT> quotient;
  while (auto t = bucket.pop_lead()) {
    if (!g.lead_monomial().divides(t->m)) throw std::domain_error("polynomial division is not exact");
    const Monomial q = g.lead_monomial().quotient_of(t->m);
    const auto c = field.div(t->c, g.lead_coeff());
    quotient.push_back(TermT{q, c});
    std::vector<TermT> mult;
    for (std::size_t k = 1; k < g.terms().size(); ++k) {
      mult.push_back(TermT{g.terms()[k].m * q, field.neg(field.mul(g.terms()[k].c, c))});
    }
    bucket.add(std::move(mult));
  }
  return Polynomial<Field>(std::move(quotient));
}

/// S-polynomial of two polynomials (used by tests of the Buchberger criterion).
template <class Field>
Polynomial<Field> s_polynomial(const Ring<Field>& ring, const Polynomial<Field>& f, const Polynomial<Field>& g) {
  const Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  const auto& field = ring.field();
  auto a = ring.mul_term(f, field.inv(f.lead_coeff()), f.lead_monomial().quotient_of(l));
  auto b = ring.mul_term(g, field.inv(g.lead_coeff()), g.lead_monomial().quotient_of(l));
  return ring.sub(a, b);
}

}  // namespace sing
