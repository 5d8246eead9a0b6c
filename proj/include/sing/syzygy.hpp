#pragma once

// Syzygies of an arbitrary list of polynomials.

#include <algorithm>
#include <tuple>
#include <vector>

#include "sing/resolution.hpp"

namespace sing {

namespace detail {

template <class Field>
bool is_groebner_basis(const Ring<Field>& R, const std::vector<Polynomial<Field>>& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form(R, s_polynomial(R, g[i], g[j]), g).is_zero()) return false;
    }
  }
  return true;
}

// Position-over-term: lower component first, then the ring order.
template <class Field>
struct PotCmp {
  const Ring<Field>* ring;
  int operator()(const ModuleTerm<Field>& a, const ModuleTerm<Field>& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return ring->cmp(a.m, b.m);
  }
};

// Buchberger over R^k with the position-over-term order.  Component c carries the
// degree shift[c]; pairs are taken in order of increasing sugar.
template <class Field>
std::vector<ModuleVector<Field>> pot_groebner(const Ring<Field>& R, std::vector<ModuleVector<Field>> gens,
                                              const std::vector<int>& shift) {
  using Vec = ModuleVector<Field>;
  using VTerm = ModuleTerm<Field>;
  const auto& F = R.field();
  PotCmp<Field> cmp{&R};
  std::vector<Vec> basis;
  std::vector<int> sugar;
  auto reduce = [&](Vec v) {
    Geobucket<VTerm, Field, PotCmp<Field>> bucket(F, cmp);
    bucket.add(std::move(v));
    Vec out;
    while (auto t = bucket.pop_lead()) {
      const Vec* red = nullptr;
      for (const auto& b : basis) {
        if (b.front().comp == t->comp && b.front().m.divides(t->m)) {
          red = &b;
          break;
        }
      }
      if (red == nullptr) {
        out.push_back(*t);
        continue;
      }
      const Monomial q = red->front().m.quotient_of(t->m);
      const auto c = F.neg(F.div(t->c, red->front().c));
      Vec mult;
      for (std::size_t k = 1; k < red->size(); ++k) {
        const auto& r = (*red)[k];
        mult.push_back(VTerm{r.m * q, r.m * q, r.comp, F.mul(r.c, c)});
      }
      bucket.add(std::move(mult));
    }
    return out;
  };
  struct Pair {
    int sugar;
    int degree;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  auto push = [&](Vec v, int s) {
    v = reduce(std::move(v));
    if (v.empty()) return;
    const auto inv = F.inv(v.front().c);
    for (auto& t : v) t.c = F.mul(t.c, inv);
    const std::size_t j = basis.size();
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].front().comp != v.front().comp) continue;
      const Monomial l = lcm(basis[i].front().m, v.front().m);
      const int si = sugar[i] + l.degree() - basis[i].front().m.degree();
      const int sj = s + l.degree() - v.front().m.degree();
      pairs.push_back({std::max(si, sj), l.degree(), i, j});
    }
    basis.push_back(std::move(v));
    sugar.push_back(s);
  };
  auto sugar_of = [&](const Vec& v) {
    int s = 0;
    for (const auto& t : v) s = std::max(s, t.m.degree() + shift[static_cast<std::size_t>(t.comp)]);
    return s;
  };
  for (auto& g : gens) {
    const int s = sugar_of(g);
    push(std::move(g), s);
  }
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return std::tie(a.sugar, a.degree, a.j, a.i) < std::tie(b.sugar, b.degree, b.j, b.i);
    });
    const Pair p = *best;
    pairs.erase(best);
    const auto& a = basis[p.i];
    const auto& b = basis[p.j];
    const Monomial l = lcm(a.front().m, b.front().m);
    const Monomial qa = a.front().m.quotient_of(l), qb = b.front().m.quotient_of(l);
    Vec s;
    for (std::size_t k = 1; k < a.size(); ++k) s.push_back(VTerm{a[k].m * qa, a[k].m * qa, a[k].comp, a[k].c});
    Vec sb;
    for (std::size_t k = 1; k < b.size(); ++k) sb.push_back(VTerm{b[k].m * qb, b[k].m * qb, b[k].comp, F.neg(b[k].c)});
    s = merge_add(F, cmp, s.data(), s.size(), sb.data(), sb.size());
    push(std::move(s), p.sugar);
  }
  return basis;
}

}  // namespace detail

template <class Field>
std::vector<std::vector<Polynomial<Field>>> schreyer_syzygies(const Ring<Field>& R,
                                                              const std::vector<Polynomial<Field>>& gens) {
  using Vec = ModuleVector<Field>;
  using Element = typename Field::Element;
  const std::size_t m = gens.size();
  std::vector<std::vector<Polynomial<Field>>> out;
  auto to_columns = [&](const Vec& v, int offset) {
    std::vector<std::vector<Term<Element>>> parts(m);
    for (const auto& t : v) parts[static_cast<std::size_t>(t.comp - offset)].push_back({t.m, t.c});
    std::vector<Polynomial<Field>> col;
    for (auto& p : parts) col.push_back(R.from_terms(std::move(p)));
    return col;
  };
  const bool nonzero = std::all_of(gens.begin(), gens.end(), [](const auto& g) { return !g.is_zero(); });
  if (nonzero && R.order() == MonomialOrder::grevlex() && detail::is_groebner_basis(R, gens)) {
    // Schreyer: the level built from the basis, with its sorting permutation undone.
    detail::SchreyerFrame<Field> frame(R);
    std::vector<Vec> level;
    for (std::size_t i = 0; i < m; ++i) {
      Vec v;
      for (const auto& t : gens[i].terms()) v.push_back({t.m, t.m, 0, t.c});
      level.push_back(std::move(v));
    }
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return compare(MonomialOrder::lex(), R.nvars(), level[a].front().m, level[b].front().m) > 0;
    });
    std::vector<Vec> sorted;
    for (std::size_t i : order) sorted.push_back(level[i]);
    for (const auto& v : frame.next_level(sorted)) {
      Vec back = v;
      for (auto& t : back) t.comp = static_cast<int>(order[static_cast<std::size_t>(t.comp)]);
      out.push_back(to_columns(back, 0));
    }
    return out;
  }
  // (f_i, e_i) in R^{1+m}; basis elements without a component-0 part are syzygies.
  std::vector<Vec> module;
  std::vector<int> shift{0};
  for (const auto& g : gens) {
    int d = 0;
    for (const auto& t : g.terms()) d = std::max(d, t.m.degree());
    shift.push_back(d);
  }
  for (std::size_t i = 0; i < m; ++i) {
    Vec v;
    for (const auto& t : gens[i].terms()) v.push_back({t.m, t.m, 0, t.c});
    v.push_back({Monomial(), Monomial(), static_cast<int>(i) + 1, R.field().one()});
    module.push_back(std::move(v));
  }
  for (const auto& v : detail::pot_groebner(R, std::move(module), shift)) {
    if (v.front().comp >= 1) out.push_back(to_columns(v, 1));
  }
  return out;
}

}  // namespace sing
