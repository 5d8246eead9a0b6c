#pragma once

// Ideals with cached reduced Groebner bases, and the ideal-theoretic toolbox:
// membership, equality, intersection, quotients, saturation, elimination and
// radical membership.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <utility>
#include <vector>

#include "sing/groebner.hpp"

namespace sing {

template <class Field>
class Ideal {
 public:
  using Poly = Polynomial<Field>;

  struct Basis {
    RingPtr<Field> ring;  // the ring carrying the order the basis is sorted in
    std::vector<Poly> polys;
  };

  Ideal(RingPtr<Field> ring, std::vector<Poly> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  static Ideal unit(RingPtr<Field> ring) {
    auto one = ring->one();
    return Ideal(std::move(ring), {one});
  }

  const RingPtr<Field>& ring_ptr() const { return ring_; }
  const Ring<Field>& ring() const { return *ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

  bool is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(), [this](const Poly& g) { return ring_->is_homogeneous(g); });
  }

  /// Reduced Groebner basis for `order` (computed once, then cached).
  const Basis& groebner(MonomialOrder order) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(order);
    if (it != cache_->bases.end()) return it->second;
    auto r = order == ring_->order() ? ring_ : std::make_shared<const Ring<Field>>(ring_->with_order(order));
    std::vector<Poly> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(r->adopt(g));
    Buchberger<Field> engine(*r);
    Basis b{r, engine.compute(gens)};
    for (const auto& g : gens) {
      if (!normal_form(*r, g, b.polys).is_zero()) throw InternalLimit("Groebner basis fails to reduce a generator");
    }
    return cache_->bases.emplace(order, std::move(b)).first->second;
  }
  const Basis& groebner() const { return groebner(ring_->order()); }

  /// Seeds the cache with a basis known to be the reduced basis for the ring's order.
  void seed_basis(std::vector<Poly> reduced) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->bases.emplace(ring_->order(), Basis{ring_, std::move(reduced)});
  }

  bool contains(const Poly& f) const {
    const auto& b = groebner();
    return normal_form(*b.ring, f, b.polys).is_zero();
  }

  bool is_unit() const {
    const auto& b = groebner();
    return b.polys.size() == 1 && b.polys[0].lead_monomial().is_one();
  }
  bool is_zero() const { return gens_.empty(); }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, Basis> bases;
  };

  RingPtr<Field> ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

template <class Field>
std::vector<Polynomial<Field>> reduced_groebner(const Ideal<Field>& I, MonomialOrder order) {
  return I.groebner(order).polys;
}

template <class Field>
void require_same_ring(const Ideal<Field>& I, const Ideal<Field>& J) {
  if (I.ring().names() != J.ring().names() || !(I.ring().field() == J.ring().field())) {
    throw RingError("ideals live in different rings");
  }
}

template <class Field>
bool ideal_equal(const Ideal<Field>& I, const Ideal<Field>& J) {
  require_same_ring(I, J);
  return I.groebner(MonomialOrder::grevlex()).polys == J.groebner(MonomialOrder::grevlex()).polys;
}

/// J ⊆ I.
template <class Field>
bool is_subset(const Ideal<Field>& J, const Ideal<Field>& I) {
  require_same_ring(I, J);
  return std::all_of(J.generators().begin(), J.generators().end(), [&](const auto& g) { return I.contains(g); });
}

/// Moves polynomials between rings over the same field; var_map[i] is the target
/// index of source variable i.
template <class Field>
Polynomial<Field> remap_variables(const Polynomial<Field>& f, const Ring<Field>& source, const Ring<Field>& target,
                                  const std::vector<int>& var_map) {
  std::vector<Term<typename Field::Element>> terms;
  terms.reserve(f.size());
  std::vector<int> e(static_cast<std::size_t>(target.nvars()));
  for (const auto& t : f.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (int i = 0; i < source.nvars(); ++i) {
      const int x = t.m.exponent(i);
      if (x == 0) continue;
      const int j = var_map[static_cast<std::size_t>(i)];
      if (j < 0) throw RingError("variable has no image in the target ring");
      e[static_cast<std::size_t>(j)] += x;
    }
    terms.push_back({Monomial::from_exponents(e), t.c});
  }
  return target.from_terms(std::move(terms));
}

namespace detail {

template <class Field>
std::vector<int> identity_shift(int n, int shift) {
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i + shift;
  return m;
}

}  // namespace detail

/// I ∩ J by eliminating t from t·I + (1 − t)·J.
template <class Field>
Ideal<Field> intersect(const Ideal<Field>& I, const Ideal<Field>& J) {
  require_same_ring(I, J);
  const auto& R = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal<Field>(I.ring_ptr(), {});
  const int n = R.nvars();
  if (n + 1 > kMaxVars) throw InternalLimit("intersection needs one auxiliary variable beyond the limit");
  std::vector<std::string> names{"_t"};
  names.insert(names.end(), R.names().begin(), R.names().end());
  std::vector<int> weights{0};
  weights.insert(weights.end(), R.weights().begin(), R.weights().end());
  Ring<Field> S(R.field(), names, MonomialOrder::elimination(1), weights);
  const auto to_s = detail::identity_shift<Field>(n, 1);
  const auto t = S.variable(0);
  const auto one_minus_t = S.sub(S.one(), t);
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : I.generators()) gens.push_back(S.mul(t, remap_variables(g, R, S, to_s)));
  for (const auto& g : J.generators()) gens.push_back(S.mul(one_minus_t, remap_variables(g, R, S, to_s)));
  Buchberger<Field> engine(S);
  auto gb = engine.compute(gens);
  std::vector<int> back(static_cast<std::size_t>(n + 1));
  back[0] = -1;
  for (int i = 0; i < n; ++i) back[static_cast<std::size_t>(i + 1)] = i;
  std::vector<Polynomial<Field>> out;
  for (const auto& g : gb) {
    bool has_t = false;
    for (const auto& term : g.terms()) {
      if (term.m.exponent(0) != 0) {
        has_t = true;
        break;
      }
    }
    if (!has_t) out.push_back(remap_variables(g, S, R, back));
  }
  Ideal<Field> result(I.ring_ptr(), out);
  // On t-free polynomials the elimination order is grevlex, so the filtered basis
  // is already reduced; only seed when the ring's own order agrees.
  if (R.order() == MonomialOrder::grevlex()) {
    std::sort(out.begin(), out.end(),
              [&R](const auto& a, const auto& b) { return R.cmp(a.lead_monomial(), b.lead_monomial()) < 0; });
    result.seed_basis(std::move(out));
  }
  return result;
}

/// Intersection of many ideals, paired off in a balanced tree.
template <class Field>
Ideal<Field> intersect_all(std::vector<Ideal<Field>> ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of an empty family");
  while (ideals.size() > 1) {
    std::vector<Ideal<Field>> next;
    for (std::size_t i = 0; i + 1 < ideals.size(); i += 2) next.push_back(intersect(ideals[i], ideals[i + 1]));
    if (ideals.size() % 2 == 1) next.push_back(ideals.back());
    ideals = std::move(next);
  }
  return ideals.front();
}

/// I : (f).
template <class Field>
Ideal<Field> colon(const Ideal<Field>& I, const Polynomial<Field>& f) {
  const auto& R = I.ring();
  if (f.is_zero()) return Ideal<Field>::unit(I.ring_ptr());
  if (f.lead_monomial().is_one()) return I;
  Ideal<Field> F(I.ring_ptr(), {f});
  auto K = intersect(I, F);
  std::vector<Polynomial<Field>> q;
  for (const auto& g : K.generators()) q.push_back(divide_exact(R, g, f));
  return Ideal<Field>(I.ring_ptr(), std::move(q));
}

/// I : J, intersecting the quotients by each generator of J.
template <class Field>
Ideal<Field> colon(const Ideal<Field>& I, const Ideal<Field>& J) {
  require_same_ring(I, J);
  if (J.is_zero()) return Ideal<Field>::unit(I.ring_ptr());
  std::vector<Ideal<Field>> parts;
  for (const auto& g : J.groebner().polys) parts.push_back(colon(I, g));
  return intersect_all(std::move(parts));
}

inline constexpr int kSaturationCap = 64;

/// I : J^∞ and the least k with I : J^k = I : J^(k+1).
template <class Field>
std::pair<Ideal<Field>, int> saturate(const Ideal<Field>& I, const Ideal<Field>& J) {
  Ideal<Field> cur = I;
  for (int k = 0; k < kSaturationCap; ++k) {
    Ideal<Field> next = colon(cur, J);
    if (ideal_equal(next, cur)) return {cur, k};
    cur = std::move(next);
  }
  throw InternalLimit("saturation did not stabilise within 64 quotient steps");
}

/// I : x_i^∞ via a reverse-lex basis with x_i last, dividing out powers of x_i.
template <class Field>
Ideal<Field> saturate_variable(const Ideal<Field>& I, int var) {
  const auto& R = I.ring();
  const int n = R.nvars();
  std::vector<int> perm(static_cast<std::size_t>(n));  // source index -> permuted index
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int i = 0, j = 0; i < n; ++i) {
    if (i == var) continue;
    perm[static_cast<std::size_t>(i)] = j++;
    names.push_back(R.names()[static_cast<std::size_t>(i)]);
    weights.push_back(R.weights()[static_cast<std::size_t>(i)]);
  }
  perm[static_cast<std::size_t>(var)] = n - 1;
  names.push_back(R.names()[static_cast<std::size_t>(var)]);
  weights.push_back(R.weights()[static_cast<std::size_t>(var)]);
  Ring<Field> S(R.field(), names, MonomialOrder::grevlex(), weights);
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : I.generators()) gens.push_back(remap_variables(g, R, S, perm));
  Buchberger<Field> engine(S);
  auto gb = engine.compute(gens);
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  std::vector<Polynomial<Field>> out;
  for (const auto& g : gb) {
    int e = kMaxDegree;
    for (const auto& t : g.terms()) e = std::min(e, t.m.exponent(n - 1));
    auto h = g;
    if (e > 0) {
      const Monomial d = Monomial::variable(n - 1, e);
      for (auto& t : h.mutable_terms()) t.m = d.quotient_of(t.m);
    }
    out.push_back(remap_variables(h, S, R, inv));
  }
  return Ideal<Field>(I.ring_ptr(), std::move(out));
}

/// True iff the variable is a nonzerodivisor modulo I, i.e. I : x_i = I.
template <class Field>
bool variable_is_regular(const Ideal<Field>& I, int var) {
  return ideal_equal(saturate_variable(I, var), I);
}

/// I : m^∞ for the irrelevant ideal m.  When a random linear form is regular
/// modulo I the ideal is already saturated; otherwise the saturation is the
/// intersection of the saturations by each variable.
template <class Field>
Ideal<Field> saturate_irrelevant(const Ideal<Field>& I, std::uint64_t seed = 1) {
  const auto& R = I.ring();
  if (I.is_zero()) return I;
  if (I.is_unit()) return I;
  const int n = R.nvars();
  // Random coordinate change sending the last variable to a generic form.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(1, 97);
  std::vector<Polynomial<Field>> images;
  for (int i = 0; i + 1 < n; ++i) images.push_back(R.variable(i));
  {
    // Inverse substitution of x_last -> sum r_i x_i is x_last -> x_last - sum_{i<last} r_i x_i (r_last = 1).
    std::vector<Term<typename Field::Element>> t;
    t.push_back({Monomial::variable(n - 1), R.field().one()});
    for (int i = 0; i + 1 < n; ++i) t.push_back({Monomial::variable(i), R.field().from_int(-dist(rng))});
    images.push_back(R.from_terms(std::move(t)));
  }
  std::vector<Polynomial<Field>> moved;
  for (const auto& g : I.generators()) moved.push_back(R.substitute(g, images, R));
  Ideal<Field> M(I.ring_ptr(), std::move(moved));
  if (variable_is_regular(M, n - 1)) return I;
  std::vector<Ideal<Field>> parts;
  for (int i = 0; i < n; ++i) parts.push_back(saturate_variable(I, i));
  return intersect_all(std::move(parts));
}

/// f ∈ √I, decided by whether 1 ∈ I + (1 − t·f) in R[t].
template <class Field>
bool radical_membership(const Polynomial<Field>& f, const Ideal<Field>& I) {
  const auto& R = I.ring();
  if (f.is_zero()) return true;
  const int n = R.nvars();
  if (n + 1 > kMaxVars) throw InternalLimit("radical membership needs one auxiliary variable beyond the limit");
  auto names = R.names();
  names.push_back("_t");
  auto weights = R.weights();
  weights.push_back(1);
  Ring<Field> S(R.field(), names, MonomialOrder::grevlex(), weights);
  const auto same = detail::identity_shift<Field>(n, 0);
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : I.generators()) gens.push_back(remap_variables(g, R, S, same));
  gens.push_back(S.sub(S.one(), S.mul(S.variable(n), remap_variables(f, R, S, same))));
  Buchberger<Field> engine(S);
  auto gb = engine.compute(gens);
  return gb.size() == 1 && gb[0].lead_monomial().is_one();
}

/// I ∩ k[remaining variables], returned as an ideal of the same ring.
template <class Field>
Ideal<Field> eliminate(const Ideal<Field>& I, const std::vector<int>& vars) {
  const auto& R = I.ring();
  const int n = R.nvars();
  if (vars.empty()) return I;
  std::vector<char> drop(static_cast<std::size_t>(n), 0);
  for (int v : vars) {
    if (v < 0 || v >= n) throw RingError("variable index out of range: " + std::to_string(v));
    drop[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::vector<std::string> names;
  std::vector<int> weights;
  int k = 0;
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < n; ++i) {
      if ((drop[static_cast<std::size_t>(i)] != 0) != (pass == 0)) continue;
      perm[static_cast<std::size_t>(i)] = static_cast<int>(names.size());
      names.push_back(R.names()[static_cast<std::size_t>(i)]);
      weights.push_back(R.weights()[static_cast<std::size_t>(i)]);
    }
    if (pass == 0) k = static_cast<int>(names.size());
  }
  Ring<Field> S(R.field(), names, MonomialOrder::elimination(k), weights);
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : I.generators()) gens.push_back(remap_variables(g, R, S, perm));
  Buchberger<Field> engine(S);
  auto gb = engine.compute(gens);
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  std::vector<Polynomial<Field>> out;
  for (const auto& g : gb) {
    bool keep = true;
    for (const auto& t : g.terms()) {
      for (int j = 0; j < k && keep; ++j) keep = t.m.exponent(j) == 0;
      if (!keep) break;
    }
    if (keep) out.push_back(remap_variables(g, S, R, inv));
  }
  return Ideal<Field>(I.ring_ptr(), std::move(out));
}

}  // namespace sing
