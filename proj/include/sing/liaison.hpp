#pragma once

// Liaison addition and basic double links, on ideals and on arrangements, and the
// constructions of arrangements whose singular curves have Rao modules of prescribed
// dimension concentrated in one degree.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sing/arrangement.hpp"
#include "sing/hilbert.hpp"
#include "sing/ideal.hpp"
#include "sing/resolution.hpp"

namespace sing {

class LiaisonError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Codimension of (F1, F2); 2 exactly when the pair is a regular sequence.
template <class Field>
int pair_codimension(const RingPtr<Field>& R, const Polynomial<Field>& F1, const Polynomial<Field>& F2) {
  Ideal<Field> V(R, {F1, F2});
  if (V.is_unit()) return R->nvars() + 1;
  return R->nvars() - hilbert(V).dim;
}

template <class Field>
int homogeneous_degree(const Ring<Field>& R, const Polynomial<Field>& f, const char* what) {
  if (f.is_zero() || !R.is_homogeneous(f)) throw LiaisonError(std::string(what) + " must be a nonzero form");
  return *R.degree(f);
}

template <class Field>
struct LiaisonStep {
  enum class Kind { addition, bdl };
  Kind kind;
  Ideal<Field> I1;
  Ideal<Field> I2;  // the unit ideal for a basic double link
  Polynomial<Field> F1;
  Polynomial<Field> F2;
  int d1;
  int d2;
  Ideal<Field> output;

  /// h_Z(t) - h_V(t) - h_{V1}(t - d2) - h_{V2}(t - d1) for t = 0..last, with V = (F1, F2).
  std::vector<mpz_class> hilbert_defect(int last) const {
    const auto R = output.ring_ptr();
    const auto hz = hilbert(output), hv = hilbert(Ideal<Field>(R, {F1, F2}));
    const auto h1 = hilbert(I1);
    const auto h2 = I2.is_unit() ? HilbertData{} : hilbert(I2);
    auto val = [](const HilbertData& H, int t) { return t < 0 || H.numerator.empty() ? mpz_class(0) : H.value(t); };
    std::vector<mpz_class> out;
    for (int t = 0; t <= last; ++t) out.push_back(val(hz, t) - val(hv, t) - val(h1, t - d2) - val(h2, t - d1));
    return out;
  }

  /// Checks additivity through the regularity indices of every term plus a margin that
  /// pins the Hilbert polynomials.
  bool hilbert_additive() const {
    const auto R = output.ring_ptr();
    int last = hilbert(output).regularity_index;
    last = std::max(last, hilbert(Ideal<Field>(R, {F1, F2})).regularity_index);
    last = std::max(last, hilbert(I1).regularity_index + d2);
    if (!I2.is_unit()) last = std::max(last, hilbert(I2).regularity_index + d1);
    last += R->nvars() + 1;
    for (const auto& v : hilbert_defect(last)) {
      if (v != 0) return false;
    }
    return true;
  }
};

/// F2·I1 + F1·I2 after checking F1 ∈ I1, F2 ∈ I2 and that (F1, F2) has codimension 2.
template <class Field>
LiaisonStep<Field> liaison_addition_step(const Ideal<Field>& I1, const Polynomial<Field>& F1, const Ideal<Field>& I2,
                                         const Polynomial<Field>& F2) {
  require_same_ring(I1, I2);
  const auto R = I1.ring_ptr();
  const int d1 = homogeneous_degree(*R, F1, "F1");
  const int d2 = homogeneous_degree(*R, F2, "F2");
  if (!I1.is_homogeneous() || !I2.is_homogeneous()) throw LiaisonError("input ideals must be homogeneous");
  if (!I1.contains(F1)) throw LiaisonError("F1 does not lie in I1");
  if (!I2.contains(F2)) throw LiaisonError("F2 does not lie in I2");
  if (pair_codimension(R, F1, F2) != 2) throw LiaisonError("F1, F2 is not a regular sequence (codimension is not 2)");
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : I1.generators()) gens.push_back(R->mul(F2, g));
  for (const auto& g : I2.generators()) gens.push_back(R->mul(F1, g));
  const auto kind = I2.is_unit() ? LiaisonStep<Field>::Kind::bdl : LiaisonStep<Field>::Kind::addition;
  return LiaisonStep<Field>{kind, I1, I2, F1, F2, d1, d2, Ideal<Field>(R, std::move(gens))};
}

template <class Field>
Ideal<Field> liaison_addition(const Ideal<Field>& I1, const Polynomial<Field>& F1, const Ideal<Field>& I2,
                              const Polynomial<Field>& F2) {
  return liaison_addition_step(I1, F1, I2, F2).output;
}

template <class Field>
LiaisonStep<Field> basic_double_link_step(const Ideal<Field>& I1, const Polynomial<Field>& F1,
                                          const Polynomial<Field>& F2) {
  return liaison_addition_step(I1, F1, Ideal<Field>::unit(I1.ring_ptr()), F2);
}

/// F2·I1 + (F1).
template <class Field>
Ideal<Field> basic_double_link(const Ideal<Field>& I1, const Polynomial<Field>& F1, const Polynomial<Field>& F2) {
  return basic_double_link_step(I1, F1, F2).output;
}

inline RaoTable shift_rao(const RaoTable& t, int by) {
  RaoTable out;
  for (const auto& [deg, dim] : t) out[deg + by] = dim;
  return out;
}

/// Pointwise sum of two Rao tables.
inline RaoTable add_rao(const RaoTable& a, const RaoTable& b) {
  RaoTable out = a;
  for (const auto& [deg, dim] : b) out[deg] += dim;
  return out;
}

/// Degree of the curve cut out by a codimension-2 ideal: h(1) of the reduced series.
template <class Field>
long curve_degree(const Ideal<Field>& I) {
  const auto H = hilbert(I);
  if (I.ring().nvars() - H.dim != 2) throw std::invalid_argument("curve degree needs a codimension-2 ideal");
  mpz_class s = 0;
  for (const auto& c : H.h) s += c;
  return s.get_si();
}

// --- arrangement level ------------------------------------------------------

struct ProductWitness {
  bool second_in_first;  // a plane of the second arrangement lies on a flat of the first
  int plane;
  int flat;
};

struct ProductHypotheses {
  bool holds;
  std::vector<ProductWitness> witnesses;
};

/// No plane of G contains a flat of F and no plane of F contains a flat of G.
inline ProductHypotheses arrangement_product_hypotheses(const Arrangement& F, const Arrangement& G) {
  if (F.names() != G.names()) throw ArrangementError("arrangements over different variables");
  ProductHypotheses r{true, {}};
  auto scan = [&r](const Arrangement& A, const Arrangement& B, bool second_in_first) {
    const auto flats = intersection_flats(A);
    for (int p = 0; p < B.size(); ++p) {
      for (std::size_t x = 0; x < flats.size(); ++x) {
        if (flats[x].contains(B.form(p))) r.witnesses.push_back({second_in_first, p, static_cast<int>(x)});
      }
    }
  };
  scan(F, G, true);
  scan(G, F, false);
  r.holds = r.witnesses.empty();
  return r;
}

/// xyzw(x+y)(y+z)(z+w)(w+x)(w+x+y+z): its top curve has a one-dimensional Rao module in degree 8.
inline Arrangement block9() {
  return Arrangement::from_strings({"x", "y", "z", "w"},
                                   {"x", "y", "z", "w", "x+y", "y+z", "z+w", "w+x", "w+x+y+z"});
}

/// yz(x+y)(x+z)(w+x)(x+y+z)(w+x+y)(w+x+z): its reduced curve has a one-dimensional Rao module in degree 4.
inline Arrangement block8() {
  return Arrangement::from_strings({"x", "y", "z", "w"},
                                   {"y", "z", "x+y", "x+z", "w+x", "x+y+z", "w+x+y", "w+x+z"});
}

inline constexpr long kBlock9Degree = 42;

/// Image of A under the substitution x -> M x, with M an invertible integer matrix.
inline Arrangement transform(const Arrangement& A, const std::vector<std::vector<long>>& M) {
  const int n = A.nvars();
  std::vector<LinearForm> forms;
  for (const auto& f : A.forms()) {
    std::vector<mpq_class> c(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(j)] += f[i] * M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    forms.push_back(LinearForm(std::move(c)).primitive());
  }
  return Arrangement(A.names(), std::move(forms));
}

namespace detail {

inline mpz_class determinant(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const mpq_class m = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= m * a[c][k];
    }
  }
  return det.get_num();
}

inline std::vector<std::vector<long>> random_invertible(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-9, 9);
  while (true) {
    std::vector<std::vector<long>> M(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n)));
    std::vector<std::vector<mpq_class>> Q(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = dist(rng);
        Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
    }
    if (determinant(std::move(Q)) != 0) return M;
  }
}

/// A plane with random coefficients in [-9, 9] that contains no flat of A and
/// is independent of every plane of A.
inline LinearForm general_plane(const Arrangement& A, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-9, 9);
  const auto flats = intersection_flats(A);
  for (int attempt = 0; attempt < kReseedCap; ++attempt) {
    std::vector<long> c(static_cast<std::size_t>(A.nvars()));
    for (auto& v : c) v = dist(rng);
    const auto L = LinearForm::from_ints(c);
    if (L.is_zero()) continue;
    bool ok = true;
    for (const auto& f : A.forms()) ok = ok && !dependent(f, L);
    for (const auto& X : flats) ok = ok && !X.contains(L);
    if (ok) return L;
  }
  throw InternalLimit("no general plane found after 32 attempts");
}

}  // namespace detail

struct Construction {
  Arrangement arrangement;
  std::vector<Arrangement> parts;    // the randomized blocks
  std::vector<LinearForm> extra;     // the general planes appended afterwards
  RaoTable predicted_rao;
  long predicted_degree = 0;         // only set for the top-component construction
};

namespace detail {

inline Construction construct_from_block(const Arrangement& block, int r, int h, std::uint64_t seed) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (h < 0) throw std::invalid_argument("h must be nonnegative");
  std::mt19937_64 rng(seed);
  Construction c;
  std::optional<Arrangement> acc;
  for (int k = 0; k < r; ++k) {
    bool placed = false;
    for (int attempt = 0; attempt < kReseedCap && !placed; ++attempt) {
      auto copy = k == 0 ? block : transform(block, random_invertible(block.nvars(), rng));
      if (k == 0) {
        placed = true;
      } else {
        bool ok = true;
        for (const auto& f : copy.forms()) {
          for (const auto& g : acc->forms()) ok = ok && !dependent(f, g);
        }
        ok = ok && arrangement_product_hypotheses(*acc, copy).holds;
        if (!ok) continue;
        placed = true;
      }
      if (placed) {
        acc = acc ? *acc + copy : copy;
        c.parts.push_back(std::move(copy));
      }
    }
    if (!placed) throw InternalLimit("no coordinate change satisfied the product hypotheses after 32 attempts");
  }
  for (int j = 0; j < h; ++j) {
    auto L = general_plane(*acc, rng);
    c.extra.push_back(L);
    acc = *acc + Arrangement(acc->names(), {L});
  }
  c.arrangement = *acc;
  return c;
}

}  // namespace detail

/// r blocks of nine planes in general position and h general planes; the top
/// singular curve has Rao module of dimension r in degree 8 + 9(r-1) + h.
inline Construction construct_Lr(int r, int h, std::uint64_t seed) {
  auto c = detail::construct_from_block(block9(), r, h, seed);
  c.predicted_rao = {{8 + 9 * (r - 1) + h, static_cast<long>(r)}};
  // Liaison addition of k-1 blocks (degree 9(k-1)) with one more block (degree 9).
  long deg = kBlock9Degree;
  for (int k = 2; k <= r; ++k) deg += kBlock9Degree + 81L * (k - 1);
  // Each general plane is a basic double link with F1 the current product.
  for (int j = 0; j < h; ++j) deg += 9L * r + j;
  c.predicted_degree = deg;
  return c;
}

/// As construct_Lr with the eight-plane block; the prediction concerns the reduced curve.
inline Construction construct_Lr_radical(int r, int h, std::uint64_t seed) {
  auto c = detail::construct_from_block(block8(), r, h, seed);
  c.predicted_rao = {{4 + 8 * (r - 1) + h, static_cast<long>(r)}};
  return c;
}

}  // namespace sing
