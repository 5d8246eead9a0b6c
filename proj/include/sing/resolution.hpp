#pragma once

// Graded free resolutions: a Schreyer frame built from the reduced Groebner basis,
// pruned to a minimal resolution, plus Betti tables, projective dimension,
// Cohen-Macaulayness and Hartshorne-Rao module dimensions for curves in P^3.

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sing/hilbert.hpp"

namespace sing {

template <class Field>
struct ModuleTerm {
  Monomial key;  // m times the total monomial of the component
  Monomial m;
  int comp;
  typename Field::Element c;
};

template <class Field>
using ModuleVector = std::vector<ModuleTerm<Field>>;

/// Sparse column-major matrix of polynomials; columns hold (row, entry) pairs sorted by row.
template <class Field>
struct PolyMatrix {
  int rows = 0;
  std::vector<std::vector<std::pair<int, Polynomial<Field>>>> cols;

  int ncols() const { return static_cast<int>(cols.size()); }
  Polynomial<Field> at(int r, int c) const {
    for (const auto& [row, p] : cols[static_cast<std::size_t>(c)]) {
      if (row == r) return p;
    }
    return Polynomial<Field>();
  }
};

struct GradedFreeModule {
  std::vector<int> twists;  // R(-a) contributes a
  int rank() const { return static_cast<int>(twists.size()); }
};

/// A homogeneous map source -> target given by the matrix whose column c is the image
/// of the c-th source generator.
template <class Field>
struct GradedMap {
  GradedFreeModule source;
  GradedFreeModule target;
  PolyMatrix<Field> matrix;
};

/// maps[k] is d_{k+1}: F_{k+1} -> F_k, ending at F_0 = R.
template <class Field>
struct Resolution {
  RingPtr<Field> ring;
  std::vector<GradedMap<Field>> maps;

  int length() const { return static_cast<int>(maps.size()); }
  GradedFreeModule module(int k) const {
    if (k == 0) return maps.empty() ? GradedFreeModule{{0}} : maps[0].target;
    return maps[static_cast<std::size_t>(k - 1)].source;
  }
};

namespace detail {

template <class Field>
class SchreyerFrame {
 public:
  using Poly = Polynomial<Field>;
  using Element = typename Field::Element;
  using VTerm = ModuleTerm<Field>;
  using Vec = ModuleVector<Field>;

  SchreyerFrame(const Ring<Field>& ring) : ring_(ring), field_(ring.field()) {}

  /// Builds the frame from a reduced grevlex Groebner basis.
  Resolution<Field> build(const std::vector<Poly>& gb, RingPtr<Field> ring_ptr) {
    // Level 0: polynomials as vectors over F_0 = R (one component, total monomial 1).
    std::vector<Vec> level;
    for (const auto& g : gb) {
      Vec v;
      for (const auto& t : g.terms()) v.push_back(VTerm{t.m, t.m, 0, t.c});
      level.push_back(std::move(v));
    }
    sort_level(level);
    Resolution<Field> res;
    res.ring = std::move(ring_ptr);
    std::vector<int> prev_twists{0};
    while (!level.empty()) {
      GradedMap<Field> map;
      map.target.twists = prev_twists;
      for (const auto& v : level) map.source.twists.push_back(v.front().key.degree());
      map.matrix = to_matrix(level, static_cast<int>(prev_twists.size()));
      prev_twists = map.source.twists;
      res.maps.push_back(std::move(map));
      level = next_level(level);
      if (res.maps.size() > static_cast<std::size_t>(ring_.nvars()) + 1) {
        throw InternalLimit("Schreyer frame longer than the number of variables");
      }
    }
    return res;
  }

  /// Schreyer order: compare m times the total monomial, ties go to the lower component.
  static int cmp(const VTerm& a, const VTerm& b) {
    const int c = grevlex_cmp(a.key, b.key);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }

 private:
  struct TermCmp {
    int operator()(const VTerm& a, const VTerm& b) const { return cmp(a, b); }
  };

  PolyMatrix<Field> to_matrix(const std::vector<Vec>& level, int rows) const {
    PolyMatrix<Field> M;
    M.rows = rows;
    for (const auto& v : level) {
      std::map<int, std::vector<Term<Element>>> by_row;
      for (const auto& t : v) by_row[t.comp].push_back({t.m, t.c});
      std::vector<std::pair<int, Poly>> col;
      for (auto& [r, terms] : by_row) {
        auto p = ring_.from_terms(std::move(terms));
        if (!p.is_zero()) col.emplace_back(r, std::move(p));
      }
      M.cols.push_back(std::move(col));
    }
    return M;
  }

  Vec multiple(const Vec& v, std::size_t from, const Monomial& m, const Element& c) const {
    Vec out;
    out.reserve(v.size() - from);
    for (std::size_t k = from; k < v.size(); ++k) {
      out.push_back(VTerm{v[k].key * m, v[k].m * m, v[k].comp, field_.mul(v[k].c, c)});
    }
    return out;
  }

 public:
  // Syzygies of `level` (a Groebner basis for the Schreyer order of its module).
  std::vector<Vec> next_level(const std::vector<Vec>& level) const {
    const std::size_t n = level.size();
    std::vector<Monomial> totals(n);
    for (std::size_t a = 0; a < n; ++a) totals[a] = level[a].front().key;
    std::unordered_map<int, std::vector<std::size_t>> by_comp;
    for (std::size_t a = 0; a < n; ++a) by_comp[level[a].front().comp].push_back(a);

    std::vector<Vec> out;
    for (std::size_t a = 0; a < n; ++a) {
      const auto& la = level[a].front();
      struct Cand {
        Monomial q;
        std::size_t b;
      };
      std::vector<Cand> cands;
      for (std::size_t b : by_comp[la.comp]) {
        if (b <= a) continue;
        const Monomial l = lcm(la.m, level[b].front().m);
        cands.push_back(Cand{la.m.quotient_of(l), b});
      }
      // Minimal generators of the monomial ideal of the candidate quotients.
      std::vector<Cand> minimal;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < cands.size() && !redundant; ++j) {
          if (j == i || !cands[j].q.divides(cands[i].q)) continue;
          redundant = !(cands[j].q == cands[i].q) || j < i;
        }
        if (!redundant) minimal.push_back(cands[i]);
      }
      for (const auto& cand : minimal) out.push_back(syzygy(level, totals, by_comp, a, cand.b, cand.q));
    }
    sort_level(out);
    return out;
  }

  // Within each lead component, leads sorted lex-descending; components ascending.
  void sort_level(std::vector<Vec>& level) const {
    std::stable_sort(level.begin(), level.end(), [this](const Vec& a, const Vec& b) {
      if (a.front().comp != b.front().comp) return a.front().comp < b.front().comp;
      return compare(MonomialOrder::lex(), ring_.nvars(), a.front().m, b.front().m) > 0;
    });
  }

 private:
  Vec syzygy(const std::vector<Vec>& level, const std::vector<Monomial>& totals,
             std::unordered_map<int, std::vector<std::size_t>>& by_comp, std::size_t a, std::size_t b,
             const Monomial& qa) const {
    const auto& la = level[a].front();
    const auto& lb = level[b].front();
    const Monomial l = lcm(la.m, lb.m);
    const Monomial qb = lb.m.quotient_of(l);
    const Element ia = field_.inv(la.c);
    const Element ib = field_.inv(lb.c);
    Geobucket<VTerm, Field, TermCmp> bucket(field_, TermCmp{});
    bucket.add(multiple(level[a], 1, qa, ia));
    bucket.add(multiple(level[b], 1, qb, field_.neg(ib)));
    Vec tau;
    tau.push_back(VTerm{qa * totals[a], qa, static_cast<int>(a), ia});
    tau.push_back(VTerm{qb * totals[b], qb, static_cast<int>(b), field_.neg(ib)});
    while (auto t = bucket.pop_lead()) {
      std::size_t r = n_npos;
      for (std::size_t c : by_comp[t->comp]) {
        if (level[c].front().m.divides(t->m)) {
          r = c;
          break;
        }
      }
      if (r == n_npos) throw InternalLimit("Schreyer reduction met an irreducible term");
      const auto& lr = level[r].front();
      const Monomial q = lr.m.quotient_of(t->m);
      const Element coef = field_.div(t->c, lr.c);
      tau.push_back(VTerm{q * totals[r], q, static_cast<int>(r), field_.neg(coef)});
      bucket.add(multiple(level[r], 1, q, field_.neg(coef)));
    }
    // Sort into the Schreyer order of the new module and combine duplicates.
    std::sort(tau.begin(), tau.end(), [](const VTerm& x, const VTerm& y) { return cmp(x, y) > 0; });
    Vec combined;
    for (auto& t : tau) {
      if (!combined.empty() && cmp(combined.back(), t) == 0) {
        combined.back().c = field_.add(combined.back().c, t.c);
        if (field_.is_zero(combined.back().c)) combined.pop_back();
      } else {
        combined.push_back(std::move(t));
      }
    }
    if (combined.empty() || combined.front().comp != static_cast<int>(a)) {
      throw InternalLimit("Schreyer syzygy has an unexpected leading term");
    }
    const Element inv = field_.inv(combined.front().c);
    for (auto& t : combined) t.c = field_.mul(t.c, inv);
    return combined;
  }

  static constexpr std::size_t n_npos = static_cast<std::size_t>(-1);

  const Ring<Field>& ring_;
  const Field& field_;
};

}  // namespace detail

/// Non-minimal resolution of R/I from the Schreyer frame of its reduced grevlex basis.
template <class Field>
Resolution<Field> schreyer_resolution(const Ideal<Field>& I) {
  if (!I.is_homogeneous()) throw std::invalid_argument("resolutions need a homogeneous ideal");
  const auto& b = I.groebner(MonomialOrder::grevlex());
  if (I.is_unit()) throw std::invalid_argument("the unit ideal has no quotient to resolve");
  detail::SchreyerFrame<Field> frame(*b.ring);
  return frame.build(b.polys, b.ring);
}

namespace detail {

template <class Field>
bool is_constant(const Polynomial<Field>& p) {
  return !p.is_zero() && p.lead_monomial().is_one();
}

}  // namespace detail

/// Prunes a resolution by pivoting on constant entries until none are left.
template <class Field>
Resolution<Field> minimize(Resolution<Field> res) {
  const auto& R = *res.ring;
  const auto& F = R.field();
  const std::size_t L = res.maps.size();
  // Liveness of the basis elements of F_0 .. F_L.
  std::vector<std::vector<char>> live(L + 1);
  live[0].assign(1, 1);
  for (std::size_t k = 0; k < L; ++k) live[k + 1].assign(res.maps[k].source.twists.size(), 1);

  for (std::size_t k = 0; k < L; ++k) {
    auto& M = res.maps[k].matrix;  // d_{k+1}: rows in F_k, cols in F_{k+1}
    while (true) {
      int pr = -1, pc = -1;
      std::size_t best = 0;
      for (int c = 0; c < M.ncols(); ++c) {
        if (!live[k + 1][static_cast<std::size_t>(c)]) continue;
        for (const auto& [r, p] : M.cols[static_cast<std::size_t>(c)]) {
          if (!live[k][static_cast<std::size_t>(r)] || !detail::is_constant(p)) continue;
          const std::size_t sz = M.cols[static_cast<std::size_t>(c)].size();
          if (pc < 0 || sz < best) {
            pr = r;
            pc = c;
            best = sz;
          }
        }
      }
      if (pc < 0) break;
      const auto& pivot_col = M.cols[static_cast<std::size_t>(pc)];
      const auto u = M.at(pr, pc).lead_coeff();
      const auto u_inv = F.inv(u);
      for (int c = 0; c < M.ncols(); ++c) {
        if (c == pc || !live[k + 1][static_cast<std::size_t>(c)]) continue;
        auto& col = M.cols[static_cast<std::size_t>(c)];
        auto it = std::find_if(col.begin(), col.end(), [pr](const auto& e) { return e.first == pr; });
        if (it == col.end()) continue;
        const auto lambda = R.scale(it->second, F.neg(u_inv));
        std::map<int, Polynomial<Field>> merged;
        for (auto& [r, p] : col) merged[r] = std::move(p);
        for (const auto& [r, p] : pivot_col) {
          auto add = R.mul(lambda, p);
          auto cur = merged.find(r);
          if (cur == merged.end()) {
            merged[r] = std::move(add);
          } else {
            cur->second = R.add(cur->second, add);
          }
        }
        col.clear();
        for (auto& [r, p] : merged) {
          if (!p.is_zero()) col.emplace_back(r, std::move(p));
        }
      }
      live[k][static_cast<std::size_t>(pr)] = 0;
      live[k + 1][static_cast<std::size_t>(pc)] = 0;
    }
  }

  // Compact: drop dead rows/columns and renumber.
  std::vector<std::vector<int>> index(L + 1);
  for (std::size_t k = 0; k <= L; ++k) {
    index[k].assign(live[k].size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < live[k].size(); ++i) {
      if (live[k][i]) index[k][i] = next++;
    }
  }
  Resolution<Field> out;
  out.ring = res.ring;
  for (std::size_t k = 0; k < L; ++k) {
    GradedMap<Field> map;
    const auto& old = res.maps[k];
    for (std::size_t i = 0; i < live[k].size(); ++i) {
      if (live[k][i]) map.target.twists.push_back(old.target.twists[i]);
    }
    for (std::size_t i = 0; i < live[k + 1].size(); ++i) {
      if (live[k + 1][i]) map.source.twists.push_back(old.source.twists[i]);
    }
    if (map.source.twists.empty()) break;
    map.matrix.rows = static_cast<int>(map.target.twists.size());
    for (std::size_t c = 0; c < old.matrix.cols.size(); ++c) {
      if (!live[k + 1][c]) continue;
      std::vector<std::pair<int, Polynomial<Field>>> col;
      for (const auto& [r, p] : old.matrix.cols[c]) {
        if (live[k][static_cast<std::size_t>(r)]) col.emplace_back(index[k][static_cast<std::size_t>(r)], p);
      }
      map.matrix.cols.push_back(std::move(col));
    }
    out.maps.push_back(std::move(map));
  }
  return out;
}

template <class Field>
bool is_minimal(const Resolution<Field>& res) {
  for (const auto& m : res.maps) {
    for (const auto& col : m.matrix.cols) {
      for (const auto& [r, p] : col) {
        if (detail::is_constant(p)) return false;
      }
    }
  }
  return true;
}

template <class Field>
Resolution<Field> minimal_free_resolution(const Ideal<Field>& I) {
  return minimize(schreyer_resolution(I));
}

/// Betti numbers beta_{i, i+j} of a minimal resolution, stored by (column i, row j).
class BettiTable {
 public:
  BettiTable() = default;

  template <class Field>
  static BettiTable from_resolution(const Resolution<Field>& res) {
    if (!is_minimal(res)) throw std::invalid_argument("Betti numbers need a minimal resolution");
    BettiTable b;
    for (int k = 0; k <= res.length(); ++k) {
      for (int a : res.module(k).twists) b.add(k, a - k);
    }
    return b;
  }

  void add(int col, int row, int count = 1) {
    entries_[{col, row}] += count;
    if (entries_[{col, row}] == 0) entries_.erase({col, row});
  }
  int at(int col, int row) const {
    auto it = entries_.find({col, row});
    return it == entries_.end() ? 0 : it->second;
  }
  int columns() const {
    int c = 0;
    for (const auto& [k, v] : entries_) c = std::max(c, k.first + 1);
    return c;
  }
  int rows() const {
    int r = 0;
    for (const auto& [k, v] : entries_) r = std::max(r, k.second + 1);
    return r;
  }
  std::vector<int> totals() const {
    std::vector<int> t(static_cast<std::size_t>(columns()), 0);
    for (const auto& [k, v] : entries_) t[static_cast<std::size_t>(k.first)] += v;
    return t;
  }
  /// Entries of row j, one per column.
  std::vector<int> row(int j) const {
    std::vector<int> r(static_cast<std::size_t>(columns()), 0);
    for (int i = 0; i < columns(); ++i) r[static_cast<std::size_t>(i)] = at(i, j);
    return r;
  }
  const std::map<std::pair<int, int>, int>& entries() const { return entries_; }

  /// Sum_{i,j} (-1)^i beta_{i,i+j} t^{i+j}, lowest degree first.
  IntPoly alternating_sum() const {
    IntPoly p;
    for (const auto& [k, v] : entries_) {
      const std::size_t deg = static_cast<std::size_t>(k.first + k.second);
      if (p.size() <= deg) p.resize(deg + 1, 0);
      p[deg] += (k.first % 2 == 0 ? 1 : -1) * v;
    }
    detail::trim(p);
    return p;
  }

  std::string to_text() const {
    const int ncols = columns();
    std::ostringstream os;
    std::string header = "        0";
    for (int i = 1; i < ncols; ++i) {
      std::ostringstream h;
      h << std::setw(5) << i;
      header += h.str();
    }
    const std::string rule(header.size() + 1, '-');
    os << header << '\n' << rule << '\n';
    auto cell = [](int v, int width) {
      std::ostringstream c;
      c << std::setw(width) << (v == 0 ? std::string("-") : std::to_string(v));
      return c.str();
    };
    for (int j = 0; j < rows(); ++j) {
      os << std::setw(2) << j << ':';
      for (int i = 0; i < ncols; ++i) os << cell(at(i, j), i == 0 ? 6 : 5);
      os << '\n';
    }
    os << rule << '\n' << "Tot:";
    const auto t = totals();
    for (int i = 0; i < ncols; ++i) os << cell(t[static_cast<std::size_t>(i)], 5);
    os << '\n';
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (int j = 0; j < rows(); ++j) rows_json.push_back({{"degree", j}, {"betti", row(j)}});
    return {{"rows", rows_json}, {"total", totals()}};
  }

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries_ == b.entries_; }

 private:
  std::map<std::pair<int, int>, int> entries_;
};

template <class Field>
BettiTable betti_table(const Resolution<Field>& res) {
  return BettiTable::from_resolution(res);
}

struct Dimensions {
  int krull;
  int codim;
  int projective;
};

template <class Field>
Dimensions dimensions(const Ideal<Field>& I) {
  if (I.is_unit()) throw std::invalid_argument("dimensions of the unit ideal are undefined");
  const auto H = hilbert(I);
  const auto res = minimal_free_resolution(I);
  return Dimensions{H.dim, I.ring().nvars() - H.dim, res.length()};
}

/// Auslander-Buchsbaum: R/I is Cohen-Macaulay iff pd(R/I) equals codim I.
template <class Field>
bool is_cm(const Ideal<Field>& I) {
  const auto d = dimensions(I);
  return d.projective == d.codim;
}

namespace detail {

/// Rank of a dense matrix over the field (rows are consumed).
template <class Field>
std::size_t rank(const Field& F, std::vector<std::vector<typename Field::Element>> a, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && F.is_zero(a[piv][c])) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const auto inv = F.inv(a[r][c]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (F.is_zero(a[i][c])) continue;
      const auto m = F.mul(a[i][c], inv);
      for (std::size_t k = c; k < ncols; ++k) {
        if (!F.is_zero(a[r][k])) a[i][k] = F.sub(a[i][k], F.mul(m, a[r][k]));
      }
    }
    ++r;
  }
  return r;
}

}  // namespace detail

/// Degree -> dimension of the Hartshorne-Rao module of the curve cut out by I in P^3.
using RaoTable = std::map<int, long>;

/// Graded pieces of coker(d_3^T) = M^∨, reindexed by local duality: dim M_t = dim coker_{-t-4}.
template <class Field>
RaoTable rao_dimensions(const Ideal<Field>& I) {
  if (I.ring().nvars() != 4) throw std::invalid_argument("Rao modules are computed for curves in P^3 only");
  const auto res = minimal_free_resolution(I);
  const int n = I.ring().nvars();
  const auto H = hilbert(I);
  if (n - H.dim != 2) throw std::invalid_argument("Rao modules need a codimension-2 ideal");
  if (res.length() > 3) throw std::invalid_argument("projective dimension exceeds 3 (ideal not saturated)");
  RaoTable table;
  if (res.length() <= 2) return table;
  const auto& R = *res.ring;
  const auto& F = R.field();
  const auto& d3 = res.maps[2];
  const auto& a = d3.target.twists;  // F_2 twists
  const auto& b = d3.source.twists;  // F_3 twists
  const int bmax = *std::max_element(b.begin(), b.end());
  const int bmin = *std::min_element(b.begin(), b.end());
  for (int s = -bmax;; ++s) {
    // Columns: monomial bases of R_{s + b_j}, block by block.
    std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> col_index(b.size());
    std::size_t ncols = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (const auto& m : monomials_of_degree(n, s + b[j])) col_index[j][m] = ncols++;
    }
    std::vector<std::vector<typename Field::Element>> rows;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (const auto& m : monomials_of_degree(n, s + a[i])) {
        std::vector<typename Field::Element> row(ncols, F.zero());
        bool any = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
          const auto entry = d3.matrix.at(static_cast<int>(i), static_cast<int>(j));
          for (const auto& t : entry.terms()) {
            row[col_index[j].at(t.m * m)] = F.add(row[col_index[j].at(t.m * m)], t.c);
            any = true;
          }
        }
        if (any) rows.push_back(std::move(row));
      }
    }
    const long dim = static_cast<long>(ncols) - static_cast<long>(detail::rank(F, std::move(rows), ncols));
    if (dim > 0) table[-s - n] = dim;
    if (s >= -bmin && dim == 0) break;
  }
  return table;
}

inline nlohmann::json rao_json(const RaoTable& t) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [deg, dim] : t) j[std::to_string(deg)] = dim;
  return j;
}

/// Syzygies of arbitrary polynomial generators f_1..f_m: the vectors (a_i) with
/// sum a_i f_i = 0.  The input is first checked against the Buchberger criterion;
/// Groebner bases go straight through Schreyer's construction, other inputs through
/// a position-over-term basis of the module generated by (f_i, e_i).
template <class Field>
std::vector<std::vector<Polynomial<Field>>> schreyer_syzygies(const Ring<Field>& R,
                                                              const std::vector<Polynomial<Field>>& gens);

}  // namespace sing

#include "sing/syzygy.hpp"
