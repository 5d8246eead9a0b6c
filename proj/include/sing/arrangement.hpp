#pragma once

// Hyperplane arrangements: parsing, codimension-two flats, the Jacobian ideal and
// the combinatorial descriptions of its radical, its top-dimensional part and the
// intersections of symbolic powers of the flat primes.  Also graphic arrangements
// and generic hyperplane sections.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sing/ideal.hpp"
#include "sing/linear_form.hpp"

namespace sing {

class ArrangementError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxFileVars = 8;

namespace detail {

inline std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::string without_comment(const std::string& line) {
  const auto h = line.find('#');
  return strip(h == std::string::npos ? line : line.substr(0, h));
}

inline bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace detail

class Arrangement {
 public:
  Arrangement() = default;
  Arrangement(std::vector<std::string> names, std::vector<LinearForm> forms)
      : names_(std::move(names)), forms_(std::move(forms)) {
    for (std::size_t i = 0; i < forms_.size(); ++i) {
      if (forms_[i].nvars() != nvars()) throw ArrangementError("form " + std::to_string(i + 1) + " has the wrong length");
      if (forms_[i].is_zero()) throw ArrangementError("form " + std::to_string(i + 1) + " is zero");
      for (std::size_t j = 0; j < i; ++j) {
        if (dependent(forms_[i], forms_[j])) {
          throw ArrangementError("forms " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                 " are dependent");
        }
      }
    }
  }

  /// Parses the .arr format: `vars: <names>` then one linear form per line, `#` comments.
  static Arrangement parse(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::vector<std::string> names;
    std::vector<LinearForm> forms;
    std::vector<int> lines;
    bool have_vars = false;
    while (std::getline(in, raw)) {
      ++lineno;
      const std::string line = detail::without_comment(raw);
      if (line.empty()) continue;
      if (!have_vars) {
        if (line.rfind("vars:", 0) != 0) throw ParseError("expected 'vars:' header", lineno);
        std::istringstream vs(line.substr(5));
        std::string v;
        while (vs >> v) {
          if (!detail::valid_name(v)) throw ParseError("invalid variable name '" + v + "'", lineno);
          if (std::find(names.begin(), names.end(), v) != names.end()) {
            throw ParseError("repeated variable '" + v + "'", lineno);
          }
          names.push_back(v);
        }
        if (names.empty()) throw ParseError("no variables declared", lineno);
        if (names.size() > static_cast<std::size_t>(kMaxFileVars)) {
          throw ParseError("at most 8 variables are allowed", lineno);
        }
        have_vars = true;
        continue;
      }
      auto f = LinearForm::parse(line, names, lineno);
      for (std::size_t j = 0; j < forms.size(); ++j) {
        if (dependent(f, forms[j])) {
          throw ParseError("form is a multiple of the form on line " + std::to_string(lines[j]), lineno);
        }
      }
      forms.push_back(std::move(f));
      lines.push_back(lineno);
    }
    if (!have_vars) throw ParseError("missing 'vars:' header");
    return Arrangement(std::move(names), std::move(forms));
  }

  static Arrangement from_strings(const std::vector<std::string>& names, const std::vector<std::string>& forms) {
    std::vector<LinearForm> f;
    for (const auto& s : forms) f.push_back(LinearForm::parse(s, names));
    return Arrangement(names, std::move(f));
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "vars:";
    for (const auto& n : names_) os << ' ' << n;
    os << '\n';
    for (const auto& f : forms_) os << f.to_string(names_) << '\n';
    return os.str();
  }

  int nvars() const { return static_cast<int>(names_.size()); }
  int size() const { return static_cast<int>(forms_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<LinearForm>& forms() const { return forms_; }
  const LinearForm& form(int i) const { return forms_[static_cast<std::size_t>(i)]; }
  std::string form_string(int i) const { return form(i).to_string(names_); }

  /// Concatenation (the arrangement of the product of the defining polynomials).
  Arrangement operator+(const Arrangement& other) const {
    if (other.names_ != names_) throw ArrangementError("arrangements over different variables");
    auto forms = forms_;
    forms.insert(forms.end(), other.forms_.begin(), other.forms_.end());
    return Arrangement(names_, std::move(forms));
  }

 private:
  std::vector<std::string> names_;
  std::vector<LinearForm> forms_;
};

/// Codimension-two flat: the reduced row-echelon basis of its ideal's linear span and
/// the hyperplanes containing it.
struct Flat {
  LinearForm s;
  LinearForm t;
  std::vector<int> members;
  int multiplicity() const { return static_cast<int>(members.size()); }
  /// Coordinates (alpha, beta) of a form alpha s + beta t lying in the span.
  std::pair<mpq_class, mpq_class> pencil_coordinates(const LinearForm& f) const {
    return {f[pivot(s)], f[pivot(t)]};
  }
  bool contains(const LinearForm& f) const {
    const auto [a, b] = pencil_coordinates(f);
    for (int i = 0; i < f.nvars(); ++i) {
      if (f[i] != a * s[i] + b * t[i]) return false;
    }
    return true;
  }
  static int pivot(const LinearForm& f) {
    for (int i = 0; i < f.nvars(); ++i) {
      if (sgn(f[i]) != 0) return i;
    }
    return -1;
  }
};

namespace detail {

inline std::pair<LinearForm, LinearForm> echelon_pair(const LinearForm& a, const LinearForm& b) {
  std::vector<mpq_class> r0 = a.coeffs(), r1 = b.coeffs();
  const std::size_t n = r0.size();
  std::size_t p0 = 0;
  while (p0 < n && sgn(r0[p0]) == 0) ++p0;
  {
    const mpq_class c = r0[p0];
    for (auto& v : r0) v /= c;
  }
  {
    const mpq_class c = r1[p0];
    for (std::size_t k = 0; k < n; ++k) r1[k] -= c * r0[k];
  }
  std::size_t p1 = 0;
  while (p1 < n && sgn(r1[p1]) == 0) ++p1;
  if (p1 == n) throw ArrangementError("dependent forms do not span a flat");
  {
    const mpq_class c = r1[p1];
    for (auto& v : r1) v /= c;
  }
  {
    const mpq_class c = r0[p1];
    for (std::size_t k = 0; k < n; ++k) r0[k] -= c * r1[k];
  }
  if (p1 < p0) std::swap(r0, r1);
  return {LinearForm(std::move(r0)), LinearForm(std::move(r1))};
}

inline std::string flat_key(const LinearForm& s, const LinearForm& t) {
  std::string k;
  for (const auto& c : s.coeffs()) k += c.get_str() + ",";
  k += ";";
  for (const auto& c : t.coeffs()) k += c.get_str() + ",";
  return k;
}

}  // namespace detail

/// Flats in order of their first hyperplane pair (lexicographic in (i, j)).
inline std::vector<Flat> intersection_flats(const Arrangement& A) {
  std::vector<Flat> flats;
  std::map<std::string, std::size_t> index;
  for (int i = 0; i < A.size(); ++i) {
    for (int j = i + 1; j < A.size(); ++j) {
      auto [s, t] = detail::echelon_pair(A.form(i), A.form(j));
      const auto key = detail::flat_key(s, t);
      auto it = index.find(key);
      if (it == index.end()) {
        index.emplace(key, flats.size());
        flats.push_back(Flat{std::move(s), std::move(t), {i, j}});
      } else {
        auto& m = flats[it->second].members;
        if (std::find(m.begin(), m.end(), j) == m.end()) m.push_back(j);
        if (std::find(m.begin(), m.end(), i) == m.end()) m.push_back(i);
        std::sort(m.begin(), m.end());
      }
    }
  }
  return flats;
}

/// Member sets of the flats, as a sorted set (basis-free description of the lattice).
inline std::set<std::vector<int>> flat_pattern(const std::vector<Flat>& flats) {
  std::set<std::vector<int>> p;
  for (const auto& f : flats) p.insert(f.members);
  return p;
}

struct CombinatorialDegrees {
  long reduced;  // number of flats
  long top;      // sum over flats of (e-1)^2 for e >= 3, 1 for e = 2
};

inline CombinatorialDegrees combinatorial_degrees(const Arrangement& A) {
  CombinatorialDegrees d{0, 0};
  for (const auto& f : intersection_flats(A)) {
    const long e = f.multiplicity();
    d.reduced += 1;
    d.top += e >= 3 ? (e - 1) * (e - 1) : 1;
  }
  return d;
}

struct HypothesisWitness {
  int plane;
  int flat1;
  int flat2;
};

struct HypothesisResult {
  bool holds;
  std::vector<HypothesisWitness> witnesses;
};

/// No plane lies in the primes of two distinct non-reduced (e >= 3) flats.
inline HypothesisResult hypothesis_check(const Arrangement& A) {
  const auto flats = intersection_flats(A);
  HypothesisResult r{true, {}};
  for (int p = 0; p < A.size(); ++p) {
    std::vector<int> through;
    for (std::size_t x = 0; x < flats.size(); ++x) {
      const auto& m = flats[x].members;
      if (flats[x].multiplicity() >= 3 && std::find(m.begin(), m.end(), p) != m.end()) {
        through.push_back(static_cast<int>(x));
      }
    }
    for (std::size_t a = 0; a < through.size(); ++a) {
      for (std::size_t b = a + 1; b < through.size(); ++b) r.witnesses.push_back({p, through[a], through[b]});
    }
  }
  r.holds = r.witnesses.empty();
  return r;
}

/// Ring in the arrangement's variables over `field` (grevlex).
template <class Field>
RingPtr<Field> arrangement_ring(const Arrangement& A, Field field) {
  return std::make_shared<const Ring<Field>>(std::move(field), A.names());
}

template <class Field>
Polynomial<Field> defining_polynomial(const Arrangement& A, const Ring<Field>& R) {
  return expand_product(A.forms(), R);
}

template <class Field>
Ideal<Field> jacobian_ideal(const Arrangement& A, const RingPtr<Field>& R) {
  const auto F = defining_polynomial(A, *R);
  std::vector<Polynomial<Field>> partials;
  for (int i = 0; i < R->nvars(); ++i) partials.push_back(R->derivative(F, i));
  return Ideal<Field>(R, std::move(partials));
}

template <class Field>
Ideal<Field> flat_prime(const Flat& X, const RingPtr<Field>& R) {
  return Ideal<Field>(R, {X.s.to_polynomial(*R), X.t.to_polynomial(*R)});
}

/// Q_X: the Jacobian ideal of the pencil of member forms written in the flat's
/// basis (s, t), pulled back to R; the flat prime itself when e = 2.
template <class Field>
Ideal<Field> pencil_jacobian(const Arrangement& A, const Flat& X, const RingPtr<Field>& R) {
  if (X.multiplicity() == 2) return flat_prime(X, R);
  Ring<Field> P(R->field(), {"s", "t"});
  auto g = P.one();
  for (int m : X.members) {
    const auto [a, b] = X.pencil_coordinates(A.form(m));
    g = P.mul(g, LinearForm(std::vector<mpq_class>{a, b}).to_polynomial(P));
  }
  const std::vector<LinearForm> images{X.s, X.t};
  return Ideal<Field>(R, {apply_linear_substitution(P.derivative(g, 0), P, images, *R),
                          apply_linear_substitution(P.derivative(g, 1), P, images, *R)});
}

template <class Field>
Ideal<Field> radical_comb(const Arrangement& A, const RingPtr<Field>& R) {
  std::vector<Ideal<Field>> primes;
  for (const auto& X : intersection_flats(A)) primes.push_back(flat_prime(X, R));
  if (primes.empty()) return Ideal<Field>::unit(R);
  return intersect_all(std::move(primes));
}

template <class Field>
Ideal<Field> top_comb(const Arrangement& A, const RingPtr<Field>& R) {
  std::vector<Ideal<Field>> parts;
  for (const auto& X : intersection_flats(A)) parts.push_back(pencil_jacobian(A, X, R));
  if (parts.empty()) return Ideal<Field>::unit(R);
  return intersect_all(std::move(parts));
}

/// The b-th power of the flat prime (s, t); powers of linear primes are symbolic powers.
template <class Field>
Ideal<Field> flat_prime_power(const Flat& X, int b, const RingPtr<Field>& R) {
  if (b == 0) return Ideal<Field>::unit(R);
  const auto s = X.s.to_polynomial(*R), t = X.t.to_polynomial(*R);
  std::vector<Polynomial<Field>> gens;
  for (int i = 0; i <= b; ++i) gens.push_back(R->mul(R->pow(s, i), R->pow(t, b - i)));
  return Ideal<Field>(R, std::move(gens));
}

/// ∩ P_X^{b_X}; b is aligned with intersection_flats(A).  Without `override_rules`
/// flats with e = 2 need b = 1 and flats with e >= 3 need 0 <= b <= e.
template <class Field>
Ideal<Field> symbolic_intersection(const Arrangement& A, const std::vector<int>& b, const RingPtr<Field>& R,
                                   bool override_rules = false) {
  const auto flats = intersection_flats(A);
  if (b.size() != flats.size()) throw ArrangementError("one exponent per flat is required");
  std::vector<Ideal<Field>> parts;
  for (std::size_t x = 0; x < flats.size(); ++x) {
    const int e = flats[x].multiplicity();
    const int bx = b[x];
    if (bx < 0) throw ArrangementError("negative exponent for flat " + std::to_string(x));
    if (!override_rules) {
      const bool ok = e == 2 ? bx == 1 : bx <= e;
      if (!ok) {
        throw ArrangementError("exponent " + std::to_string(bx) + " not allowed for flat " + std::to_string(x) +
                               " (" + flats[x].s.to_string(A.names()) + ", " + flats[x].t.to_string(A.names()) +
                               ") of multiplicity " + std::to_string(e));
      }
    }
    if (bx > 0) parts.push_back(flat_prime_power(flats[x], bx, R));
  }
  if (parts.empty()) return Ideal<Field>::unit(R);
  return intersect_all(std::move(parts));
}

/// Whether computations modulo p faithfully model the arrangement: p exceeds the
/// degree, divides no multiplicity and no denominator, and reduction mod p keeps
/// pairs independent and non-collinear triples non-collinear.
inline bool prime_field_safe(const Arrangement& A, std::uint32_t p) {
  if (!PrimeField::is_prime(p) || p <= static_cast<std::uint32_t>(A.size())) return false;
  const auto flats = intersection_flats(A);
  auto denominators_ok = [&](const LinearForm& f) {
    for (const auto& c : f.coeffs()) {
      if (mpz_divisible_ui_p(c.get_den_mpz_t(), p) != 0) return false;
    }
    return true;
  };
  for (const auto& f : A.forms()) {
    if (!denominators_ok(f)) return false;
  }
  for (const auto& X : flats) {
    if (X.multiplicity() % static_cast<int>(p) == 0) return false;
    if (!denominators_ok(X.s) || !denominators_ok(X.t)) return false;
  }
  const mpz_class P = p;
  auto rank_mod_p = [&](const std::vector<int>& idx) {
    std::vector<std::vector<mpz_class>> rows;
    for (int i : idx) {
      std::vector<mpz_class> r;
      for (const auto& c : A.form(i).coeffs()) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), c.get_den_mpz_t(), P.get_mpz_t());
        mpz_class v = c.get_num() * inv;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), P.get_mpz_t());
        r.push_back(v);
      }
      rows.push_back(std::move(r));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < static_cast<std::size_t>(A.nvars()) && rank < rows.size(); ++c) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][c] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), rows[rank][c].get_mpz_t(), P.get_mpz_t());
      for (std::size_t i = rank + 1; i < rows.size(); ++i) {
        const mpz_class m = rows[i][c] * inv;
        for (std::size_t k = c; k < rows[i].size(); ++k) {
          rows[i][k] -= m * rows[rank][k];
          mpz_mod(rows[i][k].get_mpz_t(), rows[i][k].get_mpz_t(), P.get_mpz_t());
        }
      }
      ++rank;
    }
    return rank;
  };
  std::map<std::pair<int, int>, std::size_t> flat_of;
  for (std::size_t x = 0; x < flats.size(); ++x) {
    for (int a : flats[x].members) {
      for (int b : flats[x].members) flat_of[{a, b}] = x;
    }
  }
  for (int i = 0; i < A.size(); ++i) {
    for (int j = i + 1; j < A.size(); ++j) {
      if (rank_mod_p({i, j}) != 2) return false;
      for (int k = j + 1; k < A.size(); ++k) {
        const bool collinear = flat_of.at({i, j}) == flat_of.at({i, k});
        if (!collinear && A.nvars() >= 3 && rank_mod_p({i, j, k}) != 3) return false;
      }
    }
  }
  return true;
}

// --- graphs -----------------------------------------------------------------

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based, first < second

  Graph() = default;
  Graph(int v, std::vector<std::pair<int, int>> e) : vertices(v) {
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : e) {
      if (a < 0 || b < 0 || a >= v || b >= v) throw ArrangementError("edge endpoint out of range");
      if (a == b) throw ArrangementError("loops are not allowed");
      if (a > b) std::swap(a, b);
      if (!seen.insert({a, b}).second) {
        throw ArrangementError("repeated edge " + std::to_string(a + 1) + " " + std::to_string(b + 1));
      }
      edges.emplace_back(a, b);
    }
  }

  /// Parses `vertices: v` followed by `edge: i j` lines (1-based).
  static Graph parse(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0, v = -1;
    std::vector<std::pair<int, int>> e;
    while (std::getline(in, raw)) {
      ++lineno;
      const std::string line = detail::without_comment(raw);
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::string tag;
      ls >> tag;
      if (tag == "vertices:") {
        if (v >= 0) throw ParseError("repeated 'vertices:' line", lineno);
        if (!(ls >> v) || v <= 0) throw ParseError("bad vertex count", lineno);
      } else if (tag == "edge:") {
        if (v < 0) throw ParseError("'edge:' before 'vertices:'", lineno);
        int a = 0, b = 0;
        if (!(ls >> a >> b)) throw ParseError("expected two vertex indices", lineno);
        std::string extra;
        if (ls >> extra) throw ParseError("trailing text after edge", lineno);
        e.emplace_back(a - 1, b - 1);
      } else {
        throw ParseError("unknown directive '" + tag + "'", lineno);
      }
    }
    if (v < 0) throw ParseError("missing 'vertices:' line");
    try {
      return Graph(v, std::move(e));
    } catch (const ArrangementError& err) {
      throw ParseError(err.what());
    }
  }

  bool has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::find(edges.begin(), edges.end(), std::pair(a, b)) != edges.end();
  }
};

/// One form x_i - x_j per edge, in variables x1..xv.
inline Arrangement graphic_arrangement(const Graph& G) {
  if (G.edges.size() < 2) throw ArrangementError("a graphic arrangement needs at least two edges");
  std::vector<std::string> names;
  for (int i = 1; i <= G.vertices; ++i) names.push_back("x" + std::to_string(i));
  std::vector<LinearForm> forms;
  for (auto [a, b] : G.edges) {
    std::vector<mpq_class> c(static_cast<std::size_t>(G.vertices), 0);
    c[static_cast<std::size_t>(a)] = 1;
    c[static_cast<std::size_t>(b)] = -1;
    forms.emplace_back(std::move(c));
  }
  return Arrangement(std::move(names), std::move(forms));
}

struct TriangleWitness {
  std::pair<int, int> edge;
  std::array<int, 3> cycle1;
  std::array<int, 3> cycle2;
};

struct TriangleResult {
  bool holds;
  std::vector<std::array<int, 3>> triangles;
  std::vector<TriangleWitness> witnesses;
};

/// No two 3-cycles share an edge.
inline TriangleResult triangle_condition(const Graph& G) {
  TriangleResult r{true, {}, {}};
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(G.vertices),
                                     std::vector<char>(static_cast<std::size_t>(G.vertices), 0));
  for (auto [a, b] : G.edges) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
      adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  auto A = [&](int a, int b) { return adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; };
  for (int i = 0; i < G.vertices; ++i) {
    for (int j = i + 1; j < G.vertices; ++j) {
      if (!A(i, j)) continue;
      for (int k = j + 1; k < G.vertices; ++k) {
        if (A(i, k) && A(j, k)) r.triangles.push_back({i, j, k});
      }
    }
  }
  for (auto [a, b] : G.edges) {
    std::vector<std::array<int, 3>> on;
    for (const auto& t : r.triangles) {
      const bool has_a = std::find(t.begin(), t.end(), a) != t.end();
      const bool has_b = std::find(t.begin(), t.end(), b) != t.end();
      if (has_a && has_b) on.push_back(t);
    }
    for (std::size_t x = 0; x < on.size(); ++x) {
      for (std::size_t y = x + 1; y < on.size(); ++y) r.witnesses.push_back({{a, b}, on[x], on[y]});
    }
  }
  r.holds = r.witnesses.empty();
  return r;
}

inline constexpr int kReseedCap = 32;

/// Restriction to a general P^3: variables 5.. are replaced by seeded random integer
/// combinations of the first four.  The flat membership pattern must survive.
inline Arrangement generic_section(const Arrangement& A, std::uint64_t seed) {
  if (A.nvars() < 4) throw ArrangementError("generic sections need at least four variables");
  if (A.nvars() == 4) return A;
  const auto pattern = flat_pattern(intersection_flats(A));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-999, 999);
  const std::vector<std::string> names(A.names().begin(), A.names().begin() + 4);
  for (int attempt = 0; attempt < kReseedCap; ++attempt) {
    std::vector<std::vector<mpq_class>> sub(static_cast<std::size_t>(A.nvars()),
                                            std::vector<mpq_class>(4, 0));
    for (int m = 4; m < A.nvars(); ++m) {
      for (int k = 0; k < 4; ++k) sub[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] = dist(rng);
    }
    std::vector<LinearForm> forms;
    bool ok = true;
    for (const auto& f : A.forms()) {
      std::vector<mpq_class> c(4, 0);
      for (int k = 0; k < 4; ++k) {
        c[static_cast<std::size_t>(k)] = f[k];
        for (int m = 4; m < A.nvars(); ++m) c[static_cast<std::size_t>(k)] += f[m] * sub[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
      }
      LinearForm g(std::move(c));
      if (g.is_zero()) ok = false;
      forms.push_back(std::move(g));
    }
    for (std::size_t i = 0; ok && i < forms.size(); ++i) {
      for (std::size_t j = 0; ok && j < i; ++j) ok = !dependent(forms[i], forms[j]);
    }
    if (!ok) continue;
    Arrangement B(names, std::move(forms));
    if (flat_pattern(intersection_flats(B)) == pattern) return B;
  }
  throw InternalLimit("no generic section preserved the flats after 32 attempts");
}

/// Whether some bijection of hyperplanes carries the flats of A onto those of B.
inline bool lattice_isomorphic(const Arrangement& A, const Arrangement& B) {
  if (A.size() != B.size()) return false;
  const auto fa = intersection_flats(A), fb = intersection_flats(B);
  if (fa.size() != fb.size()) return false;
  const int d = A.size();
  auto pair_table = [d](const std::vector<Flat>& flats) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(d), -1));
    for (std::size_t x = 0; x < flats.size(); ++x) {
      for (int a : flats[x].members) {
        for (int b : flats[x].members) {
          if (a != b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(x);
        }
      }
    }
    return t;
  };
  const auto ta = pair_table(fa), tb = pair_table(fb);
  auto signatures = [d](const std::vector<Flat>& flats) {
    std::vector<std::vector<int>> s(static_cast<std::size_t>(d));
    for (const auto& f : flats) {
      for (int m : f.members) s[static_cast<std::size_t>(m)].push_back(f.multiplicity());
    }
    for (auto& v : s) std::sort(v.begin(), v.end());
    return s;
  };
  const auto sa = signatures(fa), sb = signatures(fb);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  std::vector<int> image(static_cast<std::size_t>(d), -1);
  std::vector<char> used(static_cast<std::size_t>(d), 0);
  std::vector<int> flat_map(fa.size(), -1), flat_inv(fb.size(), -1);
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == d) return true;
    for (int c = 0; c < d; ++c) {
      if (used[static_cast<std::size_t>(c)] || sa[static_cast<std::size_t>(k)] != sb[static_cast<std::size_t>(c)]) continue;
      std::vector<std::pair<int, int>> added;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        const int x = ta[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        const int y = tb[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])][static_cast<std::size_t>(c)];
        if (fa[static_cast<std::size_t>(x)].multiplicity() != fb[static_cast<std::size_t>(y)].multiplicity()) {
          ok = false;
        } else if (flat_map[static_cast<std::size_t>(x)] >= 0) {
          ok = flat_map[static_cast<std::size_t>(x)] == y;
        } else if (flat_inv[static_cast<std::size_t>(y)] >= 0) {
          ok = false;
        } else {
          flat_map[static_cast<std::size_t>(x)] = y;
          flat_inv[static_cast<std::size_t>(y)] = x;
          added.emplace_back(x, y);
        }
      }
      if (ok) {
        image[static_cast<std::size_t>(k)] = c;
        used[static_cast<std::size_t>(c)] = 1;
        if (self(self, k + 1)) return true;
        used[static_cast<std::size_t>(c)] = 0;
        image[static_cast<std::size_t>(k)] = -1;
      }
      for (auto [x, y] : added) {
        flat_map[static_cast<std::size_t>(x)] = -1;
        flat_inv[static_cast<std::size_t>(y)] = -1;
      }
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace sing
