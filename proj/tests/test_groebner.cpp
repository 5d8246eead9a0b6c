#include <gtest/gtest.h>

#include <map>
#include <random>

#include "seed_log.hpp"
#include "sing/ideal.hpp"
#include "sing/linear_form.hpp"

using namespace sing;

namespace {

using PF = PrimeField;
using PRing = Ring<PF>;
using PPoly = Polynomial<PF>;
using PIdeal = Ideal<PF>;

RingPtr<PF> ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const PRing>(PF(32003), std::move(names), order);
}

// Parses products and sums of linear forms, e.g. "x*y + (x+y)*z" is not needed:
// polynomials here are written as sums of products of parenthesised forms.
PPoly poly(const PRing& R, const std::string& text) {
  auto result = R.zero();
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(" | ", pos);
    std::string summand = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    auto prod = R.one();
    std::size_t p = 0;
    while (p < summand.size()) {
      std::size_t q = summand.find(')', p);
      std::string f = summand.substr(p + 1, q - p - 1);
      prod = R.mul(prod, LinearForm::parse(f, R.names()).to_polynomial(R));
      p = q + 1;
    }
    result = R.add(result, prod);
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return result;
}

PIdeal ideal(const RingPtr<PF>& R, const std::vector<std::string>& gens) {
  std::vector<PPoly> g;
  for (const auto& s : gens) g.push_back(poly(*R, s));
  return PIdeal(R, g);
}

void expect_buchberger_criterion(const PRing& R, const std::vector<PPoly>& gb) {
  for (std::size_t i = 0; i < gb.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      ASSERT_TRUE(normal_form(R, s_polynomial(R, gb[i], gb[j]), gb).is_zero());
    }
  }
}

void expect_reduced(const PRing& R, const std::vector<PPoly>& gb) {
  for (std::size_t i = 0; i < gb.size(); ++i) {
    ASSERT_TRUE(R.field().is_one(gb[i].lead_coeff()));
    for (std::size_t j = 0; j < gb.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb[i].terms()) ASSERT_FALSE(gb[j].lead_monomial().divides(t.m));
    }
  }
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  if (d >= 0) rec(rec, 0, d);
  return out;
}

// Membership in degree d by Gaussian elimination on the span of m*g.
bool member_by_linear_algebra(const PRing& R, const std::vector<PPoly>& gens, const PPoly& f, int d) {
  const auto& F = R.field();
  auto mons = monomials_of_degree(R.nvars(), d);
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> col;
  for (std::size_t i = 0; i < mons.size(); ++i) col[mons[i].raw()] = i;
  auto vec = [&](const PPoly& p) {
    std::vector<std::uint32_t> v(mons.size(), 0);
    for (const auto& t : p.terms()) v[col.at(t.m.raw())] = t.c;
    return v;
  };
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& g : gens) {
    const int dg = *R.degree(g);
    for (const auto& m : monomials_of_degree(R.nvars(), d - dg)) rows.push_back(vec(R.mul_term(g, F.one(), m)));
  }
  auto rank = [&](std::vector<std::vector<std::uint32_t>> a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < mons.size() && r < a.size(); ++c) {
      std::size_t piv = r;
      while (piv < a.size() && a[piv][c] == 0) ++piv;
      if (piv == a.size()) continue;
      std::swap(a[piv], a[r]);
      const auto inv = F.inv(a[r][c]);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == r || a[i][c] == 0) continue;
        const auto m = F.mul(a[i][c], inv);
        for (std::size_t k = 0; k < mons.size(); ++k) a[i][k] = F.sub(a[i][k], F.mul(m, a[r][k]));
      }
      ++r;
    }
    return r;
  };
  const auto r0 = rank(rows);
  rows.push_back(vec(f));
  return rank(rows) == r0;
}

PPoly random_form_product(const PRing& R, std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> c(-2, 2);
  auto f = R.one();
  for (int k = 0; k < deg; ++k) {
    std::vector<long> v(static_cast<std::size_t>(R.nvars()));
    do {
      for (auto& x : v) x = c(rng);
    } while (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }));
    f = R.mul(f, LinearForm::from_ints(v).to_polynomial(R));
  }
  return f;
}

PPoly random_homogeneous(const PRing& R, std::mt19937_64& rng, int deg, int terms) {
  std::uniform_int_distribution<int> c(-3, 3);
  auto mons = monomials_of_degree(R.nvars(), deg);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::vector<Term<std::uint32_t>> t;
  for (int k = 0; k < terms; ++k) t.push_back({mons[pick(rng)], R.field().from_int(c(rng))});
  return R.from_terms(std::move(t));
}

PIdeal random_ideal(const RingPtr<PF>& R, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n(1, 3), d(1, 2);
  std::vector<PPoly> g;
  const int k = n(rng);
  for (int i = 0; i < k; ++i) {
    auto p = random_homogeneous(*R, rng, d(rng), 3);
    if (!p.is_zero()) g.push_back(p);
  }
  if (g.empty()) g.push_back(R->variable(0));
  return PIdeal(R, g);
}

}  // namespace

TEST(ReducedGroebner, Examples) {
  auto R = ring({"x", "y", "z", "w"});
  EXPECT_EQ(reduced_groebner(ideal(R, {"(x)", "(y)"}), MonomialOrder::grevlex()),
            (std::vector<PPoly>{R->variable(1), R->variable(0)}));
  EXPECT_EQ(reduced_groebner(ideal(R, {"(x+y)", "(x-y)"}), MonomialOrder::grevlex()),
            (std::vector<PPoly>{R->variable(1), R->variable(0)}));
  auto mono = ideal(R, {"(x)(y)", "(x)(z)", "(y)(z)"});
  auto gb = reduced_groebner(mono, MonomialOrder::grevlex());
  ASSERT_EQ(gb.size(), 3u);
  for (const auto& g : mono.generators()) EXPECT_NE(std::find(gb.begin(), gb.end(), g), gb.end());
  expect_buchberger_criterion(*R, gb);
}

TEST(ReducedGroebner, IdempotentAndReduced) {
  auto R = ring({"x", "y", "z", "w"});
  auto I = ideal(R, {"(x)(y)(x+y)", "(x+z)(y-w)(z)", "(x+y+z+w)(x)(w)"});
  auto gb = reduced_groebner(I, MonomialOrder::grevlex());
  expect_reduced(*R, gb);
  expect_buchberger_criterion(*R, gb);
  EXPECT_EQ(reduced_groebner(PIdeal(R, gb), MonomialOrder::grevlex()), gb);
  for (const auto& g : I.generators()) EXPECT_TRUE(normal_form(*R, g, gb).is_zero());
  // Lex basis of the same ideal lives in a lex ring.
  const auto& lexb = I.groebner(MonomialOrder::lex());
  expect_reduced(*lexb.ring, lexb.polys);
  expect_buchberger_criterion(*lexb.ring, lexb.polys);
}

TEST(NormalForm, Examples) {
  auto L = ring({"x", "y"}, MonomialOrder::lex());
  auto gb = reduced_groebner(ideal(L, {"(x-y)"}), MonomialOrder::lex());
  auto x2 = L->mul(L->variable(0), L->variable(0));
  EXPECT_EQ(normal_form(*L, x2, gb), L->mul(L->variable(1), L->variable(1)));
  auto R = ring({"w", "x", "y", "z"});
  auto xy = reduced_groebner(ideal(R, {"(x)", "(y)"}), MonomialOrder::grevlex());
  EXPECT_TRUE(normal_form(*R, poly(*R, "(w)(x)"), xy).is_zero());
  EXPECT_TRUE(normal_form(*R, poly(*R, "(x)(z) | (y)(y)"), xy).is_zero());
  EXPECT_FALSE(normal_form(*R, poly(*R, "(z)(w)"), xy).is_zero());
}

TEST(IdealEqual, Examples) {
  auto R = ring({"x", "y", "z", "w"});
  EXPECT_TRUE(ideal_equal(ideal(R, {"(x)(y)", "(z)"}), ideal(R, {"(z)", "(x)(y)"})));
  EXPECT_TRUE(ideal_equal(ideal(R, {"(x)", "(y)"}), ideal(R, {"(x+y)", "(y)"})));
  EXPECT_FALSE(ideal_equal(ideal(R, {"(x)"}), ideal(R, {"(x)(x)"})));
}

TEST(Intersect, Examples) {
  auto R = ring({"x", "y", "z", "w"});
  EXPECT_TRUE(ideal_equal(intersect(ideal(R, {"(x)"}), ideal(R, {"(y)"})), ideal(R, {"(x)(y)"})));
  auto K = intersect(ideal(R, {"(x)", "(y)"}), ideal(R, {"(z)", "(w)"}));
  auto expected = ideal(R, {"(x)(z)", "(x)(w)", "(y)(z)", "(y)(w)"});
  EXPECT_TRUE(is_subset(K, expected));
  EXPECT_TRUE(is_subset(expected, K));
  auto T = intersect_all<PF>({ideal(R, {"(x)", "(y)"}), ideal(R, {"(x)", "(z)"}), ideal(R, {"(y)", "(z)"})});
  auto Te = ideal(R, {"(x)(y)", "(x)(z)", "(y)(z)"});
  EXPECT_TRUE(is_subset(T, Te));
  EXPECT_TRUE(is_subset(Te, T));
  // The seeded basis must be the true reduced basis.
  EXPECT_EQ(T.groebner().polys, reduced_groebner(PIdeal(R, T.generators()), MonomialOrder::grevlex()));
}

TEST(Colon, Examples) {
  auto R = ring({"x", "y", "z", "w"});
  EXPECT_TRUE(ideal_equal(colon(ideal(R, {"(x)(y)"}), ideal(R, {"(x)"})), ideal(R, {"(y)"})));
  auto I = ideal(R, {"(x)(x+y)", "(z)(w)"});
  EXPECT_TRUE(ideal_equal(colon(I, PIdeal::unit(R)), I));
  EXPECT_TRUE(ideal_equal(colon(ideal(R, {"(x)(x)", "(x)(y)"}), ideal(R, {"(x)"})), ideal(R, {"(x)", "(y)"})));
}

TEST(Saturate, Examples) {
  auto R = ring({"x", "y", "z", "w"});
  auto [S, k] = saturate(ideal(R, {"(x)(x)(y)", "(x)(x)(z)"}), ideal(R, {"(x)"}));
  EXPECT_TRUE(ideal_equal(S, ideal(R, {"(y)", "(z)"})));
  EXPECT_EQ(k, 2);
  auto I = ideal(R, {"(x)(y)(z)", "(w)(w)"});
  auto [U, e] = saturate(I, PIdeal::unit(R));
  EXPECT_TRUE(ideal_equal(U, I));
  EXPECT_EQ(e, 0);
}

TEST(SaturateIrrelevant, Examples) {
  auto R = ring({"x", "y", "z", "w"});
  auto xy = ideal(R, {"(x)", "(y)"});
  EXPECT_TRUE(ideal_equal(saturate_irrelevant(xy), xy));
  std::vector<std::string> sq;
  const char* v[] = {"x", "y", "z", "w"};
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) sq.push_back(std::string("(") + v[i] + ")(" + v[j] + ")");
  }
  EXPECT_TRUE(saturate_irrelevant(ideal(R, sq)).is_unit());
  // A line with an embedded point: (x, y) ∩ (x, y, z, w)^2.
  auto emb = intersect(xy, ideal(R, sq));
  EXPECT_FALSE(ideal_equal(emb, xy));
  EXPECT_TRUE(ideal_equal(saturate_irrelevant(emb), xy));
  // Agrees with the general colon-based saturation.
  auto m = ideal(R, {"(x)", "(y)", "(z)", "(w)"});
  EXPECT_TRUE(ideal_equal(saturate(emb, m).first, xy));
}

TEST(RadicalMembership, Examples) {
  auto R = ring({"x", "y", "z", "w"});
  EXPECT_TRUE(radical_membership(R->variable(0), ideal(R, {"(x)(x)"})));
  EXPECT_FALSE(radical_membership(R->variable(2), ideal(R, {"(x)", "(y)"})));
  EXPECT_TRUE(radical_membership(poly(*R, "(x)(y)"), ideal(R, {"(x)(x)(y)", "(y)(y)(y)"})));
  EXPECT_FALSE(radical_membership(R->variable(0), ideal(R, {"(x)(x)(y)", "(y)(y)(y)"})));
}

TEST(Eliminate, Examples) {
  auto R = ring({"t", "x", "y"});
  auto I = PIdeal(R, {R->mul(R->variable(0), R->variable(1)),
                      R->mul(R->sub(R->one(), R->variable(0)), R->variable(2))});
  auto E = eliminate(I, {0});
  EXPECT_TRUE(ideal_equal(E, PIdeal(R, {R->mul(R->variable(1), R->variable(2))})));
  auto H = ideal(R, {"(x)(y)", "(t)(x)"});
  EXPECT_TRUE(ideal_equal(eliminate(H, {}), H));
  EXPECT_TRUE(eliminate(H, {0, 1, 2}).is_zero());
}

TEST(GroebnerProperties, BuchbergerCriterionAndDeterminism) {
  std::mt19937_64 rng(21);
  log_seed(21);
  auto R = ring({"x", "y", "z"});
  for (int trial = 0; trial < 200; ++trial) {
    auto I = random_ideal(R, rng);
    auto gb = reduced_groebner(I, MonomialOrder::grevlex());
    expect_buchberger_criterion(*R, gb);
    expect_reduced(*R, gb);
    ASSERT_EQ(gb, reduced_groebner(PIdeal(R, I.generators()), MonomialOrder::grevlex()));
  }
}

TEST(GroebnerProperties, NormalFormMatchesLinearAlgebra) {
  std::mt19937_64 rng(22);
  log_seed(22);
  auto R = ring({"x", "y", "z"});
  for (int trial = 0; trial < 200; ++trial) {
    auto I = random_ideal(R, rng);
    auto gb = reduced_groebner(I, MonomialOrder::grevlex());
    std::uniform_int_distribution<int> d(1, 4);
    const int deg = d(rng);
    // Half the probes are built inside the ideal.
    PPoly f = random_homogeneous(*R, rng, deg, 4);
    if (trial % 2 == 0) {
      const auto& g = I.generators()[static_cast<std::size_t>(trial) % I.generators().size()];
      const int dg = *R->degree(g);
      if (dg <= deg) f = R->mul(g, random_homogeneous(*R, rng, deg - dg, 3));
    }
    if (f.is_zero()) continue;
    const int fd = *R->degree(f);
    ASSERT_EQ(normal_form(*R, f, gb).is_zero(), member_by_linear_algebra(*R, I.generators(), f, fd));
  }
}

TEST(GroebnerProperties, IntersectionMembershipDuality) {
  std::mt19937_64 rng(23);
  log_seed(23);
  auto R = ring({"x", "y", "z"});
  for (int trial = 0; trial < 200; ++trial) {
    auto I = random_ideal(R, rng), J = random_ideal(R, rng);
    auto K = intersect(I, J);
    std::vector<PPoly> probes{I.generators()[0], J.generators()[0],
                              R->mul(I.generators()[0], J.generators()[0]), random_homogeneous(*R, rng, 3, 3)};
    for (const auto& f : probes) {
      if (f.is_zero()) continue;
      ASSERT_EQ(K.contains(f), I.contains(f) && J.contains(f));
    }
  }
}

TEST(GroebnerProperties, SaturationIsColonFixedPoint) {
  std::mt19937_64 rng(24);
  log_seed(24);
  auto R = ring({"x", "y", "z"});
  for (int trial = 0; trial < 200; ++trial) {
    auto I = random_ideal(R, rng);
    auto J = PIdeal(R, {random_form_product(*R, rng, 1)});
    auto [S, k] = saturate(I, J);
    ASSERT_TRUE(is_subset(I, S));
    ASSERT_TRUE(ideal_equal(colon(S, J), S));
    ASSERT_GE(k, 0);
  }
}
