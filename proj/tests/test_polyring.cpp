#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "seed_log.hpp"
#include "sing/linear_form.hpp"
#include "sing/polynomial.hpp"

using namespace sing;

namespace {

using QRing = Ring<RationalField>;
using PRing = Ring<PrimeField>;
using QPoly = Polynomial<RationalField>;
using PPoly = Polynomial<PrimeField>;

const std::vector<std::string> kWXYZ{"x", "y", "z", "w"};

template <class R>
typename R::Poly form(const R& ring, const std::string& text) {
  return LinearForm::parse(text, ring.names()).to_polynomial(ring);
}

template <class R>
typename R::Poly product(const R& ring, const std::vector<std::string>& forms) {
  auto f = ring.one();
  for (const auto& s : forms) f = ring.mul(f, form(ring, s));
  return f;
}

// Grevlex straight from the definition: higher degree wins; otherwise the last
// nonzero entry of a - b is negative.
int grevlex_oracle(const std::vector<int>& a, const std::vector<int>& b) {
  int da = 0, db = 0;
  for (int v : a) da += v;
  for (int v : b) db += v;
  if (da != db) return da > db ? 1 : -1;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    const int d = a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

std::vector<std::vector<int>> monomials_up_to(int nvars, int maxdeg) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
    e[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, maxdeg);
  return out;
}

QPoly random_poly(const QRing& R, std::mt19937_64& rng, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> ex(0, maxdeg);
  std::vector<Term<mpq_class>> t;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(static_cast<std::size_t>(R.nvars()));
    for (auto& x : e) x = ex(rng);
    t.push_back({Monomial::from_exponents(e), mpq_class(coef(rng))});
  }
  return R.from_terms(std::move(t));
}

PPoly reduce_mod_p(const QPoly& f, const PRing& P) {
  std::vector<Term<std::uint32_t>> t;
  for (const auto& x : f.terms()) t.push_back({x.m, P.field().from_rational(x.c)});
  return P.from_terms(std::move(t));
}

}  // namespace

TEST(Field, PrimeFieldArithmetic) {
  PrimeField F(32003);
  EXPECT_EQ(F.mul(F.inv(12345), 12345), 1u);
  EXPECT_EQ(F.from_int(-1), 32002u);
  EXPECT_EQ(F.from_rational(mpq_class(1, 2)), F.inv(2));
  EXPECT_EQ(F.to_string(F.from_int(-5)), "-5");
  EXPECT_THROW(PrimeField(19997), FieldError);
  EXPECT_THROW(PrimeField(32004), FieldError);
  EXPECT_THROW(F.from_rational(mpq_class(1, 32003)), FieldError);
}

TEST(Field, RationalsStayCanonical) {
  RationalField Q;
  auto a = Q.div(Q.from_int(6), Q.from_int(-4));
  EXPECT_EQ(a.get_den(), 2);
  EXPECT_EQ(a.get_num(), -3);
}

TEST(MonoCompare, GrevlexDegreeThreeInTwoVariables) {
  QRing R(RationalField{}, {"x", "y"});
  std::vector<std::vector<int>> mons;
  for (int i = 0; i <= 3; ++i) mons.push_back({i, 3 - i});
  auto oracle = mons;
  std::sort(oracle.begin(), oracle.end(), [](const auto& a, const auto& b) { return grevlex_oracle(a, b) > 0; });
  auto ours = mons;
  std::sort(ours.begin(), ours.end(), [&](const auto& a, const auto& b) { return mono_compare(R, a, b) > 0; });
  EXPECT_EQ(ours, oracle);
  EXPECT_EQ(mono_compare(R, std::vector<int>{2, 1}, std::vector<int>{1, 2}), 1);
}

TEST(MonoCompare, ReflexiveAndLex) {
  QRing L(RationalField{}, {"x", "y"}, MonomialOrder::lex());
  EXPECT_EQ(mono_compare(L, std::vector<int>{1, 0}, std::vector<int>{0, 5}), 1);
  EXPECT_EQ(mono_compare(L, std::vector<int>{2, 3}, std::vector<int>{2, 3}), 0);
  EXPECT_THROW(mono_compare(L, std::vector<int>{1}, std::vector<int>{1, 0}), RingError);
}

TEST(MonoCompare, TotalMultiplicativeOrderExhaustive) {
  const auto mons = monomials_up_to(4, 4);
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(1),
                     MonomialOrder::elimination(2)}) {
    QRing R(RationalField{}, kWXYZ, order);
    std::vector<Monomial> m;
    for (const auto& e : mons) m.push_back(Monomial::from_exponents(e));
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        const int c = R.cmp(m[i], m[j]);
        ASSERT_EQ(c, -R.cmp(m[j], m[i]));
        ASSERT_EQ(c == 0, i == j);
        if (order == MonomialOrder::grevlex()) {
          ASSERT_EQ(c, grevlex_oracle(mons[i], mons[j]));
        }
        for (const auto& s : {Monomial::variable(0), Monomial::variable(3, 2), Monomial::from_exponents(mons[7])}) {
          ASSERT_EQ(R.cmp(m[i] * s, m[j] * s), c);
        }
      }
    }
    // Transitivity via a consistent sort.
    auto sorted = m;
    std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) { return R.cmp(a, b) < 0; });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
      for (std::size_t j = i + 1; j < sorted.size(); ++j) ASSERT_LT(R.cmp(sorted[i], sorted[j]), 0);
    }
  }
}

TEST(Monomial, PackedOperations) {
  auto a = Monomial::from_exponents(std::vector<int>{2, 0, 1});
  auto b = Monomial::from_exponents(std::vector<int>{1, 3, 0});
  EXPECT_EQ(lcm(a, b), Monomial::from_exponents(std::vector<int>{2, 3, 1}));
  EXPECT_EQ(lcm(a, b).degree(), 6);
  EXPECT_TRUE(Monomial::variable(0).divides(a));
  EXPECT_FALSE(Monomial::variable(1).divides(a));
  EXPECT_FALSE(coprime(a, b));
  EXPECT_TRUE(coprime(Monomial::variable(2), b));
  EXPECT_EQ(Monomial::variable(0).quotient_of(a), Monomial::from_exponents(std::vector<int>{1, 0, 1}));
  EXPECT_THROW(Monomial::variable(0, 100) * Monomial::variable(1, 28), MonomialOverflow);
}

TEST(PartialDerivative, Examples) {
  QRing R(RationalField{}, kWXYZ);
  auto f = product(R, {"x", "y", "z", "w"});
  EXPECT_EQ(R.derivative(f, 0), product(R, {"y", "z", "w"}));
  PRing P(PrimeField(32003), kWXYZ);
  auto x2 = P.mul(P.variable(0), P.variable(0));
  EXPECT_EQ(P.derivative(x2, 0), P.scale(P.variable(0), 2));
  // xy(x+y) = x^2y + xy^2 expanded by hand; gradient (2xy + y^2, x^2 + 2xy, 0, 0).
  auto g = product(R, {"x", "y", "x+y"});
  auto x = R.variable(0), y = R.variable(1);
  EXPECT_EQ(R.derivative(g, 0), R.add(R.scale(R.mul(x, y), 2), R.mul(y, y)));
  EXPECT_EQ(R.derivative(g, 1), R.add(R.mul(x, x), R.scale(R.mul(x, y), 2)));
  EXPECT_TRUE(R.derivative(g, 2).is_zero());
  EXPECT_TRUE(R.derivative(g, 3).is_zero());
  EXPECT_THROW(R.derivative(g, 4), RingError);
}

TEST(ExpandProduct, Examples) {
  QRing R(RationalField{}, kWXYZ);
  auto x = R.variable(0), y = R.variable(1);
  EXPECT_EQ(product(R, {"x", "y"}), R.mul(x, y));
  EXPECT_EQ(product(R, {"x", "y", "x+y"}), R.add(R.mul(R.mul(x, x), y), R.mul(x, R.mul(y, y))));
  auto F = product(R, {"x", "y", "z", "w", "x+y", "x+z", "x+w", "y+z", "y+w", "z+w", "x+y+z", "x+y+w", "x+z+w",
                       "y+z+w", "x+y+z+w"});
  EXPECT_EQ(R.degree(F), 15);
  EXPECT_TRUE(R.is_homogeneous(F));
  EXPECT_FALSE(R.degree(R.zero()).has_value());
}

TEST(Substitution, Examples) {
  QRing R(RationalField{}, kWXYZ);
  auto f = product(R, {"x", "x+y", "z+w"});
  std::vector<QPoly> id;
  for (int i = 0; i < 4; ++i) id.push_back(R.variable(i));
  EXPECT_EQ(R.substitute(f, id, R), f);
  QRing S(RationalField{}, {"s", "t"});
  auto st = S.mul(S.variable(0), S.variable(1));
  EXPECT_EQ(S.substitute(st, {R.variable(0), R.variable(1)}, R), R.mul(R.variable(0), R.variable(1)));
  // s^2 t + s t^2 = st(s+t); under s->x, t->x+z both sides are products of linear forms.
  auto g = S.add(S.mul(S.mul(S.variable(0), S.variable(0)), S.variable(1)),
                 S.mul(S.variable(0), S.mul(S.variable(1), S.variable(1))));
  EXPECT_EQ(S.substitute(g, {R.variable(0), form(R, "x+z")}, R), product(R, {"x", "x+z", "2x+z"}));
}

TEST(LinearFormParse, Grammar) {
  auto f = LinearForm::parse("2w + 3*x - 5z", {"w", "x", "y", "z"});
  EXPECT_EQ(f, LinearForm::from_ints({2, 3, 0, -5}));
  EXPECT_EQ(f.to_string({"w", "x", "y", "z"}), "2w + 3x - 5z");
  EXPECT_EQ(LinearForm::parse("-x+y", {"x", "y"}), LinearForm::from_ints({-1, 1}));
  EXPECT_THROW(LinearForm::parse("x + q", {"x", "y"}), ParseError);
  EXPECT_THROW(LinearForm::parse("x + 1", {"x", "y"}), ParseError);
  EXPECT_THROW(LinearForm::parse("x - x", {"x", "y"}), ParseError);
  EXPECT_THROW(LinearForm::parse("", {"x", "y"}), ParseError);
  EXPECT_THROW(LinearForm::parse("x y", {"x", "y"}), ParseError);
  EXPECT_TRUE(dependent(LinearForm::from_ints({2, 4}), LinearForm::from_ints({-1, -2})));
  EXPECT_EQ(LinearForm::from_ints({-2, 4, 6}).primitive(), LinearForm::from_ints({1, -2, -3}));
}

TEST(PolyringProperties, EulerIdentity) {
  std::mt19937_64 rng(11);
  log_seed(11);
  QRing R(RationalField{}, kWXYZ);
  std::uniform_int_distribution<int> c(-3, 3), deg(2, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = deg(rng);
    auto f = R.one();
    for (int k = 0; k < d; ++k) {
      std::vector<long> v(4);
      do {
        for (auto& x : v) x = c(rng);
      } while (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }));
      f = R.mul(f, LinearForm::from_ints(v).to_polynomial(R));
    }
    auto sum = R.zero();
    for (int i = 0; i < 4; ++i) sum = R.add(sum, R.mul(R.variable(i), R.derivative(f, i)));
    ASSERT_EQ(sum, R.scale(f, mpq_class(d)));
  }
}

TEST(PolyringProperties, Leibniz) {
  std::mt19937_64 rng(12);
  log_seed(12);
  QRing R(RationalField{}, kWXYZ);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_poly(R, rng, 6, 3), g = random_poly(R, rng, 6, 3);
    for (int i = 0; i < 4; ++i) {
      ASSERT_EQ(R.derivative(R.mul(f, g), i),
                R.add(R.mul(f, R.derivative(g, i)), R.mul(g, R.derivative(f, i))));
    }
  }
}

TEST(PolyringProperties, RationalAndPrimeFieldAgree) {
  std::mt19937_64 rng(13);
  log_seed(13);
  QRing R(RationalField{}, kWXYZ);
  PRing P(PrimeField(32003), kWXYZ);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_poly(R, rng, 5, 3), g = random_poly(R, rng, 5, 3);
    auto fp = reduce_mod_p(f, P), gp = reduce_mod_p(g, P);
    ASSERT_EQ(reduce_mod_p(R.mul(f, g), P), P.mul(fp, gp));
    ASSERT_EQ(reduce_mod_p(R.sub(f, g), P), P.sub(fp, gp));
    ASSERT_EQ(reduce_mod_p(R.derivative(f, trial % 4), P), P.derivative(fp, trial % 4));
  }
}
