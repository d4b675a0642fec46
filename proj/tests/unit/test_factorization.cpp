#include <catch2/catch_amalgamated.hpp>

#include "aeq/factor_integer_poly.hpp"
#include "aeq/mod_polynomial.hpp"
#include "support/oracles.hpp"

using namespace aeq;

namespace {

const IntPolynomial kF1{1, -2, -1, 3, -5, 4, -3, 1};
const IntPolynomial kG1{4, -1, 2, -2, -2, -1, 0, 1};

ModPolynomial rebuild(const Factorization<ModPolynomial> &fac, const Int &p)
{
  ModPolynomial prod = ModPolynomial::one(p) * fac.unit;
  for (const auto &[g, m] : fac.factors)
    for (unsigned i = 0; i < m; ++i)
      prod = prod * g;
  return prod;
}

IntPolynomial rebuild(const Factorization<IntPolynomial> &fac)
{
  IntPolynomial prod = IntPolynomial::constant(fac.unit);
  for (const auto &[g, m] : fac.factors)
    for (unsigned i = 0; i < m; ++i)
      prod = prod * g;
  return prod;
}

// exhaustive list of monic irreducibles over F_2 of degree <= 3
std::vector<ModPolynomial> f2_irreducibles_up_to_3()
{
  std::vector<ModPolynomial> out;
  for (int deg = 1; deg <= 3; ++deg)
    for (int mask = 0; mask < (1 << deg); ++mask) {
      std::vector<Int> cs(deg + 1, Int(0));
      for (int i = 0; i < deg; ++i)
        cs[i] = (mask >> i) & 1;
      cs[deg] = 1;
      ModPolynomial f(cs, 2);
      bool irreducible = f.degree() >= 1 && f[0] != 0;
      if (irreducible && deg > 1) {
        // trial division by smaller-degree monics
        for (int d2 = 1; irreducible && d2 < deg; ++d2)
          for (int m2 = 0; m2 < (1 << d2); ++m2) {
            std::vector<Int> ds(d2 + 1, Int(0));
            for (int i = 0; i < d2; ++i)
              ds[i] = (m2 >> i) & 1;
            ds[d2] = 1;
            ModPolynomial div(ds, 2);
            if ((f % div).is_zero()) {
              irreducible = false;
              break;
            }
          }
      }
      if (deg == 1)
        irreducible = true;
      if (irreducible)
        out.push_back(f);
    }
  return out;
}

} // namespace

TEST_CASE("ModPolynomial construction demands a prime modulus")
{
  CHECK_THROWS_AS(ModPolynomial({1, 1}, 6), std::invalid_argument);
  ModPolynomial p({5, 7, 9}, 7);
  CHECK(p.coeffs() == std::vector<Int>{5, 0, 2});
}

TEST_CASE("factor x^7 - 1 mod 2 against exhaustive trial division")
{
  IntPolynomial f{-1, 0, 0, 0, 0, 0, 0, 1};
  auto fac = factor_mod_p(ModPolynomial::from_int_poly(f, 2));
  REQUIRE(fac.factors.size() == 3);
  auto irr = f2_irreducibles_up_to_3();
  // expected: (x+1)(x^3+x+1)(x^3+x^2+1), all from the exhaustive list
  for (const auto &[g, m] : fac.factors) {
    CHECK(m == 1);
    CHECK(std::find(irr.begin(), irr.end(), g) != irr.end());
  }
  CHECK(rebuild(fac, 2) == ModPolynomial::from_int_poly(f, 2));
  // canonical order: degree, then coefficient vector
  CHECK(fac.factors[0].first == ModPolynomial({1, 1}, 2));
  CHECK(fac.factors[1].first == ModPolynomial({1, 0, 1, 1}, 2));
  CHECK(fac.factors[2].first == ModPolynomial({1, 1, 0, 1}, 2));
}

TEST_CASE("factor x^2 mod 5")
{
  auto fac = factor_mod_p(ModPolynomial({0, 0, 1}, 5));
  REQUIRE(fac.factors.size() == 1);
  CHECK(fac.factors[0].first == ModPolynomial({0, 1}, 5));
  CHECK(fac.factors[0].second == 2);
}

TEST_CASE("factor f1 mod 691: degree pattern with one repeated quadratic")
{
  auto fac = factor_mod_p(ModPolynomial::from_int_poly(kF1, 691));
  std::vector<long> degs = fac.degree_multiset();
  CHECK(degs == std::vector<long>{1, 1, 1, 2, 2});
  unsigned repeated = 0;
  for (const auto &[g, m] : fac.factors)
    if (m == 2) {
      ++repeated;
      CHECK(g.degree() == 2);
    }
  CHECK(repeated == 1);
  CHECK(rebuild(fac, 691) == ModPolynomial::from_int_poly(kF1, 691));
}

TEST_CASE("factor_mod_p determinism under a fixed seed")
{
  IntPolynomial f{3, 1, 4, 1, 5, 9, 2, 6, 1};
  auto a = factor_mod_p(ModPolynomial::from_int_poly(f, 101), 12345);
  auto b = factor_mod_p(ModPolynomial::from_int_poly(f, 101), 12345);
  REQUIRE(a.factors.size() == b.factors.size());
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    CHECK(a.factors[i].first == b.factors[i].first);
    CHECK(a.factors[i].second == b.factors[i].second);
  }
}

TEST_CASE("mod-p multiply-back on random polynomials")
{
  std::mt19937_64 rng(5150);
  const Int primes[] = {2, 3, 5, 13, 257};
  for (int trial = 0; trial < 200; ++trial) {
    const Int &p = primes[trial % 5];
    IntPolynomial f = oracle::random_poly(rng, 1 + trial % 12, 50);
    ModPolynomial fp = ModPolynomial::from_int_poly(f, p);
    if (fp.is_zero())
      continue;
    auto fac = factor_mod_p(fp);
    CHECK(rebuild(fac, p) == fp);
    for (const auto &[g, m] : fac.factors) {
      CHECK(g.is_monic());
      CHECK(is_irreducible_mod_p(g));
      (void)m;
    }
  }
}

TEST_CASE("factor_over_Z examples")
{
  auto fac = factor_over_Z(IntPolynomial{-1, 0, 0, 0, 1});
  REQUIRE(fac.factors.size() == 3);
  CHECK(fac.unit == 1);
  CHECK(fac.factors[0].first == IntPolynomial{-1, 1});
  CHECK(fac.factors[1].first == IntPolynomial{1, 1});
  CHECK(fac.factors[2].first == IntPolynomial{1, 0, 1});

  CHECK(is_irreducible_z(kF1));
  // a mod-p irreducibility witness exists for f1
  bool witness = false;
  PrimeStream ps;
  for (int i = 0; i < 25 && !witness; ++i) {
    Int p = ps.next();
    ModPolynomial fp = ModPolynomial::from_int_poly(kF1, p);
    if (fp.degree() == kF1.degree() && is_irreducible_mod_p(fp))
      witness = true;
  }
  CHECK(witness);

  CHECK_THROWS_AS(factor_over_Z(IntPolynomial{}), std::invalid_argument);
}

TEST_CASE("factor_over_Z handles content, powers of x and multiplicities")
{
  // 12 x^3 (x-1)^2 (x^2+x+1)
  IntPolynomial f = IntPolynomial::constant(12) *
                    IntPolynomial::monomial(1, 3) * IntPolynomial{-1, 1} *
                    IntPolynomial{-1, 1} * IntPolynomial{1, 1, 1};
  auto fac = factor_over_Z(f);
  CHECK(fac.unit == 12);
  CHECK(rebuild(fac) == f);
  std::vector<std::pair<long, unsigned>> shape;
  for (const auto &[g, m] : fac.factors)
    shape.emplace_back(g.degree(), m);
  CHECK(shape == std::vector<std::pair<long, unsigned>>{{1, 2}, {1, 3}, {2, 1}});
}

TEST_CASE("multiply-back property over Z on random products")
{
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 120; ++trial) {
    // build products of small factors so reducible inputs are guaranteed
    IntPolynomial f = oracle::random_poly(rng, 1 + trial % 3, 20);
    IntPolynomial g = oracle::random_poly(rng, 1 + (trial / 2) % 4, 20);
    IntPolynomial h = trial % 3 ? oracle::random_poly(rng, 1 + trial % 5, 10)
                                : IntPolynomial::constant(1);
    IntPolynomial prod = f * g * h;
    if (prod.is_zero())
      continue;
    auto fac = factor_over_Z(prod);
    CHECK(rebuild(fac) == prod);
    for (const auto &[factor, m] : fac.factors) {
      (void)m;
      CHECK(factor.leading() > 0);
      CHECK(factor.content() == 1);
    }
  }
}

TEST_CASE("multiply-back on random dense polynomials up to degree 20")
{
  std::mt19937_64 rng(20507);
  for (int trial = 0; trial < 150; ++trial) {
    IntPolynomial f = oracle::random_poly(rng, 2 + trial % 19, 1000000);
    auto fac = factor_over_Z(f);
    CHECK(rebuild(fac) == f);
  }
}
