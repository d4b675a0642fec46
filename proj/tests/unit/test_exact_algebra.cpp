#include <catch2/catch_amalgamated.hpp>

#include "aeq/int_polynomial.hpp"
#include "aeq/resultant.hpp"
#include "aeq/sturm.hpp"
#include "support/oracles.hpp"

using namespace aeq;

namespace {
const IntPolynomial kF1{1, -2, -1, 3, -5, 4, -3, 1};
const IntPolynomial kF2{2, -7, 0, -7, -14, -7, 0, 1};
const IntPolynomial kG2{22, 7, -14, -14, 0, 0, 0, 1};
} // namespace

TEST_CASE("polynomial basics and serialization")
{
  IntPolynomial p{1, -2, 0, 1};
  CHECK(p.degree() == 3);
  CHECK(p.to_string() == "[1,-2,0,1]");
  CHECK(IntPolynomial::parse("[1, -2, 0, 1]") == p);
  CHECK(IntPolynomial::parse(p.to_string()) == p);
  CHECK(IntPolynomial({0, 0, 0}).is_zero());
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK_THROWS_AS(IntPolynomial::parse("1,2"), std::invalid_argument);

  IntPolynomial a{1, 1}, b{-1, 1};
  CHECK(a * b == IntPolynomial{-1, 0, 1});
  CHECK(a + b == IntPolynomial{0, 2});
  CHECK(a.eval(Int(3)) == 4);
  CHECK(kF1.eval(Int(1)) == -2);
  CHECK(IntPolynomial({2, 4, 6}).content() == 2);
  Int unit;
  CHECK(IntPolynomial({-2, -4}).primitive_part(&unit) == IntPolynomial{1, 2});
  CHECK(unit == -2);
}

TEST_CASE("resultant convention and examples")
{
  // Res(f,g) = lc(g)^deg f * prod f(roots of g): Res(x-1, x-2) = 2-1
  CHECK(poly_resultant(IntPolynomial{-1, 1}, IntPolynomial{-2, 1}) == 1);
  CHECK(poly_resultant(IntPolynomial{-2, 1}, IntPolynomial{-1, 1}) == -1);

  // shared roots
  IntPolynomial f{1, 2, 3, 1};
  CHECK(poly_resultant(f, f) == 0);

  CHECK_THROWS_AS(poly_resultant(IntPolynomial{}, f), std::invalid_argument);
  CHECK_THROWS_AS(poly_resultant(f, IntPolynomial{}), std::invalid_argument);
}

TEST_CASE("resultant of f1 and its derivative against the Sylvester oracle")
{
  Int via_prs = poly_resultant(kF1, kF1.derivative());
  Int via_sylvester = oracle::resultant(kF1, kF1.derivative());
  CHECK(via_prs == via_sylvester);
  // divisible by 2^6 * 691^2
  Int divisor = pow_int(2, 6) * pow_int(691, 2);
  CHECK(via_prs % divisor == 0);
}

TEST_CASE("resultant agrees with the Sylvester oracle on random inputs")
{
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    IntPolynomial a = oracle::random_poly(rng, 1 + trial % 6, 8);
    IntPolynomial b = oracle::random_poly(rng, 1 + (trial / 2) % 5, 8);
    CHECK(poly_resultant(a, b) == oracle::resultant(a, b));
  }
}

TEST_CASE("resultant multiplicativity on random inputs")
{
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    IntPolynomial f = oracle::random_poly(rng, 1 + trial % 4, 6);
    IntPolynomial g = oracle::random_poly(rng, 1 + (trial / 3) % 4, 6);
    IntPolynomial h = oracle::random_poly(rng, 1 + (trial / 5) % 4, 6);
    CHECK(poly_resultant(f * g, h) ==
          poly_resultant(f, h) * poly_resultant(g, h));
  }
}

TEST_CASE("discriminant examples")
{
  CHECK(poly_discriminant(IntPolynomial{1, 0, 1}) == -4);
  CHECK(poly_discriminant(IntPolynomial{-1, 0, 1}) == 4);
  CHECK(poly_discriminant(kF1) == pow_int(2, 6) * pow_int(691, 2));
  CHECK_THROWS_AS(poly_discriminant(IntPolynomial{3}),
                  std::invalid_argument);
  // the raw discriminant of g2; the maximal-order tests reduce it to 2^8 7^8
  CHECK(poly_discriminant(kG2) == oracle::discriminant(kG2));
  CHECK(poly_discriminant(kG2) % (pow_int(2, 8) * pow_int(7, 8)) == 0);
}

TEST_CASE("discriminant: subresultant path equals Sylvester determinant path")
{
  std::mt19937_64 rng(4242);
  int done = 0;
  while (done < 50) {
    IntPolynomial f = oracle::random_poly(rng, 2 + done % 7, 9);
    if (f.degree() < 1)
      continue;
    CHECK(poly_discriminant(f) == oracle::discriminant(f));
    ++done;
  }
}

TEST_CASE("real-root counting")
{
  CHECK(count_real_roots(IntPolynomial{1, 0, 1}) == 0);
  CHECK(count_real_roots(IntPolynomial{-2, 0, 1}) == 2);
  CHECK(count_real_roots(kF2) == 3);
  CHECK(count_real_roots(kF2) == oracle::count_real_roots(kF2));
  // not squarefree
  IntPolynomial sq = IntPolynomial{-1, 1} * IntPolynomial{-1, 1};
  CHECK_THROWS_WITH(count_real_roots(sq), "not squarefree");
}

TEST_CASE("Sturm counts match the bisection oracle on random squarefree polys")
{
  std::mt19937_64 rng(90125);
  int done = 0;
  while (done < 200) {
    int deg = 3 + done % 2; // cubics and quartics
    IntPolynomial f = oracle::random_poly(rng, deg, 12);
    if (f.degree() != deg || !is_squarefree_z(f))
      continue;
    INFO("f = " << f.to_string());
    CHECK(count_real_roots(f) == oracle::count_real_roots(f));
    ++done;
  }
}

TEST_CASE("interval root counting")
{
  // roots of x^2 - 2 in (0, 2] and (-2, 0]
  IntPolynomial f{-2, 0, 1};
  CHECK(count_real_roots_in(f, Rat(0), Rat(2)) == 1);
  CHECK(count_real_roots_in(f, Rat(-2), Rat(0)) == 1);
  CHECK(count_real_roots_in(f, Rat(2), Rat(3)) == 0);
}

TEST_CASE("integer polynomial gcd")
{
  IntPolynomial a = IntPolynomial{-1, 1} * IntPolynomial{1, 0, 1};
  IntPolynomial b = IntPolynomial{-1, 1} * IntPolynomial{3, 1};
  CHECK(gcd_z(a, b) == IntPolynomial{-1, 1});
  CHECK(gcd_z(a, IntPolynomial{}) == a);
  CHECK(is_squarefree_z(a));
  CHECK_FALSE(is_squarefree_z(a * a));
}
