#include <catch2/catch_amalgamated.hpp>

#include "aeq/number_field.hpp"
#include "support/oracles.hpp"

using namespace aeq;

namespace {
const IntPolynomial kF1{1, -2, -1, 3, -5, 4, -3, 1};
const IntPolynomial kG1{4, -1, 2, -2, -2, -1, 0, 1};
const IntPolynomial kF2{2, -7, 0, -7, -14, -7, 0, 1};
const IntPolynomial kG2{22, 7, -14, -14, 0, 0, 0, 1};

void check_core_invariants(const NumberField &k)
{
  CHECK(k.poly_disc() == k.index() * k.index() * k.field_disc());
  CHECK(k.signature_real() + 2 * k.signature_complex_pairs() == k.degree());
  // |det| of the integral basis is 1/index
  Rat det = det_rat(k.integral_basis());
  Rat expect = Rat(1) / Rat(k.index());
  CHECK((det == expect || det == -expect));
}
} // namespace

TEST_CASE("gaussian field")
{
  NumberField k(IntPolynomial{1, 0, 1});
  CHECK(k.field_disc() == -4);
  CHECK(k.index() == 1);
  CHECK(k.signature_real() == 0);
  CHECK(k.signature_complex_pairs() == 1);
  check_core_invariants(k);
}

TEST_CASE("quadratic field with a 2-index: x^2 - 5")
{
  NumberField k(IntPolynomial{-5, 0, 1});
  CHECK(k.poly_disc() == 20);
  CHECK(k.field_disc() == 5);
  CHECK(k.index() == 2);
  CHECK(k.signature_real() == 2);
  check_core_invariants(k);
}

TEST_CASE("x^3 - x - 1: already maximal")
{
  NumberField k(IntPolynomial{-1, -1, 0, 1});
  CHECK(k.field_disc() == -23);
  CHECK(k.index() == 1);
  check_core_invariants(k);
}

TEST_CASE("seventh cyclotomic field")
{
  NumberField k(IntPolynomial{1, 1, 1, 1, 1, 1, 1});
  CHECK(k.field_disc() == -pow_int(7, 5));
  CHECK(k.index() == 1);
  CHECK(k.signature_real() == 0);
  check_core_invariants(k);
}

TEST_CASE("the classic non-monogenic cubic: x^3 + x^2 - 2x + 8")
{
  NumberField k(IntPolynomial{8, -2, 1, 1});
  CHECK(k.poly_disc() == -2012);
  CHECK(k.index() == 2);
  CHECK(k.field_disc() == -503);
  check_core_invariants(k);
  // 2 divides the index and splits completely (the essential discriminant
  // divisor), which the naive mod-2 factorization cannot see
  auto dec = k.decompose(2);
  CHECK(dec.type ==
        FactorizationType{{1, 1}, {1, 1}, {1, 1}});
  CHECK_FALSE(dec.wild);
  CHECK(k.decompose_via_poly(2) != dec.type);
}

TEST_CASE("field construction rejects bad input")
{
  CHECK_THROWS_AS(NumberField(IntPolynomial{1, 0, 2}),
                  std::invalid_argument); // not monic
  CHECK_THROWS_AS(NumberField(IntPolynomial{-1, 0, 0, 0, 1}),
                  std::invalid_argument); // reducible
  NumberField k(IntPolynomial{1, 0, 1});
  CHECK_THROWS_AS(k.decompose(6), std::invalid_argument);
}

TEST_CASE("paper fields: discriminants, indices, signatures")
{
  const Int disc1 = pow_int(2, 6) * pow_int(691, 2);
  const Int disc2 = pow_int(2, 8) * pow_int(7, 8);

  NumberField k1(kF1);
  CHECK(k1.field_disc() == disc1);
  CHECK(k1.index() == 1);
  CHECK(k1.signature_real() == 3);
  check_core_invariants(k1);

  NumberField k1p(kG1);
  CHECK(k1p.field_disc() == disc1);
  CHECK(k1p.index() == 7);
  CHECK(k1p.signature_real() == 3);
  check_core_invariants(k1p);

  NumberField k2(kF2);
  CHECK(k2.field_disc() == disc2);
  CHECK(k2.index() == 64); // 2 divides the index here
  CHECK(k2.signature_real() == 3);
  check_core_invariants(k2);

  NumberField k2p(kG2);
  CHECK(k2p.field_disc() == disc2);
  CHECK(k2p.index() == 643);
  CHECK(k2p.signature_real() == 3);
  check_core_invariants(k2p);
}

TEST_CASE("paper fields: the six factorization types")
{
  NumberField k1(kF1), k1p(kG1), k2(kF2), k2p(kG2);

  auto d = k1.decompose(2);
  CHECK(d.type == FactorizationType{{1, 4}, {3, 1}});
  CHECK(d.wild);
  CHECK(k1p.decompose(2).type == FactorizationType{{1, 1}, {3, 2}});
  CHECK(k1.decompose(691).type ==
        FactorizationType{{1, 1}, {1, 1}, {1, 1}, {2, 2}});
  CHECK_FALSE(k1.decompose(691).wild);
  CHECK(k1p.decompose(691).type ==
        FactorizationType{{1, 1}, {1, 2}, {1, 2}, {2, 1}});
  // 2 divides index(K2): the maximal-order path is exercised here
  CHECK(k2.decompose(2).type == FactorizationType{{1, 1}, {1, 4}, {2, 1}});
  CHECK(k2p.decompose(2).type == FactorizationType{{1, 1}, {1, 2}, {2, 2}});

  // both pair-2 fields are totally ramified at 7
  CHECK(k2.decompose(7).type == FactorizationType{{1, 7}});
  CHECK(k2p.decompose(7).type == FactorizationType{{1, 7}});

  // 7 divides index(K1'): the order path must agree with K1's mod-7 shape
  // (equivalent fields share arithmetic types at unramified primes)
  auto t7 = k1p.decompose(7);
  CHECK(t7.type == FactorizationType{{1, 1}, {2, 1}, {4, 1}});
  CHECK(k1.decompose(7).type == t7.type);
}

TEST_CASE("tame consistency: v_691(disc) equals the tame valuation formula")
{
  NumberField k1(kF1), k1p(kG1);
  for (const NumberField *k : {&k1, &k1p}) {
    auto dec = k->decompose(691);
    int v = 0;
    for (const auto &p : dec.type.pairs())
      v += (p.e - 1) * p.f;
    CHECK(v == 2);
    CHECK(valuation(k->field_disc(), 691) == 2);
  }
}

TEST_CASE("unramified primes have all e = 1")
{
  NumberField k(kF1);
  for (Int ell : {Int(3), Int(5), Int(11), Int(101)}) {
    auto dec = k.decompose(ell);
    CHECK(dec.type.is_unramified());
    CHECK_FALSE(dec.wild);
  }
}

TEST_CASE("both decomposition paths agree away from the index")
{
  std::mt19937_64 rng(31337);
  PrimeStream smalls;
  std::vector<Int> primes;
  for (int i = 0; i < 30; ++i)
    primes.push_back(smalls.next());
  int done = 0;
  while (done < 100) {
    int deg = 2 + done % 4;
    IntPolynomial f = oracle::random_poly(rng, deg, 12, /*monic=*/true);
    std::unique_ptr<NumberField> k;
    try {
      k = std::make_unique<NumberField>(f);
    } catch (const std::invalid_argument &) {
      continue; // reducible draw
    }
    const Int &ell = primes[done % primes.size()];
    if (k->index() % ell == 0)
      continue;
    FactorizationType via_poly = k->decompose_via_poly(ell);
    FactorizationType via_order = k->decompose_via_order(ell);
    INFO("f = " << f.to_string() << ", ell = " << ell);
    CHECK(via_poly == via_order);
    CHECK(via_poly.degree() == deg);
    ++done;
  }
}
