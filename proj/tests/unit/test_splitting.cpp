#include <catch2/catch_amalgamated.hpp>

#include "aeq/psl27.hpp"
#include "aeq/splitting.hpp"

using namespace aeq;

TEST_CASE("splitting from decomposition data: inert and totally ramified")
{
  PermGroup c7 = PermGroup::cyclic(7);
  // I trivial, E generated by a 7-cycle: unramified inert (1,7)
  auto inert =
      splitting_from_decomposition(c7, c7, PermGroup::trivial(7));
  CHECK(inert == SplittingPattern{{7, 1}});

  // E = I transitive of order 7: totally ramified (7,1)
  auto ramified = splitting_from_decomposition(c7, c7, c7);
  CHECK(ramified == SplittingPattern{{1, 7}});
}

TEST_CASE("splitting preconditions")
{
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup c2(4, {Perm::from_cycles(4, {{0, 1}})});
  // C2 not normal in S4
  CHECK_THROWS_AS(splitting_from_decomposition(s4, s4, c2),
                  std::invalid_argument);
}

TEST_CASE("every (E, I) pair in the PSL2(F7) action satisfies sum e*f = 7")
{
  PermGroup action = psl27_on_7_points();
  std::size_t checked = 0;
  for (const auto &eclass : subgroup_classes(action)) {
    const PermGroup &e = eclass.representative;
    for (const auto &iclass : subgroup_classes(e)) {
      if (iclass.conjugate_count != 1)
        continue;
      if (!quotient_is_cyclic(e, iclass.representative))
        continue;
      auto pat =
          splitting_from_decomposition(action, e, iclass.representative);
      CHECK(pat.degree() == 7);
      ++checked;
    }
  }
  CHECK(checked > 20);
  // the specific sub-case of cyclic I of order 3 inside cyclic E of order 6
  // is vacuous here: PSL2(F7) has no order-6 cyclic subgroup
  for (const auto &eclass : subgroup_classes(action))
    CHECK_FALSE((eclass.order() == 6 &&
                 is_cyclic_group(eclass.representative)));
}

TEST_CASE("tame realizability excludes the impossible septic types")
{
  PermGroup action = psl27_on_7_points();
  auto tame = realizable_splittings(action, RamificationMode::Tame());

  CHECK(tame.count(FactorizationType{{1, 3}, {2, 1}, {2, 1}}) == 0);
  CHECK(tame.count(FactorizationType{{1, 3}, {2, 2}}) == 0);
  CHECK(tame.count(FactorizationType{{1, 5}, {2, 1}}) == 0);
  CHECK(tame.count(FactorizationType{{1, 1}, {2, 3}}) == 0);

  // all three candidate shapes for arithmetic type (1,2) are absent
  for (const auto &pat : tame)
    CHECK(pat.arithmetic_type() != ArithmeticType{1, 2});

  // the patterns of the tame 691 example are present
  CHECK(tame.count(FactorizationType{{1, 1}, {1, 1}, {1, 1}, {2, 2}}) == 1);
  CHECK(tame.count(FactorizationType{{1, 1}, {1, 2}, {1, 2}, {2, 1}}) == 1);

  // inert and totally ramified shapes exist
  CHECK(tame.count(FactorizationType{{7, 1}}) == 1);
  CHECK(tame.count(FactorizationType{{1, 7}}) == 1);
}

TEST_CASE("wild-2 realizability covers the wild examples")
{
  PermGroup action = psl27_on_7_points();
  auto wild2 = realizable_splittings(action, RamificationMode::Wild(2));
  CHECK(wild2.count(FactorizationType{{1, 4}, {3, 1}}) == 1);
  CHECK(wild2.count(FactorizationType{{1, 1}, {3, 2}}) == 1);
  CHECK(wild2.count(FactorizationType{{1, 1}, {1, 4}, {2, 1}}) == 1);
  CHECK(wild2.count(FactorizationType{{1, 1}, {1, 2}, {2, 2}}) == 1);
  // the impossible types stay impossible in every mode
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    auto wild = realizable_splittings(action, RamificationMode::Wild(p));
    CHECK(wild.count(FactorizationType{{1, 3}, {2, 1}, {2, 1}}) == 0);
    CHECK(wild.count(FactorizationType{{1, 3}, {2, 2}}) == 0);
    CHECK(wild.count(FactorizationType{{1, 5}, {2, 1}}) == 0);
    CHECK(wild.count(FactorizationType{{1, 1}, {2, 3}}) == 0);
  }
}

TEST_CASE("witness data: e divides |I| and f divides |E/I|")
{
  PermGroup action = psl27_on_7_points();
  for (const auto &r : realizable_splittings_with_witnesses(
           action, RamificationMode::Tame())) {
    for (const auto &p : r.pattern.pairs()) {
      CHECK(r.inertia_order % p.e == 0);
      CHECK((r.decomposition_order / r.inertia_order) % p.f == 0);
    }
  }
}

TEST_CASE("cyclic regular action: tame patterns are the divisor triples")
{
  PermGroup c6 = PermGroup::cyclic(6);
  auto tame = realizable_splittings(c6, RamificationMode::Tame());
  std::set<SplittingPattern> expected;
  for (int e = 1; e <= 6; ++e)
    for (int f = 1; f <= 6; ++f) {
      if (6 % (e * f))
        continue;
      int g = 6 / (e * f);
      std::vector<EfPair> pairs(g, EfPair{f, e});
      expected.insert(SplittingPattern{pairs});
    }
  CHECK(tame == expected);
}

TEST_CASE("the two coset actions give identical realizability sets")
{
  auto [a1, a2] = psl27_both_7_point_actions();
  CHECK(realizable_splittings(a1, RamificationMode::Tame()) ==
        realizable_splittings(a2, RamificationMode::Tame()));
  CHECK(realizable_splittings(a1, RamificationMode::Wild(2)) ==
        realizable_splittings(a2, RamificationMode::Wild(2)));
}
