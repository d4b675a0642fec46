#include <catch2/catch_amalgamated.hpp>

#include "aeq/perm_group.hpp"
#include "aeq/psl27.hpp"

using namespace aeq;

TEST_CASE("permutations")
{
  CHECK_THROWS_AS(Perm({0, 0, 2}), std::invalid_argument);
  Perm a = Perm::from_cycles(4, {{0, 1, 2}});
  Perm b = Perm::from_cycles(4, {{2, 3}});
  CHECK((a * b)[2] == 3);
  CHECK((a * b)[3] == 0);
  CHECK(a.inverse() * a == Perm::identity(4));
  CHECK(a.cycle_type() == std::vector<int>{1, 3});
  CHECK(a.order() == 3);
  CHECK(Perm::identity(5).is_identity());
  CHECK(Perm({1, 0, 2}).to_string() == "[1,0,2]");
}

TEST_CASE("group closure basics")
{
  CHECK(group_closure({Perm::from_cycles(2, {{0, 1}})}, 2).order() == 2);
  CHECK(group_closure({}, 3).order() == 1);
  CHECK(PermGroup::symmetric(4).order() == 24);
  CHECK(PermGroup::alternating(4).order() == 12);
  CHECK(PermGroup::alternating(7).order() == 2520);
  CHECK(PermGroup::symmetric(7).order() == 5040);
  CHECK(PermGroup::cyclic(6).order() == 6);
}

TEST_CASE("order cap aborts closure with a partial count")
{
  std::vector<Perm> gens = PermGroup::symmetric(6).generators();
  try {
    PermGroup g(6, gens, 100);
    FAIL("expected GroupOrderCapExceeded");
  } catch (const GroupOrderCapExceeded &e) {
    CHECK(e.partial_count > 100);
  }
}

TEST_CASE("psl27 construction is self-certifying")
{
  PermGroup g8 = psl27_on_projective_line();
  CHECK(g8.order() == 168);
  CHECK(g8.degree() == 8);

  PermGroup g = psl27_on_7_points();
  CHECK(g.order() == 168);
  CHECK(g.degree() == 7);
  CHECK(g.is_transitive());

  std::set<std::vector<int>> types;
  for (const auto &e : g.elements())
    types.insert(e.cycle_type());
  std::set<std::vector<int>> expected{
      {1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 2, 2}, {1, 3, 3}, {1, 2, 4}, {7}};
  CHECK(types == expected);
}

TEST_CASE("conjugacy classes")
{
  auto trivial = conjugacy_classes(PermGroup::trivial(3));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].size() == 1);

  auto s3 = conjugacy_classes(PermGroup::symmetric(3));
  std::multiset<std::size_t> sizes;
  for (const auto &c : s3)
    sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});

  auto psl = conjugacy_classes(psl27_on_7_points());
  std::multiset<std::size_t> psl_sizes;
  std::size_t total = 0;
  for (const auto &c : psl) {
    psl_sizes.insert(c.size());
    total += c.size();
    CHECK(168 % c.size() == 0); // class sizes divide the order
  }
  CHECK(psl_sizes == std::multiset<std::size_t>{1, 21, 24, 24, 42, 56});
  CHECK(total == 168); // class equation
}

TEST_CASE("coset actions")
{
  PermGroup s3 = PermGroup::symmetric(3);
  // H = G: degree-1 trivial action
  auto whole = coset_action(s3, s3);
  CHECK(whole.action.degree() == 1);
  CHECK(whole.action.order() == 1);
  CHECK(whole.kernel_order == 6);

  // H trivial: regular action of degree 6
  auto regular = coset_action(s3, PermGroup::trivial(3));
  CHECK(regular.action.degree() == 6);
  CHECK(regular.action.order() == 6);
  CHECK(regular.kernel_order == 1);

  CHECK_THROWS_AS(coset_action(s3, PermGroup::cyclic(4)),
                  std::invalid_argument);
}

TEST_CASE("unfaithful coset action records its kernel")
{
  // S3 acting on cosets of A3: degree 2, kernel A3
  PermGroup s3 = PermGroup::symmetric(3);
  PermGroup a3(3, {Perm::from_cycles(3, {{0, 1, 2}})});
  auto act = coset_action(s3, a3);
  CHECK(act.action.degree() == 2);
  CHECK(act.action.order() == 2);
  CHECK(act.kernel_order == 3);
}
