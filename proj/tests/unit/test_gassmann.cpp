#include <catch2/catch_amalgamated.hpp>

#include "aeq/gassmann.hpp"
#include "aeq/psl27.hpp"
#include "aeq/subgroups.hpp"

using namespace aeq;

namespace {

std::vector<PermGroup> s4_classes_of_psl8()
{
  PermGroup g = psl27_on_projective_line();
  std::vector<PermGroup> out;
  for (const auto &c : subgroup_classes(g))
    if (c.order() == 24)
      out.push_back(c.representative);
  return out;
}

} // namespace

TEST_CASE("conjugate subgroups are quasi-conjugate")
{
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup h(4, {Perm::from_cycles(4, {{0, 1}})});
  PermGroup h1 = h.conjugated_by(Perm::from_cycles(4, {{0, 1, 2, 3}}));
  auto cert = is_quasi_conjugate(s4, h, h1);
  CHECK(cert.quasi_conjugate);
  CHECK(are_conjugate_subgroups(s4, h, h1));
}

TEST_CASE("the two S4 classes of PSL2(F7) are Gassmann but not conjugate")
{
  PermGroup g = psl27_on_projective_line();
  auto s4s = s4_classes_of_psl8();
  REQUIRE(s4s.size() == 2);
  auto cert = is_quasi_conjugate(g, s4s[0], s4s[1]);
  CHECK(cert.quasi_conjugate);
  CHECK_FALSE(are_conjugate_subgroups(g, s4s[0], s4s[1]));

  // identity row is (1,1); rows sum to |H| = 24 on both sides
  std::size_t sum_h = 0, sum_h1 = 0;
  for (const auto &row : cert.table) {
    if (row.class_size == 1) {
      CHECK(row.count_h == 1);
      CHECK(row.count_h1 == 1);
    }
    sum_h += row.count_h;
    sum_h1 += row.count_h1;
  }
  CHECK(sum_h == 24);
  CHECK(sum_h1 == 24);

  // brute-force expected table: classes ordered by (size, rep) as computed
  std::vector<std::size_t> counts;
  for (const auto &row : cert.table)
    counts.push_back(row.count_h);
  CHECK(counts == std::vector<std::size_t>{1, 9, 0, 0, 6, 8});
}

TEST_CASE("unequal orders are never quasi-conjugate")
{
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup h(4, {Perm::from_cycles(4, {{0, 1}})});
  auto cert = is_quasi_conjugate(s4, h, PermGroup::trivial(4));
  CHECK_FALSE(cert.quasi_conjugate);
}

TEST_CASE("quasi-conjugacy is symmetric and conjugation-invariant")
{
  PermGroup g = psl27_on_projective_line();
  auto s4s = s4_classes_of_psl8();
  auto ab = is_quasi_conjugate(g, s4s[0], s4s[1]);
  auto ba = is_quasi_conjugate(g, s4s[1], s4s[0]);
  CHECK(ab.quasi_conjugate == ba.quasi_conjugate);
  for (std::size_t i = 0; i < ab.table.size(); ++i) {
    CHECK(ab.table[i].count_h == ba.table[i].count_h1);
    CHECK(ab.table[i].count_h1 == ba.table[i].count_h);
  }
  // replace H by a conjugate
  PermGroup conj = s4s[0].conjugated_by(g.elements()[17]);
  auto cert = is_quasi_conjugate(g, conj, s4s[1]);
  CHECK(cert.quasi_conjugate == ab.quasi_conjugate);
  // Gassmann implies equal order by definition of the table
  CHECK(s4s[0].order() == s4s[1].order());
}

TEST_CASE("induced trivial character")
{
  PermGroup g = psl27_on_projective_line();
  auto s4s = s4_classes_of_psl8();
  REQUIRE(!s4s.empty());

  // H = G: constant character 1
  for (const auto &v : induced_trivial_character(g, g))
    CHECK(v.value == 1);

  auto vals = induced_trivial_character(g, s4s[0]);
  Int weighted = 0;
  for (const auto &v : vals) {
    CHECK(v.value >= 0); // nonnegative integers by construction
    if (v.class_size == 1)
      CHECK(v.value == 7); // identity class gives the index [G:H]
    weighted += Int(v.class_size) * v.value;
  }
  // transitive action: sum over classes of |C| chi(C) = |G|
  CHECK(weighted == 168);

  CHECK_THROWS_AS(induced_trivial_character(g, PermGroup::cyclic(4)),
                  std::invalid_argument);
}

TEST_CASE("induced character integrality across subgroup classes")
{
  PermGroup s4 = PermGroup::symmetric(4);
  for (const auto &c : subgroup_classes(s4))
    for (const auto &v : induced_trivial_character(s4, c.representative))
      CHECK(v.value >= 0);
}
