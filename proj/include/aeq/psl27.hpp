#ifndef AEQ_PSL27_HPP
#define AEQ_PSL27_HPP

#include <stdexcept>

#include "aeq/perm_group.hpp"
#include "aeq/subgroups.hpp"

namespace aeq {

// PSL2(F7) in its natural action on the 8 points of P^1(F7); points are
// 0..6 for the affine line and 7 for infinity. Generated by z -> z+1 and
// z -> -1/z.
inline PermGroup psl27_on_projective_line()
{
  constexpr int kInf = 7;
  std::vector<int> shift(8), invneg(8);
  for (int z = 0; z < 7; ++z)
    shift[z] = (z + 1) % 7;
  shift[kInf] = kInf;
  invneg[0] = kInf;
  invneg[kInf] = 0;
  for (int z = 1; z < 7; ++z) {
    // -1/z mod 7
    int inv = 1;
    while (inv * z % 7 != 1)
      ++inv;
    invneg[z] = (7 - inv) % 7;
  }
  PermGroup g(8, {Perm(shift), Perm(invneg)});
  if (g.order() != 168)
    throw std::logic_error("projective-line construction must have order 168");
  return g;
}

// The faithful transitive degree-7 action of PSL2(F7): coset action on the
// first index-7 subgroup class (one of the two S4 classes) in the canonical
// subgroup-class order. The competing choice differs by an outer
// automorphism and yields the same invariants.
inline PermGroup psl27_on_7_points()
{
  PermGroup g8 = psl27_on_projective_line();
  auto classes = subgroup_classes(g8);
  for (const auto &c : classes) {
    if (c.order() != 24)
      continue;
    CosetAction act = coset_action(g8, c.representative);
    if (act.action.order() != 168 || act.action.degree() != 7 ||
        !act.action.is_transitive())
      throw std::logic_error("coset action failed the self-check");
    return act.action;
  }
  throw std::logic_error("no index-7 subgroup found");
}

// Both degree-7 actions (one per S4 class), used to check the symmetric
// statement that the two choices are equivalent for everything downstream.
inline std::pair<PermGroup, PermGroup> psl27_both_7_point_actions()
{
  PermGroup g8 = psl27_on_projective_line();
  std::vector<PermGroup> actions;
  for (const auto &c : subgroup_classes(g8))
    if (c.order() == 24)
      actions.push_back(coset_action(g8, c.representative).action);
  if (actions.size() != 2)
    throw std::logic_error("expected exactly two S4 classes");
  return {actions[0], actions[1]};
}

} // namespace aeq

#endif
