#ifndef AEQ_SPLITTING_HPP
#define AEQ_SPLITTING_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "aeq/factorization_type.hpp"
#include "aeq/perm_group.hpp"
#include "aeq/subgroups.hpp"

namespace aeq {

// Ramification regime for the realizability enumeration: tame inertia is
// cyclic; wild inertia at p has a normal Sylow-p subgroup with cyclic
// quotient (the weakest standard necessary condition).
struct RamificationMode {
  bool tame = true;
  unsigned wild_p = 0;

  static RamificationMode Tame() { return {true, 0}; }
  static RamificationMode Wild(unsigned p) { return {false, p}; }
};

// Translate a (decomposition E, inertia I) pair inside a transitive action
// into the splitting data of the base prime: each E-orbit is one prime, its
// ramification index is the common size of the I-orbits inside, its residue
// degree the number of those I-orbits.
inline SplittingPattern splitting_from_decomposition(const PermGroup &action,
                                                     const PermGroup &e,
                                                     const PermGroup &i)
{
  if (!e.is_subgroup_of(action))
    throw std::invalid_argument("E is not a subgroup of the action group");
  if (!i.is_subgroup_of(e))
    throw std::invalid_argument("I is not a subgroup of E");
  if (!is_normal_in(i, e))
    throw std::invalid_argument("inertia is not normal in decomposition");
  if (!quotient_is_cyclic(e, i))
    throw std::invalid_argument("E/I is not cyclic");
  std::vector<EfPair> pairs;
  for (const auto &orb : e.orbits()) {
    auto iorbits = i.orbits_on(orb);
    std::size_t esize = iorbits.front().size();
    for (const auto &io : iorbits)
      if (io.size() != esize)
        throw std::logic_error(
            "unequal inertia orbits inside a decomposition orbit");
    std::size_t f = iorbits.size();
    if (esize * f != orb.size())
      throw std::logic_error("e*f does not match the orbit size");
    pairs.push_back({static_cast<int>(f), static_cast<int>(esize)});
  }
  SplittingPattern pat{pairs};
  if (pat.degree() != static_cast<int>(action.degree()))
    throw std::logic_error("splitting pattern degree mismatch");
  return pat;
}

struct RealizableSplitting {
  SplittingPattern pattern;
  std::size_t decomposition_order; // witness (E, I)
  std::size_t inertia_order;
};

// Enumerate every splitting pattern realized by a pair (E, I) with I normal
// in E, E/I cyclic, and I shaped by the ramification mode. E runs over
// subgroup classes of the action group (patterns are conjugation invariant),
// I over the normal subgroups of each E.
inline std::vector<RealizableSplitting>
realizable_splittings_with_witnesses(const PermGroup &action,
                                     const RamificationMode &mode)
{
  if (!action.is_transitive())
    throw std::invalid_argument("realizable_splittings: action must be transitive");
  std::map<SplittingPattern, RealizableSplitting> found;
  for (const auto &eclass : subgroup_classes(action)) {
    const PermGroup &e = eclass.representative;
    for (const auto &iclass : subgroup_classes(e)) {
      if (iclass.conjugate_count != 1)
        continue; // not normal in E
      const PermGroup &i = iclass.representative;
      if (!quotient_is_cyclic(e, i))
        continue;
      if (mode.tame) {
        if (!is_cyclic_group(i))
          continue;
      } else {
        PermGroup sylow;
        if (!has_normal_sylow_p(i, mode.wild_p, &sylow))
          continue;
        if (!quotient_is_cyclic(i, sylow))
          continue;
      }
      SplittingPattern pat = splitting_from_decomposition(action, e, i);
      auto it = found.find(pat);
      if (it == found.end())
        found.emplace(pat,
                      RealizableSplitting{pat, e.order(), i.order()});
    }
  }
  std::vector<RealizableSplitting> out;
  out.reserve(found.size());
  for (auto &kv : found)
    out.push_back(kv.second);
  return out;
}

inline std::set<SplittingPattern>
realizable_splittings(const PermGroup &action, const RamificationMode &mode)
{
  std::set<SplittingPattern> out;
  for (const auto &r : realizable_splittings_with_witnesses(action, mode))
    out.insert(r.pattern);
  return out;
}

// Patterns that can occur at all in a field whose closure realizes `action`:
// tame at primes away from the ramification indices, wild(p) when p divides
// one of them. This is the filter behind the ambiguous-type analysis.
inline std::set<SplittingPattern>
realizable_anywhere(const PermGroup &action,
                    const std::vector<unsigned> &wild_primes = {2, 3, 5, 7})
{
  std::set<SplittingPattern> all =
      realizable_splittings(action, RamificationMode::Tame());
  for (unsigned p : wild_primes) {
    for (const auto &pat :
         realizable_splittings(action, RamificationMode::Wild(p)))
      if (pat.wild_at(static_cast<int>(p)))
        all.insert(pat);
  }
  return all;
}

} // namespace aeq

#endif
