#ifndef AEQ_SUBGROUPS_HPP
#define AEQ_SUBGROUPS_HPP

#include <map>
#include <vector>

#include "aeq/perm_group.hpp"

namespace aeq {

struct SubgroupClass {
  PermGroup representative; // canonical class representative
  std::size_t conjugate_count = 1;
  std::size_t order() const { return representative.order(); }
};

namespace detail {

using SubgroupKey = std::vector<int>;

inline SubgroupKey conjugate_key(const std::vector<Perm> &elements,
                                 const Perm &g)
{
  std::vector<Perm> conj;
  conj.reserve(elements.size());
  Perm ginv = g.inverse();
  for (const auto &h : elements)
    conj.push_back(g * h * ginv);
  std::sort(conj.begin(), conj.end());
  SubgroupKey key;
  key.reserve(conj.size() * (conj.empty() ? 0 : conj[0].degree()));
  for (const auto &e : conj)
    key.insert(key.end(), e.images().begin(), e.images().end());
  return key;
}

} // namespace detail

// All subgroups of G up to conjugacy. Seeds with every cyclic subgroup, then
// extends each known class representative by one outside element and closes,
// deduplicating whole conjugacy classes of subgroups at each step until no
// new class appears. Classes are ordered by (order, conjugate_count,
// canonical element key), which fixes "the first S4 class" and friends.
inline std::vector<SubgroupClass> subgroup_classes(const PermGroup &g)
{
  struct ClassInfo {
    PermGroup rep;
    detail::SubgroupKey key;
    std::size_t conjugates;
  };
  std::map<detail::SubgroupKey, std::size_t> seen; // any conjugate -> class
  std::vector<ClassInfo> classes;

  auto insert_subgroup = [&](const PermGroup &h) -> bool {
    detail::SubgroupKey raw =
        detail::conjugate_key(h.elements(), Perm::identity(g.degree()));
    if (seen.count(raw))
      return false;
    // canonicalize over the whole conjugacy class
    detail::SubgroupKey best = raw;
    Perm best_g = Perm::identity(g.degree());
    std::map<detail::SubgroupKey, bool> distinct;
    for (const auto &x : g.elements()) {
      auto key = detail::conjugate_key(h.elements(), x);
      distinct.emplace(key, true);
      if (key < best) {
        best = key;
        best_g = x;
      }
    }
    std::size_t idx = classes.size();
    for (const auto &kv : distinct)
      seen.emplace(kv.first, idx);
    std::vector<Perm> rep_gens;
    Perm gi = best_g.inverse();
    for (const auto &gen : h.generators())
      rep_gens.push_back(best_g * gen * gi);
    PermGroup rep = rep_gens.empty() ? PermGroup::trivial(g.degree())
                                     : PermGroup(g.degree(), rep_gens);
    classes.push_back({std::move(rep), std::move(best), distinct.size()});
    return true;
  };

  insert_subgroup(PermGroup::trivial(g.degree()));
  for (const auto &e : g.elements())
    insert_subgroup(PermGroup(g.degree(), {e}));

  bool changed = true;
  while (changed) {
    changed = false;
    // snapshot: extension of classes found in this round happens next round
    std::size_t count = classes.size();
    for (std::size_t i = 0; i < count; ++i) {
      if (classes[i].rep.order() == g.order())
        continue;
      for (const auto &x : g.elements()) {
        if (classes[i].rep.contains(x))
          continue;
        std::vector<Perm> gens = classes[i].rep.generators();
        if (gens.empty())
          gens.push_back(Perm::identity(g.degree()));
        gens.push_back(x);
        PermGroup extended(g.degree(), gens, g.order());
        if (insert_subgroup(extended))
          changed = true;
      }
    }
  }

  std::vector<SubgroupClass> result;
  result.reserve(classes.size());
  std::sort(classes.begin(), classes.end(),
            [](const ClassInfo &a, const ClassInfo &b) {
              if (a.rep.order() != b.rep.order())
                return a.rep.order() < b.rep.order();
              if (a.conjugates != b.conjugates)
                return a.conjugates < b.conjugates;
              return a.key < b.key;
            });
  for (auto &c : classes)
    result.push_back({std::move(c.rep), c.conjugates});
  return result;
}

inline bool is_cyclic_group(const PermGroup &h)
{
  for (const auto &e : h.elements())
    if (e.order() == h.order())
      return true;
  return false;
}

inline bool is_normal_in(const PermGroup &sub, const PermGroup &g)
{
  for (const auto &x : g.generators().empty() ? g.elements() : g.generators())
    for (const auto &h : sub.generators().empty() ? sub.elements()
                                                  : sub.generators())
      if (!sub.contains(h.conjugated_by(x)))
        return false;
  return true;
}

// order of the image of e in E/I
inline std::size_t image_order(const Perm &e, const PermGroup &i)
{
  Perm x = e;
  std::size_t k = 1;
  while (!i.contains(x)) {
    x = x * e;
    ++k;
  }
  return k;
}

inline bool quotient_is_cyclic(const PermGroup &e, const PermGroup &i)
{
  std::size_t m = e.order() / i.order();
  if (m == 1)
    return true;
  for (const auto &x : e.elements())
    if (image_order(x, i) == m)
      return true;
  return false;
}

// Sylow-p subgroup of H provided it is normal (i.e. unique); nullopt-style
// empty return means the Sylow is not normal.
inline bool has_normal_sylow_p(const PermGroup &h, unsigned p,
                               PermGroup *sylow_out = nullptr)
{
  std::size_t pv = 1;
  std::size_t m = h.order();
  while (m % p == 0) {
    pv *= p;
    m /= p;
  }
  if (pv == 1) {
    if (sylow_out)
      *sylow_out = PermGroup::trivial(h.degree());
    return true;
  }
  // the p-Sylow is normal iff the set of p-power-order elements forms a group
  std::vector<Perm> pelems;
  for (const auto &e : h.elements()) {
    std::size_t o = e.order();
    while (o % p == 0)
      o /= p;
    if (o == 1)
      pelems.push_back(e);
  }
  if (pelems.size() != pv)
    return false; // more p-elements than one Sylow holds: several Sylows
  PermGroup candidate(h.degree(), pelems, h.order());
  if (candidate.order() != pv)
    return false;
  if (sylow_out)
    *sylow_out = candidate;
  return true;
}

} // namespace aeq

#endif
