#ifndef AEQ_PERM_GROUP_HPP
#define AEQ_PERM_GROUP_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "aeq/perm.hpp"

namespace aeq {

struct GroupOrderCapExceeded : std::runtime_error {
  std::size_t partial_count;
  explicit GroupOrderCapExceeded(std::size_t count)
      : std::runtime_error("group order exceeds cap"), partial_count(count)
  {
  }
};

constexpr std::size_t kDefaultOrderCap = 100000;

// Explicit small permutation group: the full element list is computed by
// breadth-first closure at construction and kept sorted, so every query and
// every derived ordering is deterministic.
class PermGroup {
public:
  PermGroup() = default;

  PermGroup(std::size_t degree, std::vector<Perm> generators,
            std::size_t order_cap = kDefaultOrderCap)
      : degree_(degree), generators_(std::move(generators))
  {
    for (const auto &g : generators_)
      if (g.degree() != degree_)
        throw std::invalid_argument("generator degree mismatch");
    close(order_cap);
  }

  static PermGroup trivial(std::size_t degree)
  {
    return PermGroup(degree, {});
  }

  static PermGroup cyclic(std::size_t n)
  {
    std::vector<int> rot(n);
    for (std::size_t i = 0; i < n; ++i)
      rot[i] = static_cast<int>((i + 1) % n);
    return PermGroup(n, {Perm(std::move(rot))});
  }

  static PermGroup symmetric(std::size_t n)
  {
    if (n <= 1)
      return trivial(n);
    std::vector<Perm> gens;
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    std::vector<int> rot(n);
    for (std::size_t i = 0; i < n; ++i)
      rot[i] = static_cast<int>((i + 1) % n);
    gens.emplace_back(std::move(rot));
    return PermGroup(n, std::move(gens));
  }

  static PermGroup alternating(std::size_t n)
  {
    if (n <= 2)
      return trivial(n);
    std::vector<Perm> gens;
    gens.push_back(Perm::from_cycles(n, {{0, 1, 2}}));
    if (n > 3) {
      if (n % 2)
        gens.push_back(Perm::from_cycles(
            n, {[&] {
              std::vector<int> c(n);
              std::iota(c.begin(), c.end(), 0);
              return c;
            }()}));
      else
        gens.push_back(Perm::from_cycles(
            n, {[&] {
              std::vector<int> c(n - 1);
              std::iota(c.begin(), c.end(), 1);
              return c;
            }()}));
    }
    return PermGroup(n, std::move(gens));
  }

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm> &elements() const { return elements_; }
  const std::vector<Perm> &generators() const { return generators_; }

  bool contains(const Perm &p) const
  {
    return std::binary_search(elements_.begin(), elements_.end(), p);
  }

  bool is_subgroup_of(const PermGroup &g) const
  {
    if (degree_ != g.degree() || order() > g.order())
      return false;
    for (const auto &e : elements_)
      if (!g.contains(e))
        return false;
    return true;
  }

  bool same_element_set(const PermGroup &o) const
  {
    return degree_ == o.degree_ && elements_ == o.elements_;
  }

  bool is_transitive() const
  {
    return orbit_of(0).size() == degree_;
  }

  std::vector<int> orbit_of(int point) const
  {
    std::vector<bool> seen(degree_, false);
    std::vector<int> orb{point};
    seen[point] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto &g : generators_.empty()
                               ? elements_
                               : generators_) {
        int q = g[orb[i]];
        if (!seen[q]) {
          seen[q] = true;
          orb.push_back(q);
        }
      }
    std::sort(orb.begin(), orb.end());
    return orb;
  }

  // orbits on {0..degree-1}, each sorted, ordered by minimum point
  std::vector<std::vector<int>> orbits() const
  {
    std::vector<bool> seen(degree_, false);
    std::vector<std::vector<int>> result;
    for (std::size_t p = 0; p < degree_; ++p) {
      if (seen[p])
        continue;
      auto orb = orbit_of(static_cast<int>(p));
      for (int q : orb)
        seen[q] = true;
      result.push_back(std::move(orb));
    }
    return result;
  }

  // orbits restricted to a subset of points
  std::vector<std::vector<int>> orbits_on(const std::vector<int> &points) const
  {
    std::set<int> rem(points.begin(), points.end());
    std::vector<std::vector<int>> result;
    while (!rem.empty()) {
      int p = *rem.begin();
      auto orb = orbit_of(p);
      std::vector<int> inside;
      for (int q : orb)
        if (rem.count(q)) {
          inside.push_back(q);
          rem.erase(q);
        }
    result.push_back(std::move(inside));
    }
    return result;
  }

  PermGroup conjugated_by(const Perm &g) const
  {
    std::vector<Perm> gens;
    gens.reserve(generators_.size());
    for (const auto &h : generators_)
      gens.push_back(h.conjugated_by(g));
    if (gens.empty())
      return trivial(degree_);
    return PermGroup(degree_, std::move(gens));
  }

  // canonical key: the sorted element list flattened
  std::vector<int> element_key() const
  {
    std::vector<int> key;
    key.reserve(order() * degree_);
    for (const auto &e : elements_)
      key.insert(key.end(), e.images().begin(), e.images().end());
    return key;
  }

private:
  void close(std::size_t cap)
  {
    std::set<Perm> seen;
    seen.insert(Perm::identity(degree_));
    std::vector<Perm> frontier(seen.begin(), seen.end());
    for (const auto &g : generators_)
      if (seen.insert(g).second)
        frontier.push_back(g);
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const auto &a : frontier)
        for (const auto &g : generators_) {
          Perm b = a * g;
          if (seen.insert(b).second) {
            if (seen.size() > cap)
              throw GroupOrderCapExceeded(seen.size());
            next.push_back(std::move(b));
          }
        }
      frontier = std::move(next);
    }
    elements_.assign(seen.begin(), seen.end());
  }

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

// group_closure per the library surface: explicit generator list + degree.
inline PermGroup group_closure(const std::vector<Perm> &generators,
                               std::size_t degree,
                               std::size_t order_cap = kDefaultOrderCap)
{
  return PermGroup(degree, generators, order_cap);
}

struct ConjClass {
  Perm representative;
  std::vector<Perm> members; // sorted
  std::size_t size() const { return members.size(); }
};

// Conjugacy classes ordered by (class size, representative); the
// representative is the least member.
inline std::vector<ConjClass> conjugacy_classes(const PermGroup &g)
{
  std::set<Perm> remaining(g.elements().begin(), g.elements().end());
  std::vector<ConjClass> classes;
  while (!remaining.empty()) {
    Perm rep = *remaining.begin();
    std::set<Perm> orbit;
    for (const auto &h : g.elements())
      orbit.insert(rep.conjugated_by(h));
    ConjClass c;
    c.representative = *orbit.begin();
    c.members.assign(orbit.begin(), orbit.end());
    for (const auto &m : c.members)
      remaining.erase(m);
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(),
            [](const ConjClass &a, const ConjClass &b) {
              if (a.size() != b.size())
                return a.size() < b.size();
              return a.representative < b.representative;
            });
  return classes;
}

struct CosetAction {
  PermGroup action;  // image group on [G:H] cosets (kernel not quotiented out
                     // of G; the PermGroup is the image, kernel recorded here)
  std::size_t kernel_order = 1;
};

// Action of G on the right cosets H\G; cosets are numbered by their minimal
// element so the result is canonical.
inline CosetAction coset_action(const PermGroup &g, const PermGroup &h)
{
  if (!h.is_subgroup_of(g))
    throw std::invalid_argument("coset_action: H is not a subgroup of G");
  auto coset_key = [&](const Perm &x) {
    Perm best = h.elements().front() * x;
    for (const auto &e : h.elements()) {
      Perm c = e * x;
      if (c < best)
        best = c;
    }
    return best;
  };
  std::map<Perm, int> index_of;
  std::vector<Perm> reps;
  for (const auto &x : g.elements()) {
    Perm key = coset_key(x);
    if (index_of.emplace(key, static_cast<int>(reps.size())).second)
      reps.push_back(key);
  }
  std::size_t m = reps.size();
  std::vector<Perm> gens;
  for (const auto &gen : g.generators()) {
    std::vector<int> im(m);
    for (std::size_t i = 0; i < m; ++i)
      im[i] = index_of.at(coset_key(reps[i] * gen));
    gens.emplace_back(std::move(im));
  }
  CosetAction result;
  result.action = PermGroup(m, std::move(gens));
  result.kernel_order = g.order() / result.action.order();
  return result;
}

} // namespace aeq

#endif
