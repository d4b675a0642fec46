#ifndef AEQ_GASSMANN_HPP
#define AEQ_GASSMANN_HPP

#include <stdexcept>
#include <vector>

#include "aeq/integers.hpp"
#include "aeq/perm_group.hpp"

namespace aeq {

struct QuasiConjugacyRow {
  Perm class_representative;
  std::size_t class_size;
  std::size_t count_h;  // #(C ∩ H)
  std::size_t count_h1; // #(C ∩ H1)
};

struct QuasiConjugacyCertificate {
  bool quasi_conjugate = false;
  std::vector<QuasiConjugacyRow> table;
};

namespace detail {

inline std::size_t intersection_count(const ConjClass &c, const PermGroup &h)
{
  std::size_t n = 0;
  for (const auto &e : c.members)
    if (h.contains(e))
      ++n;
  return n;
}

} // namespace detail

// Gassmann test: H and H1 are quasi-conjugate in G iff every conjugacy class
// of G meets them in sets of equal size. The full table is returned as the
// certificate either way.
inline QuasiConjugacyCertificate is_quasi_conjugate(const PermGroup &g,
                                                    const PermGroup &h,
                                                    const PermGroup &h1)
{
  if (!h.is_subgroup_of(g) || !h1.is_subgroup_of(g))
    throw std::invalid_argument("is_quasi_conjugate: not subgroups of G");
  QuasiConjugacyCertificate cert;
  cert.quasi_conjugate = true;
  if (h.order() != h1.order())
    cert.quasi_conjugate = false; // quasi-conjugate subgroups share order
  for (const auto &c : conjugacy_classes(g)) {
    QuasiConjugacyRow row;
    row.class_representative = c.representative;
    row.class_size = c.size();
    row.count_h = detail::intersection_count(c, h);
    row.count_h1 = detail::intersection_count(c, h1);
    if (row.count_h != row.count_h1)
      cert.quasi_conjugate = false;
    cert.table.push_back(std::move(row));
  }
  return cert;
}

inline bool are_conjugate_subgroups(const PermGroup &g, const PermGroup &h,
                                    const PermGroup &h1)
{
  if (h.order() != h1.order())
    return false;
  for (const auto &x : g.elements()) {
    bool all = true;
    for (const auto &e : h.elements())
      if (!h1.contains(e.conjugated_by(x))) {
        all = false;
        break;
      }
    if (all)
      return true;
  }
  return false;
}

struct InducedCharacterValue {
  Perm class_representative;
  std::size_t class_size;
  Int value; // chi_H(C), integral by construction (checked)
};

// Character of Ind_H^G 1_H evaluated per conjugacy class:
//   chi_H(C) = #(C ∩ H) |G| / (|C| |H|).
inline std::vector<InducedCharacterValue>
induced_trivial_character(const PermGroup &g, const PermGroup &h)
{
  if (!h.is_subgroup_of(g))
    throw std::invalid_argument("induced_trivial_character: not a subgroup");
  std::vector<InducedCharacterValue> out;
  for (const auto &c : conjugacy_classes(g)) {
    Rat v = Rat(Int(detail::intersection_count(c, h)) * Int(g.order())) /
            Rat(Int(c.size()) * Int(h.order()));
    if (boost::multiprecision::denominator(v) != 1)
      throw std::logic_error("induced character value not integral");
    out.push_back(
        {c.representative, c.size(), boost::multiprecision::numerator(v)});
  }
  return out;
}

} // namespace aeq

#endif
