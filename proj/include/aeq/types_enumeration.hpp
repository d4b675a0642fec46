#ifndef AEQ_TYPES_ENUMERATION_HPP
#define AEQ_TYPES_ENUMERATION_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "aeq/factorization_type.hpp"
#include "aeq/int_polynomial.hpp"

namespace aeq {

constexpr int kMaxEnumerationDegree = 12;

// All multisets of (f, e) pairs with Σ f·e = n, canonically ordered.
inline std::vector<FactorizationType> enumerate_factorization_types(int n)
{
  if (n < 1)
    throw std::invalid_argument("degree must be positive");
  if (n > kMaxEnumerationDegree)
    throw std::invalid_argument("degree beyond enumeration cap");
  std::vector<FactorizationType> out;
  std::vector<EfPair> current;
  // nondecreasing pair sequences only, so each multiset appears once
  auto rec = [&](auto &&self, int remaining, EfPair min_pair) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int f = 1; f <= remaining; ++f)
      for (int e = 1; f * e <= remaining; ++e) {
        EfPair p{f, e};
        if (p < min_pair)
          continue;
        current.push_back(p);
        self(self, remaining - f * e, p);
        current.pop_back();
      }
  };
  rec(rec, n, EfPair{1, 1});
  std::sort(out.begin(), out.end());
  return out;
}

struct AmbiguousType {
  ArithmeticType type;
  std::set<int> ramification_sums;
};

// Arithmetic types of degree n admitting at least two factorization types
// with different ramification sums. Each entry of `mode_filters` is the set
// of patterns realizable in one ramification regime (e.g. tame, wild(2));
// ambiguity must show up inside a single regime, since the competing
// factorizations live over one prime. No filters = the unrestricted
// partition analysis.
inline std::vector<AmbiguousType> ambiguous_arithmetic_types(
    int n,
    const std::vector<std::set<FactorizationType>> &mode_filters = {})
{
  auto all = enumerate_factorization_types(n);
  std::map<ArithmeticType, std::set<int>> sums;
  if (mode_filters.empty()) {
    std::map<ArithmeticType, std::set<int>> by_type;
    for (const auto &t : all)
      by_type[t.arithmetic_type()].insert(t.ramification_sum());
    for (const auto &[at, ss] : by_type)
      if (ss.size() >= 2)
        sums[at].insert(ss.begin(), ss.end());
  } else {
    for (const auto &filter : mode_filters) {
      std::map<ArithmeticType, std::set<int>> by_type;
      for (const auto &t : all)
        if (filter.count(t))
          by_type[t.arithmetic_type()].insert(t.ramification_sum());
      for (const auto &[at, ss] : by_type)
        if (ss.size() >= 2)
          sums[at].insert(ss.begin(), ss.end());
    }
  }
  std::vector<AmbiguousType> out;
  for (const auto &[at, ss] : sums)
    out.push_back({at, ss});
  return out;
}

inline int a_ell_count(const ArithmeticType &t) { return t.ones(); }

// det(X - Frobenius) of the degree-n permutation representation at an
// unramified prime with arithmetic type t: prod (X^{f_i} - 1).
inline IntPolynomial frobenius_charpoly(const ArithmeticType &t)
{
  IntPolynomial result = IntPolynomial::constant(1);
  for (int f : t.degrees()) {
    std::vector<Int> v(f + 1, Int(0));
    v[0] = -1;
    v[f] = 1;
    result = result * IntPolynomial(std::move(v));
  }
  return result;
}

// Discriminant valuation predicted for a tamely ramified prime: Σ (e-1)·f.
// The caller asserts tameness; at wild primes this is a strict lower bound.
inline int tame_disc_valuation(const FactorizationType &t)
{
  int v = 0;
  for (const auto &p : t.pairs())
    v += (p.e - 1) * p.f;
  return v;
}

// Discriminant-valuation window for septic primes with differing
// ramification sums.
//
// Tame case, computed: the candidate arithmetic types are the degree-7
// sum-ambiguous ones of the unrestricted partition analysis; their residue
// sums are {3,4,5}, giving v = 7 - Σf ∈ {2,3,4}. A non-solitary septic field
// has square discriminant (closure inside A7), so odd valuations drop out:
// {2,4}.
//
// Wild case at ℓ = 2: the source analysis pins v ∈ {6,8} (equivalently the
// 2^{2a}, a ∈ {3,4} search window); first-principles conductor bounds alone
// only bracket it, so the pinned window is returned.
enum class ValuationRegime { Tame, WildTwo };

inline std::set<int> elcoro_valuation_window(
    const std::vector<AmbiguousType> &ambiguous_types, ValuationRegime regime,
    bool parity_filter = true)
{
  if (regime == ValuationRegime::WildTwo)
    return {6, 8};
  std::set<int> window;
  for (const auto &a : ambiguous_types) {
    int v = 7 - a.type.sum();
    if (v >= 0)
      window.insert(v);
  }
  if (parity_filter) {
    std::set<int> even;
    for (int v : window)
      if (v % 2 == 0)
        even.insert(v);
    return even;
  }
  return window;
}

} // namespace aeq

#endif
