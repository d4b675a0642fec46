#ifndef AEQ_STURM_HPP
#define AEQ_STURM_HPP

#include <stdexcept>
#include <vector>

#include "aeq/int_polynomial.hpp"
#include "aeq/resultant.hpp"

namespace aeq {

namespace detail {

// Sturm chain over Z: pseudo-remainders with an even power of the leading
// coefficient so every sign agrees with the rational chain, contents removed.
inline std::vector<IntPolynomial> sturm_chain(const IntPolynomial &f)
{
  std::vector<IntPolynomial> chain;
  chain.push_back(f);
  chain.push_back(f.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const IntPolynomial &a = chain[chain.size() - 2];
    const IntPolynomial &b = chain.back();
    long delta = a.degree() - b.degree();
    IntPolynomial r = a.pseudo_rem(b);
    if ((delta + 1) % 2)
      r = r * b.leading(); // make the multiplier lc^(delta+2), an even power
    Int content = r.content();
    if (content > 1) {
      std::vector<Int> v(r.coeffs());
      for (auto &c : v)
        c /= content;
      r = IntPolynomial(std::move(v));
    }
    chain.push_back(-r);
    if (chain.back().is_zero())
      break;
  }
  return chain;
}

inline int sign_at_plus_inf(const IntPolynomial &p)
{
  return p.is_zero() ? 0 : sign_of(p.leading());
}

inline int sign_at_minus_inf(const IntPolynomial &p)
{
  if (p.is_zero())
    return 0;
  int s = sign_of(p.leading());
  return (p.degree() % 2) ? -s : s;
}

inline unsigned variations(const std::vector<int> &signs)
{
  unsigned v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0)
      continue;
    if (prev != 0 && s != prev)
      ++v;
    prev = s;
  }
  return v;
}

} // namespace detail

// Number of distinct real roots of a squarefree polynomial.
inline unsigned count_real_roots(const IntPolynomial &f)
{
  if (f.is_zero())
    throw std::invalid_argument("count_real_roots: zero polynomial");
  if (f.degree() == 0)
    return 0;
  if (!is_squarefree_z(f))
    throw std::invalid_argument("not squarefree");
  auto chain = detail::sturm_chain(f);
  std::vector<int> lo, hi;
  lo.reserve(chain.size());
  hi.reserve(chain.size());
  for (const auto &p : chain) {
    lo.push_back(detail::sign_at_minus_inf(p));
    hi.push_back(detail::sign_at_plus_inf(p));
  }
  return detail::variations(lo) - detail::variations(hi);
}

// Distinct real roots of a squarefree f in the half-open interval (a, b].
inline unsigned count_real_roots_in(const IntPolynomial &f, const Rat &a,
                                    const Rat &b)
{
  if (!is_squarefree_z(f))
    throw std::invalid_argument("not squarefree");
  auto chain = detail::sturm_chain(f);
  std::vector<int> lo, hi;
  for (const auto &p : chain) {
    Rat va = p.eval(a), vb = p.eval(b);
    lo.push_back(va < 0 ? -1 : (va > 0 ? 1 : 0));
    hi.push_back(vb < 0 ? -1 : (vb > 0 ? 1 : 0));
  }
  return detail::variations(lo) - detail::variations(hi);
}

} // namespace aeq

#endif
