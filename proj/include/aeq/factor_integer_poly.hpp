#ifndef AEQ_FACTOR_INTEGER_POLY_HPP
#define AEQ_FACTOR_INTEGER_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "aeq/int_polynomial.hpp"
#include "aeq/mod_polynomial.hpp"
#include "aeq/resultant.hpp"
#include "aeq/timeout.hpp"

namespace aeq {

namespace detail {

// ---- arithmetic on Z/M[x] for M a prime power (Hensel moduli) ----

inline std::vector<Int> reduce_mod(std::vector<Int> v, const Int &m)
{
  for (auto &c : v)
    c = mod_floor(c, m);
  while (!v.empty() && v.back() == 0)
    v.pop_back();
  return v;
}

inline std::vector<Int> mul_mod(const std::vector<Int> &a,
                                const std::vector<Int> &b, const Int &m)
{
  if (a.empty() || b.empty())
    return {};
  std::vector<Int> v(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      v[i + j] += a[i] * b[j];
  }
  return reduce_mod(std::move(v), m);
}

inline std::vector<Int> add_mod(const std::vector<Int> &a,
                                const std::vector<Int> &b, const Int &m)
{
  std::vector<Int> v(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    v[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    v[i] += b[i];
  return reduce_mod(std::move(v), m);
}

inline std::vector<Int> sub_mod(const std::vector<Int> &a,
                                const std::vector<Int> &b, const Int &m)
{
  std::vector<Int> v(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    v[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    v[i] -= b[i];
  return reduce_mod(std::move(v), m);
}

// division by a monic divisor, valid over Z/M for any M
inline void divrem_monic(const std::vector<Int> &a, const std::vector<Int> &b,
                         const Int &m, std::vector<Int> &q,
                         std::vector<Int> &r)
{
  long db = static_cast<long>(b.size()) - 1;
  std::vector<Int> rem(a);
  long da = static_cast<long>(rem.size()) - 1;
  if (da < db) {
    q.clear();
    r = rem;
    return;
  }
  std::vector<Int> quot(da - db + 1, Int(0));
  for (long k = da; k >= db; --k) {
    Int c = mod_floor(rem[k], m);
    if (c == 0)
      continue;
    quot[k - db] = c;
    for (long j = 0; j <= db; ++j)
      rem[k - db + j] = mod_floor(rem[k - db + j] - c * b[j], m);
  }
  q = reduce_mod(std::move(quot), m);
  r = reduce_mod(std::move(rem), m);
}

// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m),
// all monic f, g, h, to the same data mod m^2.
struct HenselPair {
  std::vector<Int> g, h, s, t;
};

inline void hensel_step(const std::vector<Int> &f, HenselPair &gh,
                        const Int &m)
{
  Int m2 = m * m;
  std::vector<Int> e =
      sub_mod(reduce_mod(f, m2), mul_mod(gh.g, gh.h, m2), m2);
  std::vector<Int> q, r;
  divrem_monic(mul_mod(gh.s, e, m2), gh.h, m2, q, r);
  std::vector<Int> gstar =
      add_mod(gh.g, add_mod(mul_mod(gh.t, e, m2), mul_mod(q, gh.g, m2), m2),
              m2);
  std::vector<Int> hstar = add_mod(gh.h, r, m2);
  std::vector<Int> b = sub_mod(
      add_mod(mul_mod(gh.s, gstar, m2), mul_mod(gh.t, hstar, m2), m2),
      std::vector<Int>{Int(1)}, m2);
  std::vector<Int> c, d;
  divrem_monic(mul_mod(gh.s, b, m2), hstar, m2, c, d);
  std::vector<Int> sstar = sub_mod(gh.s, d, m2);
  std::vector<Int> tstar = sub_mod(
      gh.t, add_mod(mul_mod(gh.t, b, m2), mul_mod(c, gstar, m2), m2), m2);
  gh.g = std::move(gstar);
  gh.h = std::move(hstar);
  gh.s = std::move(sstar);
  gh.t = std::move(tstar);
}

// Lift the monic factorization f = prod(factors) (mod p) to mod p^2^ceil(...)
// >= target; factors pairwise coprime mod p. Results reduced mod `target`.
inline void hensel_multifactor(const std::vector<Int> &f,
                               std::vector<std::vector<Int>> &factors,
                               std::size_t lo, std::size_t hi, const Int &p,
                               const Int &target)
{
  if (hi - lo <= 1) {
    factors[lo] = reduce_mod(f, target);
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  std::vector<Int> g0{Int(1)}, h0{Int(1)};
  for (std::size_t i = lo; i < mid; ++i)
    g0 = mul_mod(g0, factors[i], p);
  for (std::size_t i = mid; i < hi; ++i)
    h0 = mul_mod(h0, factors[i], p);
  ModPolynomial gm(g0, p), hm(h0, p);
  ModPolynomial sm = ModPolynomial::zero(p), tm = ModPolynomial::zero(p);
  ext_gcd(gm, hm, sm, tm);
  HenselPair pair{g0, h0, sm.coeffs(), tm.coeffs()};
  Int m = p;
  while (m < target) {
    hensel_step(f, pair, m);
    m *= m;
  }
  pair.g = reduce_mod(pair.g, target);
  pair.h = reduce_mod(pair.h, target);
  hensel_multifactor(pair.g, factors, lo, mid, p, target);
  hensel_multifactor(pair.h, factors, mid, hi, p, target);
}

// Zassenhaus: factor a primitive squarefree polynomial with positive leading
// coefficient and nonzero constant term.
inline std::vector<IntPolynomial>
factor_squarefree_primitive(const IntPolynomial &f, std::uint64_t seed,
                            const Deadline &deadline)
{
  long n = f.degree();
  if (n <= 1)
    return {f};

  // prime selection: skip p | lc and p with f mod p not squarefree; among the
  // first few usable primes keep the factorization with the fewest factors
  const Int &lc = f.leading();
  Factorization<ModPolynomial> best;
  Int best_p = 0;
  int usable = 0;
  PrimeStream ps(2);
  while (usable < 4) {
    deadline.check("factor_over_Z: prime selection");
    Int p = ps.next();
    if (lc % p == 0)
      continue;
    ModPolynomial fp = ModPolynomial::from_int_poly(f, p);
    if (gcd(fp, fp.derivative()).degree() != 0)
      continue;
    auto fac = factor_mod_p(fp, seed);
    ++usable;
    if (best_p == 0 || fac.factors.size() < best.factors.size()) {
      best = fac;
      best_p = p;
    }
    if (best.factors.size() == 1)
      break;
  }
  if (best.factors.size() == 1)
    return {f}; // irreducible witness mod best_p

  // Landau-Mignotte style bound covering lc * (divisor of a divisor of f)
  Int bound = 2 * abs_int(lc) * l2_norm_ceil(f);
  for (long i = 0; i < 2 * n; ++i)
    bound *= 2;
  Int target = best_p;
  while (target <= bound)
    target *= best_p;

  std::vector<std::vector<Int>> lifted;
  lifted.reserve(best.factors.size());
  for (const auto &[g, mult] : best.factors) {
    (void)mult; // squarefree: all multiplicities 1
    lifted.push_back(g.coeffs());
  }
  // monic version of f mod target
  std::vector<Int> fmonic = reduce_mod(f.coeffs(), target);
  {
    Int inv = mod_inverse(lc, target);
    for (auto &c : fmonic)
      c = c * inv % target;
  }
  hensel_multifactor(fmonic, lifted, 0, lifted.size(), best_p, target);

  // subset recombination, smallest cardinality first
  std::vector<IntPolynomial> result;
  IntPolynomial remaining = f;
  std::vector<std::size_t> alive(lifted.size());
  std::iota(alive.begin(), alive.end(), std::size_t{0});
  std::vector<Int> const_terms(lifted.size());
  for (std::size_t i = 0; i < lifted.size(); ++i)
    const_terms[i] = lifted[i].empty() ? Int(0) : lifted[i][0];

  std::size_t s = 1;
  while (2 * s <= alive.size()) {
    bool extracted = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      deadline.check("factor_over_Z: recombination");
      long degsum = 0;
      for (std::size_t k : idx)
        degsum += static_cast<long>(lifted[alive[k]].size()) - 1;
      if (2 * degsum <= remaining.degree()) {
        const Int &rlc = remaining.leading();
        // cheap filter on the constant coefficient
        Int c0 = mod_floor(rlc, target);
        for (std::size_t k : idx)
          c0 = c0 * const_terms[alive[k]] % target;
        c0 = symmetric_mod(c0, target);
        Int rhs = rlc * remaining[0];
        if (c0 != 0 && rhs % c0 == 0) {
          std::vector<Int> prod{mod_floor(rlc, target)};
          for (std::size_t k : idx)
            prod = mul_mod(prod, lifted[alive[k]], target);
          for (auto &c : prod)
            c = symmetric_mod(c, target);
          IntPolynomial cand =
              IntPolynomial(std::move(prod)).primitive_part();
          IntPolynomial q, r;
          if (cand.degree() >= 1 && remaining.try_divide(cand, q, r) &&
              r.is_zero()) {
            result.push_back(cand);
            remaining = q;
            std::vector<std::size_t> next_alive;
            for (std::size_t k = 0, j = 0; k < alive.size(); ++k) {
              if (j < idx.size() && idx[j] == k)
                ++j;
              else
                next_alive.push_back(alive[k]);
            }
            alive = std::move(next_alive);
            extracted = true;
            break;
          }
        }
      }
      // next s-combination of alive indices
      long pos = static_cast<long>(s) - 1;
      while (pos >= 0 &&
             idx[pos] == alive.size() - s + static_cast<std::size_t>(pos))
        --pos;
      if (pos < 0)
        break;
      ++idx[pos];
      for (std::size_t k = pos + 1; k < s; ++k)
        idx[k] = idx[k - 1] + 1;
    }
    if (!extracted)
      ++s;
  }
  if (remaining.degree() >= 1)
    result.push_back(remaining.primitive_part());
  return result;
}

// Yun's squarefree decomposition; input primitive with positive lc.
inline std::vector<std::pair<IntPolynomial, unsigned>>
squarefree_decompose_z(const IntPolynomial &f)
{
  std::vector<std::pair<IntPolynomial, unsigned>> out;
  IntPolynomial g = gcd_z(f, f.derivative());
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  IntPolynomial c = f.divide_exact(g);
  IntPolynomial d = f.derivative().divide_exact(g) - c.derivative();
  unsigned i = 1;
  while (c.degree() > 0) {
    IntPolynomial a = gcd_z(c, d);
    if (a.degree() > 0)
      out.emplace_back(a.primitive_part(), i);
    c = c.divide_exact(a);
    d = d.divide_exact(a) - c.derivative();
    ++i;
  }
  return out;
}

} // namespace detail

// Factorization over Z into primitive irreducibles with positive leading
// coefficients; unit * prod(factors^mult) == input exactly.
inline Factorization<IntPolynomial>
factor_over_Z(const IntPolynomial &f, std::uint64_t seed = kDefaultFactorSeed,
              const Deadline &deadline = Deadline())
{
  if (f.is_zero())
    throw std::invalid_argument("factor_over_Z: zero polynomial");
  Factorization<IntPolynomial> result;
  IntPolynomial g = f.primitive_part(&result.unit);
  if (g.degree() == 0)
    return result;
  // pull out the power of x so constant terms are nonzero downstream
  std::size_t v = 0;
  while (g[v] == 0)
    ++v;
  if (v > 0) {
    std::vector<Int> shifted(g.coeffs().begin() + v, g.coeffs().end());
    g = IntPolynomial(std::move(shifted));
    result.factors.emplace_back(IntPolynomial({0, 1}),
                                static_cast<unsigned>(v));
  }
  if (g.degree() >= 1) {
    for (const auto &[part, mult] : detail::squarefree_decompose_z(g)) {
      for (auto &irr :
           detail::factor_squarefree_primitive(part, seed, deadline))
        result.factors.emplace_back(std::move(irr), mult);
    }
  }
  result.sort_canonical();
  return result;
}

inline bool is_irreducible_z(const IntPolynomial &f)
{
  if (f.degree() < 1)
    return false;
  auto fac = factor_over_Z(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1 &&
         fac.factors[0].first.degree() == f.degree();
}

} // namespace aeq

#endif
