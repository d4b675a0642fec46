#ifndef AEQ_TESTS_ORACLES_HPP
#define AEQ_TESTS_ORACLES_HPP

// Slow, independent reference implementations used only to cross-check the
// library. Nothing here may call the code path it is checking.

#include <random>
#include <set>
#include <vector>

#include "aeq/int_polynomial.hpp"
#include "aeq/linalg.hpp"
#include "aeq/perm_group.hpp"

namespace aeq::oracle {

// --- resultant via the Sylvester determinant (Bareiss elimination) ---

// det of the Sylvester matrix of (a, b): deg(b) rows of a-coefficients,
// deg(a) rows of b-coefficients; equals lc(a)^deg(b) prod b(roots of a).
inline Int sylvester_resultant_std(const IntPolynomial &a,
                                   const IntPolynomial &b)
{
  long m = a.degree(), n = b.degree();
  if (m < 0 || n < 0)
    throw std::invalid_argument("zero polynomial");
  if (m == 0)
    return pow_int(a.leading(), n);
  if (n == 0)
    return pow_int(b.leading(), m);
  std::size_t size = static_cast<std::size_t>(m + n);
  MatInt s(size, VecInt(size, Int(0)));
  for (long row = 0; row < n; ++row)
    for (long i = 0; i <= m; ++i)
      s[row][row + i] = a[m - i];
  for (long row = 0; row < m; ++row)
    for (long i = 0; i <= n; ++i)
      s[n + row][row + i] = b[n - i];
  return det_int(std::move(s));
}

// matches aeq::poly_resultant's convention: Res(f,g) = lc(g)^deg f * prod
// f over the roots of g
inline Int resultant(const IntPolynomial &f, const IntPolynomial &g)
{
  return sylvester_resultant_std(g, f);
}

inline Int discriminant(const IntPolynomial &f)
{
  long n = f.degree();
  if (n < 1)
    throw std::invalid_argument("constant polynomial");
  if (n == 1)
    return 1;
  Int r = sylvester_resultant_std(f, f.derivative());
  Int d = r / f.leading();
  return ((n * (n - 1) / 2) % 2) ? Int(-d) : d;
}

// --- real-root counting by Descartes bisection (Vincent-Collins-Akritas) ---

namespace detail {

inline unsigned sign_variations(const std::vector<Int> &cs)
{
  unsigned v = 0;
  int prev = 0;
  for (const auto &c : cs) {
    int s = c < 0 ? -1 : (c > 0 ? 1 : 0);
    if (s == 0)
      continue;
    if (prev != 0 && s != prev)
      ++v;
    prev = s;
  }
  return v;
}

inline IntPolynomial shift_by_one(const IntPolynomial &p)
{
  return p.shift(1);
}

inline IntPolynomial reverse_poly(const IntPolynomial &p)
{
  std::vector<Int> v(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPolynomial(std::move(v));
}

// roots of p inside the open interval (0,1); p(0) != 0 required
inline unsigned vca01(const IntPolynomial &p)
{
  long n = p.degree();
  if (n <= 0)
    return 0;
  // Descartes bound for (0,1): variations of (x+1)^n p(1/(x+1))
  unsigned v = sign_variations(shift_by_one(reverse_poly(p)).coeffs());
  if (v == 0)
    return 0;
  if (v == 1)
    return 1;
  // p_left(x) = 2^n p(x/2), p_right = p_left(x+1)
  std::vector<Int> left(p.coeffs());
  Int two_pow = pow_int(2, n);
  Int scale = two_pow;
  for (long i = 0; i <= n; ++i) {
    left[i] *= scale;
    scale /= 2;
  }
  IntPolynomial pl{std::vector<Int>(left)};
  IntPolynomial pr = shift_by_one(pl);
  unsigned mid = pr[0] == 0 ? 1 : 0; // root exactly at 1/2
  if (mid) {
    std::vector<Int> rc(pr.coeffs().begin() + 1, pr.coeffs().end());
    pr = IntPolynomial(std::move(rc));
  }
  return vca01(pl) + mid + vca01(pr);
}

inline unsigned count_positive(IntPolynomial p)
{
  while (!p.is_zero() && p[0] == 0) {
    std::vector<Int> v(p.coeffs().begin() + 1, p.coeffs().end());
    p = IntPolynomial(std::move(v));
  }
  if (p.degree() <= 0)
    return 0;
  Int bound = 1 + max_abs_coeff(p) / abs_int(p.leading()) + 1;
  return vca01(p.scale_arg(bound));
}

} // namespace detail

// distinct real roots of a squarefree polynomial, bisection-style
inline unsigned count_real_roots(const IntPolynomial &f)
{
  unsigned zero = (f[0] == 0) ? 1 : 0;
  std::vector<Int> neg(f.coeffs());
  for (std::size_t i = 1; i < neg.size(); i += 2)
    neg[i] = -neg[i];
  return detail::count_positive(f) + zero +
         detail::count_positive(IntPolynomial(std::move(neg)));
}

// --- exhaustive subgroup enumeration (no conjugacy shortcuts) ---

inline std::set<std::vector<Perm>> brute_all_subgroups(const PermGroup &g)
{
  auto closure = [&](std::vector<Perm> seed) {
    std::set<Perm> s(seed.begin(), seed.end());
    s.insert(Perm::identity(g.degree()));
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Perm> cur(s.begin(), s.end());
      for (const auto &a : cur)
        for (const auto &b : cur) {
          if (s.insert(a * b).second)
            changed = true;
          if (s.insert(a.inverse()).second)
            changed = true;
        }
    }
    return std::vector<Perm>(s.begin(), s.end());
  };
  std::set<std::vector<Perm>> subs;
  subs.insert(closure({}));
  for (const auto &a : g.elements())
    subs.insert(closure({a}));
  for (const auto &a : g.elements())
    for (const auto &b : g.elements())
      subs.insert(closure({a, b}));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<Perm>> snapshot(subs.begin(), subs.end());
    for (const auto &h : snapshot) {
      if (h.size() == g.order())
        continue;
      for (const auto &x : g.elements()) {
        if (std::binary_search(h.begin(), h.end(), x))
          continue;
        std::vector<Perm> seed = h;
        seed.push_back(x);
        if (subs.insert(closure(std::move(seed))).second)
          changed = true;
      }
    }
  }
  return subs;
}

// --- counting oracle for factorization-type enumeration ---

// number of multisets of (f,e) pairs with sum f*e = n, by unbounded
// knapsack over the distinct pairs
inline Int count_factorization_types(int n)
{
  std::vector<int> weights;
  for (int f = 1; f <= n; ++f)
    for (int e = 1; f * e <= n; ++e)
      weights.push_back(f * e);
  std::vector<Int> dp(n + 1, Int(0));
  dp[0] = 1;
  for (int w : weights)
    for (int s = w; s <= n; ++s)
      dp[s] += dp[s - w];
  return dp[n];
}

// --- seeded random polynomial generators ---

inline IntPolynomial random_poly(std::mt19937_64 &rng, int degree,
                                 long coeff_bound, bool monic = false)
{
  std::uniform_int_distribution<long> dist(-coeff_bound, coeff_bound);
  std::vector<Int> cs(degree + 1);
  for (int i = 0; i <= degree; ++i)
    cs[i] = dist(rng);
  if (monic)
    cs[degree] = 1;
  else
    while (cs[degree] == 0)
      cs[degree] = dist(rng);
  return IntPolynomial(std::move(cs));
}

} // namespace aeq::oracle

#endif
