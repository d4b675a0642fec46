#ifndef AEQ_MOD_POLYNOMIAL_HPP
#define AEQ_MOD_POLYNOMIAL_HPP

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aeq/int_polynomial.hpp"
#include "aeq/integers.hpp"

namespace aeq {

// Polynomial over F_p, p prime (checked on construction), coefficients
// always reduced to [0, p).
class ModPolynomial {
public:
  ModPolynomial(std::vector<Int> coeffs, Int modulus)
      : coeffs_(std::move(coeffs)), p_(std::move(modulus))
  {
    if (!is_prime(p_))
      throw std::invalid_argument("ModPolynomial: modulus is not prime");
    reduce();
  }

  static ModPolynomial from_int_poly(const IntPolynomial &f, const Int &p)
  {
    return ModPolynomial(f.coeffs(), p);
  }

  static ModPolynomial zero(const Int &p) { return ModPolynomial({}, p); }
  static ModPolynomial one(const Int &p) { return ModPolynomial({Int(1)}, p); }

  static ModPolynomial monomial(const Int &c, std::size_t k, const Int &p)
  {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = c;
    return ModPolynomial(std::move(v), p);
  }

  const Int &modulus() const { return p_; }
  const std::vector<Int> &coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  const Int &operator[](std::size_t i) const
  {
    static const Int kZero = 0;
    return i < coeffs_.size() ? coeffs_[i] : kZero;
  }

  const Int &leading() const
  {
    if (is_zero())
      throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  bool operator==(const ModPolynomial &o) const
  {
    return p_ == o.p_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const ModPolynomial &o) const { return !(*this == o); }

  bool operator<(const ModPolynomial &o) const
  {
    if (coeffs_.size() != o.coeffs_.size())
      return coeffs_.size() < o.coeffs_.size();
    return coeffs_ < o.coeffs_;
  }

  ModPolynomial operator+(const ModPolynomial &o) const
  {
    check_same(o);
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      v[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      v[i] += o.coeffs_[i];
    return ModPolynomial(std::move(v), p_);
  }

  ModPolynomial operator-(const ModPolynomial &o) const
  {
    check_same(o);
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      v[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      v[i] -= o.coeffs_[i];
    return ModPolynomial(std::move(v), p_);
  }

  ModPolynomial operator*(const ModPolynomial &o) const
  {
    check_same(o);
    if (is_zero() || o.is_zero())
      return zero(p_);
    std::vector<Int> v(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0)
        continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return ModPolynomial(std::move(v), p_);
  }

  ModPolynomial operator*(const Int &c) const
  {
    std::vector<Int> v(coeffs_);
    Int cc = mod_floor(c, p_);
    for (auto &x : v)
      x *= cc;
    return ModPolynomial(std::move(v), p_);
  }

  ModPolynomial make_monic() const
  {
    if (is_zero() || is_monic())
      return *this;
    return *this * mod_inverse(leading(), p_);
  }

  std::pair<ModPolynomial, ModPolynomial> divmod(const ModPolynomial &d) const
  {
    check_same(d);
    if (d.is_zero())
      throw std::domain_error("division by zero polynomial");
    long dd = d.degree();
    std::vector<Int> rem(coeffs_);
    long rd = degree();
    if (rd < dd)
      return {zero(p_), *this};
    Int inv_lc = mod_inverse(d.leading(), p_);
    std::vector<Int> quot(rd - dd + 1, Int(0));
    for (long k = rd; k >= dd; --k) {
      Int c = rem[k] % p_ * inv_lc % p_;
      if (c == 0)
        continue;
      quot[k - dd] = c;
      for (long j = 0; j <= dd; ++j)
        rem[k - dd + j] -= c * d.coeffs()[j];
    }
    return {ModPolynomial(std::move(quot), p_),
            ModPolynomial(std::move(rem), p_)};
  }

  ModPolynomial operator%(const ModPolynomial &d) const
  {
    return divmod(d).second;
  }
  ModPolynomial operator/(const ModPolynomial &d) const
  {
    return divmod(d).first;
  }

  ModPolynomial derivative() const
  {
    if (coeffs_.size() <= 1)
      return zero(p_);
    std::vector<Int> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      v[i - 1] = coeffs_[i] * Int(i);
    return ModPolynomial(std::move(v), p_);
  }

  Int eval(const Int &x) const
  {
    Int r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      r = (r * x + coeffs_[i]) % p_;
    return mod_floor(r, p_);
  }

  // Symmetric lift to Z[x] with coefficients in (-p/2, p/2]
  IntPolynomial lift_symmetric() const
  {
    std::vector<Int> v(coeffs_);
    for (auto &c : v)
      c = symmetric_mod(c, p_);
    return IntPolynomial(std::move(v));
  }

  IntPolynomial lift() const { return IntPolynomial(coeffs_); }

private:
  void check_same(const ModPolynomial &o) const
  {
    if (p_ != o.p_)
      throw std::invalid_argument("mixed moduli");
  }

  void reduce()
  {
    for (auto &c : coeffs_)
      c = mod_floor(c, p_);
    while (!coeffs_.empty() && coeffs_.back() == 0)
      coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
  Int p_;
};

inline ModPolynomial gcd(ModPolynomial a, ModPolynomial b)
{
  while (!b.is_zero()) {
    ModPolynomial r = a % b;
    a = b;
    b = r;
  }
  return a.make_monic();
}

// g, u, v with g = gcd(a,b) = u*a + v*b, g monic (or zero)
inline ModPolynomial ext_gcd(const ModPolynomial &a, const ModPolynomial &b,
                             ModPolynomial &u, ModPolynomial &v)
{
  const Int &p = a.modulus();
  ModPolynomial r0 = a, r1 = b;
  ModPolynomial s0 = ModPolynomial::one(p), s1 = ModPolynomial::zero(p);
  ModPolynomial t0 = ModPolynomial::zero(p), t1 = ModPolynomial::one(p);
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    r0 = r1;
    r1 = r2;
    ModPolynomial s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    ModPolynomial t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (!r0.is_zero()) {
    Int inv = mod_inverse(r0.leading(), p);
    r0 = r0 * inv;
    s0 = s0 * inv;
    t0 = t0 * inv;
  }
  u = s0;
  v = t0;
  return r0;
}

inline ModPolynomial pow_mod(ModPolynomial base, Int exp,
                             const ModPolynomial &mod)
{
  ModPolynomial r = ModPolynomial::one(base.modulus());
  base = base % mod;
  while (exp > 0) {
    if (boost::multiprecision::bit_test(exp, 0))
      r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

// Factorization with canonical factor order: (degree, coefficient list).
template <class Poly> struct Factorization {
  Int unit = 1; // integer content (with sign) over Z, scalar in F_p
  std::vector<std::pair<Poly, unsigned>> factors;

  void sort_canonical()
  {
    std::sort(factors.begin(), factors.end(),
              [](const auto &a, const auto &b) {
                if (a.first.degree() != b.first.degree())
                  return a.first.degree() < b.first.degree();
                if (!(a.first == b.first))
                  return a.first < b.first;
                return a.second < b.second;
              });
  }

  std::vector<long> degree_multiset() const
  {
    std::vector<long> out;
    for (const auto &[f, m] : factors)
      for (unsigned i = 0; i < m; ++i)
        out.push_back(f.degree());
    std::sort(out.begin(), out.end());
    return out;
  }
};

namespace detail {

// Squarefree decomposition over F_p: list of (g_i, multiplicity), g_i monic
// squarefree pairwise coprime, input = lc * prod g_i^m_i. Handles the
// f = h(x^p) = h(x)^p degeneracy of positive characteristic.
inline void squarefree_mod(const ModPolynomial &f,
                           std::vector<std::pair<ModPolynomial, unsigned>> &out,
                           unsigned outer_mult)
{
  const Int &p = f.modulus();
  ModPolynomial fp = f.derivative();
  if (fp.is_zero()) {
    // f = h(x)^p with h built from every p-th coefficient (Frobenius fixes F_p)
    std::vector<Int> hv;
    unsigned long pl = static_cast<unsigned long>(p);
    for (std::size_t i = 0; i < f.coeffs().size(); i += pl)
      hv.push_back(f.coeffs()[i]);
    squarefree_mod(ModPolynomial(std::move(hv), p), out,
                   outer_mult * static_cast<unsigned>(pl));
    return;
  }
  ModPolynomial c = gcd(f, fp);
  ModPolynomial w = (f / c).make_monic();
  unsigned i = 1;
  while (w.degree() > 0) {
    ModPolynomial y = gcd(w, c);
    ModPolynomial part = w / y;
    if (part.degree() > 0)
      out.emplace_back(part.make_monic(), i * outer_mult);
    w = y;
    c = c / y;
    ++i;
  }
  // the residual carries the factors whose multiplicity is divisible by p;
  // its derivative vanishes, so the recursion takes the p-th root itself
  if (c.degree() > 0)
    squarefree_mod(c, out, outer_mult);
}

// Distinct-degree: splits monic squarefree f into products of irreducibles of
// equal degree d, returned as (product, d).
inline std::vector<std::pair<ModPolynomial, long>>
distinct_degree(ModPolynomial f)
{
  const Int &p = f.modulus();
  std::vector<std::pair<ModPolynomial, long>> out;
  ModPolynomial x = ModPolynomial::monomial(1, 1, p);
  ModPolynomial h = x;
  long d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > f.degree()) {
      out.emplace_back(f, f.degree());
      break;
    }
    h = pow_mod(h, p, f);
    ModPolynomial g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = (f / g).make_monic();
      h = h % f;
    }
  }
  return out;
}

// Cantor-Zassenhaus equal-degree splitting. The RNG is passed in so the whole
// factorization is reproducible from one seed.
inline void equal_degree(const ModPolynomial &f, long d,
                         std::vector<ModPolynomial> &out, std::mt19937_64 &rng)
{
  const Int &p = f.modulus();
  if (f.degree() == d) {
    out.push_back(f.make_monic());
    return;
  }
  long n = f.degree();
  ModPolynomial splitter = ModPolynomial::zero(p);
  while (true) {
    // random polynomial of degree < n
    std::vector<Int> rv(static_cast<std::size_t>(n), Int(0));
    for (auto &c : rv) {
      if (p <= std::numeric_limits<std::uint64_t>::max()) {
        std::uniform_int_distribution<std::uint64_t> dist(
            0, static_cast<std::uint64_t>(p - 1));
        c = dist(rng);
      } else {
        // assemble a wide value 32 bits at a time
        Int acc = 0;
        Int bound = p;
        while (bound > 0) {
          acc = (acc << 32) + Int(static_cast<std::uint32_t>(rng()));
          bound >>= 32;
        }
        c = mod_floor(acc, p);
      }
    }
    ModPolynomial a(std::move(rv), p);
    if (a.degree() < 1)
      continue;
    ModPolynomial g = gcd(a, f);
    if (g.degree() > 0 && g.degree() < n) {
      splitter = g;
      break;
    }
    if (p == 2) {
      // trace map over F_{2^d}: a + a^2 + a^4 + ... + a^(2^(d-1))
      ModPolynomial t = a % f, acc = t;
      for (long i = 1; i < d; ++i) {
        t = t * t % f;
        acc = acc + t;
      }
      g = gcd(acc, f);
    } else {
      Int e = (pow_int(p, static_cast<unsigned long>(d)) - 1) / 2;
      ModPolynomial b = pow_mod(a, e, f);
      g = gcd(b - ModPolynomial::one(p), f);
    }
    if (g.degree() > 0 && g.degree() < n) {
      splitter = g;
      break;
    }
  }
  equal_degree(splitter.make_monic(), d, out, rng);
  equal_degree((f / splitter).make_monic(), d, out, rng);
}

} // namespace detail

constexpr std::uint64_t kDefaultFactorSeed = 0x5eed0a11ce5ULL;

// Complete factorization over F_p into monic irreducibles. Deterministic for
// a fixed seed; the default seed is part of the library contract.
inline Factorization<ModPolynomial>
factor_mod_p(const ModPolynomial &f, std::uint64_t seed = kDefaultFactorSeed)
{
  if (f.is_zero())
    throw std::invalid_argument("factor_mod_p: zero polynomial");
  Factorization<ModPolynomial> result;
  result.unit = f.leading();
  if (f.degree() == 0)
    return result;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<ModPolynomial, unsigned>> sqf;
  detail::squarefree_mod(f.make_monic(), sqf, 1);
  for (const auto &[part, mult] : sqf) {
    for (const auto &[prod, d] : detail::distinct_degree(part)) {
      std::vector<ModPolynomial> irr;
      detail::equal_degree(prod, d, irr, rng);
      for (auto &g : irr)
        result.factors.emplace_back(std::move(g), mult);
    }
  }
  result.sort_canonical();
  return result;
}

inline bool is_irreducible_mod_p(const ModPolynomial &f)
{
  if (f.degree() < 1)
    return false;
  // Rabin test: x^(p^n) == x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for prime q | n
  const Int &p = f.modulus();
  long n = f.degree();
  ModPolynomial x = ModPolynomial::monomial(1, 1, p);
  ModPolynomial fm = f.make_monic();
  for (const auto &[q, e] : factor_integer(Int(n))) {
    (void)e;
    long m = n / static_cast<long>(q);
    ModPolynomial h = pow_mod(x, pow_int(p, static_cast<unsigned long>(m)), fm);
    if (gcd(h - x, fm).degree() != 0)
      return false;
  }
  ModPolynomial h = pow_mod(x, pow_int(p, static_cast<unsigned long>(n)), fm);
  return (h - x) % fm == ModPolynomial::zero(p);
}

} // namespace aeq

#endif
