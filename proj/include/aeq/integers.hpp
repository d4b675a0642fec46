#ifndef AEQ_INTEGERS_HPP
#define AEQ_INTEGERS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace aeq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int &a) { return a < 0 ? Int(-a) : a; }

inline int sign_of(const Int &a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

inline Int gcd_int(const Int &a, const Int &b)
{
  return boost::multiprecision::gcd(a, b);
}

inline Int pow_int(Int base, unsigned long exp)
{
  Int r = 1;
  while (exp) {
    if (exp & 1u)
      r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

// a mod m reduced to [0, m)
inline Int mod_floor(const Int &a, const Int &m)
{
  Int r = a % m;
  if (r < 0)
    r += m;
  return r;
}

// a mod m reduced to (-m/2, m/2]
inline Int symmetric_mod(const Int &a, const Int &m)
{
  Int r = mod_floor(a, m);
  if (2 * r > m)
    r -= m;
  return r;
}

inline Int mod_pow(Int base, Int exp, const Int &m)
{
  base = mod_floor(base, m);
  Int r = 1;
  while (exp > 0) {
    if (boost::multiprecision::bit_test(exp, 0))
      r = r * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return r;
}

// inverse of a mod m, m > 1, gcd(a, m) = 1
inline Int mod_inverse(const Int &a, const Int &m)
{
  Int old_r = mod_floor(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1)
    throw std::domain_error("mod_inverse: not invertible");
  return mod_floor(old_s, m);
}

inline Int isqrt_int(const Int &a) { return boost::multiprecision::sqrt(a); }

inline bool is_square(const Int &a)
{
  if (a < 0)
    return false;
  Int s = isqrt_int(a);
  return s * s == a;
}

// p-adic valuation of n (n != 0)
inline unsigned valuation(Int n, const Int &p)
{
  unsigned v = 0;
  n = abs_int(n);
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Miller-Rabin. Deterministic for n < 2^64 with the 12-witness set; the
// same fixed witnesses are used above that bound (no random witnesses, so
// results are reproducible).
inline bool is_prime(const Int &n)
{
  if (n < 2)
    return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p)
      return true;
    if (n % p == 0)
      return false;
  }
  Int d = n - 1;
  unsigned r = 0;
  while (boost::multiprecision::bit_test(d, 0) == false) {
    d >>= 1;
    ++r;
  }
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool witness = true;
    for (unsigned i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness)
      return false;
  }
  return true;
}

inline Int next_prime(Int n)
{
  if (n < 2)
    return 2;
  ++n;
  if (n % 2 == 0)
    ++n;
  while (!is_prime(n))
    n += 2;
  return n;
}

// Deterministic ascending stream of primes, optionally starting above a bound.
class PrimeStream {
public:
  explicit PrimeStream(Int start = 1) : last_(start < 1 ? Int(1) : start) {}

  Int next()
  {
    last_ = next_prime(last_);
    return last_;
  }

private:
  Int last_;
};

namespace detail {

// Pollard-Brent rho with deterministic parameter sequence.
inline Int pollard_brent(const Int &n)
{
  if (n % 2 == 0)
    return 2;
  for (unsigned c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    Int ys = y;
    const unsigned m = 128;
    Int q = 1;
    unsigned long r = 1;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i)
        y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        unsigned long lim = std::min<unsigned long>(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs_int(x - y) % n;
        }
        d = gcd_int(q, n);
        k += m;
      }
      r <<= 1;
    }
    if (d == n) {
      // backtrack one step at a time
      d = 1;
      while (d == 1) {
        ys = (ys * ys + c) % n;
        d = gcd_int(abs_int(x - ys), n);
      }
    }
    if (d != n)
      return d;
    // cycle degenerated for this c; retry with the next increment
  }
}

inline void factor_rec(Int n, std::vector<Int> &out)
{
  if (n == 1)
    return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

} // namespace detail

// Full factorization of |n| as sorted (prime, exponent) pairs. Trial division
// below 10^4 first, Pollard-Brent beyond.
inline std::vector<std::pair<Int, unsigned>> factor_integer(Int n)
{
  n = abs_int(n);
  if (n == 0)
    throw std::invalid_argument("factor_integer: zero");
  std::vector<std::pair<Int, unsigned>> result;
  for (Int p = 2; p * p <= n && p < 10000; p = (p == 2 ? Int(3) : p + 2)) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      result.emplace_back(p, e);
    }
  }
  if (n > 1) {
    std::vector<Int> rest;
    detail::factor_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (std::size_t i = 0; i < rest.size();) {
      std::size_t j = i;
      while (j < rest.size() && rest[j] == rest[i])
        ++j;
      result.emplace_back(rest[i], static_cast<unsigned>(j - i));
      i = j;
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

// Garner step: value congruent to r1 mod m1 and r2 mod m2, gcd(m1, m2) = 1.
inline Int crt_pair(const Int &r1, const Int &m1, const Int &r2, const Int &m2)
{
  Int t = mod_floor((r2 - r1) % m2 * mod_inverse(m1 % m2, m2), m2);
  return r1 + m1 * t;
}

} // namespace aeq

#endif
