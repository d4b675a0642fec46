#ifndef AEQ_COMPOSITUM_HPP
#define AEQ_COMPOSITUM_HPP

#include <map>
#include <vector>

#include "aeq/factor_integer_poly.hpp"
#include "aeq/number_field.hpp"
#include "aeq/resultant.hpp"
#include "aeq/timeout.hpp"

namespace aeq {

namespace detail {

// g(x0 - k*y) as a polynomial in y
inline IntPolynomial shifted_arg_poly(const IntPolynomial &g, const Int &x0,
                                      const Int &k)
{
  // substitute t = x0 - k*y into g(t)
  IntPolynomial result;
  IntPolynomial lin{x0, -k}; // x0 - k*y
  for (std::size_t i = g.coeffs().size(); i-- > 0;) {
    result = result * lin + IntPolynomial::constant(g[i]);
  }
  return result;
}

// res(u, v) = lc(u)^deg(v) * prod v(roots of u) over F_p, by the Euclidean
// recurrence res(u,v) = (-1)^(du dv) lc(v)^(du - dr) res(v, u mod v)
inline Int resultant_mod_p(ModPolynomial u, ModPolynomial v, const Int &p)
{
  Int acc = 1;
  int sign = 1;
  while (true) {
    if (v.is_zero())
      return 0;
    if (u.degree() == 0)
      return mod_floor(Int(sign) * acc * mod_pow(u.leading(), Int(v.degree()), p),
                       p);
    if (v.degree() == 0)
      return mod_floor(Int(sign) * acc * mod_pow(v.leading(), Int(u.degree()), p),
                       p);
    ModPolynomial r = u % v;
    if ((u.degree() % 2) && (v.degree() % 2))
      sign = -sign;
    long dr = r.is_zero() ? 0 : r.degree();
    acc = acc * mod_pow(v.leading(), Int(u.degree() - dr), p) % p;
    if (r.is_zero())
      return 0;
    u = v;
    v = r;
  }
}

// Newton interpolation over F_p through (xs[i], ys[i]); returns ascending
// coefficients
inline std::vector<Int> interpolate_mod(const std::vector<Int> &xs,
                                        const std::vector<Int> &ys,
                                        const Int &p)
{
  std::size_t n = xs.size();
  std::vector<Int> divided(ys);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      Int denom = mod_floor(xs[i] - xs[i - level], p);
      divided[i] = mod_floor((divided[i] - divided[i - 1]) *
                                 mod_inverse(denom, p),
                             p);
      if (i == level)
        break;
    }
  // expand Newton form
  std::vector<Int> coeffs{divided[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // coeffs = coeffs * (x - xs[i]) + divided[i]
    std::vector<Int> next(coeffs.size() + 1, Int(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] = mod_floor(next[j + 1] + coeffs[j], p);
      next[j] = mod_floor(next[j] - coeffs[j] * xs[i], p);
    }
    next[0] = mod_floor(next[0] + divided[i], p);
    coeffs = std::move(next);
  }
  return coeffs;
}

} // namespace detail

// R_k(x) = prod over root pairs (alpha of f, beta of g) of (x - k*alpha -
// beta), computed exactly: for a deterministic stream of primes the image
// mod p is found by evaluation/interpolation, and CRT assembles the integer
// coefficients below a Sylvester-determinant coefficient bound. Both inputs
// monic.
inline IntPolynomial compositum_resultant(const IntPolynomial &f,
                                          const IntPolynomial &g, const Int &k)
{
  if (!f.is_monic() || !g.is_monic())
    throw std::invalid_argument("compositum resultant needs monic inputs");
  long n = f.degree(), m = g.degree();
  long nm = n * m;

  // coefficient bound: (n+m)! * ||f||_1^m * (||g||_1 (1+k)^m)^n
  Int l1f = 0, l1g = 0;
  for (const auto &c : f.coeffs())
    l1f += abs_int(c);
  for (const auto &c : g.coeffs())
    l1g += abs_int(c);
  Int bound = 2;
  for (long i = 2; i <= n + m; ++i)
    bound *= i;
  bound *= pow_int(l1f, m);
  bound *= pow_int(l1g * pow_int(1 + abs_int(k), m), n);

  PrimeStream stream(Int(1) << 24);
  std::vector<Int> residues(nm + 1, Int(0));
  Int modulus = 1;
  while (modulus <= bound) {
    Int p = stream.next();
    if (k % p == 0)
      continue;
    std::vector<Int> xs, ys;
    xs.reserve(nm + 1);
    ys.reserve(nm + 1);
    ModPolynomial fp = ModPolynomial::from_int_poly(f, p);
    for (long t = 0; t <= nm; ++t) {
      Int x0 = t;
      // R(x0) = prod over f-roots alpha of g(x0 - k*alpha), f monic
      ModPolynomial gs =
          ModPolynomial::from_int_poly(detail::shifted_arg_poly(g, x0, k), p);
      xs.push_back(x0);
      ys.push_back(detail::resultant_mod_p(fp, gs, p));
    }
    std::vector<Int> image = detail::interpolate_mod(xs, ys, p);
    image.resize(nm + 1, Int(0));
    if (modulus == 1) {
      residues = image;
      modulus = p;
    } else {
      for (long i = 0; i <= nm; ++i)
        residues[i] = crt_pair(residues[i], modulus, image[i], p);
      modulus *= p;
    }
  }
  std::vector<Int> coeffs(nm + 1);
  for (long i = 0; i <= nm; ++i)
    coeffs[i] = symmetric_mod(residues[i], modulus);
  IntPolynomial r(std::move(coeffs));
  if (r.degree() != nm || !r.is_monic())
    throw std::logic_error("compositum resultant is not monic of degree n*m");
  return r;
}

struct CompositumResult {
  Int shift_k = 1;
  IntPolynomial resultant;
  std::vector<long> degrees; // irreducible factor degrees, ascending
};

// Degrees over Q of the composita K·sigma(K1): factor degrees of the first
// squarefree shifted resultant R_k, k = 1, 2, ...
inline CompositumResult compositum_degrees(const NumberField &k1,
                                           const NumberField &k2,
                                           const Deadline &deadline = Deadline())
{
  const IntPolynomial &f = k1.defining_poly();
  const IntPolynomial &g = k2.defining_poly();
  for (Int k = 1; k <= 50; ++k) {
    deadline.check("compositum_degrees");
    IntPolynomial r = compositum_resultant(f, g, k);
    // squarefree certificate: gcd(r, r') = 1 modulo one good prime
    bool squarefree = false;
    PrimeStream stream(Int(1) << 24);
    for (int tries = 0; tries < 8 && !squarefree; ++tries) {
      Int p = stream.next();
      ModPolynomial rp = ModPolynomial::from_int_poly(r, p);
      if (rp.degree() != r.degree())
        continue;
      if (gcd(rp, rp.derivative()).degree() == 0)
        squarefree = true;
    }
    if (!squarefree)
      continue;
    auto fac = factor_over_Z(r, kDefaultFactorSeed, deadline);
    CompositumResult out;
    out.shift_k = k;
    out.resultant = r;
    out.degrees = fac.degree_multiset();
    return out;
  }
  throw std::runtime_error(
      "no squarefree shift found with k <= 50 (unexpected)");
}

// Prime-degree criterion: the compositum degree list contains the common
// degree exactly when the fields are isomorphic.
inline bool is_isomorphic(const NumberField &k1, const NumberField &k2,
                          const Deadline &deadline = Deadline())
{
  if (k1.degree() != k2.degree())
    return false;
  auto comp = compositum_degrees(k1, k2, deadline);
  for (long d : comp.degrees)
    if (d == static_cast<long>(k1.degree()))
      return true;
  return false;
}

} // namespace aeq

#endif
