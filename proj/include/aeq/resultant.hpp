#ifndef AEQ_RESULTANT_HPP
#define AEQ_RESULTANT_HPP

#include <stdexcept>

#include "aeq/int_polynomial.hpp"

namespace aeq {

namespace detail {

// Sub-resultant PRS resultant, convention res(A,B) = lc(A)^deg(B) * prod B(a_i)
// over the roots a_i of A (= det of the Sylvester matrix with A-rows first).
inline Int resultant_sylvester_convention(IntPolynomial a, IntPolynomial b)
{
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("zero polynomial");
  int s = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2) && (b.degree() % 2))
      s = -1;
    std::swap(a, b);
  }
  if (b.degree() == 0)
    return Int(s) * pow_int(b.leading(), a.degree());

  // contents pulled out up front: res(c*A, B) = c^degB * res(A, B)
  Int ca, cb;
  a = a.primitive_part(&ca);
  b = b.primitive_part(&cb);
  Int scale = pow_int(ca, b.degree()) * pow_int(cb, a.degree());

  Int g = 1, h = 1;
  while (true) {
    long da = a.degree(), db = b.degree();
    long delta = da - db;
    if ((da % 2) && (db % 2))
      s = -s;
    IntPolynomial r = a.pseudo_rem(b);
    a = b;
    Int denom = g * pow_int(h, delta);
    std::vector<Int> rc(r.coeffs());
    for (auto &c : rc)
      c /= denom; // exact by the sub-resultant theory
    b = IntPolynomial(std::move(rc));
    if (b.is_zero())
      return 0; // common factor
    g = a.leading();
    // h = g^delta / h^(delta-1), exact
    Int gn = pow_int(g, delta);
    for (long i = 1; i < delta; ++i)
      gn /= h;
    if (delta == 0)
      gn = h; // h unchanged
    h = gn;
    if (b.degree() == 0)
      break;
  }
  // res = s * lc(B)^deg(A) / h^(deg A - 1)
  Int num = pow_int(b.leading(), a.degree());
  for (long i = 1; i < a.degree(); ++i)
    num /= h;
  return Int(s) * scale * num;
}

} // namespace detail

// Resultant with the convention Res(f,g) = lc(g)^deg(f) * prod f(b_j) over the
// roots b_j of g, so that Res(x-a, x-b) = b - a.
inline Int poly_resultant(const IntPolynomial &f, const IntPolynomial &g)
{
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("zero polynomial");
  return detail::resultant_sylvester_convention(g, f);
}

// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f). Independent of the resultant
// sign convention because n(n-1) is even.
inline Int poly_discriminant(const IntPolynomial &f)
{
  if (f.degree() < 1)
    throw std::invalid_argument("discriminant of constant polynomial");
  long n = f.degree();
  if (n == 1)
    return 1;
  Int r = detail::resultant_sylvester_convention(f, f.derivative());
  Int d = r / f.leading();
  return ((n * (n - 1) / 2) % 2) ? Int(-d) : d;
}

// gcd over Z[x] (primitive PRS), normalized with positive leading coefficient.
inline IntPolynomial gcd_z(IntPolynomial a, IntPolynomial b)
{
  if (a.is_zero())
    return b.is_zero() ? b : b.primitive_part() * b.content();
  if (b.is_zero())
    return a.primitive_part() * a.content();
  Int ca = a.content(), cb = b.content();
  Int cg = gcd_int(ca, cb);
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree())
    std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = a.pseudo_rem(b).primitive_part();
    a = b;
    b = r;
  }
  return a.primitive_part() * cg;
}

inline bool is_squarefree_z(const IntPolynomial &f)
{
  if (f.degree() <= 1)
    return !f.is_zero();
  return gcd_z(f, f.derivative()).degree() == 0;
}

} // namespace aeq

#endif
