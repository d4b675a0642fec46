#ifndef AEQ_NUMBER_FIELD_HPP
#define AEQ_NUMBER_FIELD_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "aeq/factor_integer_poly.hpp"
#include "aeq/factorization_type.hpp"
#include "aeq/int_polynomial.hpp"
#include "aeq/linalg.hpp"
#include "aeq/mod_polynomial.hpp"
#include "aeq/resultant.hpp"
#include "aeq/sturm.hpp"

namespace aeq {

namespace detail {

// ---- polynomial arithmetic over Q for order bases ----

inline std::vector<Rat> ratpoly_mul(const std::vector<Rat> &a,
                                    const std::vector<Rat> &b)
{
  if (a.empty() || b.empty())
    return {};
  std::vector<Rat> v(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      v[i + j] += a[i] * b[j];
  }
  return v;
}

// reduce mod a monic integer polynomial
inline std::vector<Rat> ratpoly_mod(std::vector<Rat> v, const IntPolynomial &f)
{
  long n = f.degree();
  for (long k = static_cast<long>(v.size()) - 1; k >= n; --k) {
    Rat c = v[k];
    if (c == 0)
      continue;
    for (long j = 0; j < n; ++j)
      v[k - n + j] -= c * Rat(f[j]);
    v[k] = 0;
  }
  v.resize(n, Rat(0));
  return v;
}

// An order in Q[x]/(f): rows of `mat`/denom are the basis elements in
// power-basis coordinates, mat kept in HNF with minimal denominator.
struct OrderBasis {
  MatInt mat;
  Int denom = 1;

  bool operator==(const OrderBasis &o) const
  {
    return mat == o.mat && denom == o.denom;
  }

  static OrderBasis equation_order(std::size_t n)
  {
    return {identity_int(n), 1};
  }

  void normalize()
  {
    Int g = denom;
    for (const auto &row : mat)
      for (const auto &c : row) {
        g = gcd_int(g, c);
        if (g == 1)
          return;
      }
    if (g > 1) {
      for (auto &row : mat)
        for (auto &c : row)
          c /= g;
      denom /= g;
    }
  }

  // index of Z[theta] in this order: denom^n / det(mat)
  Int index(std::size_t n) const
  {
    Int d = abs_int(det_int(mat));
    Int num = pow_int(denom, static_cast<unsigned long>(n));
    if (num % d != 0)
      throw std::logic_error("order index is not integral");
    return num / d;
  }

  MatRat to_rat() const
  {
    MatRat w = mat_to_rat(mat);
    for (auto &row : w)
      for (auto &c : row)
        c /= Rat(denom);
    return w;
  }
};

// Integer structure constants of the order: row (i*n+j) holds the O-basis
// coordinates of w_i * w_j.
inline MatInt multiplication_table(const OrderBasis &order,
                                   const IntPolynomial &f)
{
  std::size_t n = f.degree();
  MatRat w = order.to_rat();
  MatRat winv = mat_inverse(w);
  MatInt table(n * n, VecInt(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto prod = ratpoly_mod(ratpoly_mul(w[i], w[j]), f);
      VecRat coords = vec_mat_mul(prod, winv);
      for (std::size_t k = 0; k < n; ++k) {
        if (boost::multiprecision::denominator(coords[k]) != 1)
          throw std::logic_error("order is not closed under multiplication");
        table[i * n + j][k] = boost::multiprecision::numerator(coords[k]);
      }
    }
  return table;
}

inline VecInt table_mul(const MatInt &table, std::size_t n, const VecInt &x,
                        const VecInt &y, const Int &p)
{
  VecInt z(n, Int(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0)
        continue;
      Int c = x[i] * y[j] % p;
      const VecInt &row = table[i * n + j];
      for (std::size_t k = 0; k < n; ++k)
        z[k] += c * row[k];
    }
  }
  for (auto &c : z)
    c = mod_floor(c, p);
  return z;
}

// Dedekind criterion: is Z[theta] p-maximal?
inline bool dedekind_p_maximal(const IntPolynomial &f, const Int &p)
{
  ModPolynomial fbar = ModPolynomial::from_int_poly(f, p);
  auto fac = factor_mod_p(fbar);
  ModPolynomial gbar = ModPolynomial::one(p);
  for (const auto &[g, m] : fac.factors) {
    (void)m;
    gbar = gbar * g;
  }
  ModPolynomial hbar = fbar.make_monic() / gbar;
  IntPolynomial glift = gbar.lift();
  IntPolynomial hlift = hbar.lift();
  IntPolynomial t = (glift * hlift - f);
  std::vector<Int> tc(t.coeffs());
  for (auto &c : tc) {
    if (c % p != 0)
      throw std::logic_error("Dedekind: g*h != f mod p");
    c /= p;
  }
  ModPolynomial tbar(std::move(tc), p);
  ModPolynomial u = gcd(tbar, gcd(gbar, hbar));
  return u.degree() == 0;
}

// radical of O/pO as left-kernel of the iterated Frobenius on the order
inline MatInt p_radical(const MatInt &table, std::size_t n, const Int &p)
{
  // smallest p^m >= n
  Int pm = p;
  while (pm < Int(n))
    pm *= p;
  MatInt frob(n, VecInt(n));
  for (std::size_t i = 0; i < n; ++i) {
    VecInt base(n, Int(0));
    base[i] = 1;
    // square-and-multiply x^(pm)
    VecInt result(n, Int(0));
    bool result_set = false;
    VecInt sq = base;
    Int e = pm;
    while (e > 0) {
      if (boost::multiprecision::bit_test(e, 0)) {
        if (!result_set) {
          result = sq;
          result_set = true;
        } else {
          result = table_mul(table, n, result, sq, p);
        }
      }
      e >>= 1;
      if (e > 0)
        sq = table_mul(table, n, sq, sq, p);
    }
    frob[i] = result;
  }
  return left_kernel_mod_p(frob, p);
}

// One enlargement step O -> O' = {x in K : x * I_p(O) <= I_p(O)}.
// Returns false when O was already p-maximal (O' == O).
inline bool radical_idealizer_step(OrderBasis &order, const IntPolynomial &f,
                                   const Int &p)
{
  std::size_t n = f.degree();
  MatInt table = multiplication_table(order, f);
  MatInt kernel = p_radical(table, n, p);

  // ideal I = preimage of the radical: kernel lifts + p*O, in O-coordinates
  MatInt stack;
  for (auto &v : kernel)
    stack.push_back(v);
  for (std::size_t i = 0; i < n; ++i) {
    VecInt row(n, Int(0));
    row[i] = p;
    stack.push_back(std::move(row));
  }
  MatInt ideal = hnf_rows(std::move(stack));
  if (ideal.size() != n)
    throw std::logic_error("radical ideal is not full rank");

  MatRat ideal_inv = mat_inverse(mat_to_rat(ideal));

  // y in O with y*I <= p*I, as F_p-linear conditions on the coordinates of y
  MatInt conditions(n, VecInt(n * n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      VecInt ei(n, Int(0));
      ei[i] = 1;
      // w_i * b_j in O-coordinates (exact integers, no mod here)
      VecInt prod(n, Int(0));
      for (std::size_t a = 0; a < n; ++a) {
        if (ideal[j][a] == 0)
          continue;
        const VecInt &row = table[i * n + a];
        for (std::size_t k = 0; k < n; ++k)
          prod[k] += ideal[j][a] * row[k];
      }
      // coordinates w.r.t. the ideal basis
      VecRat pr(prod.begin(), prod.end());
      VecRat coords = vec_mat_mul(pr, ideal_inv);
      for (std::size_t k = 0; k < n; ++k) {
        if (boost::multiprecision::denominator(coords[k]) != 1)
          throw std::logic_error("product fell outside the radical ideal");
        conditions[i][j * n + k] =
            mod_floor(boost::multiprecision::numerator(coords[k]), p);
      }
    }
  }
  MatInt multipliers = left_kernel_mod_p(conditions, p);

  // O' = O + (1/p) * span(multipliers in O-coordinates)
  bool grew = false;
  for (const auto &y : multipliers) {
    bool in_o = true; // y/p already in O iff y == 0 mod p
    for (const auto &c : y)
      if (c % p != 0) {
        in_o = false;
        break;
      }
    if (!in_o) {
      grew = true;
      break;
    }
  }
  if (!grew)
    return false;

  MatInt stacked;
  for (const auto &row : order.mat) {
    VecInt r(row);
    for (auto &c : r)
      c *= p;
    stacked.push_back(std::move(r));
  }
  for (const auto &y : multipliers) {
    // (y in O-coords) * order.mat => power coords * denom; dividing by p
    VecInt r(n, Int(0));
    for (std::size_t t = 0; t < n; ++t) {
      if (y[t] == 0)
        continue;
      for (std::size_t k = 0; k < n; ++k)
        r[k] += y[t] * order.mat[t][k];
    }
    stacked.push_back(std::move(r));
  }
  OrderBasis next{hnf_rows(std::move(stacked)), order.denom * p};
  if (next.mat.size() != n)
    throw std::logic_error("enlarged order lost rank");
  next.normalize();
  if (next == order)
    return false;
  order = std::move(next);
  return true;
}

inline OrderBasis p_maximal_order(const IntPolynomial &f, const Int &p)
{
  std::size_t n = f.degree();
  OrderBasis order = OrderBasis::equation_order(n);
  if (dedekind_p_maximal(f, p))
    return order;
  while (radical_idealizer_step(order, f, p)) {
  }
  return order;
}

} // namespace detail

struct PrimeDecomposition {
  Int prime;
  FactorizationType type;
  bool wild = false; // ell divides some ramification index
};

// A number field Q[x]/(f) with its maximal order.
class NumberField {
public:
  // f monic irreducible (verified).
  explicit NumberField(const IntPolynomial &f) : poly_(f)
  {
    if (f.degree() < 1)
      throw std::invalid_argument("defining polynomial must be nonconstant");
    if (!f.is_monic())
      throw std::invalid_argument("defining polynomial must be monic");
    if (!is_irreducible_z(f))
      throw std::invalid_argument("defining polynomial is reducible");
    n_ = static_cast<std::size_t>(f.degree());
    poly_disc_ = poly_discriminant(f);

    // maximal order: combine p-maximal orders at every p with p^2 | disc(f)
    order_ = detail::OrderBasis::equation_order(n_);
    for (const auto &[p, e] : factor_integer(poly_disc_)) {
      if (e < 2)
        continue;
      detail::OrderBasis op = detail::p_maximal_order(f, p);
      if (op.denom == 1)
        continue;
      // module sum with the current order
      Int d = order_.denom * op.denom;
      MatInt stacked;
      for (const auto &row : order_.mat) {
        VecInt r(row);
        for (auto &c : r)
          c *= op.denom;
        stacked.push_back(std::move(r));
      }
      for (const auto &row : op.mat) {
        VecInt r(row);
        for (auto &c : r)
          c *= order_.denom;
        stacked.push_back(std::move(r));
      }
      order_ = detail::OrderBasis{hnf_rows(std::move(stacked)), d};
      order_.normalize();
    }
    index_ = order_.index(n_);
    field_disc_ = poly_disc_ / (index_ * index_);
    if (field_disc_ * index_ * index_ != poly_disc_)
      throw std::logic_error("disc(f) != index^2 * field_disc");
    real_embeddings_ = count_real_roots(f);
    // closure sanity for the multiplication table
    detail::multiplication_table(order_, poly_);
  }

  const IntPolynomial &defining_poly() const { return poly_; }
  std::size_t degree() const { return n_; }
  const Int &poly_disc() const { return poly_disc_; }
  const Int &field_disc() const { return field_disc_; }
  const Int &index() const { return index_; }
  unsigned signature_real() const { return real_embeddings_; }
  unsigned signature_complex_pairs() const
  {
    return (static_cast<unsigned>(n_) - real_embeddings_) / 2;
  }

  // rows = integral basis in power-basis coordinates
  MatRat integral_basis() const { return order_.to_rat(); }
  const MatInt &basis_numerators() const { return order_.mat; }
  const Int &basis_denominator() const { return order_.denom; }

  PrimeDecomposition decompose(const Int &ell) const
  {
    if (!is_prime(ell))
      throw std::invalid_argument("decompose: modulus must be prime");
    PrimeDecomposition out;
    out.prime = ell;
    out.type = (index_ % ell == 0) ? decompose_via_order(ell)
                                   : decompose_via_poly(ell);
    out.wild = false;
    for (const auto &p : out.type.pairs())
      if (Int(p.e) % ell == 0)
        out.wild = true;
    return out;
  }

  // Dedekind path (valid when ell does not divide the index); exposed
  // separately so tests can cross-check it against the order path.
  FactorizationType decompose_via_poly(const Int &ell) const
  {
    auto fac = factor_mod_p(ModPolynomial::from_int_poly(poly_, ell));
    std::vector<EfPair> pairs;
    for (const auto &[g, m] : fac.factors)
      pairs.push_back({static_cast<int>(g.degree()), static_cast<int>(m)});
    return FactorizationType{pairs};
  }

  // Local splitting of O/ellO: radical, idempotent splitting into local
  // pieces, then f = residue dimension and e = piece dimension / f.
  FactorizationType decompose_via_order(const Int &ell) const;

private:
  IntPolynomial poly_;
  std::size_t n_ = 0;
  Int poly_disc_, field_disc_, index_;
  unsigned real_embeddings_ = 0;
  detail::OrderBasis order_;
};

namespace detail {

// sub-F_ell-algebra of O/ellO given by ambient coordinates
struct LocalAlgebra {
  MatInt basis;  // k x n, echelon over F_ell
  VecInt one;    // ambient coordinates of the identity of this piece
};

struct AlgebraContext {
  const MatInt *table;
  std::size_t n;
  Int p;

  VecInt mul(const VecInt &x, const VecInt &y) const
  {
    return table_mul(*table, n, x, y, p);
  }

  // echelonize rows over F_p, dropping zero rows; row width is whatever the
  // caller passes (ambient vectors or quotient coordinates)
  MatInt echelon(MatInt rows) const
  {
    std::size_t width = rows.empty() ? 0 : rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
      std::size_t piv = r;
      while (piv < rows.size() && mod_floor(rows[piv][col], p) == 0)
        ++piv;
      if (piv == rows.size())
        continue;
      std::swap(rows[r], rows[piv]);
      Int inv = mod_inverse(rows[r][col], p);
      for (auto &c : rows[r])
        c = mod_floor(c * inv, p);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r)
          continue;
        Int f = mod_floor(rows[i][col], p);
        if (f == 0)
          continue;
        for (std::size_t j = 0; j < width; ++j)
          rows[i][j] = mod_floor(rows[i][j] - f * rows[r][j], p);
      }
      ++r;
    }
    rows.resize(r);
    return rows;
  }

  // coordinates of v in the row space of an echelon basis; v must lie in it
  VecInt coords_in(const MatInt &echelon_basis, VecInt v) const
  {
    VecInt coords(echelon_basis.size(), Int(0));
    for (std::size_t i = 0; i < echelon_basis.size(); ++i) {
      std::size_t lead = 0;
      while (lead < n && echelon_basis[i][lead] == 0)
        ++lead;
      Int c = mod_floor(v[lead], p);
      coords[i] = c;
      if (c == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        v[j] = mod_floor(v[j] - c * echelon_basis[i][j], p);
    }
    for (const auto &c : v)
      if (c != 0)
        throw std::logic_error("vector outside expected span");
    return coords;
  }
};

inline VecInt power_in_algebra(const AlgebraContext &ctx, VecInt base,
                               Int exp, const VecInt &one)
{
  VecInt result = one;
  while (exp > 0) {
    if (boost::multiprecision::bit_test(exp, 0))
      result = ctx.mul(result, base);
    exp >>= 1;
    if (exp > 0)
      base = ctx.mul(base, base);
  }
  return result;
}

// radical of the local algebra: kernel of the |basis|-fold Frobenius
inline MatInt local_radical(const AlgebraContext &ctx, const LocalAlgebra &a)
{
  std::size_t k = a.basis.size();
  Int pm = ctx.p;
  while (pm < Int(k))
    pm *= ctx.p;
  MatInt images(k, VecInt(ctx.n, Int(0)));
  for (std::size_t i = 0; i < k; ++i)
    images[i] = power_in_algebra(ctx, a.basis[i], pm, a.one);
  MatInt combos = left_kernel_mod_p(images, ctx.p);
  MatInt radical;
  for (const auto &c : combos) {
    VecInt v(ctx.n, Int(0));
    for (std::size_t i = 0; i < k; ++i) {
      if (c[i] == 0)
        continue;
      for (std::size_t j = 0; j < ctx.n; ++j)
        v[j] = mod_floor(v[j] + c[i] * a.basis[i][j], ctx.p);
    }
    radical.push_back(std::move(v));
  }
  return ctx.echelon(std::move(radical));
}

inline void split_local(const AlgebraContext &ctx, const LocalAlgebra &a,
                        std::vector<EfPair> &out)
{
  std::size_t dim = a.basis.size();
  MatInt radical = local_radical(ctx, a);
  std::size_t rdim = radical.size();
  std::size_t qdim = dim - rdim;

  // complement basis of the quotient: algebra vectors extending the radical
  MatInt ext = radical;
  MatInt complement;
  for (const auto &b : a.basis) {
    MatInt test = ext;
    test.push_back(b);
    MatInt ech = ctx.echelon(std::move(test));
    if (ech.size() > ext.size()) {
      ext = std::move(ech);
      complement.push_back(b);
    }
  }
  if (complement.size() != qdim)
    throw std::logic_error("quotient basis extraction failed");

  // reduce an ambient vector modulo the radical span
  auto reduce_mod_radical = [&](VecInt v) {
    for (const auto &r : radical) {
      std::size_t lead = 0;
      while (lead < ctx.n && r[lead] == 0)
        ++lead;
      Int c = mod_floor(v[lead], ctx.p);
      if (c == 0)
        continue;
      for (std::size_t j = 0; j < ctx.n; ++j)
        v[j] = mod_floor(v[j] - c * r[j], ctx.p);
    }
    return v;
  };
  // coordinates in the quotient w.r.t. the complement images
  MatInt qbasis; // echelon of reduced complement vectors, rows map 1:1
  std::vector<VecInt> qreduced;
  for (const auto &b : complement)
    qreduced.push_back(reduce_mod_radical(b));
  qbasis = ctx.echelon(qreduced);
  if (qbasis.size() != qdim)
    throw std::logic_error("quotient basis is degenerate");

  auto qcoords = [&](const VecInt &v) {
    return ctx.coords_in(qbasis, reduce_mod_radical(v));
  };

  // Frobenius fixed subalgebra of the (etale) quotient
  MatInt frob_minus_id(qdim, VecInt(qdim, Int(0)));
  for (std::size_t i = 0; i < qdim; ++i) {
    VecInt img = power_in_algebra(ctx, qbasis[i], ctx.p, a.one);
    VecInt c = qcoords(img);
    VecInt self = qcoords(qbasis[i]);
    for (std::size_t j = 0; j < qdim; ++j)
      frob_minus_id[i][j] = mod_floor(c[j] - self[j], ctx.p);
  }
  MatInt fixed = left_kernel_mod_p(frob_minus_id, ctx.p);
  std::size_t g = fixed.size();
  if (g == 0)
    throw std::logic_error("Frobenius-fixed space cannot be empty");
  if (g == 1) {
    // local piece: one prime; residue degree = quotient dimension
    if (qdim == 0 || dim % qdim != 0)
      throw std::logic_error("piece dimension not divisible by residue degree");
    out.push_back({static_cast<int>(qdim), static_cast<int>(dim / qdim)});
    return;
  }

  // pick a fixed vector independent of 1
  VecInt one_q = qcoords(a.one);
  VecInt v_ambient;
  {
    bool found = false;
    for (const auto &c : fixed) {
      MatInt t{one_q, c};
      if (ctx.echelon(t).size() == 2) {
        VecInt v(ctx.n, Int(0));
        for (std::size_t i = 0; i < qdim; ++i)
          for (std::size_t j = 0; j < ctx.n; ++j)
            v[j] = mod_floor(v[j] + c[i] * qbasis[i][j], ctx.p);
        v_ambient = std::move(v);
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("no splitting element found");
  }

  // minimal polynomial of v over F_p inside the quotient: collect quotient
  // coordinates of v^0, v^1, ... until the first linear dependence
  std::vector<VecInt> powers{one_q};
  std::vector<Int> minpoly_coeffs;
  VecInt current = a.one;
  while (true) {
    current = ctx.mul(current, v_ambient);
    VecInt cq = qcoords(current);
    MatInt rows(powers.begin(), powers.end());
    rows.push_back(cq);
    if (ctx.echelon(rows).size() == powers.size() + 1) {
      powers.push_back(cq);
      if (powers.size() > qdim + 1)
        throw std::logic_error("minimal polynomial search overflow");
      continue;
    }
    // dependence: cq = sum x_i powers[i]; a left-kernel vector of
    // [powers; -cq] with last entry 1 encodes the relation
    std::size_t m = powers.size();
    MatInt stacked(powers.begin(), powers.end());
    VecInt neg(cq);
    for (auto &c : neg)
      c = mod_floor(-c, ctx.p);
    stacked.push_back(neg);
    VecInt sol;
    for (const auto &kv : left_kernel_mod_p(stacked, ctx.p))
      if (kv[m] != 0) {
        Int inv = mod_inverse(kv[m], ctx.p);
        sol.assign(kv.begin(), kv.end() - 1);
        for (auto &c : sol)
          c = mod_floor(c * inv, ctx.p);
        break;
      }
    if (sol.empty())
      throw std::logic_error("minimal polynomial solve failed");
    minpoly_coeffs.assign(m + 1, Int(0));
    minpoly_coeffs[m] = 1;
    for (std::size_t i = 0; i < m; ++i)
      minpoly_coeffs[i] = mod_floor(-sol[i], ctx.p);
    break;
  }

  ModPolynomial minpoly(minpoly_coeffs, ctx.p);
  auto roots_fac = factor_mod_p(minpoly);
  std::vector<Int> roots;
  for (const auto &[fct, m] : roots_fac.factors) {
    if (fct.degree() != 1 || m != 1)
      throw std::logic_error("splitting minimal polynomial is not split");
    roots.push_back(mod_floor(-fct[0], ctx.p));
  }
  if (roots.size() < 2)
    throw std::logic_error("splitting element has a single eigenvalue");

  // Lagrange idempotent for the first eigenvalue, computed in the quotient
  // via ambient arithmetic, then lifted to an honest idempotent of a
  Int lambda0 = roots[0];
  VecInt e = a.one;
  Int scale = 1;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    VecInt shifted(v_ambient);
    for (std::size_t j = 0; j < ctx.n; ++j)
      shifted[j] = mod_floor(v_ambient[j] - roots[i] * a.one[j], ctx.p);
    e = ctx.mul(e, shifted);
    scale = scale * mod_floor(lambda0 - roots[i], ctx.p) % ctx.p;
  }
  {
    Int inv = mod_inverse(scale, ctx.p);
    for (auto &c : e)
      c = mod_floor(c * inv, ctx.p);
  }
  // Newton iteration e <- 3e^2 - 2e^3 until idempotent in a
  for (int iter = 0;; ++iter) {
    VecInt e2 = ctx.mul(e, e);
    if (e2 == e)
      break;
    if (iter > 64)
      throw std::logic_error("idempotent lifting did not converge");
    VecInt e3 = ctx.mul(e2, e);
    for (std::size_t j = 0; j < ctx.n; ++j)
      e[j] = mod_floor(3 * e2[j] - 2 * e3[j], ctx.p);
  }

  // split a into e*a and (1-e)*a
  VecInt onem(a.one);
  for (std::size_t j = 0; j < ctx.n; ++j)
    onem[j] = mod_floor(onem[j] - e[j], ctx.p);
  auto make_piece = [&](const VecInt &idem) {
    MatInt rows;
    for (const auto &b : a.basis)
      rows.push_back(ctx.mul(idem, b));
    LocalAlgebra piece;
    piece.basis = ctx.echelon(std::move(rows));
    piece.one = idem;
    return piece;
  };
  LocalAlgebra a1 = make_piece(e);
  LocalAlgebra a2 = make_piece(onem);
  if (a1.basis.empty() || a2.basis.empty() ||
      a1.basis.size() + a2.basis.size() != dim)
    throw std::logic_error("idempotent split does not partition the algebra");
  split_local(ctx, a1, out);
  split_local(ctx, a2, out);
}

} // namespace detail

inline FactorizationType NumberField::decompose_via_order(const Int &ell) const
{
  MatInt table = detail::multiplication_table(order_, poly_);
  for (auto &row : table)
    for (auto &c : row)
      c = mod_floor(c, ell);
  detail::AlgebraContext ctx{&table, n_, ell};

  // ambient coordinates of 1 in the order basis
  MatRat winv = mat_inverse(order_.to_rat());
  VecRat one_power(n_, Rat(0));
  one_power[0] = 1;
  VecRat onec = vec_mat_mul(one_power, winv);
  VecInt one(n_, Int(0));
  for (std::size_t i = 0; i < n_; ++i) {
    if (boost::multiprecision::denominator(onec[i]) != 1)
      throw std::logic_error("unit of the order has fractional coordinates");
    one[i] = mod_floor(boost::multiprecision::numerator(onec[i]), ell);
  }

  detail::LocalAlgebra whole;
  whole.basis = identity_int(n_);
  whole.one = one;
  std::vector<EfPair> pairs;
  detail::split_local(ctx, whole, pairs);
  FactorizationType type{pairs};
  if (type.degree() != static_cast<int>(n_))
    throw std::logic_error("local splitting degrees do not sum to n");
  return type;
}

inline NumberField field_from_poly(const IntPolynomial &f)
{
  return NumberField(f);
}

} // namespace aeq

#endif
