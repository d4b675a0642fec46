#ifndef AEQ_LINALG_HPP
#define AEQ_LINALG_HPP

#include <stdexcept>
#include <vector>

#include "aeq/integers.hpp"

namespace aeq {

using VecInt = std::vector<Int>;
using MatInt = std::vector<VecInt>;
using VecRat = std::vector<Rat>;
using MatRat = std::vector<VecRat>;

inline MatInt identity_int(std::size_t n)
{
  MatInt m(n, VecInt(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

// Row Hermite normal form: upper echelon, positive pivots, entries above a
// pivot reduced into [0, pivot). Zero rows dropped.
inline MatInt hnf_rows(MatInt m)
{
  if (m.empty())
    return m;
  std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    // clear the column below `row` with Euclidean row operations
    for (std::size_t i = row + 1; i < m.size(); ++i) {
      while (m[i][col] != 0) {
        if (m[row][col] == 0) {
          std::swap(m[row], m[i]);
          continue;
        }
        Int q = m[i][col] / m[row][col];
        if (q != 0)
          for (std::size_t j = 0; j < cols; ++j)
            m[i][j] -= q * m[row][j];
        if (m[i][col] != 0)
          std::swap(m[row], m[i]);
      }
    }
    if (m[row][col] == 0)
      continue;
    if (m[row][col] < 0)
      for (std::size_t j = 0; j < cols; ++j)
        m[row][j] = -m[row][j];
    for (std::size_t i = 0; i < row; ++i) {
      Int q = m[i][col] / m[row][col];
      if (m[i][col] % m[row][col] < 0)
        --q; // floor division for the reduction step
      if (q != 0)
        for (std::size_t j = 0; j < cols; ++j)
          m[i][j] -= q * m[row][j];
    }
    ++row;
  }
  m.resize(row);
  return m;
}

inline Int det_int(MatInt m)
{
  // fraction-free Bareiss
  std::size_t n = m.size();
  if (n == 0)
    return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0)
        ++piv;
      if (piv == n)
        return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return Int(sign) * m[n - 1][n - 1];
}

// Basis of the left kernel {x : x * M = 0} over F_p. Eliminates on rows of M
// while tracking an identity block; rows that reduce to zero yield the kernel.
inline MatInt left_kernel_mod_p(const MatInt &m, const Int &p)
{
  std::size_t rows = m.size();
  if (rows == 0)
    return {};
  std::size_t cols = m[0].size();
  MatInt kernel;
  // augmented rows [ m[i] mod p | e_i ]: row operations are tracked in the
  // identity block, rows whose left part vanishes are kernel combinations
  MatInt b(rows, VecInt(cols + rows, Int(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j)
      b[i][j] = mod_floor(m[i][j], p);
    b[i][cols + i] = 1;
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && b[piv][col] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(b[rank], b[piv]);
    Int inv = mod_inverse(b[rank][col], p);
    for (std::size_t j = 0; j < cols + rows; ++j)
      b[rank][j] = b[rank][j] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || b[i][col] == 0)
        continue;
      Int f = b[i][col];
      for (std::size_t j = 0; j < cols + rows; ++j)
        b[i][j] = mod_floor(b[i][j] - f * b[rank][j], p);
    }
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    kernel.emplace_back(b[i].begin() + cols, b[i].end());
  return kernel;
}

inline MatRat mat_to_rat(const MatInt &m)
{
  MatRat r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    r[i].assign(m[i].begin(), m[i].end());
  return r;
}

inline MatRat mat_mul(const MatRat &a, const MatRat &b)
{
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  MatRat c(n, VecRat(m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0)
        continue;
      for (std::size_t j = 0; j < m; ++j)
        c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

inline VecRat vec_mat_mul(const VecRat &v, const MatRat &m)
{
  std::size_t k = m.size(), cols = m.empty() ? 0 : m[0].size();
  VecRat r(cols, Rat(0));
  for (std::size_t t = 0; t < k; ++t) {
    if (v[t] == 0)
      continue;
    for (std::size_t j = 0; j < cols; ++j)
      r[j] += v[t] * m[t][j];
  }
  return r;
}

inline MatRat mat_inverse(MatRat a)
{
  std::size_t n = a.size();
  MatRat inv(n, VecRat(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0)
      ++piv;
    if (piv == n)
      throw std::domain_error("mat_inverse: singular matrix");
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    Rat d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0)
        continue;
      Rat f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline Rat det_rat(MatRat a)
{
  std::size_t n = a.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0)
      ++piv;
    if (piv == n)
      return 0;
    if (piv != col) {
      std::swap(a[col], a[piv]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0)
        continue;
      Rat f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j)
        a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

} // namespace aeq

#endif
