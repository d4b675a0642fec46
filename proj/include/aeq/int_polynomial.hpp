#ifndef AEQ_INT_POLYNOMIAL_HPP
#define AEQ_INT_POLYNOMIAL_HPP

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "aeq/integers.hpp"

namespace aeq {

// Dense integer polynomial, coefficients in ascending degree order. The zero
// polynomial is the empty list; otherwise the leading coefficient is nonzero.
class IntPolynomial {
public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs))
  {
    trim();
  }

  IntPolynomial(std::initializer_list<Int> coeffs)
      : coeffs_(coeffs.begin(), coeffs.end())
  {
    trim();
  }

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(Int c) { return IntPolynomial({std::move(c)}); }

  // c * x^k
  static IntPolynomial monomial(Int c, std::size_t k)
  {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = std::move(c);
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }

  // Degree of the zero polynomial is -1 by convention here.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<Int> &coeffs() const { return coeffs_; }

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

  bool operator==(const IntPolynomial &o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPolynomial &o) const { return coeffs_ != o.coeffs_; }

  // Ordering used for canonical factor lists: degree first, then the
  // coefficient vector from the constant term up.
  bool operator<(const IntPolynomial &o) const
  {
    if (coeffs_.size() != o.coeffs_.size())
      return coeffs_.size() < o.coeffs_.size();
    return coeffs_ < o.coeffs_;
  }

  IntPolynomial operator-() const
  {
    std::vector<Int> v(coeffs_);
    for (auto &c : v)
      c = -c;
    return IntPolynomial(std::move(v));
  }

  IntPolynomial operator+(const IntPolynomial &o) const
  {
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      v[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      v[i] += o.coeffs_[i];
    return IntPolynomial(std::move(v));
  }

  IntPolynomial operator-(const IntPolynomial &o) const
  {
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      v[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      v[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(v));
  }

  IntPolynomial operator*(const IntPolynomial &o) const
  {
    if (is_zero() || o.is_zero())
      return IntPolynomial();
    std::vector<Int> v(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0)
        continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
  }

  IntPolynomial operator*(const Int &c) const
  {
    if (c == 0)
      return IntPolynomial();
    std::vector<Int> v(coeffs_);
    for (auto &x : v)
      x *= c;
    return IntPolynomial(std::move(v));
  }

  IntPolynomial derivative() const
  {
    if (coeffs_.size() <= 1)
      return IntPolynomial();
    std::vector<Int> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      v[i - 1] = coeffs_[i] * Int(i);
    return IntPolynomial(std::move(v));
  }

  Int eval(const Int &x) const
  {
    Int r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      r = r * x + coeffs_[i];
    return r;
  }

  Rat eval(const Rat &x) const
  {
    Rat r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      r = r * x + Rat(coeffs_[i]);
    return r;
  }

  // f(x + a)
  IntPolynomial shift(const Int &a) const
  {
    IntPolynomial result;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      result = result * IntPolynomial({a, 1});
      result = result + constant(coeffs_[i]);
    }
    return result;
  }

  // f(c*x)
  IntPolynomial scale_arg(const Int &c) const
  {
    std::vector<Int> v(coeffs_);
    Int p = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] *= p;
      p *= c;
    }
    return IntPolynomial(std::move(v));
  }

  // gcd of all coefficients, nonnegative; 0 for the zero polynomial
  Int content() const
  {
    Int g = 0;
    for (const auto &c : coeffs_) {
      g = gcd_int(g, c);
      if (g == 1)
        break;
    }
    return g;
  }

  // Primitive part with positive leading coefficient; sign absorbed into the
  // returned unit so that unit * pp == *this.
  IntPolynomial primitive_part(Int *unit = nullptr) const
  {
    if (is_zero()) {
      if (unit)
        *unit = 0;
      return IntPolynomial();
    }
    Int c = content();
    if (coeffs_.back() < 0)
      c = -c;
    if (unit)
      *unit = c;
    std::vector<Int> v(coeffs_);
    for (auto &x : v)
      x /= c;
    return IntPolynomial(std::move(v));
  }

  // Exact division; throws if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial &d) const
  {
    IntPolynomial q, r;
    if (!try_divide(d, q, r) || !r.is_zero())
      throw std::domain_error("divide_exact: not divisible");
    return q;
  }

  // Division over Q restricted to integer results: succeeds iff every
  // quotient coefficient stays integral. Remainder returned alongside.
  bool try_divide(const IntPolynomial &d, IntPolynomial &q,
                  IntPolynomial &r) const
  {
    if (d.is_zero())
      throw std::domain_error("division by zero polynomial");
    std::vector<Int> rem(coeffs_);
    long dd = d.degree();
    long rd = static_cast<long>(rem.size()) - 1;
    if (rd < dd) {
      q = IntPolynomial();
      r = *this;
      return true;
    }
    std::vector<Int> quot(rd - dd + 1, Int(0));
    const Int &lc = d.leading();
    for (long k = rd; k >= dd; --k) {
      if (rem[k] == 0)
        continue;
      if (rem[k] % lc != 0)
        return false;
      Int c = rem[k] / lc;
      quot[k - dd] = c;
      for (long j = 0; j <= dd; ++j)
        rem[k - dd + j] -= c * d.coeffs()[j];
    }
    q = IntPolynomial(std::move(quot));
    r = IntPolynomial(std::move(rem));
    return true;
  }

  // Pseudo-remainder: lc(d)^(deg - deg d + 1) * this = q*d + prem.
  IntPolynomial pseudo_rem(const IntPolynomial &d) const
  {
    if (d.is_zero())
      throw std::domain_error("pseudo_rem by zero");
    std::vector<Int> rem(coeffs_);
    long dd = d.degree();
    const Int &lc = d.leading();
    long rd = static_cast<long>(rem.size()) - 1;
    if (rd < dd)
      return *this;
    for (long k = rd; k >= dd; --k) {
      Int c = rem[k];
      for (auto &x : rem)
        x *= lc;
      for (long j = 0; j <= dd; ++j)
        rem[k - dd + j] -= c * d.coeffs()[j];
      rem[k] = 0;
    }
    return IntPolynomial(std::move(rem));
  }

  // Serialized form used everywhere: [c0,c1,...,cn] in decimal.
  std::string to_string() const
  {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i)
        os << ',';
      os << coeffs_[i];
    }
    os << ']';
    return os.str();
  }

  static IntPolynomial parse(const std::string &s)
  {
    std::size_t a = s.find('[');
    std::size_t b = s.rfind(']');
    if (a == std::string::npos || b == std::string::npos || b < a)
      throw std::invalid_argument("polynomial syntax: expected [c0,c1,...]");
    std::vector<Int> v;
    std::string body = s.substr(a + 1, b - a - 1);
    std::string tok;
    std::istringstream is(body);
    while (std::getline(is, tok, ',')) {
      std::size_t begin = tok.find_first_not_of(" \t");
      std::size_t end = tok.find_last_not_of(" \t");
      if (begin == std::string::npos)
        throw std::invalid_argument("polynomial syntax: empty coefficient");
      v.emplace_back(Int(tok.substr(begin, end - begin + 1)));
    }
    return IntPolynomial(std::move(v));
  }

  friend std::ostream &operator<<(std::ostream &os, const IntPolynomial &p)
  {
    return os << p.to_string();
  }

private:
  void trim()
  {
    while (!coeffs_.empty() && coeffs_.back() == 0)
      coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

inline Int max_abs_coeff(const IntPolynomial &f)
{
  Int m = 0;
  for (const auto &c : f.coeffs())
    m = std::max(m, abs_int(c));
  return m;
}

// ceil(sqrt(sum c_i^2)) — used in factor bounds
inline Int l2_norm_ceil(const IntPolynomial &f)
{
  Int s = 0;
  for (const auto &c : f.coeffs())
    s += c * c;
  Int r = isqrt_int(s);
  if (r * r < s)
    ++r;
  return r;
}

} // namespace aeq

#endif
