#ifndef AEQ_FACTORIZATION_TYPE_HPP
#define AEQ_FACTORIZATION_TYPE_HPP

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace aeq {

// Residue degrees of the primes above ℓ, ascending.
class ArithmeticType {
public:
  ArithmeticType() = default;

  explicit ArithmeticType(std::vector<int> fs) : fs_(std::move(fs))
  {
    for (int f : fs_)
      if (f < 1)
        throw std::invalid_argument("residue degrees must be positive");
    std::sort(fs_.begin(), fs_.end());
  }

  ArithmeticType(std::initializer_list<int> fs)
      : ArithmeticType(std::vector<int>(fs))
  {
  }

  const std::vector<int> &degrees() const { return fs_; }
  std::size_t length() const { return fs_.size(); }

  int sum() const
  {
    int s = 0;
    for (int f : fs_)
      s += f;
    return s;
  }

  // number of residue degrees equal to 1 (the a_ell count)
  int ones() const
  {
    int n = 0;
    for (int f : fs_)
      n += (f == 1);
    return n;
  }

  bool operator==(const ArithmeticType &o) const { return fs_ == o.fs_; }
  bool operator!=(const ArithmeticType &o) const { return fs_ != o.fs_; }
  bool operator<(const ArithmeticType &o) const { return fs_ < o.fs_; }

  std::string to_string() const
  {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < fs_.size(); ++i) {
      if (i)
        os << ',';
      os << fs_[i];
    }
    os << ')';
    return os.str();
  }

  friend std::ostream &operator<<(std::ostream &os, const ArithmeticType &t)
  {
    return os << t.to_string();
  }

private:
  std::vector<int> fs_;
};

// One (residue degree, ramification index) pair of a prime factorization.
struct EfPair {
  int f = 1;
  int e = 1;
  bool operator==(const EfPair &o) const { return f == o.f && e == o.e; }
  bool operator<(const EfPair &o) const
  {
    return f != o.f ? f < o.f : e < o.e;
  }
};

// Multiset of (f, e) pairs with Σ f·e equal to the ambient degree. Also used
// for group-side splitting patterns coming from (decomposition, inertia)
// pairs, where the bookkeeping is identical.
class FactorizationType {
public:
  FactorizationType() = default;

  explicit FactorizationType(std::vector<EfPair> pairs)
      : pairs_(std::move(pairs))
  {
    for (const auto &p : pairs_)
      if (p.f < 1 || p.e < 1)
        throw std::invalid_argument("invalid (f,e) pair");
    std::sort(pairs_.begin(), pairs_.end());
  }

  FactorizationType(std::initializer_list<EfPair> pairs)
      : FactorizationType(std::vector<EfPair>(pairs))
  {
  }

  const std::vector<EfPair> &pairs() const { return pairs_; }

  int degree() const
  {
    int n = 0;
    for (const auto &p : pairs_)
      n += p.f * p.e;
    return n;
  }

  int ramification_sum() const
  {
    int s = 0;
    for (const auto &p : pairs_)
      s += p.e;
    return s;
  }

  ArithmeticType arithmetic_type() const
  {
    std::vector<int> fs;
    fs.reserve(pairs_.size());
    for (const auto &p : pairs_)
      fs.push_back(p.f);
    return ArithmeticType(std::move(fs));
  }

  bool is_unramified() const
  {
    for (const auto &p : pairs_)
      if (p.e != 1)
        return false;
    return true;
  }

  bool wild_at(int ell) const
  {
    for (const auto &p : pairs_)
      if (p.e % ell == 0)
        return true;
    return false;
  }

  bool operator==(const FactorizationType &o) const
  {
    return pairs_ == o.pairs_;
  }
  bool operator!=(const FactorizationType &o) const
  {
    return pairs_ != o.pairs_;
  }
  bool operator<(const FactorizationType &o) const
  {
    return pairs_ < o.pairs_;
  }

  // printed in the two-tuple form {(f1,...,fg),(e1,...,eg)} with pairs in
  // canonical (f,e) order
  std::string to_string() const
  {
    std::ostringstream os;
    os << "{(";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (i)
        os << ',';
      os << pairs_[i].f;
    }
    os << "),(";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (i)
        os << ',';
      os << pairs_[i].e;
    }
    os << ")}";
    return os.str();
  }

  friend std::ostream &operator<<(std::ostream &os,
                                  const FactorizationType &t)
  {
    return os << t.to_string();
  }

private:
  std::vector<EfPair> pairs_;
};

// Group-side alias: the multiset of (e, f) data attached to one prime of the
// base field under a (decomposition, inertia) pair.
using SplittingPattern = FactorizationType;

} // namespace aeq

#endif
