#ifndef AEQ_PERM_HPP
#define AEQ_PERM_HPP

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace aeq {

// Permutation of {0..n-1} stored as the image list.
class Perm {
public:
  Perm() = default;

  explicit Perm(std::size_t degree) : images_(degree)
  {
    std::iota(images_.begin(), images_.end(), 0);
  }

  explicit Perm(std::vector<int> images) : images_(std::move(images))
  {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
        throw std::invalid_argument("Perm: image list is not a bijection");
      seen[v] = true;
    }
  }

  static Perm identity(std::size_t degree) { return Perm(degree); }

  // from disjoint cycles, e.g. {{0,1,2},{3,4}}
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<int>> &cycles)
  {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    for (const auto &cyc : cycles)
      for (std::size_t i = 0; i < cyc.size(); ++i)
        im[cyc[i]] = cyc[(i + 1) % cyc.size()];
    return Perm(std::move(im));
  }

  std::size_t degree() const { return images_.size(); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int> &images() const { return images_; }

  bool is_identity() const
  {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i))
        return false;
    return true;
  }

  // (a * b)(x) = a(b(x))
  Perm operator*(const Perm &b) const
  {
    std::vector<int> v(images_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = images_[b.images_[i]];
    Perm r;
    r.images_ = std::move(v);
    return r;
  }

  Perm inverse() const
  {
    std::vector<int> v(images_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[images_[i]] = static_cast<int>(i);
    Perm r;
    r.images_ = std::move(v);
    return r;
  }

  // g * this * g^-1
  Perm conjugated_by(const Perm &g) const
  {
    return g * (*this) * g.inverse();
  }

  std::vector<int> cycle_type() const
  {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> type;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i])
        continue;
      int len = 0;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = images_[j];
        ++len;
      }
      type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
  }

  unsigned order() const
  {
    unsigned result = 1;
    for (int len : cycle_type())
      result = std::lcm(result, static_cast<unsigned>(len));
    return result;
  }

  bool operator==(const Perm &o) const { return images_ == o.images_; }
  bool operator!=(const Perm &o) const { return images_ != o.images_; }
  bool operator<(const Perm &o) const { return images_ < o.images_; }

  // serialized as the image list [2,0,1,...]
  std::string to_string() const
  {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i)
        os << ',';
      os << images_[i];
    }
    os << ']';
    return os.str();
  }

  friend std::ostream &operator<<(std::ostream &os, const Perm &p)
  {
    return os << p.to_string();
  }

private:
  std::vector<int> images_;
};

} // namespace aeq

#endif
