#ifndef AEQ_TIMEOUT_HPP
#define AEQ_TIMEOUT_HPP

#include <chrono>
#include <optional>
#include <stdexcept>

namespace aeq {

struct TimeoutExpired : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Wall-clock budget checked at coarse points inside long computations.
class Deadline {
public:
  Deadline() = default;

  static Deadline after_seconds(double s)
  {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(s));
    return d;
  }

  bool expired() const
  {
    return at_ && std::chrono::steady_clock::now() > *at_;
  }

  void check(const char *where) const
  {
    if (expired())
      throw TimeoutExpired(where);
  }

private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

} // namespace aeq

#endif
