#ifndef SCON_DEADLINE_HPP
#define SCON_DEADLINE_HPP

#include <chrono>
#include <optional>
#include <stdexcept>

namespace scon {

struct TimeoutError : std::runtime_error {
  TimeoutError() : std::runtime_error("computation exceeded its time budget") {}
};

/// Cooperative time budget. Long-running loops call poll(); an expired
/// deadline raises TimeoutError. Clock reads are throttled.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(std::chrono::milliseconds budget) {
    Deadline d;
    d.expiry_ = std::chrono::steady_clock::now() + budget;
    return d;
  }

  void poll() const {
    if (!expiry_) return;
    if (++ticks_ % 1024 != 0) return;
    if (std::chrono::steady_clock::now() >= *expiry_) throw TimeoutError();
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> expiry_;
  mutable unsigned ticks_ = 0;
};

}  // namespace scon

#endif
