#pragma once

#include <chrono>
#include <limits>

namespace dynls {

using Clock = std::chrono::steady_clock;

// Wall-clock cutoff shared by every stage of one search.
class Deadline {
 public:
  Deadline() : end_(Clock::time_point::max()) {}
  explicit Deadline(Clock::time_point end) : end_(end) {}

  static Deadline never() { return {}; }
  static Deadline after(double seconds) {
    if (!(seconds < 1e9)) return never();
    return Deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(seconds)));
  }

  bool expired() const { return end_ != Clock::time_point::max() && Clock::now() >= end_; }
  Clock::time_point end() const { return end_; }

 private:
  Clock::time_point end_;
};

inline double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace dynls
