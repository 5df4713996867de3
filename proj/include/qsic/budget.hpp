#pragma once

#include <chrono>
#include <string>

#include "qsic/error.hpp"

namespace qsic {

using Duration = std::chrono::duration<double>;
using Clock = std::chrono::steady_clock;

/// Cooperative deadline; solvers poll `expired()` every few hundred nodes.
class Deadline {
 public:
  explicit Deadline(Duration budget) : start_(Clock::now()), budget_(budget) {
    require(budget.count() > 0, "budget must be positive, got " + std::to_string(budget.count()) + " s");
  }

  bool expired() const { return Clock::now() - start_ >= budget_; }
  Duration elapsed() const { return Clock::now() - start_; }
  Duration remaining() const {
    Duration left = budget_ - elapsed();
    return left.count() > 0 ? left : Duration(0);
  }

 private:
  Clock::time_point start_;
  Duration budget_;
};

}  // namespace qsic
