#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flipper {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Counts work in machine words touched. Exceeding the limit throws.
class StepBudget {
 public:
  explicit StepBudget(std::size_t limit) : limit_(limit) {}

  void charge(std::size_t steps) {
    used_ += steps;
    if (used_ > limit_) throw BudgetExceeded("step budget of " + std::to_string(limit_) + " exceeded");
  }

  std::size_t used() const noexcept { return used_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

}  // namespace flipper
