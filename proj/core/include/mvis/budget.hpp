#pragma once

#include <chrono>
#include <cstdint>

namespace mvis {

// Wall-clock deadline shared by the exact solvers. Solvers poll exhausted()
// periodically and unwind with a flagged partial result when it trips.
class Budget {
  public:
    static Budget unlimited() { return Budget(); }
    static Budget from_ms(std::int64_t ms) {
        Budget b;
        b.limited_ = true;
        b.deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
        return b;
    }

    bool limited() const { return limited_; }
    bool exhausted() const {
        return limited_ && std::chrono::steady_clock::now() >= deadline_;
    }

  private:
    Budget() = default;

    bool limited_ = false;
    std::chrono::steady_clock::time_point deadline_{};
};

}  // namespace mvis
