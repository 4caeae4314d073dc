#pragma once

#include <cstdint>
#include <random>

namespace mvis {

// mt19937_64 with explicit draw helpers. The standard distributions are
// implementation-defined, so the draws are written out here; the engine
// itself is fully specified, which keeps seeded streams portable.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    int uniform_int(int lo, int hi);  // inclusive bounds, rejection sampled
    double uniform01();               // 53-bit mantissa in [0, 1)
    bool bernoulli(double p) { return uniform01() < p; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace mvis
