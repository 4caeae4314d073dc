#include "mvis/rng.hpp"

#include <stdexcept>

namespace mvis {

int Rng::uniform_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    // Rejection keeps the draw unbiased without implementation-defined
    // distribution internals.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return lo + static_cast<int>(r % span);
}

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace mvis
