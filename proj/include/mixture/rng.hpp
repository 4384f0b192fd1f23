#pragma once

#include <cstdint>
#include <random>

namespace mixture {

// deterministic stream shared by suites and the CLI; the bit-to-double map is
// pinned here so reports are byte-identical across platforms for a given seed
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1)
    double uniform() {
        const std::uint64_t x = eng_();
        return static_cast<double>(x >> 11) * 0x1.0p-53;
    }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

} // namespace mixture
