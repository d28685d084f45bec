#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cmkr {

// Deterministic random source used by the gallery sampler and the synthetic
// generator. The layering is fixed so the same seed yields the same stream
// everywhere:
//   engine     mt19937_64 (output sequence pinned by the C++ standard)
//   uniform01  top 53 bits of one engine draw, in [0, 1)
//   gaussian   Box-Muller on two uniform01 draws, second value cached
//   bounded(n) unbiased rejection sampling, then modulo
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n). n must be nonzero.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
        const double u2 = uniform01();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        const double ang = 2.0 * 3.14159265358979323846 * u2;
        spare_ = mag * std::sin(ang);
        has_spare_ = true;
        return mag * std::cos(ang);
    }

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace cmkr
