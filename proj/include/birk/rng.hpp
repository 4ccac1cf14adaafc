#pragma once

#include <cstdint>
#include <random>

namespace birk {

/// Seeded deterministic random source.
///
/// Engine: std::mt19937_64 (the standard pins its output sequence, so draws
/// are identical on every platform). The standard library *distributions*
/// are implementation-defined, so the mappings to bounded integers and unit
/// doubles are done here instead.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased integer in [0, bound) by rejection sampling. bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    /// Double in [0, 1) using the top 53 bits.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Double in [lo, lo + (hi-lo)), i.e. uniform on [lo, hi).
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace birk
