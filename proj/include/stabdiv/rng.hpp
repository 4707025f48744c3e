// Deterministic random streams. Independent sub-streams are derived from a
// (seed, tag) pair so parallel sweeps stay reproducible regardless of the
// execution schedule.
#pragma once

#include <cstdint>

namespace stabdiv {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

    static Rng derived(std::uint64_t seed, std::uint64_t tag) {
        Rng r(seed);
        r.state_ ^= 0xbf58476d1ce4e5b9ULL * (tag + 1);
        r.next_u64();
        r.next_u64();
        return r;
    }

    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi], inclusive
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    // uniform in [0, 1)
    double unit_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [-1, 1)
    double sym_real() { return 2.0 * unit_real() - 1.0; }

  private:
    std::uint64_t state_;
};

}  // namespace stabdiv
