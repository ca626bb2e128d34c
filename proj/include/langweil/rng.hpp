#pragma once

#include <cstdint>

namespace lw {

/// Deterministic splittable generator (splitmix64 core).  Sample streams are
/// part of the test fixtures: reruns with the same seed are bit-identical,
/// and parallel workers derive independent streams via split().
class SplitRng {
  public:
    explicit SplitRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Unbiased draw in [0, n) by rejection.
    std::uint64_t next_below(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    /// Child stream for worker `index`; independent of draws on the parent.
    SplitRng split(std::uint64_t index) const {
        SplitRng child(state_ ^ (0x2545f4914f6cdd1dULL * (index + 1)));
        child.next();
        return child;
    }

  private:
    std::uint64_t state_;
};

}  // namespace lw
