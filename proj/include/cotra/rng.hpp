#pragma once

#include <cstdint>

#include "cotra/field.hpp"

namespace cotra {

// splitmix64: small, platform-independent, reproducible.  Used for every
// seeded random choice in the engine so that fixed-seed runs are stable.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed) {}

    uint64_t next() {
        s_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = s_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).
    long below(long n) { return n <= 1 ? 0 : static_cast<long>(next() % static_cast<uint64_t>(n)); }

    // Small scalar; over Q numerators in [-height, height], denominator 1.
    Scalar scalar(const Field& f, long height = 3) {
        if (f.kind() == FieldKind::PrimeField) return f.from_long(below(f.characteristic()));
        return f.from_long(below(2 * height + 1) - height);
    }

    Scalar nonzero_scalar(const Field& f, long height = 3) {
        for (;;) {
            Scalar s = scalar(f, height);
            if (!f.is_zero(s)) return s;
        }
    }

private:
    uint64_t s_;
};

}  // namespace cotra
