#pragma once

#include <cstdint>
#include <string>

namespace satgame {

// splitmix64; explicit so that seeded runs are reproducible across
// platforms and standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0. Rejection-free multiply-shift would bias by
    // < 2^-53 here; plain modulo keeps replay simple and is unbiased enough
    // for the statistical audits (n is tiny next to 2^64).
    uint64_t below(uint64_t n) { return next() % n; }

    bool chance_one_in(uint64_t n) { return below(n) == 0; }

    std::string state_key() const { return std::to_string(state_); }

private:
    uint64_t state_;
};

}  // namespace satgame
