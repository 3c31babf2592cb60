#pragma once

#include <cstdint>

#include "cmpn/matrix.hpp"

namespace cmpn {

/// 64-bit linear congruential generator,
///   state <- state * 6364136223846793005 + 1442695040888963407,
/// output = top 32 bits. Fixed here so seeded runs are reproducible across
/// platforms and documented for reimplementation.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint32_t next()
    {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state_ >> 32);
    }

    /// Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform in [lo, hi], inclusive.
    long in_range(long lo, long hi);

private:
    std::uint64_t state_;
};

/// Random field element: residue uniform in [0, p) over GF(p); over Q a
/// fraction with numerator uniform in [-9, 9] and denominator uniform in
/// [-9, 9] excluding 0, then reduced.
FieldElement random_element(Lcg64& rng, const FieldSpec& spec);

CoeffVector random_coeff_vector(Lcg64& rng, std::size_t n, const FieldSpec& spec);

Matrix random_matrix(Lcg64& rng, std::size_t rows, std::size_t cols, const FieldSpec& spec);

} // namespace cmpn
