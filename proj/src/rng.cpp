#include "cmpn/rng.hpp"

namespace cmpn {

std::uint64_t Lcg64::below(std::uint64_t bound)
{
    if (bound == 0)
        throw IndexOutOfRange("below(0)");
    if (bound > 0xffffffffULL) {
        // two draws for wide bounds
        const std::uint64_t limit = ~0ULL - ~0ULL % bound;
        for (;;) {
            std::uint64_t v = (static_cast<std::uint64_t>(next()) << 32) | next();
            if (v < limit)
                return v % bound;
        }
    }
    const std::uint32_t b = static_cast<std::uint32_t>(bound);
    const std::uint32_t limit = 0xffffffffU - 0xffffffffU % b;
    for (;;) {
        std::uint32_t v = next();
        if (v < limit)
            return v % b;
    }
}

long Lcg64::in_range(long lo, long hi)
{
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

FieldElement random_element(Lcg64& rng, const FieldSpec& spec)
{
    if (spec.is_rationals()) {
        long num = rng.in_range(-9, 9);
        long den = rng.in_range(-9, 8);
        if (den >= 0)
            ++den; // skip 0
        mpq_class q(num);
        q /= mpq_class(den);
        return FieldElement(spec, q);
    }
    return FieldElement(spec, static_cast<long>(rng.below(spec.modulus())));
}

CoeffVector random_coeff_vector(Lcg64& rng, std::size_t n, const FieldSpec& spec)
{
    std::vector<FieldElement> e;
    e.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        e.push_back(random_element(rng, spec));
    return CoeffVector(std::move(e), spec);
}

Matrix random_matrix(Lcg64& rng, std::size_t rows, std::size_t cols, const FieldSpec& spec)
{
    Matrix m(rows, cols, spec);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, random_element(rng, spec));
    return m;
}

} // namespace cmpn
