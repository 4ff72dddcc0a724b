#pragma once

#include "dessinforge/poly.hpp"

#include <cstdint>

namespace testsupport {

// Small deterministic generator so property tests are reproducible.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ULL) : state(seed) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline dforge::algebra::Rational random_rational(Rng& rng) {
    return dforge::algebra::Rational(rng.range(-9, 9), rng.range(1, 9));
}

inline dforge::algebra::FieldElement random_element(Rng& rng, long d) {
    using dforge::algebra::FieldElement;
    if (d == 1)
        return FieldElement::rational(random_rational(rng));
    return FieldElement::make(random_rational(rng), random_rational(rng), d);
}

inline dforge::algebra::Poly random_poly(Rng& rng, long d, int max_deg, bool monicish = false) {
    using dforge::algebra::Poly;
    int deg = rng.range(0, max_deg);
    Poly p = Poly::zero(d);
    for (int i = 0; i <= deg; ++i)
        p += Poly::monomial(random_element(rng, d), i);
    if (p.is_zero() || (monicish && p.degree() < 1))
        p += Poly::monomial(dforge::algebra::FieldElement::rational(1).embedded(d),
                            std::max(deg, 1));
    return p;
}

} // namespace testsupport
