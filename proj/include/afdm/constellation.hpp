// constellation.hpp - unit-power square M-ary QAM alphabets and symbol draws

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "afdm/numeric.hpp"
#include "afdm/rng.hpp"

namespace afdm {

// Square M-ary QAM alphabet, scaled to unit mean power. The alphabet is
// proper (zero mean, zero pseudo-variance) by lattice symmetry.
struct Constellation {
    int order = 0;                // M, a perfect square >= 4
    std::vector<cplx> points;     // M points, I-major lattice order
    double kurtosis = 0.0;        // E|x|^4 under unit power, by enumeration
};

struct SymbolVector {
    std::vector<cplx> symbols;
    std::uint64_t seed = 0;
    int order = 0;  // constellation order the symbols were drawn from
};

// Kurtosis of unit-power square M-QAM, (7M - 13) / (5M - 5).
// Exact for square alphabets, which the enumeration in make_constellation
// cross-checks.
inline double kurtosis_formula(int order) {
    const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(order))));
    if (order < 4 || root * root != order)
        throw std::invalid_argument("constellation order must be a perfect square >= 4");
    return (7.0 * order - 13.0) / (5.0 * order - 5.0);
}

// Build the square M-QAM alphabet on {+-1, +-3, ..., +-(sqrt(M)-1)}^2.
// Per-axis mean square of the odd levels is (M-1)/3, so the exact unit-power
// scale is 1/sqrt(2(M-1)/3); enumeration error never enters the alphabet.
inline Constellation make_constellation(int order) {
    const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(order))));
    if (order < 4 || root * root != order)
        throw std::invalid_argument("constellation order must be a perfect square >= 4");

    const double scale2 = 3.0 / (2.0 * (order - 1));  // 1/E[a^2 + b^2] on the raw lattice
    const double scale = std::sqrt(scale2);

    Constellation c;
    c.order = order;
    c.points.reserve(order);
    double sum_r4 = 0.0;  // sum of (a^2 + b^2)^2, integer-exact in double
    for (int i = 0; i < root; ++i) {
        const int a = 2 * i - (root - 1);
        for (int k = 0; k < root; ++k) {
            const int b = 2 * k - (root - 1);
            c.points.emplace_back(a * scale, b * scale);
            const double r2 = static_cast<double>(a) * a + static_cast<double>(b) * b;
            sum_r4 += r2 * r2;
        }
    }
    c.kurtosis = sum_r4 / order * scale2 * scale2;
    return c;
}

// N independent uniform draws from the alphabet. Identical (seed, N, order)
// reproduce the identical vector bit for bit.
inline SymbolVector draw_symbols(const Constellation& c, int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("symbol count must be >= 1");
    SplitMix64 rng(seed);
    SymbolVector x;
    x.seed = seed;
    x.order = c.order;
    x.symbols.reserve(n);
    const auto m = static_cast<std::uint64_t>(c.order);
    for (int i = 0; i < n; ++i) x.symbols.push_back(c.points[rng.below(m)]);
    return x;
}

}  // namespace afdm
