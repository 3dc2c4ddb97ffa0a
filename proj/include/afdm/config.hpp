// config.hpp - AFDM waveform parameters

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "afdm/rational.hpp"

namespace afdm {

// Waveform parameters for the discrete AFDM chain. c1 = c2 = 0 is plain OFDM.
struct AfdmConfig {
    int N = 64;                 // chirp subcarrier count
    Rational c1 = Rational(1);  // chirp rate, exact rational
    double c2 = 0.0;            // second DAFT parameter
    int M = 4;                  // constellation order
    int L_cp = 0;               // chirp-periodic prefix length in samples
    int q = 0;                  // chirp-segment index in the ambiguity phase;
                                // enters only as a global phase exp(-j 2 pi q tau)

    // Optional physical metadata. When delta_f_hz > 0 the usual derived
    // quantities are available; nothing in the analysis depends on them since
    // delay and Doppler are handled in normalized units.
    double delta_f_hz = 0.0;

    double bandwidth_hz() const { return N * delta_f_hz; }
    double symbol_duration_s() const { return delta_f_hz > 0 ? 1.0 / delta_f_hz : 0.0; }
    double sample_time_s() const { return delta_f_hz > 0 ? 1.0 / bandwidth_hz() : 0.0; }

    // 2 c1 N, the delay-Doppler coupling slope, exact.
    Rational two_c1_n() const { return c1.times(2 * static_cast<std::int64_t>(N)); }

    static AfdmConfig ofdm(int n, int m) {
        AfdmConfig cfg;
        cfg.N = n;
        cfg.c1 = Rational(0);
        cfg.c2 = 0.0;
        cfg.M = m;
        return cfg;
    }

    // Collects every violated constraint instead of stopping at the first.
    std::vector<std::string> problems() const {
        std::vector<std::string> out;
        if (N < 2) out.push_back("N must be >= 2");
        const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(M))));
        if (M < 4 || root * root != M) out.push_back("M must be a perfect square >= 4");
        if (L_cp < 0) out.push_back("L_cp must be >= 0");
        if (N >= 2 && L_cp >= N) out.push_back("L_cp must be < N");
        if (delta_f_hz < 0) out.push_back("delta_f_hz must be >= 0");
        return out;
    }

    void validate() const {
        const auto p = problems();
        if (p.empty()) return;
        std::string msg = "invalid AFDM configuration:";
        for (const auto& s : p) msg += "\n  - " + s;
        throw std::invalid_argument(msg);
    }

    friend bool operator==(const AfdmConfig& a, const AfdmConfig& b) {
        return a.N == b.N && a.c1 == b.c1 && a.c2 == b.c2 && a.M == b.M && a.L_cp == b.L_cp &&
               a.q == b.q;
    }

    std::string label() const {
        std::string c1s = c1.str();
        for (auto& ch : c1s)
            if (ch == '/') ch = 'd';
        return "n" + std::to_string(N) + "_m" + std::to_string(M) + "_c1_" + c1s;
    }
};

}  // namespace afdm
