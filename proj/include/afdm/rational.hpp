// rational.hpp - exact rational arithmetic for the chirp rate c1

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace afdm {

// Exact rational p/q in lowest terms with q > 0.
//
// The chirp rate c1 is kept rational so that statements like
// "2 c1 N tau is an integer >= N" and the chirp phase c1 n^2 (mod 1)
// are decided in integer arithmetic, never through a floating-point
// epsilon test.
class Rational {
  public:
    constexpr Rational() = default;
    Rational(std::int64_t num) : num_(num), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    // Accepts "0", "1", "-3", "1/128", "-7/64". Throws std::invalid_argument.
    static Rational parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    // True when (*this) * a is an integer.
    bool integer_multiple(std::int64_t a) const {
        return static_cast<__int128>(num_) * a % den_ == 0;
    }

    // True when (*this) * a >= bound.
    bool multiple_at_least(std::int64_t a, std::int64_t bound) const {
        return static_cast<__int128>(num_) * a >= static_cast<__int128>(bound) * den_;
    }

    // Fractional part of (*this) * a in [0, 1), exact up to the final division.
    double frac_multiple(std::int64_t a) const {
        __int128 r = static_cast<__int128>(num_) * a % den_;
        if (r < 0) r += den_;
        return static_cast<double>(r) / static_cast<double>(den_);
    }

    Rational times(std::int64_t a) const {
        __int128 n = static_cast<__int128>(num_) * a;
        if (n > INT64_MAX || n < INT64_MIN) throw std::overflow_error("rational overflow");
        return Rational(static_cast<std::int64_t>(n), den_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  private:
    void normalize() {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(const std::string& text) {
    const auto bad = [&] { return std::invalid_argument("malformed rational: '" + text + "'"); };
    std::string s = text;
    // trim
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw bad();
    s = s.substr(b, e - b + 1);

    const auto slash = s.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const std::int64_t n = std::stoll(s, &used);
            if (used != s.size()) throw bad();
            return Rational(n);
        }
        const std::string ns = s.substr(0, slash);
        const std::string ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) throw bad();
        const std::int64_t n = std::stoll(ns, &used);
        if (used != ns.size()) throw bad();
        const std::int64_t d = std::stoll(ds, &used);
        if (used != ds.size()) throw bad();
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw bad();
    } catch (const std::out_of_range&) {
        throw bad();
    }
}

}  // namespace afdm
