#ifndef SPECFAC_RATIONAL_HPP
#define SPECFAC_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace specfac {

// Exact rational on int64, always normalized with positive denominator.
// Magnitudes here stay desk-scale (threshold formulas in n, k, r, delta),
// so no big-integer backing is needed.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // least integer >= this
    std::int64_t ceil() const {
        if (num >= 0) return (num + den - 1) / den;
        return -((-num) / den);
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
    friend Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }
};

} // namespace specfac

#endif
