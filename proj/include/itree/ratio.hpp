#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace itree {

// Exact rational used for thresholds. All comparisons are integer-only;
// callers multiply through by den instead of dividing.
struct Ratio {
    long long num = 0;
    long long den = 1;

    Ratio() = default;
    Ratio(long long n, long long d) : num(n), den(d) {
        if (den <= 0) throw std::invalid_argument("ratio denominator must be positive");
        if (num < 0) throw std::invalid_argument("ratio must be nonnegative");
        normalize();
    }

    void normalize() {
        long long g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Ratio& o) const { return num == o.num && den == o.den; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    // Accepts "p/q" or a plain decimal such as "0.25", "1", ".5".
    static Ratio parse(const std::string& text);
};

// a >= r*b, exactly.
inline bool at_least(long long a, Ratio r, long long b) {
    return static_cast<__int128>(a) * r.den >= static_cast<__int128>(r.num) * b;
}

// a >= (1-r)*b, exactly. Requires r <= 1.
inline bool at_least_complement(long long a, Ratio r, long long b) {
    return static_cast<__int128>(a) * r.den >= static_cast<__int128>(r.den - r.num) * b;
}

}  // namespace itree
