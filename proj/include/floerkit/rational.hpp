#pragma once

// Small exact rationals (64-bit) for gradings, d-invariants and Upsilon
// levels. Magnitudes here stay tiny; the plumbing module uses arbitrary
// precision separately.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace floerkit {

struct Rat {
    long long p = 0;
    long long q = 1;

    Rat() = default;
    Rat(long long n) : p(n), q(1) {}
    Rat(long long n, long long d) : p(n), q(d) { normalize(); }

    void normalize() {
        if (q == 0) throw std::domain_error("rational with zero denominator");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        long long g = std::gcd(p < 0 ? -p : p, q);
        if (g > 1) {
            p /= g;
            q /= g;
        }
        if (p == 0) q = 1;
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.p * b.q + b.p * a.q, a.q * b.q); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.p * b.q - b.p * a.q, a.q * b.q); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.p * b.p, a.q * b.q); }
    friend Rat operator/(const Rat& a, const Rat& b) { return Rat(a.p * b.q, a.q * b.p); }
    Rat operator-() const { return Rat(-p, q); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.p == b.p && a.q == b.q; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.p * b.q < b.p * a.q; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.p * b.q <= b.p * a.q; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    bool is_integer() const { return q == 1; }

    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
};

}  // namespace floerkit
