#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace simplexion {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

struct Overflow {};

// int64 that throws Overflow instead of wrapping. Exact algorithms are
// instantiated with this first and rerun over BigInt when it throws.
class Checked64 {
public:
    constexpr Checked64() = default;
    constexpr Checked64(std::int64_t v) : v_(v) {}

    constexpr std::int64_t value() const { return v_; }

    friend Checked64 operator+(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow{};
        return r;
    }
    friend Checked64 operator-(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow{};
        return r;
    }
    friend Checked64 operator*(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
        return r;
    }
    friend Checked64 operator/(Checked64 a, Checked64 b) {
        if (b.v_ == -1) return -a;
        return a.v_ / b.v_;
    }
    friend Checked64 operator%(Checked64 a, Checked64 b) {
        if (b.v_ == -1) return 0;
        return a.v_ % b.v_;
    }
    Checked64 operator-() const {
        if (v_ == INT64_MIN) throw Overflow{};
        return -v_;
    }
    Checked64& operator+=(Checked64 b) { return *this = *this + b; }
    Checked64& operator-=(Checked64 b) { return *this = *this - b; }
    Checked64& operator*=(Checked64 b) { return *this = *this * b; }
    Checked64& operator/=(Checked64 b) { return *this = *this / b; }

    friend constexpr auto operator<=>(Checked64, Checked64) = default;

private:
    std::int64_t v_ = 0;
};

inline int sign(const Checked64& x) { return (x.value() > 0) - (x.value() < 0); }
inline int sign(const BigInt& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }
inline int sign(std::int64_t x) { return (x > 0) - (x < 0); }

inline BigInt to_big(const Checked64& x) { return BigInt(x.value()); }
inline BigInt to_big(const BigInt& x) { return x; }

inline Checked64 gcd(Checked64 a, Checked64 b) {
    std::int64_t x = a.value() < 0 ? -a.value() : a.value();
    std::int64_t y = b.value() < 0 ? -b.value() : b.value();
    while (y != 0) {
        std::int64_t t = x % y;
        x = y;
        y = t;
    }
    return x;
}
inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

// Narrowing conversion; throws Overflow if the value does not fit.
inline Checked64 to_checked(const BigInt& x) {
    if (x > INT64_MAX || x < INT64_MIN) throw Overflow{};
    return x.convert_to<std::int64_t>();
}

inline std::string to_string(const BigInt& x) { return x.str(); }
inline std::string to_string(const Rational& x) { return x.str(); }

inline int omega(int dim) { return (dim % 2 == 0) ? 1 : -1; }

BigInt binomial(int n, int k);
BigInt factorial(int n);

// Polynomial with exact rational coefficients; index = power.
using RationalPoly = std::vector<Rational>;

RationalPoly poly_trim(RationalPoly p);
RationalPoly poly_add(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b);
Rational poly_eval(const RationalPoly& p, const Rational& x);
double poly_eval(const RationalPoly& p, double x);
std::string poly_to_string(const RationalPoly& p, const std::string& var = "p");

}  // namespace simplexion
