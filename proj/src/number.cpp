#include "simplexion/number.hpp"

#include <sstream>

namespace simplexion {

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

RationalPoly poly_trim(RationalPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

RationalPoly poly_add(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly c(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return poly_trim(std::move(c));
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
    if (a.empty() || b.empty()) return {};
    RationalPoly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return poly_trim(std::move(c));
}

Rational poly_eval(const RationalPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double poly_eval(const RationalPoly& p, double x) {
    double acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + it->convert_to<double>();
    return acc;
}

std::string poly_to_string(const RationalPoly& p, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        Rational c = p[k];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (c < 0) c = -c;
        if (k == 0 || c != 1) os << c.str();
        if (k > 0) os << (k == 0 || c != 1 ? "*" : "") << var << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace simplexion
