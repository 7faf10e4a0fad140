#include "hrlab/constants.hpp"

namespace hrlab::constants {

namespace {

Rational rat(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace

Rational eigenvalue_ck(Dimension dim, ModeIndex mode) {
    const long long k = mode.k;
    return rat(k * (k + dim.n - 2));
}

Rational sharp_constant(Dimension dim) {
    switch (dim.n) {
        case 3: return rat(25, 36);
        case 4: return rat(3);
        default: return rat(static_cast<long long>(dim.n) * dim.n, 4);
    }
}

Rational g_lower(Dimension dim, ModeIndex mode) {
    const long long m = dim.n - 4;
    return rat(m * m, 2) + eigenvalue_ck(dim, mode) + rat(2 * m);
}

Rational h_lower(Dimension dim, const Rational& eps, ModeIndex mode) {
    if (mode.k == 0) throw std::domain_error("h_lower: k >= 1 required (c_0 = 0)");
    const long long m = dim.n - 4;
    const Rational ck = eigenvalue_ck(dim, mode);
    return (rat(2) + eps / ck) * rat(m * m, 4) + ck + rat(2 * m);
}

Rational eps_star(Dimension dim) {
    if (dim.n != 3 && dim.n != 4)
        throw std::domain_error("eps_star: defined for N in {3,4} only");
    const long long n = dim.n;
    return rat((n - 1) * (-n * n + 4 * n + 4), n * n - 4 * n + 12);
}

Rational min_split(Dimension dim) {
    const long long n = dim.n;
    return std::min(rat(n * n, 4), rat(n * n - 2 * n - 2, 2));
}

Rational mode_limit_quotient(Dimension dim, ModeIndex mode) {
    const long long n = dim.n;
    if (n == 4 && mode.k == 0)
        throw std::domain_error("mode_limit_quotient: (N,k)=(4,0) is an indeterminate 0/0");
    const Rational s2 = rat((n - 4) * (n - 4), 4);
    const Rational t2 = rat((n - 2) * (n - 2), 4);
    const Rational ck = eigenvalue_ck(dim, mode);
    const Rational num =
        s2 * t2 + (rat(n - 1) + rat(2) * ck) * s2 + ck * ck + rat(2 * (n - 4)) * ck;
    return num / (s2 + ck);
}

Rational asymptotic_quotient(Dimension dim, ModeIndex mode, const Rational& eps) {
    const long long n = dim.n;
    const Rational a = rat(-(n - 4), 2) + eps;
    const Rational b = rat(-(n - 2), 2) + eps;
    const Rational ck = eigenvalue_ck(dim, mode);
    const Rational den = a * a + ck;
    if (den == rat(0))
        throw std::domain_error("asymptotic_quotient: degenerate zero denominator");
    const Rational num =
        a * a * b * b + (rat(n - 1) + rat(2) * ck) * a * a + ck * ck + rat(2 * (n - 4)) * ck;
    return num / den;
}

}  // namespace hrlab::constants
