#include "hrlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace hrlab::spectral {

void QuadraticForm::apply(const std::vector<double>& v, std::vector<double>& out) const {
    out.assign(order, 0.0);
    for (int i = 0; i < order; ++i) {
        double acc = diag[i] * v[i];
        if (i > 0) acc += off1[i - 1] * v[i - 1];
        if (i + 1 < order) acc += off1[i] * v[i + 1];
        if (i > 1) acc += off2[i - 2] * v[i - 2];
        if (i + 2 < order) acc += off2[i] * v[i + 2];
        out[i] = acc;
    }
}

double QuadraticForm::quad(const std::vector<double>& v) const {
    double acc = 0.0;
    for (int i = 0; i < order; ++i) {
        acc += diag[i] * v[i] * v[i];
        if (i + 1 < order) acc += 2.0 * off1[i] * v[i] * v[i + 1];
        if (i + 2 < order) acc += 2.0 * off2[i] * v[i] * v[i + 2];
    }
    return acc;
}

namespace {

// Rank-one update F += w * s s^T for a three-point stencil s at unknown
// offsets {-1, 0, +1} around unknown j; out-of-range offsets are the
// Dirichlet boundary and drop out.
void add_stencil(QuadraticForm& f, int j, const double s[3], double w) {
    for (int p = -1; p <= 1; ++p) {
        const int row = j + p;
        if (row < 0 || row >= f.order) continue;
        for (int q = p; q <= 1; ++q) {
            const int col = j + q;
            if (col < 0 || col >= f.order) continue;
            const double value = w * s[p + 1] * s[q + 1];
            const int d = col - row;
            if (d == 0) f.diag[row] += value;
            else if (d == 1) f.off1[row] += value;
            else f.off2[row] += value;
        }
    }
}

}  // namespace

std::pair<QuadraticForm, QuadraticForm> assemble_forms(Dimension dim, ModeIndex mode,
                                                       const LogGrid& grid) {
    // Two zero nodes at each end clamp both the value and the discrete
    // slope. Value-only ends would let u = 1 - r/r_max escape through the
    // right boundary with u'' = 0, collapsing the radial mode to N-1; the
    // clamped class extends by zero to an admissible function, so the
    // discrete constant stays an upper estimate of the continuum infimum.
    const int m = grid.m - 4;
    if (m < 3) throw std::invalid_argument("assemble_forms: grid too small");
    QuadraticForm num_form(m), den_form(m);
    const double h = grid.dt();
    const double ck = to_double(constants::eigenvalue_ck(dim, mode));
    const double coef_b = dim.n - 1 + 2.0 * ck;
    const double coef_d = ck * ck + 2.0 * ck * (dim.n - 4);
    // stencil rows at every node whose 3-point stencil reaches an unknown
    for (int j = -1; j <= m; ++j) {
        const int node = j + 2;
        const double t = grid.t(node);
        const double r = std::exp(t);
        const double w = r * h;
        const double e1 = std::exp(-t), e2 = e1 * e1;
        // stencils over (v_{j-1}, v_j, v_{j+1})
        const double su[3] = {0.0, 1.0, 0.0};
        const double sdu[3] = {-e1 / (2.0 * h), 0.0, e1 / (2.0 * h)};
        const double sddu[3] = {e2 * (1.0 / (h * h) + 1.0 / (2.0 * h)), e2 * (-2.0 / (h * h)),
                                e2 * (1.0 / (h * h) - 1.0 / (2.0 * h))};
        const double wa = w * std::pow(r, dim.n - 1.0);
        const double wb = w * std::pow(r, dim.n - 3.0);
        const double wd = w * std::pow(r, dim.n - 5.0);
        add_stencil(num_form, j, sddu, wa);
        add_stencil(num_form, j, sdu, coef_b * wb);
        if (coef_d != 0.0) add_stencil(num_form, j, su, coef_d * wd);
        add_stencil(den_form, j, sdu, wb);
        if (ck != 0.0) add_stencil(den_form, j, su, ck * wd);
    }
    return {std::move(num_form), std::move(den_form)};
}

namespace {

// LDL^T of a pentadiagonal symmetric matrix; succeeds iff positive definite.
struct BandFactor {
    std::vector<double> d, l1, l2;

    static std::optional<BandFactor> compute(const QuadraticForm& a) {
        const int n = a.order;
        BandFactor f;
        f.d.assign(n, 0.0);
        f.l1.assign(n, 0.0);
        f.l2.assign(n, 0.0);
        for (int i = 0; i < n; ++i) {
            double di = a.diag[i];
            if (i >= 1) di -= f.l1[i - 1] * f.l1[i - 1] * f.d[i - 1];
            if (i >= 2) di -= f.l2[i - 2] * f.l2[i - 2] * f.d[i - 2];
            if (!(di > 0.0) || !std::isfinite(di)) return std::nullopt;
            f.d[i] = di;
            if (i + 1 < n) {
                double v = a.off1[i];
                if (i >= 1) v -= f.l2[i - 1] * f.l1[i - 1] * f.d[i - 1];
                f.l1[i] = v / di;
            }
            if (i + 2 < n) f.l2[i] = a.off2[i] / di;
        }
        return f;
    }

    void solve(std::vector<double>& x) const {
        const int n = static_cast<int>(d.size());
        for (int i = 0; i < n; ++i) {
            if (i >= 1) x[i] -= l1[i - 1] * x[i - 1];
            if (i >= 2) x[i] -= l2[i - 2] * x[i - 2];
        }
        for (int i = 0; i < n; ++i) x[i] /= d[i];
        for (int i = n - 1; i >= 0; --i) {
            if (i + 1 < n) x[i] -= l1[i] * x[i + 1];
            if (i + 2 < n) x[i] -= l2[i] * x[i + 2];
        }
    }
};

QuadraticForm shifted(const QuadraticForm& p, const QuadraticForm& q, double mu) {
    QuadraticForm out = p;
    for (int i = 0; i < out.order; ++i) out.diag[i] -= mu * q.diag[i];
    for (std::size_t i = 0; i < out.off1.size(); ++i) out.off1[i] -= mu * q.off1[i];
    for (std::size_t i = 0; i < out.off2.size(); ++i) out.off2[i] -= mu * q.off2[i];
    return out;
}

QuadraticForm equilibrated(const QuadraticForm& f, const std::vector<double>& s) {
    QuadraticForm out = f;
    for (int i = 0; i < out.order; ++i) out.diag[i] *= s[i] * s[i];
    for (int i = 0; i + 1 < out.order; ++i) out.off1[i] *= s[i] * s[i + 1];
    for (int i = 0; i + 2 < out.order; ++i) out.off2[i] *= s[i] * s[i + 2];
    return out;
}

double norm2(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

}  // namespace

EigenResult smallest_generalized_eigenvalue(const QuadraticForm& P, const QuadraticForm& Q,
                                            double tol) {
    if (P.order != Q.order || P.order < 1)
        throw std::invalid_argument("smallest_generalized_eigenvalue: bad operands");
    const int n = P.order;

    // Equilibrate: the grid weights span many orders of magnitude, so scale
    // rows/columns to unit Q diagonal. The pencil eigenvalues are
    // congruence-invariant.
    std::vector<double> scale(n);
    for (int i = 0; i < n; ++i) {
        const double qd = Q.diag[i];
        scale[i] = qd > 0.0 && std::isfinite(qd) ? 1.0 / std::sqrt(qd) : 1.0;
    }
    const QuadraticForm ps = equilibrated(P, scale);
    const QuadraticForm qs = equilibrated(Q, scale);

    double safe_mu = 0.0;
    auto factor = BandFactor::compute(ps);
    if (!factor) throw SolverFailure("inverse iteration: numerator form not positive definite");

    // Smooth positive start vector.
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) {
        const double z = (i - 0.5 * (n - 1)) / (0.25 * n);
        x[i] = std::exp(-z * z);
    }

    std::vector<double> v(n), qv(n), pv(n), work(n);
    const int max_iterations = 200;
    for (int iter = 1; iter <= max_iterations; ++iter) {
        qs.apply(x, work);
        factor->solve(work);
        x.swap(work);
        const double qnorm = std::sqrt(std::max(qs.quad(x), 0.0));
        if (!(qnorm > 0.0) || !std::isfinite(qnorm))
            throw SolverFailure("inverse iteration: iterate left the Q-definite cone");
        for (double& c : x) c /= qnorm;
        const double lambda = ps.quad(x);

        // Contract residual in the original variables.
        for (int i = 0; i < n; ++i) v[i] = scale[i] * x[i];
        P.apply(v, pv);
        Q.apply(v, qv);
        for (int i = 0; i < n; ++i) work[i] = pv[i] - lambda * qv[i];
        const double residual = norm2(work) / norm2(qv);
        if (residual <= tol) {
            EigenResult result;
            result.lambda = lambda;
            result.residual = residual;
            result.iterations = iter;
            result.v = v;
            return result;
        }

        // Move the shift toward lambda as the residual shrinks (for a
        // symmetric pencil the eigenvalue error is residual-bounded), and
        // back off to the midpoint with the last safe shift whenever the
        // shifted pencil stops being positive definite: a nonpositive pivot
        // means the shift crossed the smallest eigenvalue.
        if (iter >= 2) {
            const double slack = std::max(4.0 * residual, 1e-12 * std::abs(lambda));
            double candidate = lambda - slack;
            if (candidate > safe_mu) {
                for (int attempt = 0; attempt < 8 && candidate > safe_mu; ++attempt) {
                    auto trial = BandFactor::compute(shifted(ps, qs, candidate));
                    if (trial) {
                        factor = std::move(trial);
                        safe_mu = candidate;
                        break;
                    }
                    candidate = 0.5 * (candidate + safe_mu);
                }
            }
        }
    }
    throw SolverFailure("inverse iteration: no convergence within iteration budget");
}

double per_mode_constant(Dimension dim, ModeIndex mode, const LogGrid& grid) {
    auto [p, q] = assemble_forms(dim, mode, grid);
    // The k = 0 denominator form has near-null sawtooth modes, so the
    // attainable residual floor sits near 1e-5 on strongly graded grids;
    // 5e-5 stays above it while pinning lambda far tighter than the
    // discretization error (the eigenvalue error is residual-squared over
    // the spectral gap).
    return smallest_generalized_eigenvalue(p, q, 5e-5).lambda;
}

ModeScanResult scan_modes(Dimension dim, int kmax, const LogGrid& grid, Exec exec) {
    if (kmax < 1) throw std::invalid_argument("scan_modes: kmax >= 1 required");
    ModeScanResult result{std::vector<double>(kmax + 1, 0.0), 0, grid};
    std::vector<std::exception_ptr> errors(kmax + 1);
    parallel_for(kmax + 1, exec, [&](std::ptrdiff_t k) {
        try {
            result.lambda[k] = per_mode_constant(dim, ModeIndex(static_cast<int>(k)), grid);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    });
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    result.argmin_mode = 0;
    for (int k = 1; k <= kmax; ++k)
        if (result.lambda[k] < result.lambda[result.argmin_mode]) result.argmin_mode = k;
    return result;
}

double symbol_value(Dimension dim, ModeIndex mode, double xi) {
    const double n = dim.n;
    const double sigma = -(n - 4.0) / 2.0;
    const double ck = to_double(constants::eigenvalue_ck(dim, mode));
    const double s2 = sigma * sigma + xi * xi;
    const double den = s2 + ck;
    if (den == 0.0)
        throw std::domain_error("symbol_value: degenerate at (N,k,xi) = (4,0,0)");
    const double num = s2 * ((sigma - 1.0) * (sigma - 1.0) + xi * xi) + (n - 1.0 + 2.0 * ck) * s2 +
                       ck * ck + 2.0 * ck * (n - 4.0);
    return num / den;
}

Rational symbol_value_exact(Dimension dim, ModeIndex mode, const Rational& xi) {
    const long long n = dim.n;
    const Rational sigma(-(n - 4), 2);
    const Rational ck = constants::eigenvalue_ck(dim, mode);
    const Rational s2 = sigma * sigma + xi * xi;
    const Rational den = s2 + ck;
    if (den == Rational(0))
        throw std::domain_error("symbol_value_exact: degenerate at (N,k,xi) = (4,0,0)");
    const Rational one(1);
    const Rational num = s2 * ((sigma - one) * (sigma - one) + xi * xi) +
                         (Rational(n - 1) + Rational(2) * ck) * s2 + ck * ck +
                         Rational(2 * (n - 4)) * ck;
    return num / den;
}

double symbol_min(Dimension dim, ModeIndex mode) {
    const auto f = [&](double s) { return symbol_value(dim, mode, std::sqrt(s)); };
    // Grow the bracket until the symbol increases across it; S_k -> infinity
    // with xi^2, so this terminates.
    double hi = 1.0;
    int growth = 0;
    while (f(hi) <= f(0.5 * hi)) {
        hi *= 2.0;
        if (++growth > 60) throw SolverFailure("symbol_min: bracket growth failed");
    }
    double a = 0.0, b = hi;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-12 * (1.0 + b)) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return std::min(fc, fd);
}

double global_constant_estimate(Dimension dim, int kmax) {
    if (kmax < 10) throw std::invalid_argument("global_constant_estimate: kmax >= 10 required");
    double best = symbol_min(dim, ModeIndex(0));
    for (int k = 1; k <= kmax; ++k) best = std::min(best, symbol_min(dim, ModeIndex(k)));
    return best;
}

int symbol_argmin_mode(Dimension dim, int kmax) {
    int arg = 0;
    double best = symbol_min(dim, ModeIndex(0));
    for (int k = 1; k <= kmax; ++k) {
        const double v = symbol_min(dim, ModeIndex(k));
        if (v < best) {
            best = v;
            arg = k;
        }
    }
    return arg;
}

profiles::RadialProfile ground_profile(Dimension dim, ModeIndex mode, const LogGrid& grid) {
    auto [p, q] = assemble_forms(dim, mode, grid);
    const EigenResult eig = smallest_generalized_eigenvalue(p, q, 5e-5);
    std::vector<double> values(grid.m, 0.0);
    for (std::size_t i = 0; i < eig.v.size(); ++i) values[i + 2] = eig.v[i];
    return profiles::RadialProfile::grid_sampled(grid, std::move(values));
}

}  // namespace hrlab::spectral
