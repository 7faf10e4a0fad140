#include "hrlab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace hrlab::quadrature {

CoreIntegrals analytic_core_integrals(Dimension dim, double eps) {
    if (!(eps > 0.0))
        throw std::domain_error("analytic_core_integrals: eps > 0 required (core diverges)");
    const double alpha = -(dim.n - 4) / 2.0 + eps;
    const double d0 = 1.0 / (2.0 * eps);
    const double b0 = alpha * alpha * d0;
    const double a0 = (alpha - 1.0) * (alpha - 1.0) * b0;
    return {a0, b0, d0};
}

namespace {

PanelRule make_gauss_legendre(int order) {
    // Newton iteration on the Legendre recurrence, symmetric pairs.
    PanelRule rule;
    rule.x.resize(order);
    rule.w.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= order; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.x[i] = -x;
        rule.x[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.w[i] = w;
        rule.w[order - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const PanelRule& gauss_legendre(int order) {
    if (order < 2) throw std::invalid_argument("gauss_legendre: order >= 2 required");
    static std::map<int, PanelRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make_gauss_legendre(order)).first;
    return it->second;
}

namespace {

// Composite value with `panels` equal panels; per-panel results land in an
// index-addressed buffer and are summed serially in panel order.
double composite(const std::function<double(double)>& f, double p, double lo, double hi,
                 int panels, const PanelRule& rule, Exec exec, std::vector<double>& buffer) {
    const double width = (hi - lo) / panels;
    buffer.assign(panels, 0.0);
    const int order = static_cast<int>(rule.x.size());
    parallel_for(panels, exec, [&](std::ptrdiff_t k) {
        const double a = lo + k * width;
        const double half = 0.5 * width;
        const double mid = a + half;
        double acc = 0.0;
        for (int j = 0; j < order; ++j) {
            const double r = mid + half * rule.x[j];
            acc += rule.w[j] * std::pow(r, p) * f(r);
        }
        buffer[k] = acc * half;
    });
    double total = 0.0;
    for (double v : buffer) total += v;
    return total;
}

}  // namespace

IntegralValue integrate_weighted(const std::function<double(double)>& f, double p, double lo,
                                 double hi, const QuadratureConfig& cfg) {
    if (!(0.0 < lo && lo < hi))
        throw std::invalid_argument("integrate_weighted: 0 < lo < hi required");
    if (cfg.nodes_per_panel < 4)
        throw std::invalid_argument("integrate_weighted: at least 4 nodes per panel");
    const PanelRule& rule = gauss_legendre(cfg.nodes_per_panel);
    std::vector<double> buffer;
    double prev = composite(f, p, lo, hi, 1, rule, cfg.exec, buffer);
    for (int d = 1; d <= cfg.max_panel_doublings; ++d) {
        const double cur = composite(f, p, lo, hi, 1 << d, rule, cfg.exec, buffer);
        const double diff = std::abs(cur - prev);
        const double scale = std::max(std::abs(cur), 1e-300);
        if (diff <= cfg.rel_tol * scale) return {cur, diff};
        if (d == cfg.max_panel_doublings) {
            std::ostringstream msg;
            msg << "integrate_weighted: no convergence to rel_tol " << cfg.rel_tol << " after "
                << cfg.max_panel_doublings << " panel doublings";
            throw NumericalFailure(msg.str(), cur, prev);
        }
        prev = cur;
    }
    return {prev, 0.0};  // unreachable
}

}  // namespace hrlab::quadrature
