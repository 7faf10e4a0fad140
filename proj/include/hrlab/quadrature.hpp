#pragma once

#include "hrlab/parallel.hpp"
#include "hrlab/types.hpp"

#include <functional>
#include <vector>

// Weighted radial integration: closed forms for the power-law singular
// core at r = 0, composite Gauss-Legendre with panel doubling elsewhere.

namespace hrlab::quadrature {

struct QuadratureConfig {
    int nodes_per_panel = 16;
    int max_panel_doublings = 12;
    double rel_tol = 1e-10;
    Exec exec = Exec::parallel;
};

struct IntegralValue {
    double value;
    double abs_error_estimate;
};

// The [0,1] pieces of the minimizing-family integrals, where the cutoff is
// identically 1 and u = r^alpha, alpha = -(N-4)/2 + eps:
//   D0 = int_0^1 r^{N-5} u^2      = 1/(2 eps)
//   B0 = int_0^1 r^{N-3} u'^2     = alpha^2/(2 eps)
//   A0 = int_0^1 r^{N-1} u''^2    = alpha^2 (alpha-1)^2/(2 eps)
struct CoreIntegrals {
    double A0, B0, D0;
};
CoreIntegrals analytic_core_integrals(Dimension dim, double eps);

// Gauss-Legendre rule on [-1,1]; nodes ascending, cached per order.
struct PanelRule {
    std::vector<double> x;
    std::vector<double> w;
};
const PanelRule& gauss_legendre(int order);

// int_lo^hi r^p f(r) dr on 0 < lo < hi with f smooth. Panels are doubled
// until successive composite values agree to rel_tol relatively; the error
// estimate is the last difference. Panel evaluations run through the
// parallel kernel and are reduced serially in panel order, so results do
// not depend on the execution policy or thread count.
IntegralValue integrate_weighted(const std::function<double(double)>& f, double p, double lo,
                                 double hi, const QuadratureConfig& cfg = {});

}  // namespace hrlab::quadrature
