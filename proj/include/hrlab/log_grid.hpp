#pragma once

#include <cmath>
#include <stdexcept>

namespace hrlab {

// Uniform grid in t = ln r. Power-law profiles are linear in t, so the
// truncation error of the variational problem decays with the log-range
// rather than the radial range.
struct LogGrid {
    LogGrid(double t_min_, double t_max_, int m_) : t_min(t_min_), t_max(t_max_), m(m_) {
        if (!(t_min < t_max)) throw std::invalid_argument("LogGrid: t_min < t_max required");
        if (m < 16) throw std::invalid_argument("LogGrid: at least 16 nodes required");
    }

    double t_min;
    double t_max;
    int m;  // node count, including both boundary nodes

    double dt() const { return (t_max - t_min) / (m - 1); }
    double t(int i) const { return t_min + i * dt(); }
    double r(int i) const { return std::exp(t(i)); }

    // r in [1e-7, 1e7], 4000 nodes.
    static LogGrid standard() {
        const double l10 = std::log(10.0);
        return LogGrid(-7.0 * l10, 7.0 * l10, 4000);
    }

    // Symmetric grid spanning `decades` powers of ten each side of r = 1.
    static LogGrid decades(double half_decades, int nodes) {
        const double l10 = std::log(10.0);
        return LogGrid(-half_decades * l10, half_decades * l10, nodes);
    }

    // Widen by `extra_decades` on each side keeping the spacing, so the
    // original grid embeds node-for-node into the extension.
    LogGrid extended(double extra_decades) const {
        const double h = dt();
        const int pad = static_cast<int>(std::ceil(extra_decades * std::log(10.0) / h));
        return LogGrid(t_min - pad * h, t_max + pad * h, m + 2 * pad);
    }
};

}  // namespace hrlab
