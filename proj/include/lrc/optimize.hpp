#ifndef LRC_OPTIMIZE_HPP
#define LRC_OPTIMIZE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lrc {

/*
 * Deterministic 1-D minimizer: dense grid over [lo, hi] including both
 * endpoints, then ternary polish inside the bracket around the best grid
 * point.  Unimodality is not assumed; the polish is local only.  Extra
 * candidate points can be injected (e.g. a known closed-form optimum) so the
 * result never loses to them.
 */
struct OptResult {
    double x = 0.0;
    double value = 0.0;
};

template <class F>
OptResult minimize_on(F&& f, double lo, double hi, const std::vector<double>& extra = {},
                      double grid_step = 1e-4, double refine_tol = 1e-8) {
    if (!(hi >= lo)) throw std::invalid_argument("empty optimization interval");
    const int steps = std::max(1, (int)std::ceil((hi - lo) / grid_step));
    double best_x = lo, best_v = f(lo);
    for (int i = 1; i <= steps; ++i) {
        const double x = lo + (hi - lo) * i / steps;
        const double v = f(x);
        if (v < best_v) {
            best_v = v;
            best_x = x;
        }
    }
    for (double x : extra) {
        if (x < lo || x > hi) continue;
        const double v = f(x);
        if (v < best_v) {
            best_v = v;
            best_x = x;
        }
    }
    double a = std::max(lo, best_x - (hi - lo) / steps);
    double b = std::min(hi, best_x + (hi - lo) / steps);
    while (b - a > refine_tol) {
        const double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
        if (f(m1) <= f(m2))
            b = m2;
        else
            a = m1;
    }
    const double mid = 0.5 * (a + b);
    const double mid_v = f(mid);
    if (mid_v < best_v) return {mid, mid_v};
    return {best_x, best_v};
}

template <class F>
OptResult maximize_on(F&& f, double lo, double hi, const std::vector<double>& extra = {},
                      double grid_step = 1e-4, double refine_tol = 1e-8) {
    OptResult r = minimize_on([&](double x) { return -f(x); }, lo, hi, extra, grid_step, refine_tol);
    return {r.x, -r.value};
}

} // namespace lrc

#endif
