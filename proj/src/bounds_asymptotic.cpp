#include "lrc/bounds_asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "lrc/optimize.hpp"

namespace lrc {

namespace {

constexpr double grid_step = 1e-4;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

} // namespace

double entropy_q(double x, int q) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("entropy argument outside [0, 1]");
    const double lq = std::log((double)q);
    double v = x * std::log((double)(q - 1)) / lq;
    if (x > 0.0) v -= x * std::log(x) / lq;
    if (x < 1.0) v -= (1.0 - x) * std::log(1.0 - x) / lq;
    return v;
}

double inv_entropy_q(double y, int q) {
    if (y < 0.0 || y > 1.0) throw std::invalid_argument("entropy value outside [0, 1]");
    double lo = 0.0, hi = 1.0 - 1.0 / (double)q;
    if (y == 1.0) return hi; // the maximum; bisection is ill-conditioned there
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (entropy_q(mid, q) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double ropt_eval(const RoptProvider& provider, double delta, int q) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (delta < 0.0) throw std::invalid_argument("negative relative distance");
    const double plotkin_limit = 1.0 - 1.0 / (double)q;
    switch (provider.kind) {
        case RoptProvider::Kind::singleton:
            return clamp01(1.0 - delta);
        case RoptProvider::Kind::plotkin:
            return clamp01(1.0 - delta / plotkin_limit);
        case RoptProvider::Kind::gv:
            if (delta >= plotkin_limit) return 0.0;
            return clamp01(1.0 - entropy_q(delta, q));
        case RoptProvider::Kind::mrrw2:
            if (q != 2) throw std::invalid_argument("mrrw2 is defined for binary codes only");
            if (delta >= 0.5) return 0.0;
            return clamp01(entropy_q(0.5 - std::sqrt(delta * (1.0 - delta)), 2));
        case RoptProvider::Kind::custom:
            if (!provider.custom_fn) throw std::invalid_argument("custom provider without function");
            if (delta > 1.0) return 0.0;
            return clamp01(provider.custom_fn(delta));
    }
    throw std::logic_error("unreachable provider kind");
}

double converse_rate(double delta, int r, int q, const RoptProvider& provider) {
    if (r < 1) throw std::invalid_argument("locality must be positive");
    if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("relative distance outside [0, 1]");
    const double x_max = (double)r / (r + 1);
    auto objective = [&](double x) {
        const double c = 1.0 - x * (1.0 + 1.0 / (double)r);
        if (c <= 0.0) return x;
        const double inner = delta / c;
        return x + c * ropt_eval(provider, inner, q);
    };
    return minimize_on(objective, 0.0, x_max).value;
}

namespace {

// Log_q of the per-symbol Chernoff factor of the block-parity ensembles:
// log_q(1 + x(q-1)) + 1/(r+1) log_q(1 + (q-1)((1-x)/(1+x(q-1)))^(r+1))
//   - delta log_q x.
double ensemble_exponent(double x, double delta, int r, int q) {
    const double lq = std::log((double)q);
    const double a = 1.0 + x * (q - 1);
    double v = std::log(a) / lq;
    v += std::log(1.0 + (q - 1) * std::pow((1.0 - x) / a, r + 1)) / ((r + 1) * lq);
    if (delta > 0.0) v -= delta * std::log(x) / lq;
    return v;
}

} // namespace

double achievable_rate(double delta, int r, int q, AchievableMode mode) {
    if (r < 1) throw std::invalid_argument("locality must be positive");
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("relative distance outside [0, 1]");
    const double plotkin_limit = 1.0 - 1.0 / (double)q;
    if (delta >= plotkin_limit) return 0.0;

    const double x_sub = delta / ((q - 1) * (1.0 - delta));
    if (mode == AchievableMode::substitute) {
        const double lq = std::log((double)q);
        const double base = 1.0 - delta * (double)q / (q - 1);
        const double v = 1.0 - entropy_q(delta, q) -
                         std::log(1.0 + (q - 1) * std::pow(base, r + 1)) / ((r + 1) * lq);
        return clamp01(v);
    }
    // delta = 0 kills the -delta log x term, so x = 0 is admissible there and
    // attains the r/(r+1) endpoint exactly.
    const double lo = delta == 0.0 ? 0.0 : grid_step;
    const double exponent =
        minimize_on([&](double x) { return ensemble_exponent(x, delta, r, q); }, lo, 1.0, {x_sub}).value;
    return clamp01(1.0 - exponent);
}

double gv_parity_rate(double delta, int r, int q) {
    if (r < 1) throw std::invalid_argument("locality must be positive");
    if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("relative distance outside [0, 1]");
    return std::max((double)r / (r + 1) - entropy_q(delta, q), 0.0);
}

double list_converse_rate(double sigma, int r, int q) {
    if (r < 1) throw std::invalid_argument("locality must be positive");
    if (sigma < 0.0 || sigma > 1.0) throw std::invalid_argument("radius outside [0, 1]");
    const double plotkin_limit = 1.0 - 1.0 / (double)q;
    const double x_max = (double)r / (r + 1);
    auto bracket = [&](double x) {
        const double c = 1.0 - x * (1.0 + 1.0 / (double)r);
        double h = 0.0;
        if (c > 0.0) {
            const double inner = sigma / c;
            h = c * (inner >= plotkin_limit ? 1.0 : entropy_q(inner, q));
        }
        return x / (double)r + h;
    };
    return clamp01(1.0 - maximize_on(bracket, 0.0, x_max).value);
}

const std::vector<std::string>& curve_series_names() {
    static const std::vector<std::string> names = {
        "eq1-singleton", "plotkin-applied", "converse-mrrw", "converse-gv",
        "achievable-eq5", "gv-parity",      "list-converse",
    };
    return names;
}

double curve_value(const std::string& series, double delta, int r, int q) {
    const double plotkin_limit = 1.0 - 1.0 / (double)q;
    // Curves describe codes, and no positive-rate code exists past the
    // Plotkin radius; every series reports 0 there.
    if (delta >= plotkin_limit) return 0.0;
    if (series == "eq1-singleton") return clamp01((double)r / (r + 1) * (1.0 - delta));
    if (series == "plotkin-applied") return clamp01((double)r / (r + 1) * (1.0 - delta / plotkin_limit));
    if (series == "converse-mrrw") return converse_rate(delta, r, q, RoptProvider::mrrw2());
    if (series == "converse-gv") return converse_rate(delta, r, q, RoptProvider::gv());
    if (series == "achievable-eq5") return achievable_rate(delta, r, q, AchievableMode::optimize);
    if (series == "gv-parity") return gv_parity_rate(delta, r, q);
    if (series == "list-converse") return list_converse_rate(delta, r, q);
    throw std::invalid_argument("unknown curve series: " + series);
}

std::vector<CurvePoint> sample_curves(const std::vector<std::string>& series, int r, int q,
                                      const std::vector<double>& delta_grid) {
    for (double d : delta_grid)
        if (d < 0.0 || d > 1.0) throw std::invalid_argument("grid point outside [0, 1]");
    for (const std::string& s : series)
        (void)curve_value(s, 0.0, r, q); // validate labels up front

    std::vector<CurvePoint> points(series.size() * delta_grid.size());
#pragma omp parallel for schedule(dynamic) collapse(2)
    for (std::int64_t si = 0; si < (std::int64_t)series.size(); ++si)
        for (std::int64_t di = 0; di < (std::int64_t)delta_grid.size(); ++di) {
            CurvePoint& p = points[si * delta_grid.size() + di];
            p.delta = delta_grid[di];
            p.series = series[si];
            p.rate = curve_value(series[si], delta_grid[di], r, q);
        }
    return points;
}

std::vector<double> make_delta_grid(double lo, double hi, double step) {
    if (step <= 0.0 || hi < lo) throw std::invalid_argument("bad grid parameters");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double x = lo + i * step;
        if (x > hi + 1e-12) break;
        grid.push_back(std::min(x, hi));
    }
    return grid;
}

} // namespace lrc
