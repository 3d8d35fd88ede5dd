#ifndef LRC_BOUNDS_ASYMPTOTIC_HPP
#define LRC_BOUNDS_ASYMPTOTIC_HPP

#include <functional>
#include <string>
#include <vector>

namespace lrc {

// q-ary entropy H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x), with
// 0 log 0 = 0.  Domain [0, 1], range [0, 1], maximum 1 at x = 1 - 1/q.
double entropy_q(double x, int q);

// Unique x in [0, 1-1/q] with H_q(x) = y, bisected to |H_q(x) - y| <= 1e-12.
double inv_entropy_q(double y, int q);

/*
 * Asymptotic rate bound R(delta) used as the locality-unaware ingredient of
 * the converse.  Variants carry their own natural validity clamps:
 * singleton stays max(0, 1-delta) on all of [0, 1]; plotkin and gv vanish at
 * delta = 1-1/q by formula; mrrw2 (binary only) is defined on [0, 1/2] and
 * clamped to 0 beyond.
 */
struct RoptProvider {
    enum class Kind { singleton, plotkin, gv, mrrw2, custom };

    Kind kind = Kind::singleton;
    std::function<double(double)> custom_fn;

    static RoptProvider singleton() { return {Kind::singleton, {}}; }
    static RoptProvider plotkin() { return {Kind::plotkin, {}}; }
    static RoptProvider gv() { return {Kind::gv, {}}; }
    static RoptProvider mrrw2() { return {Kind::mrrw2, {}}; }
    static RoptProvider custom(std::function<double(double)> fn) {
        return {Kind::custom, std::move(fn)};
    }
};

double ropt_eval(const RoptProvider& provider, double delta, int q);

/*
 * Locality-aware converse: numerical minimum over x in [0, r/(r+1)] of
 *
 *   x + (1 - x(1+1/r)) * Ropt( delta / (1 - x(1+1/r)) ).
 *
 * Dense grid (step 1e-4) plus local ternary refinement to 1e-8 in x;
 * unimodality is not assumed.
 */
double converse_rate(double delta, int r, int q, const RoptProvider& provider);

enum class AchievableMode { optimize, substitute };

/*
 * Random-ensemble achievable rate.  optimize mode runs the Chernoff-exponent
 * optimization over x in (0, 1]; substitute mode evaluates the closed form
 * obtained at x = delta / ((q-1)(1-delta)):
 *
 *   1 - H_q(delta) - 1/(r+1) log_q(1 + (q-1)(1 - delta q/(q-1))^(r+1)).
 *
 * Returns 0 for delta >= 1 - 1/q; results clamped to [0, 1].
 */
double achievable_rate(double delta, int r, int q, AchievableMode mode);

// max(r/(r+1) - H_q(delta), 0): rate of a distance-optimal parity matrix
// augmented with ceil(n/(r+1)) disjoint local parities.
double gv_parity_rate(double delta, int r, int q);

// List-decoding converse: 1 - max over x in [0, r/(r+1)] of
// [ x/r + (1 - x(1+1/r)) H_q(sigma / (1 - x(1+1/r))) ], with H_q read as 1
// once its argument passes 1 - 1/q.
double list_converse_rate(double sigma, int r, int q);

struct CurvePoint {
    double delta = 0.0;
    double rate = 0.0;
    std::string series;
};

// Known series labels: eq1-singleton, plotkin-applied, converse-mrrw,
// converse-gv, achievable-eq5, gv-parity, list-converse.
const std::vector<std::string>& curve_series_names();

// Evaluate one series at one point.  Every series reports 0 at
// delta >= 1 - 1/q.
double curve_value(const std::string& series, double delta, int r, int q);

std::vector<CurvePoint> sample_curves(const std::vector<std::string>& series, int r, int q,
                                      const std::vector<double>& delta_grid);

std::vector<double> make_delta_grid(double lo, double hi, double step);

} // namespace lrc

#endif
