#ifndef LRC_BOUNDS_FINITE_HPP
#define LRC_BOUNDS_FINITE_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace lrc {

/*
 * Pluggable upper bound on kopt(n, d, q), the largest dimension of any
 * length-n code with minimum distance d over a q-ary alphabet.  Every
 * variant returns 0 when n < d (a shorter code cannot hold two words at
 * distance d) and values are real, never rounded internally.
 */
class KOptProvider {
public:
    enum class Kind { singleton, plotkin, exact_table, custom };

    static KOptProvider singleton(int q);
    static KOptProvider plotkin(int q);
    // Table of exact values keyed by (n, d) for a fixed q; missing entries
    // raise std::out_of_range.
    static KOptProvider exact_table(int q, std::map<std::pair<int, int>, double> table);
    static KOptProvider custom(int q, std::function<double(int n, int d, int q)> fn);

    Kind kind() const { return kind_; }
    int q() const { return q_; }
    double eval(int n, int d) const;
    const std::map<std::pair<int, int>, double>& table() const { return table_; }

    static Kind parse_kind(const std::string& name);

private:
    Kind kind_ = Kind::singleton;
    int q_ = 2;
    std::map<std::pair<int, int>, double> table_;
    std::function<double(int, int, int)> custom_;
};

double kopt_upper(const KOptProvider& provider, int n, int d, int q);

struct BoundQuery {
    int n = 0, d = 0, q = 2, r = 1;

    void validate() const;
};

struct BoundResult {
    double k_bound = 0.0;
    int argmin_t = 0;
};

/*
 * Alphabet-aware upper bound on the dimension of an r-locally recoverable
 * (n, k, d) code over a q-ary alphabet:
 *
 *   k <= min over t of [ t*r + kopt(n - t(r+1), d, q) ],  t = 0..ceil(n/(r+1)).
 *
 * Negative residual lengths contribute 0; ties report the smallest t.
 */
BoundResult locality_dimension_bound(const BoundQuery& query, const KOptProvider& provider);

// d <= n - k - ceil(k/r) + 2, the locality generalization of Singleton.
int singleton_locality_distance_bound(int n, int k, int r);

// k <= r/(r+1) (n - d/(1-1/q)) + log_q(2 q d / (1-1/q)); real-valued.
double plotkin_locality_dimension_bound(int n, int d, int q, int r);

// Smallest r >= 1 not refuted by locality_dimension_bound for a claimed
// (n, k, d, q); returns n-1 when every r is refuted (inconsistent inputs).
int min_feasible_locality(int n, int k, int d, int q, const KOptProvider& provider);

/*
 * List-decoding variant: k <= min over t of [ t*r + kL(n - t(r+1), s) ]
 * where kL bounds the dimension of (s, L)-list decodable codes.  No
 * finite-length kL formula is built in; the caller supplies one.
 */
BoundResult list_locality_dimension_bound(int n, int s, int q, int r, int L,
                                          const std::function<double(int, int)>& kl_provider);

} // namespace lrc

#endif
