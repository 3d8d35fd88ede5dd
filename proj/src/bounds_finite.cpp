#include "lrc/bounds_finite.hpp"

#include <cmath>
#include <stdexcept>

namespace lrc {

KOptProvider KOptProvider::singleton(int q) {
    KOptProvider p;
    p.kind_ = Kind::singleton;
    p.q_ = q;
    return p;
}

KOptProvider KOptProvider::plotkin(int q) {
    KOptProvider p;
    p.kind_ = Kind::plotkin;
    p.q_ = q;
    return p;
}

KOptProvider KOptProvider::exact_table(int q, std::map<std::pair<int, int>, double> table) {
    KOptProvider p;
    p.kind_ = Kind::exact_table;
    p.q_ = q;
    p.table_ = std::move(table);
    return p;
}

KOptProvider KOptProvider::custom(int q, std::function<double(int, int, int)> fn) {
    KOptProvider p;
    p.kind_ = Kind::custom;
    p.q_ = q;
    p.custom_ = std::move(fn);
    return p;
}

KOptProvider::Kind KOptProvider::parse_kind(const std::string& name) {
    if (name == "singleton") return Kind::singleton;
    if (name == "plotkin") return Kind::plotkin;
    if (name == "exact" || name == "exact-table") return Kind::exact_table;
    if (name == "custom") return Kind::custom;
    throw std::invalid_argument("unknown kopt provider: " + name);
}

double KOptProvider::eval(int n, int d) const {
    if (d < 1) throw std::invalid_argument("distance must be positive");
    if (n < d) return 0.0; // at most one codeword fits
    const double qd = (double)q_;
    switch (kind_) {
        case Kind::singleton:
            return (double)(n - d + 1);
        case Kind::plotkin: {
            const double frac = 1.0 - 1.0 / qd;
            // Inside the Plotkin regime the bound is log_q(d / (d - n(1-1/q)));
            // above it, shorten down to the regime boundary n0 = d/(1-1/q) and
            // add one dimension per dropped coordinate.
            if ((double)n * frac < (double)d)
                return std::log((double)d / ((double)d - (double)n * frac)) / std::log(qd);
            const double n0 = (double)d / frac;
            return ((double)n - n0) + std::log(2.0 * qd * (double)d / frac) / std::log(qd);
        }
        case Kind::exact_table: {
            auto it = table_.find({n, d});
            if (it == table_.end())
                throw std::out_of_range("kopt table miss at (n=" + std::to_string(n) +
                                        ", d=" + std::to_string(d) + ")");
            return it->second;
        }
        case Kind::custom:
            return std::max(custom_(n, d, q_), 0.0);
    }
    throw std::logic_error("unreachable provider kind");
}

double kopt_upper(const KOptProvider& provider, int n, int d, int q) {
    if (q != provider.q()) throw std::invalid_argument("provider built for a different alphabet size");
    if (n < 0) return 0.0;
    return provider.eval(n, d);
}

void BoundQuery::validate() const {
    if (n < 1) throw std::invalid_argument("length must be positive");
    if (d < 1 || d > n) throw std::invalid_argument("require 1 <= d <= n");
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (r < 1 || r > n - 1) throw std::invalid_argument("require 1 <= r <= n-1");
}

BoundResult locality_dimension_bound(const BoundQuery& query, const KOptProvider& provider) {
    query.validate();
    const int t_max = (query.n + query.r) / (query.r + 1); // ceil(n / (r+1))
    BoundResult best;
    best.k_bound = std::numeric_limits<double>::infinity();
    for (int t = 0; t <= t_max; ++t) {
        const int residual = query.n - t * (query.r + 1);
        const double tail = residual > 0
                                ? std::max(kopt_upper(provider, residual, query.d, query.q), 0.0)
                                : 0.0;
        const double value = (double)t * query.r + tail;
        if (value < best.k_bound) {
            best.k_bound = value;
            best.argmin_t = t;
        }
    }
    return best;
}

int singleton_locality_distance_bound(int n, int k, int r) {
    if (k < 1 || k > n) throw std::invalid_argument("require 1 <= k <= n");
    if (r < 1 || r > k) throw std::invalid_argument("require 1 <= r <= k");
    const int ceil_kr = (k + r - 1) / r;
    return n - k - ceil_kr + 2;
}

double plotkin_locality_dimension_bound(int n, int d, int q, int r) {
    if (n < 1 || d < 1 || q < 2 || r < 1) throw std::invalid_argument("bad bound arguments");
    const double frac = 1.0 - 1.0 / (double)q;
    const double lead = (double)r / (r + 1) * ((double)n - (double)d / frac);
    const double tail = std::log(2.0 * q * (double)d / frac) / std::log((double)q);
    return lead + tail;
}

int min_feasible_locality(int n, int k, int d, int q, const KOptProvider& provider) {
    if (n < 2) throw std::invalid_argument("length must be at least 2");
    for (int r = 1; r <= n - 1; ++r) {
        BoundQuery query{n, d, q, r};
        if (locality_dimension_bound(query, provider).k_bound >= (double)k - 1e-9) return r;
    }
    return n - 1; // every locality refuted: inputs are inconsistent
}

BoundResult list_locality_dimension_bound(int n, int s, int q, int r, int L,
                                          const std::function<double(int, int)>& kl_provider) {
    if (n < 1 || s < 0 || q < 2 || r < 1 || L < 1) throw std::invalid_argument("bad bound arguments");
    if (!kl_provider) throw std::invalid_argument("a list-decoding kL provider is required");
    const int t_max = (n + r) / (r + 1);
    BoundResult best;
    best.k_bound = std::numeric_limits<double>::infinity();
    for (int t = 0; t <= t_max; ++t) {
        const int residual = n - t * (r + 1);
        const double tail = residual > 0 ? std::max(kl_provider(residual, s), 0.0) : 0.0;
        const double value = (double)t * r + tail;
        if (value < best.k_bound) {
            best.k_bound = value;
            best.argmin_t = t;
        }
    }
    return best;
}

} // namespace lrc
