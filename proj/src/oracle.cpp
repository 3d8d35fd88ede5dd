#include "lrc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace lrc {

namespace {

using clock_type = std::chrono::steady_clock;

struct Deadline {
    clock_type::time_point end;
    explicit Deadline(double seconds)
        : end(clock_type::now() + std::chrono::duration_cast<clock_type::duration>(
                                      std::chrono::duration<double>(seconds))) {}
    bool expired() const { return clock_type::now() > end; }
};

int word_distance(std::uint32_t a, std::uint32_t b, int q, int n) {
    int d = 0;
    for (int i = 0; i < n; ++i) {
        if (a % q != b % q) ++d;
        a /= q;
        b /= q;
    }
    return d;
}

int word_weight(std::uint32_t a, int q, int n) {
    int w = 0;
    for (int i = 0; i < n; ++i) {
        if (a % q != 0) ++w;
        a /= q;
    }
    return w;
}

// Dynamic bitset rows for the candidate graph.
class BitRows {
public:
    BitRows(int vertices) : n_(vertices), stride_((vertices + 63) / 64), bits_((std::size_t)vertices * stride_, 0) {}
    void set(int i, int j) { bits_[(std::size_t)i * stride_ + j / 64] |= 1ull << (j % 64); }
    const std::uint64_t* row(int i) const { return bits_.data() + (std::size_t)i * stride_; }
    int stride() const { return stride_; }
    int size() const { return n_; }

private:
    int n_, stride_;
    std::vector<std::uint64_t> bits_;
};

/*
 * Ostergard-style exact maximum clique: process vertices in a fixed order,
 * maintain c[i] = clique number of the subgraph induced by {v_i..v_m-1},
 * and search for a clique of size c[i+1]+1 through v_i with early exit.
 * The c[] pruning closes Hamming-graph instances that defeat plain
 * branch-and-bound.
 */
struct CliqueSearch {
    const BitRows& adj;
    std::uint64_t nodes = 0;
    std::uint64_t node_budget;
    Deadline deadline;
    int max_size = 0;
    bool found = false;
    std::vector<int> c;
    std::deque<std::vector<std::uint64_t>> pool;

    CliqueSearch(const BitRows& graph, std::uint64_t budget, double seconds)
        : adj(graph), node_budget(budget), deadline(seconds) {}

    int run() {
        const int m = adj.size();
        const int stride = adj.stride();
        c.assign(m + 1, 0);
        for (int i = m - 1; i >= 0; --i) {
            found = false;
            std::vector<std::uint64_t> p(stride, 0);
            const std::uint64_t* ni = adj.row(i);
            for (int w = 0; w < stride; ++w) p[w] = ni[w];
            // keep only vertices after i
            mask_from(p, i + 1, m);
            search(p, 1, 0, i);
            c[i] = found ? c[i + 1] + 1 : c[i + 1];
        }
        return c[0];
    }

    void search(const std::vector<std::uint64_t>& p_in, int size, int depth, int /*root*/) {
        if (++nodes > node_budget) throw BudgetExceeded("clique node budget exceeded");
        if ((nodes & 2047) == 0 && deadline.expired())
            throw BudgetExceeded("wall-clock budget exceeded in clique search");
        const int stride = adj.stride();
        if ((int)pool.size() < depth + 1) pool.emplace_back(stride);
        std::vector<std::uint64_t>& p = pool[depth];
        p = p_in;

        int remaining = popcount(p, stride);
        if (remaining == 0) {
            if (size > max_size) {
                max_size = size;
                found = true;
            }
            return;
        }
        while (!found) {
            if (size + remaining <= max_size) return;
            int v = first_bit(p, stride);
            if (v < 0) return;
            if (size + c[v] <= max_size) return;
            std::vector<std::uint64_t> next(stride);
            const std::uint64_t* nv = adj.row(v);
            for (int w = 0; w < stride; ++w) next[w] = p[w] & nv[w];
            search(next, size + 1, depth + 1, v);
            clear_bit(p, v);
            --remaining;
        }
    }

    static int popcount(const std::vector<std::uint64_t>& bits, int stride) {
        int c2 = 0;
        for (int w = 0; w < stride; ++w) c2 += std::popcount(bits[w]);
        return c2;
    }
    static void mask_from(std::vector<std::uint64_t>& bits, int from, int m) {
        for (int v = 0; v < from && v < m; ++v) bits[v / 64] &= ~(1ull << (v % 64));
    }
    static int first_bit(const std::vector<std::uint64_t>& bits, int stride) {
        for (int w = 0; w < stride; ++w)
            if (bits[w]) return w * 64 + std::countr_zero(bits[w]);
        return -1;
    }
    static void clear_bit(std::vector<std::uint64_t>& bits, int v) {
        bits[v / 64] &= ~(1ull << (v % 64));
    }
};

// Maximum number of pairwise distance->= d words containing the zero word.
std::uint64_t max_code_size(int n, int d, int q, const SearchLimits& limits) {
    double log_space = n * std::log2((double)q);
    if (log_space > 20.0) throw BudgetExceeded("word space exceeds the 2^20 clique precondition");
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= (std::uint64_t)q;
    if (total > (1u << 14)) throw BudgetExceeded("word space too large for adjacency bitsets");

    // Candidates: words at distance >= d from zero, i.e. weight >= d.
    std::vector<std::uint32_t> cand;
    for (std::uint32_t w = 1; w < total; ++w)
        if (word_weight(w, q, n) >= d) cand.push_back(w);
    const int m = (int)cand.size();
    if (m == 0) return 1;

    BitRows adj(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (word_distance(cand[i], cand[j], q, n) >= d) {
                adj.set(i, j);
                adj.set(j, i);
            }

    CliqueSearch search(adj, limits.max_enumeration, limits.wall_seconds);
    int best = search.run();
    return (std::uint64_t)best + 1;
}

// Scan all systematic [I | A] generator matrices of dimension k.  Visits
// each code once; returns true when any passes the predicate.
template <class Predicate>
bool any_systematic_code(int n, int k, int q, const SearchLimits& limits, Predicate&& pred) {
    const int free_cells = k * (n - k);
    double log_count = free_cells * std::log2((double)q);
    if (log_count > 62) throw BudgetExceeded("systematic enumeration too large");
    std::uint64_t count = 1;
    for (int i = 0; i < free_cells; ++i) count *= (std::uint64_t)q;
    if (count > limits.max_enumeration) throw BudgetExceeded("systematic enumeration budget exceeded");

    Deadline deadline(limits.wall_seconds);
    std::atomic<bool> found{false}, timeout{false};
    std::exception_ptr first_error;

#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t idx = 0; idx < (std::int64_t)count; ++idx) {
        if (found.load(std::memory_order_relaxed) || timeout.load(std::memory_order_relaxed))
            continue;
        if ((idx & 255) == 0 && deadline.expired()) {
            timeout.store(true, std::memory_order_relaxed);
            continue;
        }
        Matrix gen(k, std::vector<felem>(n, 0));
        std::uint64_t rem = (std::uint64_t)idx;
        for (int row = 0; row < k; ++row) {
            gen[row][row] = 1;
            for (int col = k; col < n; ++col) {
                gen[row][col] = (felem)(rem % q);
                rem /= q;
            }
        }
        // exceptions must not unwind through the parallel region
        try {
            if (pred(gen)) found.store(true, std::memory_order_relaxed);
        } catch (...) {
#pragma omp critical(lrc_systematic_error)
            if (!first_error) first_error = std::current_exception();
            timeout.store(true, std::memory_order_relaxed);
        }
    }
    if (first_error) std::rethrow_exception(first_error);
    if (timeout.load()) throw BudgetExceeded("wall-clock budget exceeded in systematic enumeration");
    return found.load();
}

int min_weight_of_generator(const Field& field, const Matrix& gen, const SearchLimits& limits) {
    return min_distance(LinearCode::make_unchecked(field, gen), limits);
}

} // namespace

double exact_kopt(int n, int d, int q, const SearchLimits& limits, Restriction restriction) {
    if (n < 1 || d < 1 || q < 2) throw std::invalid_argument("bad kopt arguments");
    if (d > n) return 0.0;
    if (d == 1) return (double)n; // the whole space qualifies

    if (restriction == Restriction::unrestricted) {
        std::uint64_t m = max_code_size(n, d, q, limits);
        return std::log((double)m) / std::log((double)q);
    }

    auto [p, m] = factor_prime_power(q);
    Field field = Field::make(p, m);
    const int k_cap = n - d + 1;
    for (int k = k_cap; k >= 1; --k) {
        bool ok = any_systematic_code(n, k, q, limits, [&](const Matrix& gen) {
            return min_weight_of_generator(field, gen, limits) >= d;
        });
        if (ok) return (double)k;
    }
    return 0.0;
}

int best_lrc_dimension(int n, int d, int q, int r, const SearchLimits& limits) {
    if (n < 2 || d < 1 || d > n || q < 2 || r < 1) throw std::invalid_argument("bad search arguments");
    auto [p, m] = factor_prime_power(q);
    Field field = Field::make(p, m);
    const int k_cap = std::min(n - d + 1, n - 1);
    for (int k = k_cap; k >= 1; --k) {
        bool ok = any_systematic_code(n, k, q, limits, [&](const Matrix& gen) {
            LinearCode code = LinearCode::make_unchecked(field, gen);
            if (min_distance(code, limits) < d) return false;
            try {
                return locality_of(code, limits).r <= r;
            } catch (const std::domain_error&) {
                return false; // d = 1 coordinate; cannot happen with d >= 2 but stay safe
            }
        });
        if (ok) return k;
    }
    return 0;
}

int oracle_distance(const Codebook& code, const SearchLimits& limits) {
    const std::size_t m = code.words.size();
    if (m * m > limits.max_enumeration)
        throw BudgetExceeded("oracle distance pair budget exceeded");
    int best = infinite_distance;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (code.words[i] == code.words[j]) continue;
            int d = 0;
            for (int t = 0; t < code.n; ++t) d += code.words[i][t] != code.words[j][t];
            best = std::min(best, d);
        }
    return best;
}

int oracle_locality(const Codebook& code, const SearchLimits& limits) {
    const int n = code.n;
    std::uint64_t tried = 0;
    int r = 0;
    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (int s = 1; s <= n - 1 && !found; ++s) {
            // Lexicographic subsets of {0..n-1} \ {i} of size s.
            std::vector<int> pool;
            for (int c = 0; c < n; ++c)
                if (c != i) pool.push_back(c);
            std::vector<int> idx(s);
            for (int t = 0; t < s; ++t) idx[t] = t;
            while (true) {
                if (++tried > limits.max_subsets)
                    throw BudgetExceeded("oracle locality subset budget exceeded");
                bool valid = true;
                for (std::size_t a = 0; a < code.words.size() && valid; ++a)
                    for (std::size_t b = a + 1; b < code.words.size() && valid; ++b) {
                        if (code.words[a][i] == code.words[b][i]) continue;
                        bool repair_differs = false;
                        for (int t = 0; t < s; ++t)
                            if (code.words[a][pool[idx[t]]] != code.words[b][pool[idx[t]]]) {
                                repair_differs = true;
                                break;
                            }
                        if (!repair_differs) valid = false;
                    }
                if (valid) {
                    r = std::max(r, s);
                    found = true;
                    break;
                }
                int t = s - 1;
                while (t >= 0 && idx[t] == n - 1 - (s - t)) --t;
                if (t < 0) break;
                ++idx[t];
                for (int u = t + 1; u < s; ++u) idx[u] = idx[u - 1] + 1;
            }
        }
        if (!found) throw std::domain_error("coordinate admits no repair set (minimum distance is 1)");
    }
    return r;
}

KOptProvider make_exact_table(int q, const std::vector<std::pair<int, int>>& entries,
                              const SearchLimits& limits, Restriction restriction) {
    std::map<std::pair<int, int>, double> table;
    for (auto [n, d] : entries)
        if (!table.count({n, d})) table[{n, d}] = exact_kopt(n, d, q, limits, restriction);
    return KOptProvider::exact_table(q, std::move(table));
}

std::vector<std::pair<int, int>> residual_entries(int n, int d, int r) {
    std::vector<std::pair<int, int>> entries;
    const int t_max = (n + r) / (r + 1);
    for (int t = 0; t <= t_max; ++t) {
        const int residual = n - t * (r + 1);
        if (residual > 0 && residual >= d) entries.emplace_back(residual, d);
    }
    return entries;
}

void save_kopt_table(std::ostream& out, const KOptProvider& provider, Restriction restriction) {
    const char* label = restriction == Restriction::linear ? "linear" : "unrestricted";
    out << "q,n,d,kopt,restriction\n";
    for (const auto& [key, value] : provider.table())
        out << provider.q() << "," << key.first << "," << key.second << "," << value << ","
            << label << "\n";
}

KOptProvider load_kopt_table(std::istream& in, int expected_q) {
    std::map<std::pair<int, int>, double> table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.starts_with("q,")) continue;
        std::stringstream row(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (cells.size() < 4) throw std::invalid_argument("malformed kopt table row: " + line);
        int q = std::stoi(cells[0]);
        if (q != expected_q) continue;
        table[{std::stoi(cells[1]), std::stoi(cells[2])}] = std::stod(cells[3]);
    }
    return KOptProvider::exact_table(expected_q, std::move(table));
}

} // namespace lrc
