#include "lrc/code.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

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

int bits_per_symbol(int q) { return std::bit_width((unsigned)(q - 1)); }

bool packable(int q, std::size_t positions) {
    return positions * bits_per_symbol(q) <= 64;
}

std::uint64_t pack_positions(std::span<const felem> word, std::span<const int> coords, int bits) {
    std::uint64_t key = 0;
    for (int c : coords) key = (key << bits) | word[c];
    return key;
}

std::vector<std::vector<felem>> distinct_words(const Codebook& code) {
    std::vector<std::vector<felem>> w = code.words;
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
}

} // namespace

Codebook::Codebook(Field f, int length, std::vector<std::vector<felem>> w)
    : field(std::move(f)), n(length), words(std::move(w)) {
    if (n < 0) throw std::invalid_argument("negative code length");
    for (const auto& word : words) {
        if ((int)word.size() != n) throw std::invalid_argument("codeword length mismatch");
        for (felem v : word) field.check_element(v);
    }
}

LinearCode LinearCode::make(Field f, Matrix g, std::optional<Matrix> h) {
    LinearCode code = make_unchecked(std::move(f), std::move(g), std::move(h));
    if (rank(code.field, code.gen) != code.k())
        throw std::invalid_argument("generator matrix is not full row rank");
    if (code.parity && !is_zero_matrix(mat_mul_transpose(code.field, code.gen, *code.parity)))
        throw std::invalid_argument("generator and parity matrices are not orthogonal");
    return code;
}

LinearCode LinearCode::make_unchecked(Field f, Matrix g, std::optional<Matrix> h) {
    if (g.empty() || g[0].empty()) throw std::invalid_argument("empty generator matrix");
    for (const auto& row : g) {
        if (row.size() != g[0].size()) throw std::invalid_argument("ragged generator matrix");
        for (felem v : row) f.check_element(v);
    }
    if (h) {
        for (const auto& row : *h) {
            if (row.size() != g[0].size()) throw std::invalid_argument("parity matrix width mismatch");
            for (felem v : row) f.check_element(v);
        }
    }
    return LinearCode(std::move(f), std::move(g), std::move(h));
}

int RepairProfile::locality() const {
    int r = 0;
    for (const auto& s : sets) r = std::max(r, (int)s.size());
    return r;
}

std::size_t distinct_count(const Codebook& code) { return distinct_words(code).size(); }

std::size_t duplicate_count(const Codebook& code) {
    return code.words.size() - distinct_count(code);
}

double dimension(const Codebook& code) {
    std::size_t d = distinct_count(code);
    if (d == 0) throw std::invalid_argument("empty codebook has no dimension");
    return std::log((double)d) / std::log((double)code.field.order());
}

int min_distance(const Codebook& code, const SearchLimits& limits) {
    std::vector<std::vector<felem>> words = distinct_words(code);
    const std::size_t count = words.size();
    if (count < 2) return infinite_distance;
    if (count > limits.max_enumeration)
        throw BudgetExceeded("too many distinct codewords for pairwise distance scan");

    const int n = code.n;
    std::vector<felem> flat(count * n);
    for (std::size_t i = 0; i < count; ++i)
        std::copy(words[i].begin(), words[i].end(), flat.begin() + i * n);

    Deadline deadline(limits.wall_seconds);
    std::atomic<bool> timeout{false};
    int best = infinite_distance;

#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
    for (std::int64_t i = 0; i < (std::int64_t)count; ++i) {
        if (timeout.load(std::memory_order_relaxed)) continue;
        if ((i & 63) == 0 && deadline.expired()) {
            timeout.store(true, std::memory_order_relaxed);
            continue;
        }
        const felem* wi = flat.data() + i * n;
        for (std::size_t j = i + 1; j < count; ++j) {
            const felem* wj = flat.data() + j * n;
            int d = 0;
            for (int t = 0; t < n; ++t) d += wi[t] != wj[t];
            if (d < best) best = d;
        }
    }
    if (timeout.load()) throw BudgetExceeded("wall-clock budget exceeded in pairwise distance scan");
    return best;
}

namespace {

// Scaled generator rows: scaled[i][s] = s * row_i, indexed by element index s.
std::vector<std::vector<std::vector<felem>>> scale_rows(const LinearCode& c) {
    const Field& f = c.field;
    int q = f.order(), n = c.n(), k = c.k();
    std::vector<std::vector<std::vector<felem>>> scaled(
        k, std::vector<std::vector<felem>>(q, std::vector<felem>(n)));
    for (int i = 0; i < k; ++i)
        for (int s = 0; s < q; ++s)
            for (int j = 0; j < n; ++j) scaled[i][s][j] = f.mul((felem)s, c.gen[i][j]);
    return scaled;
}

std::uint64_t checked_message_count(const LinearCode& c, const SearchLimits& limits,
                                    const char* what) {
    const std::uint64_t q = (std::uint64_t)c.field.order();
    std::uint64_t total = 1;
    for (int i = 0; i < c.k(); ++i) {
        if (total > limits.max_enumeration / q) throw BudgetExceeded(what);
        total *= q;
    }
    if (total > limits.max_enumeration) throw BudgetExceeded(what);
    return total;
}

// Visit messages [begin, end) in counting order, maintaining the codeword
// incrementally from the scaled-row table.
template <class Visit>
void scan_messages(const LinearCode& c,
                   const std::vector<std::vector<std::vector<felem>>>& scaled,
                   std::uint64_t begin, std::uint64_t end, Visit&& visit) {
    const Field& f = c.field;
    const int q = f.order(), n = c.n(), k = c.k();

    std::vector<felem> digits(k, 0);
    std::uint64_t rem = begin;
    for (int i = 0; i < k && rem > 0; ++i) {
        digits[i] = (felem)(rem % q);
        rem /= q;
    }
    std::vector<felem> cw(n, 0);
    for (int i = 0; i < k; ++i) {
        if (digits[i] == 0) continue;
        const std::vector<felem>& row = scaled[i][digits[i]];
        for (int j = 0; j < n; ++j) cw[j] = f.add(cw[j], row[j]);
    }

    for (std::uint64_t idx = begin; idx < end; ++idx) {
        visit(idx, std::span<const felem>(cw));
        if (idx + 1 == end) break;
        int pos = 0;
        while (true) {
            felem a = digits[pos];
            felem b = (a + 1 < q) ? (felem)(a + 1) : (felem)0;
            felem delta = f.sub(b, a);
            const std::vector<felem>& row = scaled[pos][delta];
            for (int j = 0; j < n; ++j) cw[j] = f.add(cw[j], row[j]);
            digits[pos] = b;
            if (b != 0) break;
            ++pos;
        }
    }
}

} // namespace

int min_distance(const LinearCode& code, const SearchLimits& limits) {
    std::uint64_t total = checked_message_count(code, limits, "message space too large for weight scan");
    if (total < 2) return infinite_distance;
    auto scaled = scale_rows(code);
    const int n = code.n();

    int best = infinite_distance;
#pragma omp parallel reduction(min : best)
    {
        int threads = 1, tid = 0;
#ifdef _OPENMP
        threads = omp_get_num_threads();
        tid = omp_get_thread_num();
#endif
        std::uint64_t lo = 1 + (total - 1) * tid / threads;
        std::uint64_t hi = 1 + (total - 1) * (tid + 1) / threads;
        scan_messages(code, scaled, lo, hi, [&](std::uint64_t, std::span<const felem> cw) {
            int w = 0;
            for (int j = 0; j < n; ++j) w += cw[j] != 0;
            if (w < best) best = w;
        });
    }
    return best;
}

std::uint64_t projection_count(const Codebook& code, std::span<const int> coords) {
    for (int c : coords)
        if (c < 0 || c >= code.n) throw std::invalid_argument("coordinate out of range");
    if (coords.empty()) return code.words.empty() ? 0 : 1;
    const int q = code.field.order();
    if (packable(q, coords.size())) {
        const int bits = bits_per_symbol(q);
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(code.words.size() * 2);
        for (const auto& w : code.words) seen.insert(pack_positions(w, coords, bits));
        return seen.size();
    }
    std::set<std::vector<felem>> seen;
    for (const auto& w : code.words) {
        std::vector<felem> proj(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i) proj[i] = w[coords[i]];
        seen.insert(std::move(proj));
    }
    return seen.size();
}

double projection_entropy(const Codebook& code, std::span<const int> coords) {
    std::uint64_t count = projection_count(code, coords);
    if (count == 0) return 0.0;
    return std::log((double)count) / std::log((double)code.field.order());
}

bool verify_repair_set(const Codebook& code, int i, std::span<const int> repair) {
    if (i < 0 || i >= code.n) throw std::invalid_argument("coordinate out of range");
    for (int c : repair) {
        if (c < 0 || c >= code.n) throw std::invalid_argument("repair coordinate out of range");
        if (c == i) throw std::invalid_argument("repair set contains the repaired coordinate");
    }
    const int q = code.field.order();
    if (packable(q, repair.size())) {
        const int bits = bits_per_symbol(q);
        std::unordered_map<std::uint64_t, felem> value;
        value.reserve(code.words.size() * 2);
        for (const auto& w : code.words) {
            auto [it, inserted] = value.try_emplace(pack_positions(w, repair, bits), w[i]);
            if (!inserted && it->second != w[i]) return false;
        }
        return true;
    }
    std::map<std::vector<felem>, felem> value;
    for (const auto& w : code.words) {
        std::vector<felem> proj(repair.size());
        for (std::size_t t = 0; t < repair.size(); ++t) proj[t] = w[repair[t]];
        auto [it, inserted] = value.try_emplace(std::move(proj), w[i]);
        if (!inserted && it->second != w[i]) return false;
    }
    return true;
}

bool validate_profile(const Codebook& code, const RepairProfile& profile) {
    if ((int)profile.sets.size() != code.n) return false;
    for (int i = 0; i < code.n; ++i) {
        for (int c : profile.sets[i])
            if (c == i || c < 0 || c >= code.n) return false;
        if (!verify_repair_set(code, i, profile.sets[i])) return false;
    }
    return true;
}

namespace {

bool next_combination(std::vector<int>& idx, int pool) {
    int s = (int)idx.size();
    for (int i = s - 1; i >= 0; --i) {
        if (idx[i] < pool - (s - i)) {
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

LocalityResult locality_of(const Codebook& code, const SearchLimits& limits) {
    const int n = code.n;
    if (n < 1) throw std::invalid_argument("empty code has no locality");
    LocalityResult out;
    out.profile.sets.assign(n, {});
    if (distinct_count(code) < 2) return out; // every coordinate vacuously repairable

    Deadline deadline(limits.wall_seconds);
    std::atomic<std::uint64_t> tried{0};
    std::atomic<bool> over_budget{false}, timeout{false};
    std::vector<signed char> unrecoverable(n, 0);

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        if (over_budget.load(std::memory_order_relaxed) || timeout.load(std::memory_order_relaxed))
            continue;
        std::vector<int> pool;
        pool.reserve(n - 1);
        for (int c = 0; c < n; ++c)
            if (c != i) pool.push_back(c);
        // A coordinate with no repair set at all (two codewords differ only
        // there) fails on the full complement; detect it before searching.
        if (!verify_repair_set(code, i, pool)) {
            unrecoverable[i] = 1;
            continue;
        }
        bool found = false;
        for (int s = 1; s <= n - 1 && !found; ++s) {
            std::vector<int> idx(s);
            for (int t = 0; t < s; ++t) idx[t] = t;
            std::vector<int> subset(s);
            while (true) {
                if (deadline.expired()) {
                    timeout.store(true, std::memory_order_relaxed);
                    break;
                }
                if (tried.fetch_add(1, std::memory_order_relaxed) >= limits.max_subsets) {
                    over_budget.store(true, std::memory_order_relaxed);
                    break;
                }
                for (int t = 0; t < s; ++t) subset[t] = pool[idx[t]];
                if (verify_repair_set(code, i, subset)) {
                    out.profile.sets[i] = subset;
                    found = true;
                    break;
                }
                if (!next_combination(idx, n - 1)) break;
            }
            if (timeout.load(std::memory_order_relaxed) || over_budget.load(std::memory_order_relaxed))
                break;
        }
    }
    if (timeout.load()) throw BudgetExceeded("wall-clock budget exceeded in locality search");
    if (over_budget.load()) throw BudgetExceeded("repair-set candidate budget exceeded in locality search");
    for (int i = 0; i < n; ++i)
        if (unrecoverable[i])
            throw std::domain_error("coordinate admits no repair set (minimum distance is 1)");
    out.r = out.profile.locality();
    return out;
}

LocalityResult locality_of(const LinearCode& code, const SearchLimits& limits) {
    return locality_of(expand_codebook(code, limits), limits);
}

felem repair_erasure(const Codebook& code, std::span<const felem> word, int erased,
                     const RepairProfile& profile) {
    if (erased < 0 || erased >= code.n) throw std::invalid_argument("erased coordinate out of range");
    if ((int)word.size() != code.n) throw std::invalid_argument("word length mismatch");
    if ((int)profile.sets.size() != code.n) throw std::invalid_argument("profile size mismatch");
    const std::vector<int>& repair = profile.sets[erased];
    for (const auto& w : code.words) {
        bool match = true;
        for (int c : repair)
            if (w[c] != word[c]) {
                match = false;
                break;
            }
        if (match) return w[erased];
    }
    throw std::invalid_argument("projection not found: word is not consistent with the code");
}

std::vector<int> build_core_set(const Codebook& code, const RepairProfile& profile, int t) {
    const int n = code.n;
    if ((int)profile.sets.size() != n) throw std::invalid_argument("profile size mismatch");
    const int r = profile.locality();
    const double k = dimension(code);
    if (t < 1) throw std::invalid_argument("t must be positive");
    if (r > 0 && (double)t * r > k + 1e-9)
        throw std::invalid_argument("t exceeds k/r");
    if ((std::int64_t)t * (r + 1) > n)
        throw std::invalid_argument("code too short: need n >= t(r+1)");

    std::vector<bool> in_set(n, false);
    std::vector<int> chosen;
    auto smallest_fresh = [&]() {
        for (int c = 0; c < n; ++c)
            if (!in_set[c]) return c;
        return -1;
    };
    for (int step = 1; step <= t; ++step) {
        int a = smallest_fresh();
        if (a < 0) throw std::invalid_argument("cannot pick a fresh coordinate");
        in_set[a] = true;
        chosen.push_back(a);
        for (int c : profile.sets[a])
            if (!in_set[c]) {
                in_set[c] = true;
                chosen.push_back(c);
            }
        while ((int)chosen.size() < step * (r + 1)) {
            int pad = smallest_fresh();
            if (pad < 0) throw std::invalid_argument("cannot pad core set");
            in_set[pad] = true;
            chosen.push_back(pad);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

Codebook shorten_best_prefix(const Codebook& code, std::span<const int> coords, double m) {
    if (projection_entropy(code, coords) > m + 1e-9)
        throw std::invalid_argument("H(I) exceeds m");
    std::vector<bool> dropped(code.n, false);
    for (int c : coords) {
        if (c < 0 || c >= code.n) throw std::invalid_argument("coordinate out of range");
        dropped[c] = true;
    }
    std::vector<int> keep;
    for (int c = 0; c < code.n; ++c)
        if (!dropped[c]) keep.push_back(c);

    // Group distinct codewords by their projection onto I; ordered keys make
    // the maximal-group tiebreak (smallest prefix) deterministic.
    std::vector<std::vector<felem>> words = distinct_words(code);
    std::map<std::vector<felem>, std::vector<std::size_t>> groups;
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::vector<felem> prefix(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i) prefix[i] = words[w][coords[i]];
        groups[prefix].push_back(w);
    }
    const std::vector<std::size_t>* best = nullptr;
    for (const auto& [prefix, members] : groups)
        if (!best || members.size() > best->size()) best = &members;
    if (!best) throw std::invalid_argument("empty codebook");

    std::vector<std::vector<felem>> suffixes;
    suffixes.reserve(best->size());
    for (std::size_t w : *best) {
        std::vector<felem> suffix(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) suffix[i] = words[w][keep[i]];
        suffixes.push_back(std::move(suffix));
    }
    return Codebook(code.field, (int)keep.size(), std::move(suffixes));
}

std::vector<felem> encode(const LinearCode& code, std::span<const felem> message) {
    if ((int)message.size() != code.k()) throw std::invalid_argument("message length mismatch");
    for (felem v : message) code.field.check_element(v);
    return vec_mat_mul(code.field, message, code.gen);
}

Codebook expand_codebook(const LinearCode& code, const SearchLimits& limits) {
    std::uint64_t total = checked_message_count(code, limits, "message space too large to expand");
    auto scaled = scale_rows(code);
    std::vector<std::vector<felem>> words;
    words.reserve(total);
    scan_messages(code, scaled, 0, total, [&](std::uint64_t, std::span<const felem> cw) {
        words.emplace_back(cw.begin(), cw.end());
    });
    return Codebook(code.field, code.n(), std::move(words));
}

std::vector<std::uint64_t> projection_counts_all_subsets(const Codebook& code) {
    const int n = code.n;
    const int q = code.field.order();
    if (n > 16) throw std::invalid_argument("subset enumeration limited to n <= 16");
    if (!packable(q, n)) throw std::invalid_argument("alphabet too large for packed subset scan");
    const int bits = bits_per_symbol(q);

    std::vector<std::uint64_t> packed(code.words.size());
    for (std::size_t w = 0; w < code.words.size(); ++w) {
        std::uint64_t key = 0;
        for (int c = 0; c < n; ++c) key |= (std::uint64_t)code.words[w][c] << (bits * c);
        packed[w] = key;
    }

    const std::uint64_t masks = 1ull << n;
    std::vector<std::uint64_t> counts(masks, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> scratch(packed.size());
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t mask = 0; mask < (std::int64_t)masks; ++mask) {
            std::uint64_t sym_mask = 0;
            for (int c = 0; c < n; ++c)
                if (mask >> c & 1) sym_mask |= ((1ull << bits) - 1) << (bits * c);
            for (std::size_t w = 0; w < packed.size(); ++w) scratch[w] = packed[w] & sym_mask;
            std::sort(scratch.begin(), scratch.end());
            counts[mask] = std::unique(scratch.begin(), scratch.end()) - scratch.begin();
        }
    }
    return counts;
}

bool projection_counts_submodular(const Codebook& code) {
    if (code.n > 13) throw std::invalid_argument("pairwise subset scan limited to n <= 13");
    std::vector<std::uint64_t> counts = projection_counts_all_subsets(code);
    const std::uint64_t masks = (std::uint64_t)counts.size();
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t m1 = 0; m1 < (std::int64_t)masks; ++m1) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        for (std::uint64_t m2 = 0; m2 < masks; ++m2) {
            if (counts[m1] * counts[m2] < counts[m1 | m2] * counts[m1 & m2]) {
                ok.store(false, std::memory_order_relaxed);
                break;
            }
        }
    }
    return ok.load();
}

} // namespace lrc
