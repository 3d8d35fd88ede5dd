#include "lrc/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lrc/optimize.hpp"
#include "lrc/prng.hpp"

namespace lrc {

const Field& CodeArtifact::field() const {
    if (std::holds_alternative<LinearCode>(code)) return std::get<LinearCode>(code).field;
    return std::get<Codebook>(code).field;
}

int CodeArtifact::length() const {
    if (std::holds_alternative<LinearCode>(code)) return std::get<LinearCode>(code).n();
    return std::get<Codebook>(code).n;
}

Codebook CodeArtifact::to_codebook(const SearchLimits& limits) const {
    if (std::holds_alternative<Codebook>(code)) return std::get<Codebook>(code);
    return expand_codebook(std::get<LinearCode>(code), limits);
}

VerifyReport verify_artifact(const CodeArtifact& artifact, const SearchLimits& limits) {
    VerifyReport report;
    Codebook book = artifact.to_codebook(limits);
    report.measured_d = min_distance(book, limits);
    report.measured_k = dimension(book);
    try {
        report.measured_r = locality_of(book, limits).r;
    } catch (const std::domain_error&) {
        report.measured_r = -1; // some coordinate is unrecoverable
    }
    report.distance_ok = report.measured_d >= artifact.claims.d;
    report.locality_ok = report.measured_r >= 0 && report.measured_r <= artifact.claims.r;
    report.verified = report.distance_ok && report.locality_ok;
    return report;
}

// --- Simplex family ---------------------------------------------------------

Matrix simplex_generator(int m) {
    if (m < 2) throw std::invalid_argument("simplex construction needs m >= 2");
    const int n = (1 << m) - 1;
    Matrix g(m, std::vector<felem>(n, 0));
    for (int j = 1; j <= n; ++j)
        for (int i = 0; i < m; ++i) g[i][j - 1] = (felem)((j >> i) & 1);
    return g;
}

Matrix hamming_weight3_generator(int m) {
    if (m < 2) throw std::invalid_argument("simplex construction needs m >= 2");
    const int n = (1 << m) - 1;
    Matrix rows;
    for (int j = 1; j <= m - 1; ++j)
        for (int i = 1; i < (1 << j); ++i) {
            std::vector<felem> row(n, 0);
            row[i - 1] = 1;
            row[(1 << j) - 1] = 1;
            row[i + (1 << j) - 1] = 1;
            rows.push_back(std::move(row));
        }
    return rows;
}

CodeArtifact build_simplex(int m) {
    Matrix g = simplex_generator(m);
    Matrix h = hamming_weight3_generator(m);
    const int n = (1 << m) - 1;

    // First weight-3 row through each coordinate supplies its repair pair.
    RepairProfile profile;
    profile.sets.assign(n, {});
    for (int c = 0; c < n; ++c) {
        for (const auto& row : h) {
            if (row[c] == 0) continue;
            std::vector<int> mates;
            for (int t = 0; t < n; ++t)
                if (t != c && row[t] != 0) mates.push_back(t);
            profile.sets[c] = std::move(mates);
            break;
        }
    }

    CodeArtifact artifact(LinearCode::make(Field::make(2, 1), std::move(g), std::move(h)));
    artifact.construction = "simplex";
    artifact.params = {{"m", m}};
    artifact.profile = std::move(profile);
    artifact.claims = {n, (double)m, 1 << (m - 1), 2, 2};
    if (n <= 64) {
        try {
            artifact.verified = verify_artifact(artifact).verified;
        } catch (const BudgetExceeded&) {
            artifact.verified = false;
        }
    }
    return artifact;
}

// --- Parity augmentation ----------------------------------------------------

namespace {

// Contiguous blocks covering n coordinates: as many as ceil(n/(r+1)) of
// them, as equal as possible, none smaller than 2.
std::vector<std::pair<int, int>> parity_blocks(int n, int r) {
    const int wanted = (n + r) / (r + 1);
    const int blocks = std::max(1, std::min(wanted, n / 2));
    std::vector<std::pair<int, int>> out;
    int start = 0;
    const int base = n / blocks, rem = n % blocks;
    for (int b = 0; b < blocks; ++b) {
        const int size = base + (b < rem ? 1 : 0);
        out.emplace_back(start, size);
        start += size;
    }
    return out;
}

} // namespace

CodeArtifact gv_augment(const Field& field, const Matrix& base_parity, int r,
                        const SearchLimits& limits) {
    if (base_parity.empty() || base_parity[0].empty())
        throw std::invalid_argument("empty base parity matrix");
    const int n = (int)base_parity[0].size();
    if (n < 2) throw std::invalid_argument("base code must have length >= 2");
    if (r < 1) throw std::invalid_argument("locality must be positive");
    for (const auto& row : base_parity) {
        if ((int)row.size() != n) throw std::invalid_argument("ragged base parity matrix");
        for (felem v : row) field.check_element(v);
    }

    Matrix base_gen = null_space(field, base_parity);
    if (base_gen.empty()) throw std::domain_error("base parity matrix has a trivial null space");
    int base_d = min_distance(LinearCode::make(field, base_gen), limits);

    std::vector<std::pair<int, int>> blocks = parity_blocks(n, r);
    Matrix aug = base_parity;
    int max_block = 0;
    for (auto [start, size] : blocks) {
        std::vector<felem> row(n, 0);
        for (int c = start; c < start + size; ++c) row[c] = 1;
        aug.push_back(std::move(row));
        max_block = std::max(max_block, size);
    }

    Matrix gen = null_space(field, aug);
    if (gen.empty()) throw std::domain_error("augmented code has dimension 0");

    RepairProfile profile;
    profile.sets.assign(n, {});
    for (auto [start, size] : blocks)
        for (int c = start; c < start + size; ++c)
            for (int t = start; t < start + size; ++t)
                if (t != c) profile.sets[c].push_back(t);

    CodeClaims claims{n, (double)gen.size(), base_d, max_block - 1, field.order()};
    CodeArtifact artifact(LinearCode::make(field, std::move(gen), std::move(aug)));
    artifact.construction = "gv-augment";
    artifact.params = {{"r", r}, {"added_rows", (std::int64_t)blocks.size()}};
    artifact.claims = claims;
    artifact.profile = std::move(profile);
    try {
        artifact.verified = verify_artifact(artifact, limits).verified;
    } catch (const BudgetExceeded&) {
        artifact.verified = false;
    }
    return artifact;
}

// --- Concatenated construction ----------------------------------------------

namespace {

struct ConcatContext {
    Field small, big;
    SubfieldMap map;
    int q, r, n_outer;

    ConcatContext(int q_, int r_)
        : small(make_small(q_)),
          big(make_big(q_, r_)),
          map(big, small),
          q(q_),
          r(r_),
          n_outer(big.order()) {}

    static Field make_small(int q) {
        auto [p, s] = factor_prime_power(q);
        return Field::make(p, s);
    }
    static Field make_big(int q, int r) {
        if (r < 1) throw std::invalid_argument("locality must be positive");
        auto [p, s] = factor_prime_power(q);
        return Field::make(p, s * r);
    }

    // Inner single-parity encoding of one outer symbol: its expansion
    // followed by the sum of the expansion.
    void append_block(std::vector<felem>& word, felem outer_symbol) const {
        std::vector<felem> v = map.expand(outer_symbol);
        felem sum = 0;
        for (felem x : v) sum = small.add(sum, x);
        word.insert(word.end(), v.begin(), v.end());
        word.push_back(sum);
    }

    std::vector<felem> encode_outer_row(std::span<const felem> outer_row) const {
        std::vector<felem> word;
        word.reserve((r + 1) * outer_row.size());
        for (felem y : outer_row) append_block(word, y);
        return word;
    }

    RepairProfile block_profile(int blocks) const {
        RepairProfile profile;
        profile.sets.assign((std::size_t)blocks * (r + 1), {});
        for (int b = 0; b < blocks; ++b)
            for (int c = 0; c < r + 1; ++c) {
                std::vector<int>& set = profile.sets[(std::size_t)b * (r + 1) + c];
                for (int t = 0; t < r + 1; ++t)
                    if (t != c) set.push_back(b * (r + 1) + t);
            }
        return profile;
    }

    // Rows of the q-ary generator spanned by outer rows times the expansion
    // basis powers b^0..b^(r-1).
    Matrix expand_generator(const Matrix& outer_gen) const {
        Matrix gen;
        felem beta = big.degree() >= 2 ? (felem)big.characteristic() : (felem)1;
        for (const auto& outer_row : outer_gen) {
            felem scale = 1;
            for (int j = 0; j < r; ++j) {
                std::vector<felem> scaled(outer_row.size());
                for (std::size_t t = 0; t < outer_row.size(); ++t)
                    scaled[t] = big.mul(scale, outer_row[t]);
                gen.push_back(encode_outer_row(scaled));
                scale = big.mul(scale, beta);
            }
        }
        return gen;
    }
};

} // namespace

CodeArtifact build_concat_rs_spc(int q, int r, int ko) {
    ConcatContext ctx(q, r);
    if (ko < 1 || ko > ctx.n_outer) throw std::invalid_argument("require 1 <= ko <= q^r");

    // Outer generator: evaluations of the monomials 1, x, ..., x^(ko-1) at
    // every field point.
    Matrix outer_gen(ko, std::vector<felem>(ctx.n_outer));
    for (int j = 0; j < ctx.n_outer; ++j)
        for (int i = 0; i < ko; ++i) outer_gen[i][j] = ctx.big.pow((felem)j, i);

    Matrix gen = ctx.expand_generator(outer_gen);
    const int n = (r + 1) * ctx.n_outer;
    const int d_claim = 2 * (ctx.n_outer - ko + 1);

    CodeArtifact artifact(LinearCode::make(ctx.small, std::move(gen)));
    artifact.construction = "concat-rs-spc";
    artifact.params = {{"q", q}, {"r", r}, {"ko", ko}};
    artifact.claims = {n, (double)(ko * r), d_claim, r, q};
    artifact.profile = ctx.block_profile(ctx.n_outer);
    try {
        SearchLimits desk;
        desk.max_enumeration = 1 << 16;
        artifact.verified = verify_artifact(artifact, desk).verified;
    } catch (const BudgetExceeded&) {
        artifact.verified = false;
    }
    return artifact;
}

// --- Ensemble statistics and certificates ------------------------------------

Rational reduce(Rational v) {
    if (v.den < 0) {
        v.num = -v.num;
        v.den = -v.den;
    }
    long long g = std::gcd(v.num < 0 ? -v.num : v.num, v.den);
    if (g > 1) {
        v.num /= g;
        v.den /= g;
    }
    return v;
}

namespace {

long long checked_pow_ll(long long base, int exp, const char* what) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > std::numeric_limits<long long>::max() / base) throw BudgetExceeded(what);
        v *= base;
    }
    return v;
}

long long binomial_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

// Codeword counts of the [r+1, r] SPC code by weight:
// A_j = C(r+1, j) ((q-1)^j + (q-1)(-1)^j) / q, integer, summing to q^r.
std::vector<long long> spc_weight_counts(int q, int r) {
    std::vector<long long> counts(r + 2, 0);
    for (int j = 0; j <= r + 1; ++j) {
        long long pw = checked_pow_ll(q - 1, j, "SPC weight count overflow");
        long long raw = pw + ((j % 2 == 0) ? (long long)(q - 1) : -(long long)(q - 1));
        // (q-1)^j + (q-1)(-1)^j is always divisible by q.
        if (raw % q != 0) throw std::logic_error("SPC weight distribution is not integral");
        counts[j] = binomial_ll(r + 1, j) * (raw / q);
    }
    return counts;
}

} // namespace

SpcWeightDistribution spc_weight_distribution(int q, int r) {
    if (q < 2 || r < 1) throw std::invalid_argument("require q >= 2 and r >= 1");
    std::vector<long long> counts = spc_weight_counts(q, r);
    long long den = checked_pow_ll(q, r, "SPC distribution overflow");
    SpcWeightDistribution dist;
    dist.q = q;
    dist.r = r;
    dist.mass.resize(r + 2);
    for (int j = 0; j <= r + 1; ++j) dist.mass[j] = reduce({counts[j], den});
    return dist;
}

double spc_mgf(int q, int r, double t) {
    if (q < 2 || r < 1) throw std::invalid_argument("require q >= 2 and r >= 1");
    if (t < 0.0) throw std::invalid_argument("t must be nonnegative");
    const double e = std::exp(-t);
    const double num = std::pow(1.0 + e * (q - 1), r + 1) + (q - 1) * std::pow(1.0 - e, r + 1);
    return num / std::pow((double)q, r + 1);
}

DistanceCertificate ensemble_distance_certificate(int q, int r, int n, double k, int d) {
    if (q < 2 || r < 1 || n < 1) throw std::invalid_argument("bad ensemble parameters");
    if (n % (r + 1) != 0) throw std::invalid_argument("block length r+1 must divide n");
    DistanceCertificate cert;
    if (d <= 0) {
        cert.certified = true;
        return cert; // Pr(W < 0) is an empty event
    }
    const int blocks = n / (r + 1);
    const double lq = std::log((double)q);
    auto log_tail = [&](double x) {
        const double inner =
            std::pow(1.0 + x * (q - 1), r + 1) + (q - 1) * std::pow(1.0 - x, r + 1);
        return -(double)d * std::log(x) + blocks * std::log(inner) - n * lq;
    };
    OptResult best = minimize_on(log_tail, 1e-9, 1.0);
    cert.argmin_x = best.x;
    cert.chernoff_tail = std::exp(best.value);
    cert.expected_bad = std::exp(k * lq + best.value);
    cert.certified = cert.expected_bad < 1.0;
    return cert;
}

Rational exact_block_tail(int q, int r, int blocks, int d) {
    if (q < 2 || r < 1 || blocks < 1) throw std::invalid_argument("bad ensemble parameters");
    if (d <= 0) return {0, 1};
    // Denominator q^(r * blocks) must stay within 63 bits for exactness.
    if ((double)r * blocks * std::log2((double)q) > 62)
        throw BudgetExceeded("exact tail state space exceeds 63-bit integers");
    std::vector<long long> counts = spc_weight_counts(q, r);

    const int max_w = (r + 1) * blocks;
    std::vector<long long> conv(max_w + 1, 0);
    conv[0] = 1;
    int reach = 0;
    for (int b = 0; b < blocks; ++b) {
        std::vector<long long> next(max_w + 1, 0);
        for (int w = 0; w <= reach; ++w) {
            if (conv[w] == 0) continue;
            for (int j = 0; j <= r + 1; ++j)
                if (counts[j] != 0) next[w + j] += conv[w] * counts[j];
        }
        reach += r + 1;
        conv.swap(next);
    }
    long long num = 0;
    for (int w = 0; w < d && w <= max_w; ++w) num += conv[w];
    long long den = checked_pow_ll(q, r * blocks, "exact tail overflow");
    return reduce({num, den});
}

bool lll_existence_check(int q, int r, int n, long long M, int d) {
    if (M < 2) throw std::invalid_argument("ensemble needs at least two codewords");
    if (n % (r + 1) != 0) throw std::invalid_argument("block length r+1 must divide n");
    Rational tail = exact_block_tail(q, r, n / (r + 1), d);
    const long double lhs = (long double)tail.num * (long double)(2 * M - 1) / (long double)tail.den;
    return lhs < std::exp((long double)-1.0);
}

// --- Ensemble samplers --------------------------------------------------------

CodeArtifact sample_parity_ensemble(int q, int r, int n, long long M, std::uint64_t seed) {
    if (M < 1) throw std::invalid_argument("ensemble needs at least one codeword");
    if (n % (r + 1) != 0) throw std::invalid_argument("block length r+1 must divide n");
    auto [p, s] = factor_prime_power(q);
    Field f = Field::make(p, s);
    const int blocks = n / (r + 1);

    CounterRng rng(seed);
    std::vector<std::vector<felem>> words((std::size_t)M);
    for (auto& w : words) {
        w.reserve(n);
        for (int b = 0; b < blocks; ++b) {
            felem sum = 0;
            for (int j = 0; j < r; ++j) {
                felem v = rng.uniform(f);
                sum = f.add(sum, v);
                w.push_back(v);
            }
            w.push_back(sum);
        }
    }

    RepairProfile profile;
    profile.sets.assign(n, {});
    for (int c = 0; c < n; ++c) {
        const int b = c / (r + 1);
        for (int t = b * (r + 1); t < (b + 1) * (r + 1); ++t)
            if (t != c) profile.sets[c].push_back(t);
    }

    CodeArtifact artifact(Codebook(std::move(f), n, std::move(words)));
    artifact.construction = "parity-ensemble";
    artifact.params = {{"q", q}, {"r", r}, {"n", n}, {"M", M}};
    artifact.seed = seed;
    artifact.profile = std::move(profile);
    artifact.claims = {n, std::log((double)M) / std::log((double)q), 1, r, q};
    return artifact;
}

EnsembleSample sample_parity_ensemble_with_distance(int q, int r, int n, long long M, int d,
                                                    std::uint64_t seed, int max_attempts) {
    CounterRng master(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::uint64_t stream_seed = master.derive((std::uint64_t)attempt).next();
        CodeArtifact artifact = sample_parity_ensemble(q, r, n, M, stream_seed);
        const Codebook& book = std::get<Codebook>(artifact.code);
        if (duplicate_count(book) != 0) continue;
        if (min_distance(book) < d) continue;
        artifact.seed = seed;
        artifact.params["attempt"] = attempt;
        artifact.claims.d = d;
        artifact.verified = verify_artifact(artifact).verified;
        return {std::move(artifact), attempt + 1};
    }
    throw BudgetExceeded("no ensemble sample reached the target distance within the attempt cap");
}

CodeArtifact sample_concat_ensemble(int q, int r, int n, int k, std::uint64_t seed) {
    if (n % (r + 1) != 0) throw std::invalid_argument("block length r+1 must divide n");
    if (k % r != 0) throw std::invalid_argument("locality r must divide k");
    const int outer_n = n / (r + 1), outer_k = k / r;
    if (outer_k < 1 || outer_k > outer_n)
        throw std::invalid_argument("require 1 <= k/r <= n/(r+1)");
    ConcatContext ctx(q, r);

    CounterRng rng(seed);
    Matrix outer_gen(outer_k, std::vector<felem>(outer_n));
    for (auto& row : outer_gen)
        for (auto& v : row) v = rng.uniform(ctx.big);

    // Sampled as drawn: the outer generator may be rank-deficient.
    CodeArtifact artifact(LinearCode::make_unchecked(ctx.small, ctx.expand_generator(outer_gen)));
    artifact.construction = "concat-ensemble";
    artifact.params = {{"q", q}, {"r", r}, {"n", n}, {"k", k}};
    artifact.seed = seed;
    artifact.profile = ctx.block_profile(outer_n);
    artifact.claims = {n, (double)k, 1, r, q};
    return artifact;
}

double concat_ensemble_bad_fraction(int q, int r, int n, int k, int d, std::uint64_t seed,
                                    int trials) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    {
        // validate parameters and the weight-scan budget before entering the
        // parallel region, where exceptions cannot unwind
        CodeArtifact probe = sample_concat_ensemble(q, r, n, k, seed);
        (void)min_distance(std::get<LinearCode>(probe.code));
    }
    std::int64_t bad = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : bad)
    for (int t = 0; t < trials; ++t) {
        std::uint64_t stream_seed = CounterRng(seed).derive((std::uint64_t)t).next();
        CodeArtifact sample = sample_concat_ensemble(q, r, n, k, stream_seed);
        if (min_distance(std::get<LinearCode>(sample.code)) < d) ++bad;
    }
    return (double)bad / (double)trials;
}

} // namespace lrc
