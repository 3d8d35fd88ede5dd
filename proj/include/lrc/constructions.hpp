#ifndef LRC_CONSTRUCTIONS_HPP
#define LRC_CONSTRUCTIONS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "lrc/code.hpp"
#include "lrc/field.hpp"
#include "lrc/limits.hpp"

namespace lrc {

struct CodeClaims {
    int n = 0;
    double k = 0.0; // log_q of code size; non-integer for raw ensembles
    int d = 1;      // claimed lower bound on minimum distance
    int r = 0;      // claimed upper bound on locality
    int q = 2;
};

/*
 * A constructed code together with its claimed parameters and the repair
 * profile witnessing the locality claim.  verified is set only after the
 * claims have been checked against brute-force measurement at desk scale.
 */
struct CodeArtifact {
    std::string construction;
    std::map<std::string, std::int64_t> params;
    std::optional<std::uint64_t> seed;
    std::variant<LinearCode, Codebook> code;
    RepairProfile profile;
    CodeClaims claims;
    bool verified = false;

    explicit CodeArtifact(std::variant<LinearCode, Codebook> c) : code(std::move(c)) {}

    const Field& field() const;
    int length() const;
    Codebook to_codebook(const SearchLimits& limits = {}) const;
};

struct VerifyReport {
    int measured_d = 0;   // infinite_distance when fewer than two distinct words
    int measured_r = -1;  // -1 when some coordinate has no repair set
    double measured_k = 0.0;
    bool distance_ok = false;
    bool locality_ok = false;
    bool verified = false;
};

// Measure distance / locality / dimension by brute force and compare with
// the artifact's claims (distance >= claim, locality <= claim).
VerifyReport verify_artifact(const CodeArtifact& artifact, const SearchLimits& limits = {});

// --- Simplex family ---------------------------------------------------------

// m x (2^m - 1) binary matrix whose column j (1-based) is the binary
// expansion of j.
Matrix simplex_generator(int m);

// The (2^m - 1 - m) weight-3 rows (i, 2^j, i + 2^j), 1 <= j <= m-1,
// 1 <= i < 2^j, all orthogonal to the simplex generator and jointly of full
// rank: a generator of the dual with three ones per row.
Matrix hamming_weight3_generator(int m);

// [2^m - 1, m, 2^(m-1)] simplex code with the weight-3 repair profile;
// locality claim 2.
CodeArtifact build_simplex(int m);

// --- Parity augmentation ----------------------------------------------------

/*
 * Append disjoint contiguous all-ones parity rows to a base parity matrix.
 * Blocks are as equal as possible, each of size >= 2 and at most r+1 when
 * n >= 2 ceil(n/(r+1)); the locality claim is (max block size) - 1.  The
 * result keeps the base code's distance and loses at most one dimension per
 * added row.
 */
CodeArtifact gv_augment(const Field& field, const Matrix& base_parity, int r,
                        const SearchLimits& limits = {});

// --- Concatenated construction ----------------------------------------------

/*
 * Outer evaluation code of degree-<ko polynomials at all q^r points of
 * GF(q^r) (MDS, distance q^r - ko + 1), inner single parity block per outer
 * symbol: n = (r+1) q^r, k = ko r, d >= 2 (q^r - ko + 1), locality r.
 */
CodeArtifact build_concat_rs_spc(int q, int r, int ko);

// --- Ensemble statistics and certificates ------------------------------------

struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const { return (double)num / (double)den; }
};

Rational reduce(Rational v);

/*
 * Weight distribution of the [r+1, r] single parity-check code over GF(q):
 * Pr(X = j) = C(r+1, j) ((q-1)^j + (q-1)(-1)^j) / q^(r+1), exact.
 * For q = 2 all odd-weight masses vanish.
 */
struct SpcWeightDistribution {
    int q = 2, r = 1;
    std::vector<Rational> mass; // index j = 0..r+1
};

SpcWeightDistribution spc_weight_distribution(int q, int r);

// E e^(-tX) = ((1 + e^-t (q-1))^(r+1) + (q-1)(1 - e^-t)^(r+1)) / q^(r+1).
double spc_mgf(int q, int r, double t);

/*
 * Chernoff certificate for the block-parity ensembles: the tail bound
 * min over x in (0,1] of x^-d q^-n ((1+x(q-1))^(r+1) + (q-1)(1-x)^(r+1))^(n/(r+1)),
 * the expected number q^k * tail of nonzero messages with weight below d,
 * and whether that expectation is below 1 (which certifies a code of
 * distance >= d in the ensemble).  Requires (r+1) | n.
 */
struct DistanceCertificate {
    double chernoff_tail = 0.0;
    double argmin_x = 1.0;
    double expected_bad = 0.0;
    bool certified = false;
};

DistanceCertificate ensemble_distance_certificate(int q, int r, int n, double k, int d);

// Exact Pr(W < d) for W the sum of `blocks` independent SPC block weights,
// by integer convolution.
Rational exact_block_tail(int q, int r, int blocks, int d);

// Local-lemma existence condition Pr(W < d) (2M - 1) < 1/e for M codewords:
// true certifies an (n, log_q M, >= d) code of locality r in the ensemble.
bool lll_existence_check(int q, int r, int n, long long M, int d);

// --- Ensemble samplers --------------------------------------------------------

/*
 * M words of n/(r+1) blocks, each block r uniform symbols followed by their
 * sum; repair sets are the within-block complements.  Deterministic in seed.
 */
CodeArtifact sample_parity_ensemble(int q, int r, int n, long long M, std::uint64_t seed);

struct EnsembleSample {
    CodeArtifact artifact;
    int attempts = 1;
};

// Redraw (seed stream per attempt) until all pairwise distances reach d;
// throws BudgetExceeded after max_attempts.
EnsembleSample sample_parity_ensemble_with_distance(int q, int r, int n, long long M, int d,
                                                    std::uint64_t seed, int max_attempts = 100000);

/*
 * Uniform random (k/r) x (n/(r+1)) outer generator over GF(q^r), inner
 * single-parity expansion; the generator is sampled as drawn and may be
 * rank-deficient, in which case the weight scan reports distance 0.
 */
CodeArtifact sample_concat_ensemble(int q, int r, int n, int k, std::uint64_t seed);

// Fraction of `trials` seed streams whose sample has some nonzero message of
// weight < d.  Parallel over trials, deterministic.
double concat_ensemble_bad_fraction(int q, int r, int n, int k, int d, std::uint64_t seed,
                                    int trials);

} // namespace lrc

#endif
