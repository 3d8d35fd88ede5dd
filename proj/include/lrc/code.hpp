#ifndef LRC_CODE_HPP
#define LRC_CODE_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "lrc/field.hpp"
#include "lrc/limits.hpp"
#include "lrc/linalg.hpp"

namespace lrc {

// Coordinates are 0-based everywhere, including serialized artifacts.

/*
 * Explicit codeword list over a field.  The list may contain duplicates
 * (raw random ensembles); distance and dimension are computed over distinct
 * words and duplicates are reported separately.
 */
struct Codebook {
    Field field;
    int n = 0;
    std::vector<std::vector<felem>> words;

    Codebook(Field f, int length, std::vector<std::vector<felem>> w);
};

/*
 * Linear code given by a k x n generator matrix, optionally with a parity
 * check matrix.  make() validates full row rank and G H^T = 0; ensembles that
 * intentionally sample possibly-singular generators use make_unchecked().
 */
struct LinearCode {
    Field field;
    Matrix gen;
    std::optional<Matrix> parity;

    static LinearCode make(Field f, Matrix g, std::optional<Matrix> h = std::nullopt);
    static LinearCode make_unchecked(Field f, Matrix g, std::optional<Matrix> h = std::nullopt);

    int n() const { return gen.empty() ? 0 : (int)gen[0].size(); }
    int k() const { return (int)gen.size(); }

private:
    LinearCode(Field f, Matrix g, std::optional<Matrix> h)
        : field(std::move(f)), gen(std::move(g)), parity(std::move(h)) {}
};

// Per-coordinate repair sets; sets[i] never contains i.  Locality is the
// largest repair-set size.
struct RepairProfile {
    std::vector<std::vector<int>> sets;

    int locality() const;
};

// Distance of a code with fewer than two distinct words.
constexpr int infinite_distance = std::numeric_limits<int>::max();

std::size_t distinct_count(const Codebook& code);
std::size_t duplicate_count(const Codebook& code);

// log_q of the number of distinct codewords; real-valued for sizes that are
// not powers of q.
double dimension(const Codebook& code);

// Exact minimum Hamming distance over distinct codeword pairs.  For linear
// codes this is the minimum weight over nonzero messages, found by a
// Gray-style scan of the message space.
int min_distance(const Codebook& code, const SearchLimits& limits = {});
int min_distance(const LinearCode& code, const SearchLimits& limits = {});

// Number of distinct projections of the codebook onto the coordinate set.
std::uint64_t projection_count(const Codebook& code, std::span<const int> coords);

// H(I) = log_q projection_count(I).
double projection_entropy(const Codebook& code, std::span<const int> coords);

// True iff the projection onto R functionally determines coordinate i.
bool verify_repair_set(const Codebook& code, int i, std::span<const int> repair);

bool validate_profile(const Codebook& code, const RepairProfile& profile);

struct LocalityResult {
    int r = 0;
    RepairProfile profile;
};

// Smallest repair set per coordinate (lexicographic-first over sizes
// 1..n-1), locality = max over coordinates.  Throws std::domain_error when a
// coordinate admits no repair set (two codewords differ only there).
LocalityResult locality_of(const Codebook& code, const SearchLimits& limits = {});
LocalityResult locality_of(const LinearCode& code, const SearchLimits& limits = {});

// Value at the erased coordinate of the unique codeword consistent with the
// word's projection onto its repair set.
felem repair_erasure(const Codebook& code, std::span<const felem> word, int erased,
                     const RepairProfile& profile);

/*
 * Greedy core-set construction: a coordinate set I with |I| = t(r+1) and
 * H(I) <= t*r.  Each round picks the smallest coordinate a outside everything
 * chosen so far, adds a's repair set, then pads with the smallest fresh
 * coordinates to reach a multiple of r+1.  Requires 1 <= t <= k/r and
 * n >= t(r+1).
 */
std::vector<int> build_core_set(const Codebook& code, const RepairProfile& profile, int t);

/*
 * Shortening on a coordinate set I with H(I) <= m: restrict to the codewords
 * sharing the most common projection onto I (smallest such projection on
 * ties) and drop the I coordinates.  The result has length n - |I|,
 * dimension >= k - m and distance >= d.
 */
Codebook shorten_best_prefix(const Codebook& code, std::span<const int> coords, double m);

std::vector<felem> encode(const LinearCode& code, std::span<const felem> message);

// All q^k codewords, message order.
Codebook expand_codebook(const LinearCode& code, const SearchLimits& limits = {});

// Distinct-projection counts for every subset mask of {0..n-1}; index is the
// bitmask.  Requires n <= 20 and is the basis of the exact submodularity
// check count(I1)*count(I2) >= count(I1|I2)*count(I1&I2).
std::vector<std::uint64_t> projection_counts_all_subsets(const Codebook& code);
bool projection_counts_submodular(const Codebook& code);

} // namespace lrc

#endif
