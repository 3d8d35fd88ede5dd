#ifndef LRC_ORACLE_HPP
#define LRC_ORACLE_HPP

#include <iosfwd>
#include <vector>

#include "lrc/bounds_finite.hpp"
#include "lrc/code.hpp"
#include "lrc/limits.hpp"

namespace lrc {

enum class Restriction { linear, unrestricted };

/*
 * Exact kopt(n, d, q) at tiny scale.
 *
 * linear: enumerate systematic generator matrices [I | A] for k from the
 * Singleton ceiling down; every linear code is permutation-equivalent to a
 * systematic one and distance is permutation-invariant, so this is complete.
 * Returns the integer dimension.
 *
 * unrestricted: branch-and-bound maximum clique on the graph of q-ary words
 * with pairwise distance >= d, first word pinned to zero (coordinate-wise
 * translation preserves distances).  Returns log_q of the maximum code size.
 */
double exact_kopt(int n, int d, int q, const SearchLimits& limits = {},
                  Restriction restriction = Restriction::unrestricted);

/*
 * Largest dimension of a systematic linear code with brute-force distance
 * >= d and brute-force locality <= r.  Locality, like distance, is invariant
 * under coordinate permutation, so systematic enumeration is complete here
 * too.
 */
int best_lrc_dimension(int n, int d, int q, int r, const SearchLimits& limits = {});

// Literal definitional re-implementations used as differential-test oracles:
// all codeword pairs for distance, all subsets per coordinate for locality.
// Serial on purpose.
int oracle_distance(const Codebook& code, const SearchLimits& limits = {});
int oracle_locality(const Codebook& code, const SearchLimits& limits = {});

// Exact-table provider filled by exact_kopt for the given (n, d) pairs.
KOptProvider make_exact_table(int q, const std::vector<std::pair<int, int>>& entries,
                              const SearchLimits& limits = {},
                              Restriction restriction = Restriction::unrestricted);

// Every residual length locality_dimension_bound(n, d, q, r) will query.
std::vector<std::pair<int, int>> residual_entries(int n, int d, int r);

// Table cache rows "q,n,d,kopt,restriction"; loadable back into a provider.
void save_kopt_table(std::ostream& out, const KOptProvider& provider, Restriction restriction);
KOptProvider load_kopt_table(std::istream& in, int expected_q);

} // namespace lrc

#endif
