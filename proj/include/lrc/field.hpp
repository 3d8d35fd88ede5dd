#ifndef LRC_FIELD_HPP
#define LRC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace lrc {

// Canonical index of a field element: polynomial coefficients packed base p,
// constant term first.  Index 0 is the additive identity, index 1 the
// multiplicative identity.
using felem = std::uint16_t;

bool is_prime(long long v);

// Factor a prime power q = p^m; throws when q is not one.
std::pair<int, int> factor_prime_power(int q);

// Irreducibility over GF(p) by trial division against all lower-degree monic
// polynomials.  poly is c0..cm with cm != 0.
bool poly_is_irreducible(int p, const std::vector<int>& poly);

// Smallest monic irreducible polynomial of degree m over GF(p), ordering
// low-order coefficients as a packed base-p integer.
std::vector<int> smallest_irreducible(int p, int m);

/*
 * Exact arithmetic over GF(p^m), q = p^m <= 2^16.
 *
 * Elements are canonical indices (see felem).  Multiplication and inversion
 * run on log/antilog tables built once from a primitive element; addition is
 * an XOR for p = 2, a lookup table for small odd q and digit arithmetic
 * otherwise.  A Field is immutable after construction and cheap to copy
 * (internals are shared), so it can be used freely across threads.
 */
class Field {
public:
    static constexpr int max_order = 1 << 16;

    // modulus, when given, must be monic of degree m (c0..cm over GF(p)).
    static Field make(int p, int m);
    static Field make(int p, int m, const std::vector<int>& modulus);

    int characteristic() const { return impl_->p; }
    int degree() const { return impl_->m; }
    int order() const { return impl_->q; }
    const std::vector<int>& modulus() const { return impl_->modulus; }

    felem add(felem a, felem b) const;
    felem sub(felem a, felem b) const;
    felem neg(felem a) const;
    felem mul(felem a, felem b) const;
    felem inv(felem a) const;
    felem pow(felem a, long long e) const;

    // Coefficient of x^i in the polynomial representation of a.
    int coeff(felem a, int i) const;

    bool operator==(const Field& other) const;

    void check_element(felem a) const {
        if (a >= impl_->q) throw std::invalid_argument("element index out of field range");
    }

private:
    struct Impl {
        int p = 0, m = 0, q = 0;
        std::vector<int> modulus;          // c0..cm, monic
        std::vector<felem> expt;           // g^i, i in [0, 2(q-1))
        std::vector<int> logt;             // discrete log base g, logt[0] unused
        std::vector<felem> add_table;      // q*q entries when small enough, else empty
        std::vector<int> pow_p;            // p^0..p^m
    };
    std::shared_ptr<const Impl> impl_;

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    static Field build(int p, int m, std::vector<int> modulus);
};

/*
 * Coordinate map between GF(q^r) and GF(q)^r for a big field of order q^r and
 * a small field of order q with the same characteristic.  Uses the basis
 * 1, b, b^2, ..., b^(r-1) of the big field over the embedded small field,
 * where b is the residue class of x; coordinates come out constant-term
 * first.  The map is a bijection, additive, and GF(q)-linear:
 * compose(s * v) = embed(s) * compose(v).
 */
class SubfieldMap {
public:
    SubfieldMap(Field big, Field small);

    int expansion_factor() const { return r_; }
    const Field& big() const { return big_; }
    const Field& small() const { return small_; }

    // Image of a small-field element inside the big field.
    felem embed(felem a) const;

    std::vector<felem> expand(felem a) const;
    felem compose(std::span<const felem> v) const;

private:
    Field big_, small_;
    int r_ = 0;
    std::vector<felem> embed_table_;        // q entries
    std::vector<std::vector<int>> inv_mat_; // (sr)x(sr) over GF(p): big digits -> coords
};

} // namespace lrc

#endif
