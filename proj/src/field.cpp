#include "lrc/field.hpp"

#include <algorithm>
#include <numeric>

namespace lrc {

std::pair<int, int> factor_prime_power(int q) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    for (int p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        int m = 0, v = q;
        while (v % p == 0) {
            v /= p;
            ++m;
        }
        if (v != 1) throw std::invalid_argument("alphabet size is not a prime power");
        return {p, m};
    }
    throw std::invalid_argument("alphabet size is not a prime power");
}

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

namespace {

// Dense coefficient vectors over GF(p), constant term first.  Leading zeros
// are allowed; deg() ignores them.
int poly_deg(const std::vector<int>& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// Remainder of a modulo monic divisor b.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = poly_deg(b);
    for (int i = poly_deg(a); i >= db; i = poly_deg(a)) {
        int c = a[i]; // b is monic
        if (c != 0) {
            for (int j = 0; j <= db; ++j) {
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p;
                if (a[i - db + j] < 0) a[i - db + j] += p;
            }
        }
        a[i] = 0;
    }
    return a;
}

std::vector<int> unpack(long long idx, int p, int len) {
    std::vector<int> d(len, 0);
    for (int i = 0; i < len && idx > 0; ++i) {
        d[i] = (int)(idx % p);
        idx /= p;
    }
    return d;
}

long long pack(const std::vector<int>& d, int p) {
    long long v = 0;
    for (int i = (int)d.size() - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

// Product of two packed elements reduced by the field modulus; used only to
// bootstrap the log tables.
felem raw_mul(felem a, felem b, int p, int m, const std::vector<int>& modulus) {
    std::vector<int> da = unpack(a, p, m), db = unpack(b, p, m);
    std::vector<int> prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    prod = poly_mod(std::move(prod), modulus, p);
    prod.resize(m);
    return (felem)pack(prod, p);
}

felem raw_pow(felem a, long long e, int p, int m, const std::vector<int>& modulus) {
    felem r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = raw_mul(r, base, p, m, modulus);
        base = raw_mul(base, base, p, m, modulus);
        e >>= 1;
    }
    return r;
}

std::vector<long long> prime_factors(long long v) {
    std::vector<long long> f;
    for (long long d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            f.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) f.push_back(v);
    return f;
}

} // namespace

bool poly_is_irreducible(int p, const std::vector<int>& poly) {
    int m = poly_deg(poly);
    if (m < 1) return false;
    if (m == 1) return true;
    // Trial division by every monic polynomial of degree 1..m/2.
    for (int e = 1; 2 * e <= m; ++e) {
        long long count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<int> div = unpack(idx, p, e + 1);
            div[e] = 1;
            if (poly_deg(poly_mod(poly, div, p)) < 0) return false;
        }
    }
    return true;
}

std::vector<int> smallest_irreducible(int p, int m) {
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
        std::vector<int> cand = unpack(idx, p, m + 1);
        cand[m] = 1;
        if (poly_is_irreducible(p, cand)) return cand;
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

Field Field::make(int p, int m) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be positive");
    return build(p, m, smallest_irreducible(p, m));
}

Field Field::make(int p, int m, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be positive");
    std::vector<int> mod = modulus;
    if ((int)mod.size() != m + 1 || mod[m] != 1)
        throw std::invalid_argument("modulus must be monic of degree m");
    for (int& c : mod) {
        c %= p;
        if (c < 0) c += p;
    }
    if (mod[m] != 1) throw std::invalid_argument("modulus must be monic of degree m");
    if (!poly_is_irreducible(p, mod)) throw std::invalid_argument("modulus is reducible over GF(p)");
    return build(p, m, std::move(mod));
}

Field Field::build(int p, int m, std::vector<int> modulus) {
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > max_order) throw std::invalid_argument("field order exceeds 2^16 ceiling");
    }

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = (int)q;
    impl->modulus = std::move(modulus);
    impl->pow_p.resize(m + 1);
    impl->pow_p[0] = 1;
    for (int i = 1; i <= m; ++i) impl->pow_p[i] = impl->pow_p[i - 1] * p;

    // Find a primitive element by order testing, then tabulate logs.
    long long group = q - 1;
    std::vector<long long> factors = prime_factors(group);
    felem gen = 1;
    for (felem cand = 1; cand < q; ++cand) {
        bool primitive = true;
        for (long long f : factors) {
            if (raw_pow(cand, group / f, p, m, impl->modulus) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = cand;
            break;
        }
    }
    impl->expt.resize(group > 0 ? 2 * group : 1);
    impl->logt.assign(q, 0);
    felem cur = 1;
    for (long long i = 0; i < std::max<long long>(group, 1); ++i) {
        impl->expt[i] = cur;
        if (group > 0) impl->expt[i + group] = cur;
        impl->logt[cur] = (int)i;
        cur = raw_mul(cur, gen, p, m, impl->modulus);
    }

    if (p != 2 && q <= 1024) {
        impl->add_table.resize(q * q);
        for (int a = 0; a < q; ++a) {
            std::vector<int> da = unpack(a, p, m);
            for (int b = 0; b < q; ++b) {
                std::vector<int> s = unpack(b, p, m);
                for (int i = 0; i < m; ++i) s[i] = (s[i] + da[i]) % p;
                impl->add_table[(std::size_t)a * q + b] = (felem)pack(s, p);
            }
        }
    }
    return Field(std::move(impl));
}

felem Field::add(felem a, felem b) const {
    const Impl& f = *impl_;
    if (f.p == 2) return a ^ b;
    if (!f.add_table.empty()) return f.add_table[(std::size_t)a * f.q + b];
    int s = 0;
    for (int i = f.m - 1; i >= 0; --i) {
        int ca = (a / f.pow_p[i]) % f.p, cb = (b / f.pow_p[i]) % f.p;
        s = s * f.p + (ca + cb) % f.p;
    }
    return (felem)s;
}

felem Field::neg(felem a) const {
    const Impl& f = *impl_;
    if (f.p == 2) return a;
    int s = 0;
    for (int i = f.m - 1; i >= 0; --i) {
        int c = (a / f.pow_p[i]) % f.p;
        s = s * f.p + (f.p - c) % f.p;
    }
    return (felem)s;
}

felem Field::sub(felem a, felem b) const { return add(a, neg(b)); }

felem Field::mul(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    const Impl& f = *impl_;
    return f.expt[(std::size_t)f.logt[a] + f.logt[b]];
}

felem Field::inv(felem a) const {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    const Impl& f = *impl_;
    long long group = f.q - 1;
    if (group == 0) return 1;
    return f.expt[(group - f.logt[a]) % group];
}

felem Field::pow(felem a, long long e) const {
    const Impl& f = *impl_;
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("negative power of zero");
        return 0;
    }
    long long group = f.q - 1;
    if (group == 0) return 1;
    long long le = ((e % group) + group) % group;
    return f.expt[((std::size_t)f.logt[a] * le) % group];
}

int Field::coeff(felem a, int i) const {
    const Impl& f = *impl_;
    return (a / f.pow_p[i]) % f.p;
}

bool Field::operator==(const Field& other) const {
    if (impl_ == other.impl_) return true;
    return impl_->p == other.impl_->p && impl_->m == other.impl_->m &&
           impl_->modulus == other.impl_->modulus;
}

// ---------------------------------------------------------------------------

namespace {

// Gauss-Jordan inverse of a square matrix over GF(p).
std::vector<std::vector<int>> invert_mod_p(std::vector<std::vector<int>> a, int p) {
    int n = (int)a.size();
    std::vector<std::vector<int>> inv(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    auto inv_scalar = [p](int v) {
        for (int x = 1; x < p; ++x)
            if ((v * x) % p == 1) return x;
        throw std::logic_error("scalar not invertible");
    };
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (a[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) throw std::logic_error("coordinate basis matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        int s = inv_scalar(a[col][col]);
        for (int j = 0; j < n; ++j) {
            a[col][j] = (a[col][j] * s) % p;
            inv[col][j] = (inv[col][j] * s) % p;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            int c = a[row][col];
            for (int j = 0; j < n; ++j) {
                a[row][j] = (a[row][j] - c * a[col][j] % p + p) % p;
                inv[row][j] = (inv[row][j] - c * inv[col][j] % p + p) % p;
            }
        }
    }
    return inv;
}

} // namespace

SubfieldMap::SubfieldMap(Field big, Field small) : big_(std::move(big)), small_(std::move(small)) {
    if (big_.characteristic() != small_.characteristic())
        throw std::invalid_argument("incompatible field pair: different characteristic");
    if (big_.degree() % small_.degree() != 0)
        throw std::invalid_argument("incompatible field pair: big field is not an extension of small");
    r_ = big_.degree() / small_.degree();

    const int p = big_.characteristic();
    const int s = small_.degree();
    const int D = big_.degree();

    // Embed GF(q) into GF(q^r): send the residue class of x in the small field
    // to the smallest root of the small modulus inside the big field, then
    // extend by polynomial evaluation.
    felem root = 0;
    bool found = false;
    const std::vector<int>& smod = small_.modulus();
    for (int z = 0; z < big_.order(); ++z) {
        felem acc = 0; // evaluate smod at z via Horner
        for (int i = s; i >= 0; --i)
            acc = big_.add(big_.mul(acc, (felem)z), (felem)smod[i]);
        if (acc == 0) {
            root = (felem)z;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("small modulus has no root in big field");

    embed_table_.resize(small_.order());
    for (int a = 0; a < small_.order(); ++a) {
        felem acc = 0;
        for (int i = s - 1; i >= 0; --i)
            acc = big_.add(big_.mul(acc, root), (felem)small_.coeff((felem)a, i));
        embed_table_[a] = acc;
    }

    // Column (j*s + i) of the coordinate matrix holds the big-field digits of
    // embed(x^i) * b^j, where b is the class of x in the big field.
    felem beta = D >= 2 ? (felem)p : (felem)1;
    std::vector<std::vector<int>> mat(D, std::vector<int>(D, 0));
    felem beta_j = 1;
    for (int j = 0; j < r_; ++j) {
        for (int i = 0; i < s; ++i) {
            felem small_basis = (felem)1;
            for (int t = 0; t < i; ++t) small_basis = (felem)(small_basis * p); // x^i packed
            felem col_elem = big_.mul(embed_table_[small_basis], beta_j);
            for (int row = 0; row < D; ++row) mat[row][j * s + i] = big_.coeff(col_elem, row);
        }
        beta_j = big_.mul(beta_j, beta);
    }
    inv_mat_ = invert_mod_p(std::move(mat), p);
}

felem SubfieldMap::embed(felem a) const {
    small_.check_element(a);
    return embed_table_[a];
}

std::vector<felem> SubfieldMap::expand(felem a) const {
    big_.check_element(a);
    const int p = big_.characteristic();
    const int s = small_.degree();
    const int D = big_.degree();
    std::vector<int> coords(D, 0);
    for (int row = 0; row < D; ++row) {
        int acc = 0;
        for (int col = 0; col < D; ++col) acc += inv_mat_[row][col] * big_.coeff(a, col);
        coords[row] = acc % p;
    }
    std::vector<felem> v(r_);
    for (int j = 0; j < r_; ++j) {
        int packed = 0;
        for (int i = s - 1; i >= 0; --i) packed = packed * p + coords[j * s + i];
        v[j] = (felem)packed;
    }
    return v;
}

felem SubfieldMap::compose(std::span<const felem> v) const {
    if ((int)v.size() != r_) throw std::invalid_argument("vector length does not match expansion factor");
    felem beta = big_.degree() >= 2 ? (felem)big_.characteristic() : (felem)1;
    felem acc = 0;
    for (int j = r_ - 1; j >= 0; --j) {
        small_.check_element(v[j]);
        acc = big_.add(big_.mul(acc, beta), embed_table_[v[j]]);
    }
    return acc;
}

} // namespace lrc
