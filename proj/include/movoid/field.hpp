#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "movoid/common.hpp"

namespace movoid {

/// Element of GF(q), q = p^k. The canonical integer encoding of the element
/// c0 + c1*x + ... + c_{k-1}*x^{k-1} (mod g1) is c0 + c1*p + ... + c_{k-1}*p^{k-1}.
/// "Smallest" always means smallest in this encoding.
using Fq = std::uint16_t;

/// Element u + v*Y of GF(q^2) = GF(q)[Y]/(Y^2 - n), stored as u | (v << 8).
/// GF(q) embeds as the codes < q (v = 0). The canonical order on GF(q^2) used for
/// "smallest" choices is lexicographic on the pair (u, v).
using Fq2 = std::uint32_t;

inline constexpr int kFq2Shift = 8;
inline constexpr int kMaxQ = 251; // largest tabulated field; q^2 codes fit in 16 bits

/// Arithmetic context for the tower GF(p) < GF(q) < GF(q^2), odd q only.
///
/// Everything is table-driven: GF(q) has dense add/mul tables, GF(q^2) has
/// exp/log tables for a fixed primitive element gamma. All distinguished
/// elements (defining polynomial g1, nonsquare n, gamma) are the smallest
/// admissible ones in encoding order, so two contexts built from the same
/// (p, k) are identical. The context is immutable after construction and
/// safe to share across threads; every operation is a pure function.
class FieldCtx {
public:
    static FieldCtx make(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    int q2() const { return q2_; }
    /// Coefficients of the monic irreducible defining GF(q) over GF(p); g1[i] is the x^i term.
    const std::vector<int>& g1() const { return g1_; }
    Fq nonsquare() const { return n_; }
    Fq2 gamma() const { return gamma_; }
    /// Smallest generator of GF(q)^*.
    Fq q_primitive() const { return gq_; }

    // ---- GF(q) ----

    Fq add(Fq a, Fq b) const { return add_[idx(a, b)]; }
    Fq sub(Fq a, Fq b) const { return add_[idx(a, neg_[b])]; }
    Fq neg(Fq a) const { return neg_[a]; }
    Fq mul(Fq a, Fq b) const { return mul_[idx(a, b)]; }

    Fq inv(Fq a) const {
        if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in GF(q)");
        return inv_[a];
    }

    Fq pow(Fq a, long long e) const;

    /// Integer -> GF(p) subfield element (reduces mod p).
    Fq scalar(long long m) const {
        long long r = m % p_;
        if (r < 0) r += p_;
        return static_cast<Fq>(r);
    }

    /// Quadratic character extended by sgn(0) = 0.
    int sgn(Fq a) const { return sgn_[a]; }

    /// Canonical square root: the smaller of the two roots in encoding order.
    Fq sqrt(Fq a) const;

    // ---- GF(q^2) ----

    Fq2 make2(Fq u, Fq v) const { return static_cast<Fq2>(u) | (static_cast<Fq2>(v) << kFq2Shift); }
    Fq u_part(Fq2 x) const { return static_cast<Fq>(x & 0xff); }
    Fq v_part(Fq2 x) const { return static_cast<Fq>(x >> kFq2Shift); }
    /// GF(q) -> GF(q^2) embedding (identity on codes).
    Fq2 lift(Fq a) const { return a; }
    bool in_subfield(Fq2 x) const { return v_part(x) == 0; }

    Fq2 add2(Fq2 x, Fq2 y) const {
        return make2(add(u_part(x), u_part(y)), add(v_part(x), v_part(y)));
    }
    Fq2 sub2(Fq2 x, Fq2 y) const {
        return make2(sub(u_part(x), u_part(y)), sub(v_part(x), v_part(y)));
    }
    Fq2 neg2(Fq2 x) const { return make2(neg_[u_part(x)], neg_[v_part(x)]); }

    Fq2 mul2(Fq2 x, Fq2 y) const {
        if (x == 0 || y == 0) return 0;
        int e = log_[x] + log_[y];
        if (e >= ord_) e -= ord_;
        return exp_[e];
    }

    Fq2 inv2(Fq2 x) const {
        if (x == 0) throw Error(Errc::DivisionByZero, "inverse of zero in GF(q^2)");
        int e = log_[x];
        return exp_[e == 0 ? 0 : ord_ - e];
    }

    Fq2 pow2(Fq2 x, long long e) const;

    /// x -> x^q. Fixes exactly the GF(q) subfield; an involution.
    Fq2 frobenius(Fq2 x) const { return make2(u_part(x), neg_[v_part(x)]); }

    /// Tr_{q^2/q}(x) = x + x^q.
    Fq trace(Fq2 x) const { return add(u_part(x), u_part(x)); }

    /// N_{q^2/q}(x) = x^{q+1} = u^2 - n v^2.
    Fq norm(Fq2 x) const {
        Fq u = u_part(x), v = v_part(x);
        return sub(mul(u, u), mul(n_, mul(v, v)));
    }

    /// Discrete log base gamma, in [0, q^2-1).
    int log_gamma(Fq2 x) const {
        if (x == 0) throw Error(Errc::ZeroElement, "discrete log of zero");
        return log_[x];
    }

    Fq2 gamma_pow(long long e) const {
        long long r = e % ord_;
        if (r < 0) r += ord_;
        return exp_[r];
    }

    /// Index i of the cyclotomic class C_i^{(d,q^2)} containing x, i.e. log_gamma(x) mod d.
    int cyclotomic_index(Fq2 x, int d) const {
        if (x == 0) throw Error(Errc::ZeroElement, "cyclotomic index of zero");
        if (d <= 0 || ord_ % d != 0)
            throw Error(Errc::BadModulus, "cyclotomic modulus must divide q^2-1");
        return log_[x] % d;
    }

    /// Sum over lambda in GF(q) of sgn(lambda^2 + c*lambda + 1).
    long quad_char_sum(Fq c) const;

    // Reference (table-free) products, kept as an internal cross-check path.
    Fq mul_ref(Fq a, Fq b) const;
    Fq2 mul2_ref(Fq2 x, Fq2 y) const;

private:
    FieldCtx() = default;
    std::size_t idx(Fq a, Fq b) const { return static_cast<std::size_t>(a) * q_ + b; }

    int p_ = 0, k_ = 0, q_ = 0, q2_ = 0;
    int ord_ = 0; // q^2 - 1
    std::vector<int> g1_;
    Fq n_ = 0;
    Fq gq_ = 0;
    Fq2 gamma_ = 0;

    std::vector<Fq> add_, mul_; // q*q
    std::vector<Fq> neg_, inv_; // q
    std::vector<signed char> sgn_;
    std::vector<Fq> sqrt_;  // canonical root, or kNoRoot
    std::vector<Fq2> exp_;  // gamma^i for i in [0, q^2-1)
    std::vector<int> log_;  // code -> exponent, log_[0] unused

    static constexpr Fq kNoRoot = 0xffff;
};

} // namespace movoid
