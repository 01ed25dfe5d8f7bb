#include "movoid/field.hpp"

#include <algorithm>
#include <numeric>

namespace movoid {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<int> decode_digits(int e, int p, int k) {
    std::vector<int> c(k, 0);
    for (int i = 0; i < k; ++i) {
        c[i] = e % p;
        e /= p;
    }
    return c;
}

int encode_digits(const std::vector<int>& c, int p) {
    int e = 0;
    for (std::size_t i = c.size(); i-- > 0;) e = e * p + c[i];
    return e;
}

// Remainder of a mod m over GF(p); m monic.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    int dm = static_cast<int>(m.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        int c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
        }
    }
    a.resize(dm);
    for (auto& c : a) c = ((c % p) + p) % p;
    return a;
}

std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& m, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(prod), m, p);
}

bool poly_is_zero(const std::vector<int>& a) {
    return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const std::vector<int>& m, int p) {
    int deg = static_cast<int>(m.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int e = 0; e < count; ++e) {
            std::vector<int> div = decode_digits(e, p, d);
            div.push_back(1); // monic
            // m mod div == 0 ?
            if (poly_is_zero(poly_mod(m, div, p))) return false;
        }
    }
    return true;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> fs;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

FieldCtx FieldCtx::make(int p, int k) {
    if (p == 2) throw Error(Errc::EvenCharacteristic, "characteristic 2 is not supported");
    if (!is_prime(p)) throw Error(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw Error(Errc::BadInput, "extension degree must be positive");

    long long qll = 1;
    for (int i = 0; i < k; ++i) {
        qll *= p;
        if (qll > kMaxQ)
            throw Error(Errc::TooLarge, "q = p^k exceeds the table ceiling " + std::to_string(kMaxQ));
    }

    FieldCtx ctx;
    ctx.p_ = p;
    ctx.k_ = k;
    ctx.q_ = static_cast<int>(qll);
    ctx.q2_ = ctx.q_ * ctx.q_;
    ctx.ord_ = ctx.q2_ - 1;
    const int q = ctx.q_;

    // Smallest monic irreducible of degree k, candidates ordered by the
    // encoding of their non-leading coefficient vector.
    for (int e = 0;; ++e) {
        if (e >= q) throw Error(Errc::BadInput, "no irreducible polynomial found"); // unreachable
        std::vector<int> cand = decode_digits(e, p, k);
        cand.push_back(1);
        if (k == 1 || is_irreducible(cand, p)) {
            ctx.g1_ = std::move(cand);
            break;
        }
    }

    // GF(q) tables from polynomial arithmetic.
    ctx.add_.resize(static_cast<std::size_t>(q) * q);
    ctx.mul_.resize(static_cast<std::size_t>(q) * q);
    ctx.neg_.resize(q);
    ctx.inv_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        std::vector<int> ca = decode_digits(a, p, k);
        for (int b = 0; b < q; ++b) {
            std::vector<int> cb = decode_digits(b, p, k);
            std::vector<int> s(k);
            for (int i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
            ctx.add_[ctx.idx(static_cast<Fq>(a), static_cast<Fq>(b))] =
                static_cast<Fq>(encode_digits(s, p));
            ctx.mul_[ctx.idx(static_cast<Fq>(a), static_cast<Fq>(b))] =
                static_cast<Fq>(encode_digits(poly_mulmod(ca, cb, ctx.g1_, p), p));
        }
        std::vector<int> cn(k);
        for (int i = 0; i < k; ++i) cn[i] = (p - ca[i]) % p;
        ctx.neg_[a] = static_cast<Fq>(encode_digits(cn, p));
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (ctx.mul_[ctx.idx(static_cast<Fq>(a), static_cast<Fq>(b))] == 1) ctx.inv_[a] = static_cast<Fq>(b);

    // Quadratic character and canonical roots by exhaustive squaring.
    ctx.sgn_.assign(q, -1);
    ctx.sgn_[0] = 0;
    ctx.sqrt_.assign(q, kNoRoot);
    ctx.sqrt_[0] = 0;
    for (int r = 1; r < q; ++r) {
        Fq sq = ctx.mul_[ctx.idx(static_cast<Fq>(r), static_cast<Fq>(r))];
        ctx.sgn_[sq] = 1;
        ctx.sqrt_[sq] = std::min(ctx.sqrt_[sq], static_cast<Fq>(r));
    }

    // Smallest nonsquare defines GF(q^2) = GF(q)[Y]/(Y^2 - n).
    ctx.n_ = 0;
    for (int a = 1; a < q; ++a)
        if (ctx.sgn_[a] < 0) {
            ctx.n_ = static_cast<Fq>(a);
            break;
        }
    assert(ctx.n_ != 0);

    if (q % 4 == 3) assert(std::gcd(q + 1, (q - 1) / 2) == 1);

    // Smallest generator of GF(q)^*.
    const auto fq_factors = prime_factors(q - 1);
    auto fq_pow = [&](Fq base, int e) {
        Fq r = 1;
        Fq b = base;
        while (e > 0) {
            if (e & 1) r = ctx.mul_[ctx.idx(r, b)];
            b = ctx.mul_[ctx.idx(b, b)];
            e >>= 1;
        }
        return r;
    };
    for (int a = 1; a < q; ++a) {
        bool prim = true;
        for (int f : fq_factors)
            if (fq_pow(static_cast<Fq>(a), (q - 1) / f) == 1) { prim = false; break; }
        if (prim) { ctx.gq_ = static_cast<Fq>(a); break; }
    }

    // Smallest primitive element of GF(q^2), scanning (u, v) lexicographically.
    const auto fq2_factors = prime_factors(ctx.ord_);
    auto raw_pow2 = [&](Fq2 x, long long e) {
        Fq2 r = 1;
        Fq2 b = x;
        while (e > 0) {
            if (e & 1) r = ctx.mul2_ref(r, b);
            b = ctx.mul2_ref(b, b);
            e >>= 1;
        }
        return r;
    };
    ctx.gamma_ = 0;
    for (int u = 0; u < q && ctx.gamma_ == 0; ++u) {
        for (int v = 0; v < q; ++v) {
            Fq2 x = ctx.make2(static_cast<Fq>(u), static_cast<Fq>(v));
            if (x == 0) continue;
            bool prim = true;
            for (int f : fq2_factors)
                if (raw_pow2(x, ctx.ord_ / f) == 1) { prim = false; break; }
            if (prim) {
                ctx.gamma_ = x;
                break;
            }
        }
    }
    assert(ctx.gamma_ != 0);

    ctx.exp_.resize(ctx.ord_);
    ctx.log_.assign(std::size_t{1} << (2 * kFq2Shift), 0);
    Fq2 acc = 1;
    for (int i = 0; i < ctx.ord_; ++i) {
        ctx.exp_[i] = acc;
        ctx.log_[acc] = i;
        acc = ctx.mul2_ref(acc, ctx.gamma_);
    }
    assert(acc == 1);

    return ctx;
}

Fq FieldCtx::pow(Fq a, long long e) const {
    if (a == 0) {
        if (e < 0) throw Error(Errc::DivisionByZero, "0 to a negative power");
        return e == 0 ? Fq{1} : Fq{0};
    }
    long long r = e % (q_ - 1);
    if (r < 0) r += q_ - 1;
    Fq res = 1, b = a;
    while (r > 0) {
        if (r & 1) res = mul(res, b);
        b = mul(b, b);
        r >>= 1;
    }
    return res;
}

Fq2 FieldCtx::pow2(Fq2 x, long long e) const {
    if (x == 0) {
        if (e < 0) throw Error(Errc::DivisionByZero, "0 to a negative power");
        return e == 0 ? Fq2{1} : Fq2{0};
    }
    long long r = (static_cast<long long>(log_[x]) * (e % ord_)) % ord_;
    if (r < 0) r += ord_;
    return exp_[r];
}

Fq FieldCtx::sqrt(Fq a) const {
    if (a == 0) return 0;
    if (sgn_[a] < 0) throw Error(Errc::NonSquare, "square root of a nonsquare");
    Fq r;
    if (q_ % 4 == 3) {
        r = pow(a, (q_ + 1) / 4);
    } else {
        r = sqrt_[a];
    }
    assert(mul(r, r) == a);
    return std::min(r, neg_[r]);
}

long FieldCtx::quad_char_sum(Fq c) const {
    long s = 0;
    for (int lam = 0; lam < q_; ++lam) {
        Fq l = static_cast<Fq>(lam);
        Fq val = add(add(mul(l, l), mul(c, l)), Fq{1});
        s += sgn_[val];
    }
    return s;
}

Fq FieldCtx::mul_ref(Fq a, Fq b) const {
    std::vector<int> ca = decode_digits(a, p_, k_);
    std::vector<int> cb = decode_digits(b, p_, k_);
    return static_cast<Fq>(encode_digits(poly_mulmod(ca, cb, g1_, p_), p_));
}

Fq2 FieldCtx::mul2_ref(Fq2 x, Fq2 y) const {
    // (u1 + v1 Y)(u2 + v2 Y) with Y^2 = n, products over GF(q) via mul_ref-grade tables.
    Fq u1 = u_part(x), v1 = v_part(x), u2 = u_part(y), v2 = v_part(y);
    Fq u = add(mul(u1, u2), mul(n_, mul(v1, v2)));
    Fq v = add(mul(u1, v2), mul(v1, u2));
    return make2(u, v);
}

} // namespace movoid
