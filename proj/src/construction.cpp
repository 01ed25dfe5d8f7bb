#include "movoid/construction.hpp"

#include <algorithm>

namespace movoid {

bool PointSet::contains(std::uint32_t id) const {
    return std::binary_search(ids.begin(), ids.end(), id);
}

std::vector<std::uint8_t> membership_mask(const PointSet& set, std::uint32_t space_size) {
    std::vector<std::uint8_t> mask(space_size, 0);
    for (std::uint32_t id : set.ids) {
        if (id >= space_size) throw Error(Errc::BadInput, "point id out of range for this quadric");
        mask[id] = 1;
    }
    return mask;
}

SplitParams select_params_split(const FieldCtx& F, std::optional<Fq> a_override) {
    const int q = F.q();
    if (q % 4 != 3) throw Error(Errc::WrongResidue, "split family needs q = 3 (mod 4)");

    SplitParams P;
    if (a_override) {
        Fq a = *a_override;
        if (a == 0 || a >= F.q() || F.sgn(F.add(F.mul(a, a), Fq{1})) != 1)
            throw Error(Errc::NoValidA, "override a must be nonzero with 1+a^2 a square");
        P.a = a;
    } else {
        for (int a = 1; a < q; ++a) {
            Fq fa = static_cast<Fq>(a);
            if (F.sgn(F.add(F.mul(fa, fa), Fq{1})) == 1) {
                P.a = fa;
                break;
            }
        }
        if (P.a == 0)
            throw Error(Errc::NoValidA, "no a in GF(" + std::to_string(q) + ")* has 1+a^2 a square");
    }
    Fq inv_a2 = F.inv(F.mul(P.a, P.a));
    P.d = F.sqrt(F.add(inv_a2, Fq{1}));
    P.mu = all_mu_choices(F).front();
    return P;
}

std::vector<Fq2> all_mu_choices(const FieldCtx& F) {
    const int q = F.q();
    const Fq minus_one = F.neg(Fq{1});
    std::vector<Fq2> mus;
    for (int u = 0; u < q; ++u)
        for (int v = 0; v < q; ++v) {
            Fq2 x = F.make2(static_cast<Fq>(u), static_cast<Fq>(v));
            if (x != 0 && F.norm(x) == minus_one) mus.push_back(x);
        }
    return mus; // q+1 of them, in (u,v) order
}

std::vector<Fq> both_d_choices(const FieldCtx& F, Fq a) {
    Fq d = F.sqrt(F.add(F.inv(F.mul(a, a)), Fq{1}));
    return {d, F.neg(d)};
}

TraceParams select_params_trace(const FieldCtx& F) {
    const int q = F.q();
    if (q % 4 != 1) throw Error(Errc::WrongResidue, "trace family needs q = 1 (mod 4)");
    TraceParams P;
    P.delta = F.gamma_pow((q + 1) / 2);
    P.epsilon = (q % 8 == 1) ? 1 : 3;
    if (F.add(F.u_part(P.delta), F.u_part(P.delta)) != 0)
        throw Error(Errc::BadInput, "delta + delta^q != 0");
    return P;
}

PointSet build_S_split(const QuadricSpace& space, const SplitParams& params) {
    const FieldCtx& F = space.ctx();
    const Fq a2 = F.mul(params.a, params.a);
    PointSet S;
    S.model = Model::Split;
    S.m = 0;
    for (std::uint32_t id = 0; id < space.size(); ++id) {
        const Point5& pt = space.point(id);
        Fq x1 = pt.c[0], x2 = pt.c[1], z = pt.c[4];
        if (x1 == 0 || x2 == 0 || z == 0) continue;
        if (pt.c[2] == 0 && pt.c[3] == 0) continue; // y = 0
        // scale to z = 1: the product x1*x2 becomes x1*x2/z^2
        Fq prod = F.mul(F.mul(x1, x2), F.inv(F.mul(z, z)));
        if (F.sgn(F.add(Fq{1}, F.mul(a2, prod))) == 1) S.ids.push_back(id);
    }
    return S;
}

namespace {

void append_part(Construction& c, const std::string& name, std::vector<std::uint32_t> ids) {
    std::vector<std::uint32_t> merged;
    merged.reserve(c.set.ids.size() + ids.size());
    std::set_union(c.set.ids.begin(), c.set.ids.end(), ids.begin(), ids.end(),
                   std::back_inserter(merged));
    if (merged.size() != c.set.ids.size() + ids.size())
        throw Error(Errc::BadInput, "construction parts are not disjoint at " + name);
    c.set.ids = std::move(merged);
    c.parts.emplace_back(name, std::move(ids));
}

} // namespace

Construction build_movoid_split(const QuadricSpace& space, const GroupA& A,
                                std::optional<SplitParams> params) {
    const FieldCtx& F = space.ctx();
    const int q = F.q();
    if (space.model().variant() != Model::Split || A.model() != Model::Split)
        throw Error(Errc::ModelMismatch, "split construction needs the split model");
    SplitParams P = params ? *params : select_params_split(F);

    Construction c;
    c.set.model = Model::Split;
    c.set.m = (q - 1) / 2;
    c.split_params = P;

    append_part(c, "S", build_S_split(space, P).ids);
    append_part(c, "O(1,0,1,1)", named_orbit(A, "O(1,0,1,1)").members);
    append_part(c, "O(1,1,mu,0)", named_orbit(A, "O(1,1,mu,0)", P).members);
    append_part(c, "O(1,1,0,1)", named_orbit(A, "O(1,1,0,1)").members);
    append_part(c, "O(-1,1,ad,a)", named_orbit(A, "O(-1,1,ad,a)", P).members);

    const std::size_t expected = static_cast<std::size_t>(q - 1) / 2 * (static_cast<std::size_t>(q) * q + 1);
    if (c.set.size() != expected)
        throw Error(Errc::BadInput, "split family has size " + std::to_string(c.set.size()) +
                                        ", expected " + std::to_string(expected));
    return c;
}

PointSet build_S_trace(const QuadricSpace& space) {
    const FieldCtx& F = space.ctx();
    const int q = F.q();
    if (q % 4 != 1) throw Error(Errc::WrongResidue, "trace family needs q = 1 (mod 4)");
    const int d = 2 * (q + 1);
    const Fq half = F.inv(F.scalar(2));

    PointSet S;
    S.model = Model::Trace;
    S.m = 0;
    const QuadricModel& model = space.model();
    for (int wu = 0; wu < q; ++wu)
        for (int wv = 0; wv < q; ++wv) {
            Fq2 w = F.make2(static_cast<Fq>(wu), static_cast<Fq>(wv));
            if (w == 0 || F.cyclotomic_index(w, d) != (q + 1) / 2) continue;
            Fq2 z_base = F.sub2(w, F.lift(half));
            for (int yu = 0; yu < q; ++yu)
                for (int yv = 0; yv < q; ++yv) {
                    Fq2 y = F.make2(static_cast<Fq>(yu), static_cast<Fq>(yv));
                    if (y == 0) continue;
                    Point5 pt = model.trace_point(Fq{1}, y, F.mul2(F.inv2(y), z_base));
                    S.ids.push_back(space.id_of(pt)); // already normalized; throws if off the quadric
                }
        }
    std::sort(S.ids.begin(), S.ids.end());
    return S;
}

Construction build_movoid_trace(const QuadricSpace& space, const GroupA& A) {
    const FieldCtx& F = space.ctx();
    const int q = F.q();
    if (space.model().variant() != Model::Trace || A.model() != Model::Trace)
        throw Error(Errc::ModelMismatch, "trace construction needs the trace model");
    TraceParams P = select_params_trace(F);

    Construction c;
    c.set.model = Model::Trace;
    c.set.m = (q + 1) / 2;
    c.trace_params = P;

    append_part(c, "O(0,0,1)", named_orbit(A, "O(0,0,1)").members);
    append_part(c, "O(1,1,-1/2)", named_orbit(A, "O(1,1,-1/2)").members);
    append_part(c, "O(0,1,delta)", named_orbit(A, "O(0,1,delta)", std::nullopt, P).members);
    append_part(c, "S", build_S_trace(space).ids);

    const std::size_t expected = (static_cast<std::size_t>(q) * q + 1) * (q + 1) / 2;
    if (c.set.size() != expected)
        throw Error(Errc::BadInput, "trace family has size " + std::to_string(c.set.size()) +
                                        ", expected " + std::to_string(expected));
    return c;
}

std::pair<bool, bool> w_condition_equiv(const FieldCtx& F, Fq2 z) {
    const int q = F.q();
    if (q % 4 != 1) throw Error(Errc::WrongResidue, "the equivalence is stated for q = 1 (mod 4)");
    const Fq half = F.inv(F.scalar(2));
    const Fq quarter = F.inv(F.scalar(4));
    const int eps = (q % 8 == 1) ? 1 : 3;

    Fq2 w = F.add2(z, F.lift(half));
    bool lhs = w != 0 && F.cyclotomic_index(w, 2 * (q + 1)) == (q + 1) / 2;

    // z^q + z + 1 = 0 and norm(z) - 1/4 in C_eps^{(4,q)}
    Fq2 lin = F.add2(F.add2(F.frobenius(z), z), Fq2{1});
    Fq val = F.sub(F.norm(z), quarter);
    bool rhs = lin == 0 && val != 0 && F.cyclotomic_index(F.lift(val), 4 * (q + 1)) == eps * (q + 1);
    return {lhs, rhs};
}

Orbit named_orbit(const GroupA& A, const std::string& name,
                  std::optional<SplitParams> sp, std::optional<TraceParams> tp) {
    const QuadricSpace& space = A.space();
    const FieldCtx& F = space.ctx();
    const QuadricModel& model = space.model();
    const Fq one = 1;
    const Fq minus_one = F.neg(one);

    auto need_split = [&](const char* what) -> const SplitParams& {
        if (A.model() != Model::Split) throw Error(Errc::ModelMismatch, name + " lives in the split model");
        if (!sp) throw Error(Errc::ParamsRequired, std::string(what) + " requires split parameters");
        return *sp;
    };
    auto need_trace = [&](const char* what) -> const TraceParams& {
        if (A.model() != Model::Trace) throw Error(Errc::ModelMismatch, name + " lives in the trace model");
        if (!tp) throw Error(Errc::ParamsRequired, std::string(what) + " requires trace parameters");
        return *tp;
    };

    Point5 rep;
    if (A.model() == Model::Split) {
        if (name == "O(1,0,0,0)")
            rep = model.split_point(one, 0, 0, 0);
        else if (name == "O(1,1,0,1)")
            rep = model.split_point(one, one, 0, one);
        else if (name == "O(0,0,1,1)")
            rep = model.split_point(0, 0, Fq2{1}, one);
        else if (name == "O(1,-1,1,0)")
            rep = model.split_point(one, minus_one, Fq2{1}, 0);
        else if (name == "O(1,0,1,1)")
            rep = model.split_point(one, 0, Fq2{1}, one);
        else if (name == "O(-1,0,1,1)")
            rep = model.split_point(minus_one, 0, Fq2{1}, one);
        else if (name == "O(1,1,mu,0)")
            rep = model.split_point(one, one, need_split(name.c_str()).mu, 0);
        else if (name == "O(-1,1,ad,a)") {
            const SplitParams& P = need_split(name.c_str());
            rep = model.split_point(minus_one, one, F.lift(F.mul(P.a, P.d)), P.a);
        } else
            throw Error(Errc::UnknownName, "unknown split orbit " + name);
    } else {
        if (name == "O(0,0,1)")
            rep = model.trace_point(0, 0, Fq2{1});
        else if (name == "O(0,0,delta)")
            rep = model.trace_point(0, 0, need_trace(name.c_str()).delta);
        else if (name == "O(0,1,delta)")
            rep = model.trace_point(0, Fq2{1}, need_trace(name.c_str()).delta);
        else if (name == "O(0,1,delta^-1)")
            rep = model.trace_point(0, Fq2{1}, F.inv2(need_trace(name.c_str()).delta));
        else if (name == "O(1,1,-1/2)")
            rep = model.trace_point(1, Fq2{1}, F.lift(F.neg(F.inv(F.scalar(2)))));
        else
            throw Error(Errc::UnknownName, "unknown trace orbit " + name);
    }
    return orbit_of_point(A, rep);
}

} // namespace movoid
