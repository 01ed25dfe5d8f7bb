#include "movoid/group.hpp"

#include <algorithm>
#include <sstream>

namespace movoid {

GroupA::GroupA(const QuadricSpace& space) : space_(&space) {
    const FieldCtx& F = space.ctx();
    const int q = F.q();
    if (model() == Model::Split) {
        Fq g = F.q_primitive();
        GroupElement tb;
        tb.beta = F.mul(g, g); // generates the squares
        GroupElement tw;
        tw.w = F.gamma_pow(q - 1); // generates the norm-1 subgroup
        GroupElement sg;
        sg.s = true;
        GroupElement tu;
        tu.t = true;
        generators_ = {tb, tw, sg, tu};
    } else {
        GroupElement tu;
        tu.model = Model::Trace;
        tu.u = F.gamma_pow(2); // generates the squares of GF(q^2)^*
        GroupElement sg;
        sg.model = Model::Trace;
        sg.s = true;
        GroupElement ta;
        ta.model = Model::Trace;
        ta.t = true;
        generators_ = {tu, sg, ta};
    }
    build_elements();
}

GroupElement GroupA::identity() const {
    GroupElement e;
    e.model = model();
    return e;
}

void GroupA::build_elements() {
    const FieldCtx& F = space_->ctx();
    const int q = F.q();
    std::vector<GroupElement> out;
    out.reserve(order());
    if (model() == Model::Split) {
        for (int b = 1; b < q; ++b) {
            if (F.sgn(static_cast<Fq>(b)) != 1) continue;
            for (int u = 0; u < q; ++u) {
                for (int v = 0; v < q; ++v) {
                    Fq2 w = F.make2(static_cast<Fq>(u), static_cast<Fq>(v));
                    if (w == 0 || F.norm(w) != 1) continue;
                    for (int s = 0; s < 2; ++s)
                        for (int t = 0; t < 2; ++t) {
                            GroupElement g;
                            g.beta = static_cast<Fq>(b);
                            g.w = w;
                            g.s = s;
                            g.t = t;
                            out.push_back(g);
                        }
                }
            }
        }
    } else {
        for (int u = 0; u < q; ++u) {
            for (int v = 0; v < q; ++v) {
                Fq2 x = F.make2(static_cast<Fq>(u), static_cast<Fq>(v));
                if (x == 0 || F.cyclotomic_index(x, 2) != 0) continue;
                for (int s = 0; s < 2; ++s)
                    for (int t = 0; t < 2; ++t) {
                        GroupElement g;
                        g.model = Model::Trace;
                        g.u = x;
                        g.s = s;
                        g.t = t;
                        out.push_back(g);
                    }
            }
        }
    }
    if (out.size() != order()) throw Error(Errc::BadInput, "group enumeration size mismatch");
    elements_ = std::move(out);
}

GroupElement GroupA::compose(const GroupElement& g, const GroupElement& h) const {
    check_model(g);
    check_model(h);
    const FieldCtx& F = space_->ctx();
    GroupElement r = identity();
    if (model() == Model::Split) {
        // sigma T_{b,w} sigma = T_{b, w^{-1}};  tau T_{b,w} tau = T_{b^{-1}, w}.
        Fq hb = g.t ? F.inv(h.beta) : h.beta;
        Fq2 hw = g.s ? F.inv2(h.w) : h.w;
        r.beta = F.mul(g.beta, hb);
        r.w = F.mul2(g.w, hw);
    } else {
        // sigma T_u sigma = T_{u^q};  tau T_u tau = T_{u^{-1}}.
        Fq2 hu = g.s ? F.frobenius(h.u) : h.u;
        if (g.t) hu = F.inv2(hu);
        r.u = F.mul2(g.u, hu);
    }
    r.s = g.s != h.s;
    r.t = g.t != h.t;
    return r;
}

GroupElement GroupA::inverse(const GroupElement& g) const {
    check_model(g);
    const FieldCtx& F = space_->ctx();
    GroupElement r = identity();
    r.s = g.s;
    r.t = g.t;
    if (model() == Model::Split) {
        Fq b = F.inv(g.beta);
        Fq2 w = F.inv2(g.w);
        if (g.t) b = F.inv(b);
        if (g.s) w = F.inv2(w);
        r.beta = b;
        r.w = w;
    } else {
        Fq2 u = F.inv2(g.u);
        if (g.s) u = F.frobenius(u);
        if (g.t) u = F.inv2(u);
        r.u = u;
    }
    return r;
}

Point5 GroupA::apply_raw(const GroupElement& g, const Point5& pt) const {
    check_model(g);
    const FieldCtx& F = space_->ctx();
    Point5 r = pt;
    if (model() == Model::Split) {
        if (g.t) { // (x1,x2,y,z) -> (x2,x1,y,-z)
            std::swap(r.c[0], r.c[1]);
            r.c[4] = F.neg(r.c[4]);
        }
        if (g.s) r.c[2] = F.neg(r.c[2]); // y -> -y^q
        // T_{beta,w}: (x1 b, x2 b^{-1}, w y, w^{(q+1)/2} z)
        r.c[0] = F.mul(r.c[0], g.beta);
        r.c[1] = F.mul(r.c[1], F.inv(g.beta));
        Fq2 y = F.mul2(g.w, F.make2(r.c[2], r.c[3]));
        r.c[2] = F.u_part(y);
        r.c[3] = F.v_part(y);
        Fq2 whalf = F.pow2(g.w, (F.q() + 1) / 2); // +1 or -1
        r.c[4] = F.mul(r.c[4], F.u_part(whalf));
    } else {
        if (g.t) { // (x,y,z) -> (x,z,y)
            std::swap(r.c[1], r.c[3]);
            std::swap(r.c[2], r.c[4]);
        }
        if (g.s) { // (x,y,z) -> (x,y^q,z^q)
            r.c[2] = F.neg(r.c[2]);
            r.c[4] = F.neg(r.c[4]);
        }
        // T_u: (x, y u, z u^{-1})
        Fq2 y = F.mul2(F.make2(r.c[1], r.c[2]), g.u);
        Fq2 z = F.mul2(F.make2(r.c[3], r.c[4]), F.inv2(g.u));
        r.c[1] = F.u_part(y);
        r.c[2] = F.v_part(y);
        r.c[3] = F.u_part(z);
        r.c[4] = F.v_part(z);
    }
    return space_->model().normalize(r);
}

std::string GroupA::element_str(const GroupElement& g) const {
    std::ostringstream os;
    if (g.model == Model::Split)
        os << "T(beta=" << g.beta << ",w=" << g.w << ")";
    else
        os << "T(u=" << g.u << ")";
    if (g.s) os << "*sigma";
    if (g.t) os << "*tau";
    return os.str();
}

Orbit orbit_of(const GroupA& A, std::uint32_t id) {
    const QuadricSpace& space = A.space();
    if (id >= space.size()) throw Error(Errc::OffQuadric, "point id out of range");
    std::vector<std::uint32_t> stack{id};
    std::vector<std::uint32_t> members;
    std::vector<bool> seen(space.size(), false);
    seen[id] = true;
    while (!stack.empty()) {
        std::uint32_t cur = stack.back();
        stack.pop_back();
        members.push_back(cur);
        for (const auto& g : A.generators()) {
            std::uint32_t img = A.apply(g, cur);
            if (!seen[img]) {
                seen[img] = true;
                stack.push_back(img);
            }
        }
    }
    std::sort(members.begin(), members.end());
    Orbit o;
    o.representative = members.front();
    o.members = std::move(members);
    return o;
}

Orbit orbit_of_point(const GroupA& A, const Point5& pt) {
    const QuadricSpace& space = A.space();
    Point5 n = space.model().normalize(pt);
    if (!space.model().on_quadric(n))
        throw Error(Errc::OffQuadric, "orbit seed is off the quadric: " + space.model().point_str(n));
    return orbit_of(A, space.id_of(n));
}

std::vector<Orbit> orbit_census(const GroupA& A) {
    const QuadricSpace& space = A.space();
    std::vector<bool> assigned(space.size(), false);
    std::vector<Orbit> orbits;
    for (std::uint32_t id = 0; id < space.size(); ++id) {
        if (assigned[id]) continue;
        Orbit o = orbit_of(A, id);
        for (std::uint32_t m : o.members) {
            if (assigned[m]) throw Error(Errc::BadInput, "orbits are not a partition");
            assigned[m] = true;
        }
        orbits.push_back(std::move(o));
    }
    return orbits;
}

std::uint64_t stabilizer_order_in_A(const GroupA& A, std::uint32_t id) {
    if (id >= A.space().size()) throw Error(Errc::OffQuadric, "point id out of range");
    std::uint64_t count = 0;
    for (const auto& g : A.elements())
        if (A.apply(g, id) == id) ++count;
    return count;
}

} // namespace movoid
