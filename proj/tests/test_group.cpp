#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "movoid/group.hpp"

using namespace movoid;

namespace {

struct Setup {
    FieldCtx F;
    QuadricSpace space;
    GroupA A;
    Setup(int p, int k, Model model)
        : F(FieldCtx::make(p, k)), space(QuadricModel(F, model), 1), A(space) {}
};

GroupElement t_split(const FieldCtx& F, Fq beta, Fq2 w) {
    GroupElement g;
    g.beta = beta;
    g.w = w;
    (void)F;
    return g;
}

std::multiset<std::uint32_t> census_lengths(const std::vector<Orbit>& orbits) {
    std::multiset<std::uint32_t> lens;
    for (const auto& o : orbits) lens.insert(o.length());
    return lens;
}

} // namespace

TEST_CASE("generator images") {
    Setup s(7, 1, Model::Split);
    const QuadricModel& Q = s.space.model();

    GroupElement tau;
    tau.t = true;

    // tau interchanges e1 and e2
    CHECK(s.A.apply_raw(tau, Q.split_point(1, 0, 0, 0)) == Q.split_point(0, 1, 0, 0));

    // T_{2,1} on (1,1,0,1): (2, 2^{-1}, 0, 1) ~ (1, 2, 0, 4)
    CHECK(s.A.apply_raw(t_split(s.F, 2, 1), Q.split_point(1, 1, 0, 1)) == Q.split_point(1, 2, 0, 4));
}

TEST_CASE("sigma negates the Frobenius of y") {
    Setup s(7, 1, Model::Split);
    const QuadricModel& Q = s.space.model();
    GroupElement sigma;
    sigma.s = true;
    // on y in GF(q) (v = 0), sigma(x1,x2,y,z) = (x1,x2,-y,z)
    for (std::uint32_t id = 0; id < s.space.size(); ++id) {
        const Point5& P = s.space.point(id);
        if (P.c[3] != 0) continue;
        Point5 img = s.A.apply_raw(sigma, P);
        Point5 want = Q.normalize(Q.split_point(P.c[0], P.c[1], s.F.lift(s.F.neg(P.c[2])), P.c[4]));
        CHECK(img == want);
    }
}

TEST_CASE("composition") {
    for (auto setup : {std::tuple{3, 1, Model::Split}, {7, 1, Model::Split}, {5, 1, Model::Trace}}) {
        Setup s(std::get<0>(setup), std::get<1>(setup), std::get<2>(setup));
        GroupElement sigma = s.A.identity(), tau = s.A.identity();
        sigma.s = true;
        tau.t = true;

        CHECK(s.A.compose(sigma, sigma) == s.A.identity());
        CHECK(s.A.compose(tau, tau) == s.A.identity());
        CHECK(s.A.compose(sigma, tau) == s.A.compose(tau, sigma));

        // the normal form composes like the action, exhaustively on a sample
        const auto& elements = s.A.elements();
        const std::size_t step = elements.size() > 100 ? 7 : 1;
        for (std::size_t i = 0; i < elements.size(); i += step)
            for (std::size_t j = 0; j < elements.size(); j += step) {
                GroupElement gh = s.A.compose(elements[i], elements[j]);
                for (std::uint32_t id = 0; id < s.space.size(); id += 11) {
                    CHECK(s.A.apply(gh, id) == s.A.apply(elements[i], s.A.apply(elements[j], id)));
                }
            }

        // inverses
        for (const auto& g : elements) {
            CHECK(s.A.compose(g, s.A.inverse(g)) == s.A.identity());
            CHECK(s.A.compose(s.A.inverse(g), g) == s.A.identity());
        }
    }
}

TEST_CASE("tau conjugation inverts beta") {
    Setup s(7, 1, Model::Split);
    GroupElement tau = s.A.identity();
    tau.t = true;
    GroupElement t = t_split(s.F, 2, 1);
    GroupElement c = s.A.compose(tau, t);
    CHECK(c.beta == s.F.inv(2));
    CHECK(c.t);
}

TEST_CASE("the group has order 2(q^2-1) and acts faithfully") {
    for (auto setup : {std::tuple{7, 1, Model::Split}, {5, 1, Model::Trace}, {3, 2, Model::Trace}}) {
        Setup s(std::get<0>(setup), std::get<1>(setup), std::get<2>(setup));
        const auto& elements = s.A.elements();
        CHECK(elements.size() == s.A.order());

        // distinct permutations of the quadric points
        std::set<std::vector<std::uint32_t>> perms;
        for (const auto& g : elements) {
            std::vector<std::uint32_t> perm(s.space.size());
            for (std::uint32_t id = 0; id < s.space.size(); ++id) perm[id] = s.A.apply(g, id);
            perms.insert(std::move(perm));
        }
        CHECK(perms.size() == s.A.order());

        // the closure of the generators under compose is exactly elements()
        auto key = [](const GroupElement& g) {
            return std::tuple(g.beta, g.w, g.u, g.s, g.t);
        };
        std::set<decltype(key(GroupElement{}))> closure{key(s.A.identity())}, all;
        for (const auto& g : elements) all.insert(key(g));
        std::vector<GroupElement> frontier{s.A.identity()};
        while (!frontier.empty()) {
            GroupElement g = frontier.back();
            frontier.pop_back();
            for (const auto& gen : s.A.generators()) {
                GroupElement h = s.A.compose(gen, g);
                if (closure.insert(key(h)).second) frontier.push_back(h);
            }
        }
        CHECK(closure == all);

        // generators preserve the form
        for (const auto& g : s.A.generators())
            for (std::uint32_t id = 0; id < s.space.size(); ++id)
                CHECK(s.space.model().eval_f(s.A.apply_raw(g, s.space.point(id))) == 0);
    }
}

TEST_CASE("orbits") {
    Setup s(7, 1, Model::Split);
    const QuadricModel& Q = s.space.model();

    Orbit o_e1 = orbit_of_point(s.A, Q.split_point(1, 0, 0, 0));
    CHECK(o_e1.length() == 2);
    CHECK(o_e1.members == std::vector<std::uint32_t>{s.space.id_of(Q.split_point(0, 1, 0, 0)),
                                                     s.space.id_of(Q.split_point(1, 0, 0, 0))});

    Orbit conic = orbit_of_point(s.A, Q.split_point(1, 1, 0, 1));
    CHECK(conic.length() == 6); // q - 1
    for (auto id : conic.members) {
        const Point5& P = s.space.point(id);
        CHECK((P.c[2] == 0 && P.c[3] == 0)); // y = 0
        CHECK(s.F.mul(P.c[0], P.c[1]) == s.F.mul(P.c[4], P.c[4]));
    }

    Orbit o0011 = orbit_of_point(s.A, Q.split_point(0, 0, 1, 1));
    CHECK(o0011.length() == 8); // q + 1

    Setup t(5, 1, Model::Trace);
    Orbit o001 = orbit_of_point(t.A, t.space.model().trace_point(0, 0, 1));
    CHECK(o001.length() == 6); // q + 1

    CHECK_THROWS_AS((void)orbit_of_point(s.A, Q.split_point(1, 1, 0, 0)), Error);
}

TEST_CASE("split orbit census") {
    auto expected = [](int q) {
        std::multiset<std::uint32_t> lens{2, static_cast<std::uint32_t>(q - 1),
                                          static_cast<std::uint32_t>(q + 1)};
        for (int i = 0; i < (q + 1) / 2; ++i) lens.insert((q * q - 1) / 2);
        for (int i = 0; i < 3 * (q + 1) / 4; ++i) lens.insert(q * q - 1);
        return lens;
    };
    for (int q : {3, 7, 11}) {
        Setup s(q, 1, Model::Split);
        auto orbits = orbit_census(s.A);
        CHECK(census_lengths(orbits) == expected(q));
        std::size_t total = 0;
        for (const auto& o : orbits) total += o.length();
        CHECK(total == s.space.size());
    }
}

TEST_CASE("trace orbits with a zero coordinate at q=5") {
    Setup s(5, 1, Model::Trace);
    const QuadricModel& Q = s.space.model();
    Fq2 delta = s.F.gamma_pow((s.F.q() + 1) / 2);
    CHECK(orbit_of_point(s.A, Q.trace_point(0, 0, 1)).length() == 6);
    CHECK(orbit_of_point(s.A, Q.trace_point(0, 0, delta)).length() == 6);
    CHECK(orbit_of_point(s.A, Q.trace_point(0, 1, delta)).length() == 12);
    CHECK(orbit_of_point(s.A, Q.trace_point(0, 1, s.F.inv2(delta))).length() == 12);
}

TEST_CASE("stabilizers") {
    Setup s(7, 1, Model::Split);
    const QuadricModel& Q = s.space.model();
    const std::uint64_t order = s.A.order();

    CHECK(stabilizer_order_in_A(s.A, s.space.id_of(Q.split_point(1, 0, 0, 0))) == order / 2);
    CHECK(stabilizer_order_in_A(s.A, s.space.id_of(Q.split_point(1, s.F.neg(1), 1, 0))) == 4);

    // orbit-stabilizer identity across the whole census
    for (const auto& o : orbit_census(s.A))
        CHECK(o.length() * stabilizer_order_in_A(s.A, o.representative) == order);
}

TEST_CASE("short-orbit stabilizer criterion at q=7") {
    Setup s(7, 1, Model::Split);
    const FieldCtx& F = s.F;
    for (std::uint32_t id = 0; id < s.space.size(); ++id) {
        const Point5& P = s.space.point(id);
        if (P.c[0] == 0 || P.c[1] == 0 || P.c[4] == 0) continue;
        if (P.c[2] == 0 && P.c[3] == 0) continue;
        // normalize z to 1: x1 x2 -> x1 x2 / z^2
        Fq prod = F.mul(F.mul(P.c[0], P.c[1]), F.inv(F.mul(P.c[4], P.c[4])));
        bool criterion = F.sgn(prod) == -1 && F.sgn(F.sub(1, prod)) == 1;
        std::uint64_t stab = stabilizer_order_in_A(s.A, id);
        CHECK(stab == (criterion ? 4u : 2u));
    }
}

TEST_CASE("short orbits with all coordinates nonzero are the O(1,-t^2,y,1)") {
    for (int q : {7, 11}) {
        Setup s(q, 1, Model::Split);
        const FieldCtx& F = s.F;
        const QuadricModel& Q = s.space.model();
        const std::uint32_t short_len = (q * q - 1) / 2;

        std::set<std::uint32_t> param_reps; // orbit representatives reached from (1,-t^2,y,1)
        for (int t = 1; t < q; ++t) {
            Fq t2 = F.mul(static_cast<Fq>(t), static_cast<Fq>(t));
            if (F.sgn(F.add(1, t2)) != 1) continue;
            for (int u = 0; u < q; ++u)
                for (int v = 0; v < q; ++v) {
                    Fq2 y = F.make2(static_cast<Fq>(u), static_cast<Fq>(v));
                    if (y == 0 || F.norm(y) != F.add(1, t2)) continue;
                    Orbit o = orbit_of_point(s.A, Q.split_point(1, F.neg(t2), y, 1));
                    CHECK(o.length() == short_len);
                    param_reps.insert(o.representative);
                }
        }
        CHECK(param_reps.size() == static_cast<std::size_t>((q - 3) / 2));

        std::set<std::uint32_t> nonzero_short_reps;
        for (const auto& o : orbit_census(s.A)) {
            if (o.length() != short_len) continue;
            bool all_nonzero = true;
            for (auto id : o.members) {
                const Point5& P = s.space.point(id);
                if (P.c[0] == 0 || P.c[1] == 0 || P.c[4] == 0 || (P.c[2] == 0 && P.c[3] == 0))
                    all_nonzero = false;
            }
            if (all_nonzero) nonzero_short_reps.insert(o.representative);
        }
        CHECK(nonzero_short_reps == param_reps);
    }
}

TEST_CASE("the z=0 elliptic quadric splits into three orbits") {
    Setup s(7, 1, Model::Split);
    const FieldCtx& F = s.F;
    const QuadricModel& Q = s.space.model();

    // smallest mu with norm(mu) = -1
    Fq2 mu = 0;
    for (int u = 0; u < F.q() && mu == 0; ++u)
        for (int v = 0; v < F.q(); ++v) {
            Fq2 x = F.make2(static_cast<Fq>(u), static_cast<Fq>(v));
            if (x != 0 && F.norm(x) == F.neg(1)) {
                mu = x;
                break;
            }
        }
    CHECK(mu == F.make2(2, 2));

    std::set<std::uint32_t> z0;
    for (std::uint32_t id = 0; id < s.space.size(); ++id)
        if (s.space.point(id).c[4] == 0) z0.insert(id);
    CHECK(z0.size() == static_cast<std::size_t>(F.q() * F.q() + 1));

    std::set<std::uint32_t> joined;
    for (const Orbit& o : {orbit_of_point(s.A, Q.split_point(1, 0, 0, 0)),
                           orbit_of_point(s.A, Q.split_point(1, F.neg(1), 1, 0)),
                           orbit_of_point(s.A, Q.split_point(1, 1, mu, 0))})
        joined.insert(o.members.begin(), o.members.end());
    CHECK(joined == z0);
}
