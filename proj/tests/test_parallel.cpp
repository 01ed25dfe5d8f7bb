// The OpenMP kernels must produce bit-identical results to the serial
// references, for any thread count.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "movoid/verification.hpp"

using namespace movoid;

namespace {

struct Bundle {
    FieldCtx F;
    QuadricSpace space;
    GroupA A;
    Construction c;
    std::vector<std::uint8_t> mask;
    std::vector<Point5> member_points;

    Bundle(int p, int k, Model model)
        : F(FieldCtx::make(p, k)),
          space(QuadricModel(F, model), 1),
          A(space),
          c(model == Model::Split ? build_movoid_split(space, A) : build_movoid_trace(space, A)),
          mask(membership_mask(c.set, space.size())) {
        for (auto id : c.set.ids) member_points.push_back(space.point(id));
    }
};

constexpr int kThreadCounts[] = {2, 4};

} // namespace

TEST_CASE("kernels match their serial references") {
    for (auto setup : {std::tuple{7, 1, Model::Split}, {5, 1, Model::Trace}}) {
        Bundle b(std::get<0>(setup), std::get<1>(setup), std::get<2>(setup));
        QuadricModel qm = b.space.model();

        auto serial_points = ref::quadric_points(qm);
        CHECK(serial_points == b.space.points());
        for (int t : kThreadCounts) {
            QuadricSpace threaded(qm, t);
            CHECK(threaded.points() == serial_points);
        }

        LineSet l1 = enumerate_lines(b.space, 1);
        LineSet lref = ref::enumerate_lines(b.space);
        CHECK(l1.flat == lref.flat);
        for (int t : kThreadCounts) CHECK(enumerate_lines(b.space, t).flat == l1.flat);

        auto lc_ref = scan::ref::line_counts(l1, b.mask);
        auto pc_ref = scan::ref::perp_counts(b.space, b.member_points);
        auto ss_ref = scan::ref::section_scan(b.space, b.mask);
        for (int t : {1, 2, 4}) {
            CHECK(scan::line_counts(l1, b.mask, t) == lc_ref);
            CHECK(scan::perp_counts(b.space, b.member_points, t) == pc_ref);
            auto ss = scan::section_scan(b.space, b.mask, t);
            CHECK(ss.n_elliptic == ss_ref.n_elliptic);
            CHECK(ss.n_hyperbolic == ss_ref.n_hyperbolic);
            CHECK(ss.n_cone == ss_ref.n_cone);
            CHECK(ss.elliptic_member_counts == ss_ref.elliptic_member_counts);
            CHECK(ss.bad_size_ranks == ss_ref.bad_size_ranks);
        }

        std::uint64_t st1 = scan::set_stabilizer_order(b.A, b.c.set.ids, b.mask, 1);
        for (int t : kThreadCounts)
            CHECK(scan::set_stabilizer_order(b.A, b.c.set.ids, b.mask, t) == st1);
    }
}

TEST_CASE("verification reports are thread-count independent") {
    Bundle b(7, 1, Model::Split);
    LineSet lines = enumerate_lines(b.space, 1);
    VerifyReport r1 = verify_point_set(b.space, lines, b.A, b.c.set, true, 1);
    for (int t : kThreadCounts) {
        VerifyReport rt = verify_point_set(b.space, lines, b.A, b.c.set, true, t);
        CHECK(rt.pass == r1.pass);
        CHECK(rt.m_ovoid.histogram == r1.m_ovoid.histogram);
        CHECK(rt.perp.member_hist == r1.perp.member_hist);
        CHECK(rt.perp.outside_hist == r1.perp.outside_hist);
        REQUIRE(rt.sections.has_value());
        CHECK(rt.sections->residues_mod_p == r1.sections->residues_mod_p);
        CHECK(rt.sections->residues_mod_q == r1.sections->residues_mod_q);
    }
}
