#include "movoid/verification.hpp"

#include <algorithm>
#include <chrono>

namespace movoid {

namespace {

void check_set(const QuadricSpace& space, const PointSet& M) {
    if (M.model != space.model().variant())
        throw Error(Errc::ModelMismatch, "point set belongs to the other model");
    if (!M.ids.empty() && M.ids.back() >= space.size())
        throw Error(Errc::BadInput, "point set has out-of-range ids");
    if (!std::is_sorted(M.ids.begin(), M.ids.end()))
        throw Error(Errc::BadInput, "point set ids must be sorted");
}

std::vector<Point5> gather_points(const QuadricSpace& space, const PointSet& M) {
    std::vector<Point5> pts;
    pts.reserve(M.ids.size());
    for (std::uint32_t id : M.ids) pts.push_back(space.point(id));
    return pts;
}

} // namespace

MOvoidReport check_m_ovoid(const QuadricSpace& space, const LineSet& lines, const PointSet& M,
                           int threads) {
    check_set(space, M);
    MOvoidReport rep;
    rep.m = M.m;
    rep.actual_size = M.size();
    rep.expected_size = static_cast<std::size_t>(M.m) * (static_cast<std::size_t>(space.q()) * space.q() + 1);

    const auto mask = membership_mask(M, space.size());
    const auto counts = scan::line_counts(lines, mask, threads);
    for (auto c : counts) ++rep.histogram[c];

    rep.pass = rep.actual_size == rep.expected_size && rep.histogram.size() == 1 &&
               rep.histogram.begin()->first == static_cast<std::uint32_t>(M.m);
    if (!rep.pass && !counts.empty()) {
        auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
        if (*lo != static_cast<std::uint32_t>(M.m))
            rep.witness_lines.push_back(static_cast<std::uint32_t>(lo - counts.begin()));
        if (*hi != static_cast<std::uint32_t>(M.m) && hi != lo)
            rep.witness_lines.push_back(static_cast<std::uint32_t>(hi - counts.begin()));
    }
    return rep;
}

PerpReport perp_profile(const QuadricSpace& space, const PointSet& M, int threads) {
    check_set(space, M);
    const int q = space.q();
    PerpReport rep;
    const long want_member = static_cast<long>(q + 1) * (M.m - 1) + 1; // meaningless when M is empty
    rep.expected_member = static_cast<std::uint32_t>(std::max(want_member, 0L));
    rep.expected_outside = static_cast<std::uint32_t>((q + 1) * M.m);

    const auto mask = membership_mask(M, space.size());
    const auto counts = scan::perp_counts(space, gather_points(space, M), threads);

    rep.pass = true;
    for (std::uint32_t id = 0; id < space.size(); ++id) {
        const bool in = mask[id];
        (in ? rep.member_hist : rep.outside_hist)[counts[id]]++;
        const std::uint32_t want = in ? rep.expected_member : rep.expected_outside;
        if (counts[id] != want) {
            if (rep.witness_points.size() < 4) rep.witness_points.push_back(id);
            rep.pass = false;
        }
    }
    return rep;
}

SectionReport section_spectrum(const QuadricSpace& space, const PointSet& M, int threads) {
    check_set(space, M);
    const FieldCtx& F = space.ctx();
    const int q = F.q();
    const int p = F.p();
    SectionReport rep;

    const auto mask = membership_mask(M, space.size());
    const auto scan = scan::section_scan(space, mask, threads);
    rep.n_elliptic = scan.n_elliptic;
    rep.n_hyperbolic = scan.n_hyperbolic;
    rep.n_cone = scan.n_cone;

    bool sizes_ok = scan.bad_size_ranks.empty();
    for (auto rank : scan.bad_size_ranks)
        rep.witnesses.push_back("impossible section size at dual point " +
                                space.model().point_str(pg4_point_at(q, rank)));

    bool mod_p_ok = true;
    rep.mod_q_holds = true;
    for (const auto& [members, info] : scan.elliptic_member_counts) {
        rep.residues_mod_p[members % p] += info.first;
        rep.residues_mod_q[members % q] += info.first;
        if (static_cast<int>(members % p) != M.m % p) {
            if (mod_p_ok)
                rep.witnesses.push_back("elliptic section with " + std::to_string(members) +
                                        " members at dual point " +
                                        space.model().point_str(pg4_point_at(q, info.second)));
            mod_p_ok = false;
        }
        if (static_cast<int>(members % q) != M.m % q) rep.mod_q_holds = false;
    }

    bool z0_ok = true;
    if (space.model().variant() == Model::Split && M.m == (q - 1) / 2) {
        // the z = 0 hyperplane is the section at the dual point (0,0,0,1)
        Section z0 = hyperplane_section(space, space.model().split_point(0, 0, 0, 1));
        std::size_t count = 0;
        for (auto id : z0.ids) count += mask[id];
        rep.z0_count = count;
        rep.z0_expected = static_cast<std::size_t>(q) * q / 2; // (q^2-1)/2 for odd q
        z0_ok = count == *rep.z0_expected;
        if (!z0_ok) rep.witnesses.push_back("z=0 section meets the set in " + std::to_string(count) + " points");
    }

    rep.pass = sizes_ok && mod_p_ok && z0_ok;
    return rep;
}

InvarianceReport check_A_invariance(const GroupA& A, const PointSet& M) {
    const QuadricSpace& space = A.space();
    check_set(space, M);
    const auto mask = membership_mask(M, space.size());
    InvarianceReport rep;
    rep.pass = true;
    for (const auto& g : A.generators()) {
        for (std::uint32_t id : M.ids) {
            std::uint32_t img = A.apply(g, id);
            if (!mask[img]) {
                rep.pass = false;
                rep.failing_generators.push_back(A.element_str(g));
                if (rep.witness.empty())
                    rep.witness = space.model().point_str(space.point(id)) + " -> " +
                                  space.model().point_str(space.point(img));
                break;
            }
        }
    }
    return rep;
}

std::uint64_t stabilizer_in_A_of_set(const GroupA& A, const PointSet& M, int threads) {
    check_set(A.space(), M);
    const auto mask = membership_mask(M, A.space().size());
    return scan::set_stabilizer_order(A, M.ids, mask, threads);
}

VerifyReport verify_point_set(const QuadricSpace& space, const LineSet& lines, const GroupA& A,
                              const PointSet& M, bool with_sections, int threads) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.m_ovoid = check_m_ovoid(space, lines, M, threads);
    rep.perp = perp_profile(space, M, threads);
    rep.invariance = check_A_invariance(A, M);
    rep.pass = rep.m_ovoid.pass && rep.perp.pass && rep.invariance.pass;
    if (with_sections) {
        rep.sections = section_spectrum(space, M, threads);
        rep.pass = rep.pass && rep.sections->pass;
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace movoid
