// Times the OpenMP scan kernels against their serial reference implementations
// and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "movoid/serialize.hpp"

using namespace movoid;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const char* name, double ref_ms, double par_ms, bool same) {
    if (ref_ms <= 0.0) {
        std::printf("%-22s %13s %10.1f ms\n", name, "-", par_ms);
        return;
    }
    std::printf("%-22s %10.1f ms %10.1f ms   x%.2f   %s\n", name, ref_ms, par_ms,
                par_ms > 0 ? ref_ms / par_ms : 0.0, same ? "match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int q = 19;
    int threads = 0;
    bool sections = false;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--q") && i + 1 < argc) q = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) threads = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--sections")) sections = true;
        else {
            std::fprintf(stderr, "usage: movoid-bench [--q Q] [--threads N] [--sections]\n");
            return 2;
        }
    }
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#else
    if (threads <= 0) threads = 1;
#endif
    std::printf("q = %d, threads = %d\n", q, threads);
    std::printf("%-22s %13s %13s\n", "kernel", "serial ref", "parallel");

    int p = q, k = 0;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    for (int acc = 1; acc < q; acc *= p) ++k;

    FieldCtx ctx = FieldCtx::make(p, k);
    Model model = q % 4 == 3 ? Model::Split : Model::Trace;
    QuadricModel qm(ctx, model);

    std::vector<Point5> pts_ref, pts_par;
    double t_ref = time_ms([&] { pts_ref = ref::quadric_points(qm); });
    double t_par = time_ms([&] {
        QuadricSpace s(qm, threads);
        pts_par = s.points();
    });
    row("quadric_points", t_ref, t_par, pts_ref == pts_par);

    QuadricSpace space(qm, threads);
    GroupA A(space);
    Construction c = model == Model::Split ? build_movoid_split(space, A)
                                           : build_movoid_trace(space, A);
    auto mask = membership_mask(c.set, space.size());
    auto member_points = [&] {
        std::vector<Point5> v;
        for (auto id : c.set.ids) v.push_back(space.point(id));
        return v;
    }();

    LineSet lines;
    double tl_par = time_ms([&] { lines = enumerate_lines(space, threads); });
    if (q <= 11) {
        LineSet lref;
        double tl_ref = time_ms([&] { lref = ref::enumerate_lines(space); });
        row("enumerate_lines", tl_ref, tl_par, lref.flat == lines.flat);
    } else {
        row("enumerate_lines", 0.0, tl_par, true); // pairwise ref is quadratic; skipped at this q
    }

    std::vector<std::uint16_t> lc_ref, lc_par;
    double tc_ref = time_ms([&] { lc_ref = scan::ref::line_counts(lines, mask); });
    double tc_par = time_ms([&] { lc_par = scan::line_counts(lines, mask, threads); });
    row("line_counts", tc_ref, tc_par, lc_ref == lc_par);

    std::vector<std::uint32_t> pc_ref, pc_par;
    double tp_ref = time_ms([&] { pc_ref = scan::ref::perp_counts(space, member_points); });
    double tp_par = time_ms([&] { pc_par = scan::perp_counts(space, member_points, threads); });
    row("perp_counts", tp_ref, tp_par, pc_ref == pc_par);

    if (sections) {
        scan::SectionScan ss_ref, ss_par;
        double ts_ref = time_ms([&] { ss_ref = scan::ref::section_scan(space, mask); });
        double ts_par = time_ms([&] { ss_par = scan::section_scan(space, mask, threads); });
        row("section_scan", ts_ref, ts_par,
            ss_ref.elliptic_member_counts == ss_par.elliptic_member_counts &&
                ss_ref.n_elliptic == ss_par.n_elliptic);
    }

    std::uint64_t st = 0;
    double tst = time_ms([&] { st = scan::set_stabilizer_order(A, c.set.ids, mask, threads); });
    std::printf("%-22s %13s %10.1f ms   (order %llu)\n", "set_stabilizer", "-", tst,
                static_cast<unsigned long long>(st));
    return 0;
}
