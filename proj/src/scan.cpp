#include "movoid/scan.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace movoid::scan {

std::vector<std::uint16_t> line_counts(const LineSet& lines, const std::vector<std::uint8_t>& mask,
                                       int threads) {
    std::vector<std::uint16_t> counts(lines.count, 0);
    const std::uint32_t per = lines.points_per_line;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(std::max(threads, 1)) if (threads > 1)
#endif
    for (std::int64_t li = 0; li < static_cast<std::int64_t>(lines.count); ++li) {
        const std::uint32_t* ids = lines.flat.data() + li * per;
        std::uint16_t c = 0;
        for (std::uint32_t j = 0; j < per; ++j) c += mask[ids[j]];
        counts[li] = c;
    }
    return counts;
}

std::vector<std::uint32_t> perp_counts(const QuadricSpace& space,
                                       const std::vector<Point5>& member_points, int threads) {
    const QuadricModel model = space.model();
    std::vector<std::uint32_t> counts(space.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(std::max(threads, 1)) if (threads > 1)
#endif
    for (std::int64_t id = 0; id < static_cast<std::int64_t>(space.size()); ++id) {
        const Point5& P = space.point(static_cast<std::uint32_t>(id));
        std::uint32_t c = 0;
        for (const Point5& Q : member_points)
            c += (model.polar_b(P, Q) == 0);
        counts[id] = c;
    }
    return counts;
}

namespace {

SectionScan merge_section_parts(std::vector<SectionScan>& parts) {
    SectionScan total;
    for (const auto& part : parts) {
        total.n_elliptic += part.n_elliptic;
        total.n_hyperbolic += part.n_hyperbolic;
        total.n_cone += part.n_cone;
        for (const auto& [count, info] : part.elliptic_member_counts) {
            auto& slot = total.elliptic_member_counts[count];
            if (slot.first == 0) slot.second = info.second;
            slot.first += info.first;
        }
        total.bad_size_ranks.insert(total.bad_size_ranks.end(), part.bad_size_ranks.begin(),
                                    part.bad_size_ranks.end());
    }
    return total;
}

void scan_dual_range(const QuadricSpace& space, const std::vector<std::uint8_t>& mask,
                     std::uint64_t lo, std::uint64_t hi, SectionScan& out) {
    const QuadricModel model = space.model();
    const int q = space.q();
    const std::size_t n_ell = static_cast<std::size_t>(q) * q + 1;
    const std::size_t n_hyp = static_cast<std::size_t>(q + 1) * (q + 1);
    const std::size_t n_cone = static_cast<std::size_t>(q) * q + q + 1;

    for (std::uint64_t rank = lo; rank < hi; ++rank) {
        Point5 c = pg4_point_at(q, rank);
        std::size_t size = 0;
        std::uint32_t members = 0;
        for (std::uint32_t id = 0; id < space.size(); ++id) {
            if (model.polar_b(c, space.point(id)) == 0) {
                ++size;
                members += mask[id];
            }
        }
        if (size == n_ell) {
            ++out.n_elliptic;
            auto& slot = out.elliptic_member_counts[members];
            if (slot.first == 0) slot.second = rank;
            ++slot.first;
        } else if (size == n_hyp) {
            ++out.n_hyperbolic;
        } else if (size == n_cone) {
            ++out.n_cone;
        } else {
            out.bad_size_ranks.push_back(rank);
        }
    }
}

} // namespace

SectionScan section_scan(const QuadricSpace& space, const std::vector<std::uint8_t>& mask,
                         int threads) {
    const std::uint64_t total = pg4_size(space.q());
    constexpr std::uint64_t kGrain = 1 << 10;
    const std::uint64_t nchunks = (total + kGrain - 1) / kGrain;
    std::vector<SectionScan> parts(nchunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(threads, 1)) if (threads > 1)
#endif
    for (std::int64_t chunk = 0; chunk < static_cast<std::int64_t>(nchunks); ++chunk) {
        const std::uint64_t lo = chunk * kGrain;
        scan_dual_range(space, mask, lo, std::min(lo + kGrain, total), parts[chunk]);
    }
    return merge_section_parts(parts);
}

std::uint64_t set_stabilizer_order(const GroupA& A, const std::vector<std::uint32_t>& member_ids,
                                   const std::vector<std::uint8_t>& mask, int threads) {
    const auto& elements = A.elements();
    std::uint64_t count = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : count) \
    num_threads(std::max(threads, 1)) if (threads > 1)
#endif
    for (std::int64_t gi = 0; gi < static_cast<std::int64_t>(elements.size()); ++gi) {
        const GroupElement& g = elements[gi];
        bool fixes = true;
        for (std::uint32_t id : member_ids) {
            if (!mask[A.apply(g, id)]) {
                fixes = false;
                break;
            }
        }
        count += fixes; // a member-to-member injection on a finite set is onto
    }
    return count;
}

namespace ref {

std::vector<std::uint16_t> line_counts(const LineSet& lines, const std::vector<std::uint8_t>& mask) {
    std::vector<std::uint16_t> counts;
    counts.reserve(lines.count);
    for (std::uint32_t li = 0; li < lines.count; ++li) {
        const std::uint32_t* ids = lines.line(li);
        std::uint16_t c = 0;
        for (std::uint32_t j = 0; j < lines.points_per_line; ++j) c += mask[ids[j]];
        counts.push_back(c);
    }
    return counts;
}

std::vector<std::uint32_t> perp_counts(const QuadricSpace& space,
                                       const std::vector<Point5>& member_points) {
    const QuadricModel model = space.model();
    std::vector<std::uint32_t> counts;
    counts.reserve(space.size());
    for (std::uint32_t id = 0; id < space.size(); ++id) {
        std::uint32_t c = 0;
        for (const Point5& Q : member_points)
            c += (model.polar_b(space.point(id), Q) == 0);
        counts.push_back(c);
    }
    return counts;
}

SectionScan section_scan(const QuadricSpace& space, const std::vector<std::uint8_t>& mask) {
    SectionScan out;
    scan_dual_range(space, mask, 0, pg4_size(space.q()), out);
    return out;
}

} // namespace ref

} // namespace movoid::scan
