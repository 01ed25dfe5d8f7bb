#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "movoid/geometry.hpp"
#include "movoid/group.hpp"

namespace movoid {

/// Data-parallel enumeration kernels. Every kernel is deterministic: results
/// are identical for any thread count (fixed-grain chunking, ordered merges).
/// The movoid::scan::ref twins are straightforward serial implementations kept
/// for testing and benchmarking the parallel paths.
namespace scan {

/// |L cap M| for every line, via a membership mask over point ids.
std::vector<std::uint16_t> line_counts(const LineSet& lines, const std::vector<std::uint8_t>& mask,
                                       int threads = 1);

/// |P-perp cap M| for every quadric point P (P itself counts when in M).
std::vector<std::uint32_t> perp_counts(const QuadricSpace& space,
                                       const std::vector<Point5>& member_points,
                                       int threads = 1);

/// Hyperplane scan over all dual points of PG(4,q).
struct SectionScan {
    std::size_t n_elliptic = 0, n_hyperbolic = 0, n_cone = 0;
    /// elliptic |section cap M| -> (#sections, rank of first witness dual point)
    std::map<std::uint32_t, std::pair<std::size_t, std::uint64_t>> elliptic_member_counts;
    /// dual points whose section size is none of the three admissible ones
    std::vector<std::uint64_t> bad_size_ranks;
};
SectionScan section_scan(const QuadricSpace& space, const std::vector<std::uint8_t>& mask,
                         int threads = 1);

/// |{g in A : g(M) = M}| by full scan over the group.
std::uint64_t set_stabilizer_order(const GroupA& A, const std::vector<std::uint32_t>& member_ids,
                                   const std::vector<std::uint8_t>& mask, int threads = 1);

namespace ref {
std::vector<std::uint16_t> line_counts(const LineSet& lines, const std::vector<std::uint8_t>& mask);
std::vector<std::uint32_t> perp_counts(const QuadricSpace& space,
                                       const std::vector<Point5>& member_points);
SectionScan section_scan(const QuadricSpace& space, const std::vector<std::uint8_t>& mask);
} // namespace ref

} // namespace scan
} // namespace movoid
