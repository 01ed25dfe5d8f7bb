#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "movoid/construction.hpp"
#include "movoid/scan.hpp"

namespace movoid {

/// Exhaustive line check: |L cap M| = m for every line, and |M| = m(q^2+1).
struct MOvoidReport {
    bool pass = false;
    int m = 0;
    std::size_t expected_size = 0, actual_size = 0;
    std::map<std::uint32_t, std::size_t> histogram; // intersection size -> #lines
    std::vector<std::uint32_t> witness_lines;       // extremal offending lines
};

/// Two-valued perp condition: (q+1)(m-1)+1 on members, (q+1)m outside.
struct PerpReport {
    bool pass = false;
    std::uint32_t expected_member = 0, expected_outside = 0;
    std::map<std::uint32_t, std::size_t> member_hist, outside_hist;
    std::vector<std::uint32_t> witness_points;
};

/// Full hyperplane scan. Hard checks: the three section sizes partition, every
/// elliptic section meets M in m (mod p) points, and (split family) the z=0
/// section meets M in (q^2-1)/2 points. The mod-q scan is reported, not gated.
struct SectionReport {
    bool pass = false;
    bool mod_q_holds = false;
    std::size_t n_elliptic = 0, n_hyperbolic = 0, n_cone = 0;
    std::map<long, std::size_t> residues_mod_p, residues_mod_q; // over elliptic sections
    std::optional<std::size_t> z0_count, z0_expected;
    std::vector<std::string> witnesses;
};

/// Setwise invariance under each generator of A.
struct InvarianceReport {
    bool pass = false;
    std::vector<std::string> failing_generators;
    std::string witness;
};

struct VerifyReport {
    bool pass = false; // conjunction of the hard checks below
    MOvoidReport m_ovoid;
    PerpReport perp;
    InvarianceReport invariance;
    std::optional<SectionReport> sections;
    double wall_ms = 0.0;
};

MOvoidReport check_m_ovoid(const QuadricSpace& space, const LineSet& lines, const PointSet& M,
                           int threads = 1);

PerpReport perp_profile(const QuadricSpace& space, const PointSet& M, int threads = 1);

SectionReport section_spectrum(const QuadricSpace& space, const PointSet& M, int threads = 1);

InvarianceReport check_A_invariance(const GroupA& A, const PointSet& M);

std::uint64_t stabilizer_in_A_of_set(const GroupA& A, const PointSet& M, int threads = 1);

/// The standard verification bundle: m-ovoid + perp + invariance, and the
/// hyperplane spectrum when with_sections is set.
VerifyReport verify_point_set(const QuadricSpace& space, const LineSet& lines, const GroupA& A,
                              const PointSet& M, bool with_sections, int threads = 1);

} // namespace movoid
