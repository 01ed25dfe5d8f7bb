#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "movoid/group.hpp"

namespace movoid {

/// A candidate m-ovoid: sorted quadric point ids plus the declared m.
struct PointSet {
    Model model = Model::Split;
    int m = 0;
    std::vector<std::uint32_t> ids;

    std::size_t size() const { return ids.size(); }
    bool contains(std::uint32_t id) const;
};

/// Membership bitmap for scan kernels.
std::vector<std::uint8_t> membership_mask(const PointSet& set, std::uint32_t space_size);

/// Parameters of the split-model family (q = 3 mod 4): a nonzero with 1+a^2 a
/// square, d a root of a^{-2}+1, mu of norm -1. R = (a,-a,0,1) is the dual
/// point whose perp characterizes the orbit choices.
struct SplitParams {
    Fq a = 0;
    Fq d = 0;
    Fq2 mu = 0;
};

/// Parameters of the trace-model family (q = 1 mod 4).
struct TraceParams {
    Fq2 delta = 0;   // gamma^{(q+1)/2}, so delta + delta^q = 0
    int epsilon = 1; // 1 if q = 1 mod 8, else 3
};

SplitParams select_params_split(const FieldCtx& F, std::optional<Fq> a_override = std::nullopt);
TraceParams select_params_trace(const FieldCtx& F);

/// All norm(-1) choices of mu and both roots d, for choice-independence checks.
std::vector<Fq2> all_mu_choices(const FieldCtx& F);
std::vector<Fq> both_d_choices(const FieldCtx& F, Fq a);

/// A built family member: the set plus its named parts (disjoint, in union order).
struct Construction {
    PointSet set;
    std::vector<std::pair<std::string, std::vector<std::uint32_t>>> parts;
    std::optional<SplitParams> split_params;
    std::optional<TraceParams> trace_params;
};

/// S = {(x1,x2,y,1) on Q : 1 + a^2 x1 x2 in squares, x1 x2 y != 0}.
PointSet build_S_split(const QuadricSpace& space, const SplitParams& params);

/// M = S u O(1,0,1,1) u O(1,1,mu,0) u O(1,1,0,1) u O(-1,1,ad,a); m = (q-1)/2.
Construction build_movoid_split(const QuadricSpace& space, const GroupA& A,
                                std::optional<SplitParams> params = std::nullopt);

/// S = {(1, y, y^{-1}(w - 1/2)) : w in C_{(q+1)/2}^{(2(q+1),q^2)}, y in GF(q^2)^*}.
PointSet build_S_trace(const QuadricSpace& space);

/// M = O(0,0,1) u O(1,1,-1/2) u O(0,1,delta) u S; m = (q+1)/2.
Construction build_movoid_trace(const QuadricSpace& space, const GroupA& A);

/// The two sides of the membership equivalence for w = z + 1/2:
/// first:  w lies in C_{(q+1)/2}^{(2(q+1),q^2)};
/// second: norm(z) - 1/4 in C_epsilon^{(4,q)} and z^q + z + 1 = 0.
std::pair<bool, bool> w_condition_equiv(const FieldCtx& F, Fq2 z);

/// Orbit of a cataloged representative. Split names: O(1,0,0,0), O(1,1,0,1),
/// O(0,0,1,1), O(1,1,mu,0), O(1,-1,1,0), O(1,0,1,1), O(-1,0,1,1), O(-1,1,ad,a).
/// Trace names: O(0,0,1), O(0,0,delta), O(0,1,delta), O(0,1,delta^-1), O(1,1,-1/2).
/// Names with parameters require the matching params argument.
Orbit named_orbit(const GroupA& A, const std::string& name,
                  std::optional<SplitParams> split_params = std::nullopt,
                  std::optional<TraceParams> trace_params = std::nullopt);

} // namespace movoid
