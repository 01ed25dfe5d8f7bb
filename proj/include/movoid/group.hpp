#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "movoid/geometry.hpp"

namespace movoid {

/// Element of the prescribed group A, in the normal form h * sigma^s * tau^t.
/// Split model: h = T_{beta,w} with beta a nonzero square of GF(q) and w of
/// norm 1 in GF(q^2). Trace model: h = T_u with u a square of GF(q^2)^*.
struct GroupElement {
    Model model = Model::Split;
    Fq beta = 1;  // split only
    Fq2 w = 1;    // split only
    Fq2 u = 1;    // trace only
    bool s = false;
    bool t = false;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// The group A = <H, sigma, tau> of order 2(q^2-1) acting on a quadric space.
class GroupA {
public:
    explicit GroupA(const QuadricSpace& space);

    const QuadricSpace& space() const { return *space_; }
    Model model() const { return space_->model().variant(); }
    std::uint64_t order() const { return 2ull * (static_cast<std::uint64_t>(space_->ctx().q2()) - 1); }

    GroupElement identity() const;
    /// Closure generator set: {T_{g^2,1}, T_{1,w0}, sigma, tau} (split, w0 = gamma^{q-1})
    /// or {T_{gamma^2}, sigma, tau} (trace).
    const std::vector<GroupElement>& generators() const { return generators_; }
    /// All 2(q^2-1) elements in a fixed canonical order.
    const std::vector<GroupElement>& elements() const { return elements_; }

    GroupElement compose(const GroupElement& g, const GroupElement& h) const;
    GroupElement inverse(const GroupElement& g) const;

    /// Normalized image of a point; g preserves the quadric.
    Point5 apply_raw(const GroupElement& g, const Point5& pt) const;
    std::uint32_t apply(const GroupElement& g, std::uint32_t id) const {
        return space_->id_of(apply_raw(g, space_->point(id)));
    }

    std::string element_str(const GroupElement& g) const;

private:
    void check_model(const GroupElement& g) const {
        if (g.model != model()) throw Error(Errc::ModelMismatch, "group element from the other model");
    }

    void build_elements();

    const QuadricSpace* space_;
    std::vector<GroupElement> generators_;
    std::vector<GroupElement> elements_;
};

/// An orbit of A on quadric points: sorted member ids, represented by the smallest.
struct Orbit {
    std::uint32_t representative = 0;
    std::vector<std::uint32_t> members;

    std::uint32_t length() const { return static_cast<std::uint32_t>(members.size()); }
};

/// Breadth-first closure of {P} under the generators. P must lie on the quadric.
Orbit orbit_of(const GroupA& A, std::uint32_t id);
Orbit orbit_of_point(const GroupA& A, const Point5& pt);

/// Orbit partition of the whole quadric, ordered by representative id.
std::vector<Orbit> orbit_census(const GroupA& A);

/// |{g in A : g(P) = P}| by full scan over the group.
std::uint64_t stabilizer_order_in_A(const GroupA& A, std::uint32_t id);

} // namespace movoid
