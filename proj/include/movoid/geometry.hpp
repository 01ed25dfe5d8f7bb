#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "movoid/field.hpp"

namespace movoid {

enum class Model : std::uint8_t { Split, Trace };

inline const char* model_name(Model m) { return m == Model::Split ? "split" : "trace"; }

/// A point of PG(4,q), stored as its 5 coordinates over GF(q) in the model's
/// coordinate order. Split: (x1, x2, y_u, y_v, z); Trace: (x, y_u, y_v, z_u, z_v).
/// Normalized form: the first nonzero coordinate equals 1. Points compare and
/// rank lexicographically on this flattened tuple.
struct Point5 {
    std::array<Fq, 5> c{};

    friend bool operator==(const Point5& a, const Point5& b) { return a.c == b.c; }
    friend auto operator<=>(const Point5& a, const Point5& b) { return a.c <=> b.c; }
};

/// Dense lexicographic key; key order coincides with Point5 order.
inline std::uint64_t pack_point(const Point5& pt) {
    std::uint64_t key = 0;
    for (Fq c : pt.c) key = (key << 8) | c;
    return key;
}

/// One of the two quadratic-form models of Q(4,q). Holds the form, its polar
/// form, and coordinate plumbing; immutable and cheap to copy.
class QuadricModel {
public:
    QuadricModel(const FieldCtx& ctx, Model variant) : ctx_(&ctx), variant_(variant) {}

    const FieldCtx& ctx() const { return *ctx_; }
    Model variant() const { return variant_; }

    /// Form value on the stored representative. Only its vanishing and sgn are
    /// projective invariants of the normalized representative.
    Fq eval_f(const Point5& pt) const {
        const FieldCtx& F = *ctx_;
        const auto& c = pt.c;
        if (variant_ == Model::Split) {
            // x1*x2 + (yu^2 - n*yv^2) - z^2
            Fq nrm = F.sub(F.mul(c[2], c[2]), F.mul(F.nonsquare(), F.mul(c[3], c[3])));
            return F.sub(F.add(F.mul(c[0], c[1]), nrm), F.mul(c[4], c[4]));
        }
        // x^2 + Tr(y*z) = x^2 + 2*(yu*zu + n*yv*zv)
        Fq t = F.add(F.mul(c[1], c[3]), F.mul(F.nonsquare(), F.mul(c[2], c[4])));
        return F.add(F.mul(c[0], c[0]), F.add(t, t));
    }

    /// Polar form B(P,Q) = f(P+Q) - f(P) - f(Q), evaluated on representatives.
    Fq polar_b(const Point5& a, const Point5& b) const {
        const FieldCtx& F = *ctx_;
        const auto& x = a.c;
        const auto& y = b.c;
        if (variant_ == Model::Split) {
            // x1'x2 + x1x2' + Tr(y^q y') - 2zz' = x1'x2 + x1x2' + 2(yu*yu' - n*yv*yv') - 2zz'
            Fq t = F.sub(F.mul(x[2], y[2]), F.mul(F.nonsquare(), F.mul(x[3], y[3])));
            Fq zz = F.mul(x[4], y[4]);
            return F.add(F.add(F.mul(x[0], y[1]), F.mul(x[1], y[0])),
                         F.sub(F.add(t, t), F.add(zz, zz)));
        }
        // 2xx' + Tr(y z') + Tr(y' z)
        Fq t1 = F.add(F.mul(x[1], y[3]), F.mul(F.nonsquare(), F.mul(x[2], y[4])));
        Fq t2 = F.add(F.mul(y[1], x[3]), F.mul(F.nonsquare(), F.mul(y[2], x[4])));
        Fq xx = F.mul(x[0], y[0]);
        return F.add(F.add(xx, xx), F.add(F.add(t1, t1), F.add(t2, t2)));
    }

    bool on_quadric(const Point5& pt) const { return eval_f(pt) == 0; }

    Point5 scale(const Point5& pt, Fq s) const {
        Point5 r;
        for (int i = 0; i < 5; ++i) r.c[i] = ctx_->mul(pt.c[i], s);
        return r;
    }

    Point5 add(const Point5& a, const Point5& b) const {
        Point5 r;
        for (int i = 0; i < 5; ++i) r.c[i] = ctx_->add(a.c[i], b.c[i]);
        return r;
    }

    /// Rescale so the first nonzero coordinate is 1. Throws on the zero vector.
    Point5 normalize(const Point5& pt) const {
        for (int i = 0; i < 5; ++i) {
            if (pt.c[i] != 0) {
                if (pt.c[i] == 1) return pt;
                return scale(pt, ctx_->inv(pt.c[i]));
            }
        }
        throw Error(Errc::BadInput, "cannot normalize the zero vector");
    }

    // Model-tuple helpers.
    Point5 split_point(Fq x1, Fq x2, Fq2 y, Fq z) const {
        return Point5{{x1, x2, ctx_->u_part(y), ctx_->v_part(y), z}};
    }
    Point5 trace_point(Fq x, Fq2 y, Fq2 z) const {
        return Point5{{x, ctx_->u_part(y), ctx_->v_part(y), ctx_->u_part(z), ctx_->v_part(z)}};
    }

    std::string point_str(const Point5& pt) const;

private:
    const FieldCtx* ctx_;
    Model variant_;
};

/// Total number of points of PG(4,q).
inline std::uint64_t pg4_size(int q) {
    std::uint64_t n = 1, acc = 1;
    for (int i = 0; i < 4; ++i) {
        acc *= static_cast<std::uint64_t>(q);
        n += acc;
    }
    return n;
}

/// Decode a lexicographic rank in [0, pg4_size(q)) to the normalized point of that rank.
Point5 pg4_point_at(int q, std::uint64_t rank);

/// The enumerated quadric: all points with f = 0, sorted lexicographically and
/// identified by their index (id) in that order. Immutable after construction.
class QuadricSpace {
public:
    QuadricSpace(const QuadricModel& model, int threads = 1);

    const QuadricModel& model() const { return model_; }
    const FieldCtx& ctx() const { return model_.ctx(); }
    int q() const { return ctx().q(); }

    std::uint32_t size() const { return static_cast<std::uint32_t>(points_.size()); }
    const Point5& point(std::uint32_t id) const { return points_[id]; }
    const std::vector<Point5>& points() const { return points_; }

    std::optional<std::uint32_t> try_id(const Point5& normalized) const;
    std::uint32_t id_of(const Point5& normalized) const;

private:
    QuadricModel model_;
    std::vector<Point5> points_;
    std::vector<std::uint64_t> keys_;
};

/// All totally singular lines, as a flat array of (q+1) sorted point ids per
/// line; lines themselves are sorted by their id tuple.
struct LineSet {
    std::uint32_t points_per_line = 0;
    std::uint32_t count = 0;
    std::vector<std::uint32_t> flat;

    const std::uint32_t* line(std::uint32_t i) const { return flat.data() + std::size_t(i) * points_per_line; }
};

/// The q+1 points {lambda*P + Q} u {P}, as sorted ids. Requires P != Q, both
/// on the quadric, B(P,Q) = 0.
std::vector<std::uint32_t> line_through(const QuadricSpace& space, std::uint32_t p_id, std::uint32_t q_id);

LineSet enumerate_lines(const QuadricSpace& space, int threads = 1);

enum class SectionKind : std::uint8_t { Elliptic, Hyperbolic, Cone };

inline const char* section_kind_name(SectionKind k) {
    switch (k) {
    case SectionKind::Elliptic: return "elliptic";
    case SectionKind::Hyperbolic: return "hyperbolic";
    case SectionKind::Cone: return "cone";
    }
    return "?";
}

/// Hyperplane section {P on Q : B(c,P) = 0}, classified by cardinality.
struct Section {
    Point5 dual_point;
    SectionKind kind;
    std::vector<std::uint32_t> ids;
};

Section hyperplane_section(const QuadricSpace& space, const Point5& dual_point);

SectionKind classify_section_size(int q, std::size_t n_points);

namespace ref {
/// Straightforward serial enumerations kept as references for the parallel kernels.
std::vector<Point5> quadric_points(const QuadricModel& model);
LineSet enumerate_lines(const QuadricSpace& space);
} // namespace ref

} // namespace movoid
