#include "movoid/geometry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace movoid {

std::string QuadricModel::point_str(const Point5& pt) const {
    std::ostringstream os;
    auto fq2 = [&](Fq u, Fq v) {
        os << static_cast<int>(u);
        if (v != 0) os << "+" << static_cast<int>(v) << "Y";
    };
    os << "(";
    if (variant_ == Model::Split) {
        os << static_cast<int>(pt.c[0]) << "," << static_cast<int>(pt.c[1]) << ",";
        fq2(pt.c[2], pt.c[3]);
        os << "," << static_cast<int>(pt.c[4]);
    } else {
        os << static_cast<int>(pt.c[0]) << ",";
        fq2(pt.c[1], pt.c[2]);
        os << ",";
        fq2(pt.c[3], pt.c[4]);
    }
    os << ")";
    return os.str();
}

Point5 pg4_point_at(int q, std::uint64_t rank) {
    std::uint64_t block = 1;
    for (int lead = 4; lead >= 0; --lead) {
        if (rank < block) {
            Point5 pt{};
            pt.c[lead] = 1;
            for (int pos = 4; pos > lead; --pos) {
                pt.c[pos] = static_cast<Fq>(rank % q);
                rank /= q;
            }
            return pt;
        }
        rank -= block;
        block *= static_cast<std::uint64_t>(q);
    }
    throw Error(Errc::BadInput, "PG(4,q) rank out of range");
}

namespace {

std::vector<Point5> scan_quadric(const QuadricModel& model, int threads) {
    const int q = model.ctx().q();
    const std::uint64_t total = pg4_size(q);
    constexpr std::uint64_t kGrain = 1 << 13;
    const std::uint64_t nchunks = (total + kGrain - 1) / kGrain;

    std::vector<std::vector<Point5>> parts(nchunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(threads, 1)) if (threads > 1)
#endif
    for (std::int64_t chunk = 0; chunk < static_cast<std::int64_t>(nchunks); ++chunk) {
        const std::uint64_t lo = chunk * kGrain;
        const std::uint64_t hi = std::min(lo + kGrain, total);
        auto& out = parts[chunk];
        for (std::uint64_t r = lo; r < hi; ++r) {
            Point5 pt = pg4_point_at(q, r);
            if (model.eval_f(pt) == 0) out.push_back(pt);
        }
    }

    std::vector<Point5> points;
    for (auto& part : parts) points.insert(points.end(), part.begin(), part.end());
    return points;
}

} // namespace

QuadricSpace::QuadricSpace(const QuadricModel& model, int threads) : model_(model) {
    points_ = scan_quadric(model, threads);
    keys_.reserve(points_.size());
    for (const auto& pt : points_) keys_.push_back(pack_point(pt));
}

std::optional<std::uint32_t> QuadricSpace::try_id(const Point5& normalized) const {
    std::uint64_t key = pack_point(normalized);
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || *it != key) return std::nullopt;
    return static_cast<std::uint32_t>(it - keys_.begin());
}

std::uint32_t QuadricSpace::id_of(const Point5& normalized) const {
    auto id = try_id(normalized);
    if (!id) throw Error(Errc::OffQuadric, "point is not on the quadric: " + model_.point_str(normalized));
    return *id;
}

std::vector<std::uint32_t> line_through(const QuadricSpace& space, std::uint32_t p_id, std::uint32_t q_id) {
    if (p_id == q_id) throw Error(Errc::DegeneratePair, "line through a single point");
    const QuadricModel& model = space.model();
    const FieldCtx& F = space.ctx();
    const Point5& P = space.point(p_id);
    const Point5& Q = space.point(q_id);
    if (model.polar_b(P, Q) != 0)
        throw Error(Errc::NotCollinear,
                    "points are not collinear on the quadric: " + model.point_str(P) + ", " + model.point_str(Q));

    std::vector<std::uint32_t> ids;
    ids.reserve(F.q() + 1);
    ids.push_back(p_id);
    for (int lam = 0; lam < F.q(); ++lam) {
        Point5 X = model.add(model.scale(P, static_cast<Fq>(lam)), Q);
        ids.push_back(space.id_of(model.normalize(X)));
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

namespace {

// The q+1 quadric points R such that PR is a line of the quadric, found by
// intersecting P-perp with a complementary plane: O(q^2) form evaluations.
std::vector<std::uint32_t> line_partners(const QuadricSpace& space, std::uint32_t p_id) {
    const QuadricModel& model = space.model();
    const FieldCtx& F = space.ctx();
    const int q = F.q();
    const Point5& P = space.point(p_id);

    int j = 0;
    while (P.c[j] == 0) ++j; // leading 1 of the normalized point

    // Row of the polar form against P: B(P, X) = sum r[i] * X[i].
    std::array<Fq, 5> r{};
    for (int i = 0; i < 5; ++i) {
        Point5 e{};
        e.c[i] = 1;
        r[i] = model.polar_b(P, e);
    }

    // Basis of {X : X[j] = 0, B(P,X) = 0}, a plane since P is not in X[j]=0.
    int pivot = -1;
    for (int i = 0; i < 5; ++i)
        if (i != j && r[i] != 0) { pivot = i; break; }
    if (pivot < 0) throw Error(Errc::BadInput, "degenerate polar form");

    std::array<Point5, 3> basis;
    int nb = 0;
    for (int s = 0; s < 5; ++s) {
        if (s == j || s == pivot) continue;
        Point5 b{};
        b.c[s] = 1;
        b.c[pivot] = F.neg(F.mul(r[s], F.inv(r[pivot])));
        basis[nb++] = b;
    }

    std::vector<std::uint32_t> partners;
    partners.reserve(q + 1);
    // Normalized projective combinations of the 3 basis vectors.
    auto consider = [&](Fq c0, Fq c1, Fq c2) {
        Point5 X = model.add(model.add(model.scale(basis[0], c0), model.scale(basis[1], c1)),
                             model.scale(basis[2], c2));
        if (model.eval_f(X) == 0) partners.push_back(space.id_of(model.normalize(X)));
    };
    consider(0, 0, 1);
    for (int a = 0; a < q; ++a) consider(0, 1, static_cast<Fq>(a));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) consider(1, static_cast<Fq>(a), static_cast<Fq>(b));

    if (partners.size() != static_cast<std::size_t>(q + 1))
        throw Error(Errc::BadInput, "unexpected tangent-cone size at " + model.point_str(P));
    return partners;
}

} // namespace

LineSet enumerate_lines(const QuadricSpace& space, int threads) {
    const std::uint32_t n = space.size();
    const std::uint32_t per_line = static_cast<std::uint32_t>(space.q() + 1);
    constexpr std::uint32_t kGrain = 512;
    const std::uint32_t nchunks = (n + kGrain - 1) / kGrain;

    std::vector<std::vector<std::vector<std::uint32_t>>> parts(nchunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(threads, 1)) if (threads > 1)
#endif
    for (std::int64_t chunk = 0; chunk < static_cast<std::int64_t>(nchunks); ++chunk) {
        const std::uint32_t lo = chunk * kGrain;
        const std::uint32_t hi = std::min(lo + kGrain, n);
        auto& out = parts[chunk];
        for (std::uint32_t pid = lo; pid < hi; ++pid) {
            for (std::uint32_t rid : line_partners(space, pid)) {
                if (rid < pid) continue; // the line was or will be emitted from a smaller id
                auto ids = line_through(space, pid, rid);
                if (ids.front() == pid) out.push_back(std::move(ids));
            }
        }
    }

    std::vector<std::vector<std::uint32_t>> lines;
    for (auto& part : parts)
        for (auto& l : part) lines.push_back(std::move(l));
    std::sort(lines.begin(), lines.end());

    LineSet ls;
    ls.points_per_line = per_line;
    ls.count = static_cast<std::uint32_t>(lines.size());
    ls.flat.reserve(std::size_t(ls.count) * per_line);
    for (const auto& l : lines) ls.flat.insert(ls.flat.end(), l.begin(), l.end());
    return ls;
}

SectionKind classify_section_size(int q, std::size_t n_points) {
    const std::size_t qq = static_cast<std::size_t>(q) * q;
    if (n_points == qq + 1) return SectionKind::Elliptic;
    if (n_points == (static_cast<std::size_t>(q) + 1) * (q + 1)) return SectionKind::Hyperbolic;
    if (n_points == qq + q + 1) return SectionKind::Cone;
    throw Error(Errc::BadInput, "hyperplane section of impossible size " + std::to_string(n_points));
}

Section hyperplane_section(const QuadricSpace& space, const Point5& dual_point) {
    const QuadricModel& model = space.model();
    Section s;
    s.dual_point = model.normalize(dual_point);
    for (std::uint32_t id = 0; id < space.size(); ++id)
        if (model.polar_b(s.dual_point, space.point(id)) == 0) s.ids.push_back(id);
    s.kind = classify_section_size(space.q(), s.ids.size());
    return s;
}

namespace ref {

std::vector<Point5> quadric_points(const QuadricModel& model) {
    const int q = model.ctx().q();
    std::vector<Point5> points;
    for (std::uint64_t r = 0; r < pg4_size(q); ++r) {
        Point5 pt = pg4_point_at(q, r);
        if (model.eval_f(pt) == 0) points.push_back(pt);
    }
    return points;
}

LineSet enumerate_lines(const QuadricSpace& space) {
    // Quadratic-time pairwise construction with set-based deduplication.
    const QuadricModel& model = space.model();
    std::set<std::vector<std::uint32_t>> lines;
    for (std::uint32_t a = 0; a < space.size(); ++a)
        for (std::uint32_t b = a + 1; b < space.size(); ++b)
            if (model.polar_b(space.point(a), space.point(b)) == 0)
                lines.insert(line_through(space, a, b));

    LineSet ls;
    ls.points_per_line = static_cast<std::uint32_t>(space.q() + 1);
    ls.count = static_cast<std::uint32_t>(lines.size());
    for (const auto& l : lines) ls.flat.insert(ls.flat.end(), l.begin(), l.end());
    return ls;
}

} // namespace ref

} // namespace movoid
