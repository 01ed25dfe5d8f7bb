#pragma once

#include <string>

#include <json.hpp>

#include "movoid/construction.hpp"
#include "movoid/verification.hpp"

namespace movoid {

using Json = nlohmann::ordered_json;

// Elements serialize as coefficient vectors over GF(p), never as discrete
// logs, so files stay valid across differently built contexts.
Json fq_to_json(const FieldCtx& F, Fq a);
Json fq2_to_json(const FieldCtx& F, Fq2 x);
Fq fq_from_json(const FieldCtx& F, const Json& j);
Fq2 fq2_from_json(const FieldCtx& F, const Json& j);

/// {p, k, g1, n, gamma} — embedded in every output file.
Json field_header(const FieldCtx& F);
/// Rebuild from (p, k) and require the header to match the canonical context.
FieldCtx field_from_header(const Json& j);

Json point_to_json(const QuadricModel& model, const Point5& pt);
Point5 point_from_json(const QuadricModel& model, const Json& j);

/// Point-set file: header, model, family, m, construction manifest, points.
Json point_set_file(const QuadricSpace& space, const Construction& c, const std::string& family);

Model model_from_json(const Json& j);
/// Resolve the file's points against an enumerated space for the same context.
PointSet point_set_from_json(const QuadricSpace& space, const Json& j);

Json report_to_json(const QuadricSpace& space, const VerifyReport& rep);
Json census_to_json(const GroupA& A, const std::vector<Orbit>& orbits);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace movoid
