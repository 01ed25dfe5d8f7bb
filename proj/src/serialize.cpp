#include "movoid/serialize.hpp"

#include <fstream>

namespace movoid {

namespace {

std::vector<int> fq_digits(const FieldCtx& F, Fq a) {
    std::vector<int> c(F.k());
    int e = a;
    for (int i = 0; i < F.k(); ++i) {
        c[i] = e % F.p();
        e /= F.p();
    }
    return c;
}

Fq digits_to_fq(const FieldCtx& F, const Json& j) {
    if (!j.is_array() || static_cast<int>(j.size()) != F.k())
        throw Error(Errc::BadInput, "bad element coefficient vector");
    long e = 0;
    for (int i = F.k() - 1; i >= 0; --i) {
        if (!j[i].is_number_integer()) throw Error(Errc::BadInput, "bad element coefficient");
        long c = j[i].get<long>();
        if (c < 0 || c >= F.p()) throw Error(Errc::BadInput, "element coefficient out of [0,p)");
        e = e * F.p() + c;
    }
    return static_cast<Fq>(e);
}

} // namespace

Json fq_to_json(const FieldCtx& F, Fq a) { return Json(fq_digits(F, a)); }

Json fq2_to_json(const FieldCtx& F, Fq2 x) {
    return Json::array({fq_to_json(F, F.u_part(x)), fq_to_json(F, F.v_part(x))});
}

Fq fq_from_json(const FieldCtx& F, const Json& j) { return digits_to_fq(F, j); }

Fq2 fq2_from_json(const FieldCtx& F, const Json& j) {
    if (!j.is_array() || j.size() != 2) throw Error(Errc::BadInput, "bad GF(q^2) element");
    return F.make2(digits_to_fq(F, j[0]), digits_to_fq(F, j[1]));
}

Json field_header(const FieldCtx& F) {
    Json j;
    j["p"] = F.p();
    j["k"] = F.k();
    j["g1"] = F.g1();
    j["n"] = fq_to_json(F, F.nonsquare());
    j["gamma"] = fq2_to_json(F, F.gamma());
    return j;
}

FieldCtx field_from_header(const Json& j) {
    if (!j.contains("p") || !j.contains("k")) throw Error(Errc::BadInput, "field header lacks p or k");
    FieldCtx F = FieldCtx::make(j["p"].get<int>(), j["k"].get<int>());
    if (j.contains("g1") && j["g1"].get<std::vector<int>>() != F.g1())
        throw Error(Errc::BadInput, "field header g1 does not match the canonical context");
    if (j.contains("n") && fq_from_json(F, j["n"]) != F.nonsquare())
        throw Error(Errc::BadInput, "field header n does not match the canonical context");
    if (j.contains("gamma") && fq2_from_json(F, j["gamma"]) != F.gamma())
        throw Error(Errc::BadInput, "field header gamma does not match the canonical context");
    return F;
}

Json point_to_json(const QuadricModel& model, const Point5& pt) {
    const FieldCtx& F = model.ctx();
    if (model.variant() == Model::Split)
        return Json::array({fq_to_json(F, pt.c[0]), fq_to_json(F, pt.c[1]),
                            fq2_to_json(F, F.make2(pt.c[2], pt.c[3])), fq_to_json(F, pt.c[4])});
    return Json::array({fq_to_json(F, pt.c[0]), fq2_to_json(F, F.make2(pt.c[1], pt.c[2])),
                        fq2_to_json(F, F.make2(pt.c[3], pt.c[4]))});
}

Point5 point_from_json(const QuadricModel& model, const Json& j) {
    const FieldCtx& F = model.ctx();
    if (model.variant() == Model::Split) {
        if (!j.is_array() || j.size() != 4) throw Error(Errc::BadInput, "split point needs 4 coordinates");
        return model.split_point(fq_from_json(F, j[0]), fq_from_json(F, j[1]),
                                 fq2_from_json(F, j[2]), fq_from_json(F, j[3]));
    }
    if (!j.is_array() || j.size() != 3) throw Error(Errc::BadInput, "trace point needs 3 coordinates");
    return model.trace_point(fq_from_json(F, j[0]), fq2_from_json(F, j[1]), fq2_from_json(F, j[2]));
}

Json point_set_file(const QuadricSpace& space, const Construction& c, const std::string& family) {
    const FieldCtx& F = space.ctx();
    const QuadricModel& model = space.model();

    Json j;
    j["format"] = "movoid-pointset";
    j["version"] = 1;
    j["field"] = field_header(F);
    j["model"] = model_name(model.variant());
    j["family"] = family;
    j["q"] = F.q();
    j["m"] = c.set.m;

    Json manifest;
    manifest["family"] = family;
    manifest["q"] = F.q();
    if (c.split_params) {
        manifest["a"] = fq_to_json(F, c.split_params->a);
        manifest["d"] = fq_to_json(F, c.split_params->d);
        manifest["mu"] = fq2_to_json(F, c.split_params->mu);
    }
    manifest["gamma"] = fq2_to_json(F, F.gamma());
    if (c.trace_params) {
        manifest["delta"] = fq2_to_json(F, c.trace_params->delta);
        manifest["epsilon"] = c.trace_params->epsilon;
    }
    Json parts;
    for (const auto& [name, ids] : c.parts) parts[name] = ids.size();
    manifest["part_sizes"] = parts;
    j["construction"] = manifest;

    Json pts = Json::array();
    for (std::uint32_t id : c.set.ids) pts.push_back(point_to_json(model, space.point(id)));
    j["points"] = pts;
    return j;
}

Model model_from_json(const Json& j) {
    if (!j.contains("model")) throw Error(Errc::BadInput, "file lacks a model tag");
    std::string m = j["model"].get<std::string>();
    if (m == "split") return Model::Split;
    if (m == "trace") return Model::Trace;
    throw Error(Errc::BadInput, "unknown model tag: " + m);
}

PointSet point_set_from_json(const QuadricSpace& space, const Json& j) {
    if (!j.contains("format") || j["format"].get<std::string>() != "movoid-pointset")
        throw Error(Errc::BadInput, "not a movoid point-set file");
    PointSet set;
    set.model = space.model().variant();
    set.m = j.at("m").get<int>();
    if (set.m < 0 || set.m > space.q() + 1) throw Error(Errc::BadInput, "declared m out of range");
    if (!j.contains("points") || !j["points"].is_array())
        throw Error(Errc::BadInput, "file lacks a points array");
    for (const auto& pj : j["points"]) {
        Point5 pt = space.model().normalize(point_from_json(space.model(), pj));
        auto id = space.try_id(pt);
        if (!id) throw Error(Errc::BadInput, "file point is not on the quadric: " + space.model().point_str(pt));
        set.ids.push_back(*id);
    }
    std::sort(set.ids.begin(), set.ids.end());
    set.ids.erase(std::unique(set.ids.begin(), set.ids.end()), set.ids.end());
    if (set.ids.size() != j["points"].size())
        throw Error(Errc::BadInput, "file contains duplicate points");
    return set;
}

namespace {

Json check_entry(const std::string& name, bool pass, Json params, Json observed, Json expected,
                 Json witnesses) {
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    c["params"] = std::move(params);
    c["observed"] = std::move(observed);
    c["expected"] = std::move(expected);
    c["witnesses"] = std::move(witnesses);
    return c;
}

template <typename K, typename V>
Json hist_json(const std::map<K, V>& h) {
    Json j;
    for (const auto& [k, v] : h) j[std::to_string(k)] = v;
    return j;
}

} // namespace

Json report_to_json(const QuadricSpace& space, const VerifyReport& rep) {
    const QuadricModel& model = space.model();
    Json checks = Json::array();

    {
        const auto& r = rep.m_ovoid;
        Json wit = Json::array();
        for (auto li : r.witness_lines) wit.push_back(li);
        checks.push_back(check_entry(
            "m_ovoid", r.pass, Json{{"m", r.m}},
            Json{{"size", r.actual_size}, {"line_histogram", hist_json(r.histogram)}},
            Json{{"size", r.expected_size}, {"intersection", r.m}}, wit));
    }
    {
        const auto& r = rep.perp;
        Json wit = Json::array();
        for (auto id : r.witness_points) wit.push_back(model.point_str(space.point(id)));
        checks.push_back(check_entry(
            "perp_profile", r.pass, Json::object(),
            Json{{"member_histogram", hist_json(r.member_hist)},
                 {"outside_histogram", hist_json(r.outside_hist)}},
            Json{{"member", r.expected_member}, {"outside", r.expected_outside}}, wit));
    }
    {
        const auto& r = rep.invariance;
        checks.push_back(check_entry("a_invariance", r.pass, Json::object(),
                                     Json{{"failing_generators", r.failing_generators}},
                                     Json{{"failing_generators", Json::array()}},
                                     r.witness.empty() ? Json::array() : Json::array({r.witness})));
    }
    if (rep.sections) {
        const auto& r = *rep.sections;
        Json obs;
        obs["kinds"] = {{"elliptic", r.n_elliptic}, {"hyperbolic", r.n_hyperbolic}, {"cone", r.n_cone}};
        obs["elliptic_residues_mod_p"] = hist_json(r.residues_mod_p);
        obs["elliptic_residues_mod_q"] = hist_json(r.residues_mod_q);
        obs["mod_q_conjecture_holds"] = r.mod_q_holds;
        if (r.z0_count) obs["z0_section_members"] = *r.z0_count;
        Json exp;
        exp["elliptic_residue_mod_p"] = rep.m_ovoid.m % space.ctx().p();
        if (r.z0_expected) exp["z0_section_members"] = *r.z0_expected;
        checks.push_back(check_entry("section_spectrum", r.pass, Json::object(), obs, exp, r.witnesses));
    }

    Json j;
    j["format"] = "movoid-report";
    j["field"] = field_header(space.ctx());
    j["model"] = model_name(model.variant());
    j["verdict"] = rep.pass ? "pass" : "fail";
    j["checks"] = checks;
    j["wall_time_ms"] = rep.wall_ms;
    return j;
}

Json census_to_json(const GroupA& A, const std::vector<Orbit>& orbits) {
    const QuadricSpace& space = A.space();
    const FieldCtx& F = space.ctx();
    const std::uint32_t short_len = static_cast<std::uint32_t>((F.q2() - 1) / 2);

    Json rows = Json::array();
    for (const auto& o : orbits) {
        Json row;
        row["representative"] = point_to_json(space.model(), space.point(o.representative));
        row["length"] = o.length();
        row["stabilizer_order"] = stabilizer_order_in_A(A, o.representative);
        row["class"] = o.length() == short_len          ? "short"
                       : o.length() == 2 * short_len    ? "long"
                                                        : "special";
        rows.push_back(row);
    }

    Json j;
    j["format"] = "movoid-census";
    j["field"] = field_header(F);
    j["model"] = model_name(space.model().variant());
    j["q"] = F.q();
    j["point_count"] = space.size();
    j["orbit_count"] = orbits.size();
    j["orbits"] = rows;
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::BadInput, "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::BadInput, "malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::BadInput, "cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace movoid
