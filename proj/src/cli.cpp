#include "movoid/cli.hpp"

#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "movoid/serialize.hpp"

namespace movoid {

namespace {

struct PrimePower {
    int p, k, q;
};

PrimePower parse_prime_power(int q) {
    if (q < 3) throw Error(Errc::BadInput, "q must be an odd prime power >= 3");
    int p = q;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    int k = 0, acc = 1;
    while (acc < q) {
        acc *= p;
        ++k;
    }
    if (acc != q) throw Error(Errc::BadInput, std::to_string(q) + " is not a prime power");
    return {p, k, q};
}

enum class Family { QMinus1, QPlus1 };

Family family_for(int q, const std::string& name) {
    if (name == "qminus1") return Family::QMinus1;
    if (name == "qplus1") return Family::QPlus1;
    if (!name.empty()) throw Error(Errc::BadInput, "unknown family " + name + " (qminus1|qplus1)");
    return q % 4 == 3 ? Family::QMinus1 : Family::QPlus1;
}

void require_residue(Family f, int q) {
    if (f == Family::QMinus1 && q % 4 != 3)
        throw Error(Errc::WrongResidue, "family qminus1 needs q = 3 (mod 4), got q = " + std::to_string(q));
    if (f == Family::QPlus1 && q % 4 != 1)
        throw Error(Errc::WrongResidue, "family qplus1 needs q = 1 (mod 4), got q = " + std::to_string(q));
}

struct Workspace {
    FieldCtx ctx;
    QuadricSpace space;
    GroupA group;

    Workspace(const PrimePower& pp, Model model, int threads)
        : ctx(FieldCtx::make(pp.p, pp.k)),
          space(QuadricModel(ctx, model), threads),
          group(space) {}
};

int cmd_construct(int q, const std::string& family_name, std::optional<int> a_override,
                  const std::string& out, int threads, bool json_out) {
    PrimePower pp = parse_prime_power(q);
    Family family = family_for(q, family_name);
    require_residue(family, q);
    Model model = family == Family::QMinus1 ? Model::Split : Model::Trace;
    Workspace ws(pp, model, threads);

    Construction c;
    if (family == Family::QMinus1) {
        std::optional<SplitParams> params;
        if (a_override) {
            if (*a_override < 1 || *a_override >= q)
                throw Error(Errc::NoValidA, "--a must encode a nonzero element of GF(q)");
            params = select_params_split(ws.ctx, static_cast<Fq>(*a_override));
        }
        c = build_movoid_split(ws.space, ws.group, params);
    } else {
        c = build_movoid_trace(ws.space, ws.group);
    }

    Json file = point_set_file(ws.space, c, family == Family::QMinus1 ? "qminus1" : "qplus1");
    // the summary goes to stdout unless the JSON dump occupies it
    std::ostream& info = (out.empty() && json_out) ? std::cerr : std::cout;
    if (out.empty()) {
        if (json_out)
            std::cout << file.dump(2) << "\n";
        else
            info << "(no --out given; pass --json to print the point-set file)\n";
    } else {
        write_json_file(out, file);
    }
    info << "m = " << c.set.m << ", |M| = " << c.set.size() << "\n";
    for (const auto& [name, ids] : c.parts) info << "  " << name << ": " << ids.size() << " points\n";
    if (!out.empty()) info << "wrote " << out << "\n";
    return 0;
}

int cmd_verify(const std::string& input, bool with_sections, const std::string& out, int threads,
               bool json_out) {
    Json j = read_json_file(input);
    FieldCtx ctx = field_from_header(j.at("field"));
    Model model = model_from_json(j);
    QuadricSpace space(QuadricModel(ctx, model), threads);
    PointSet M = point_set_from_json(space, j);
    GroupA group(space);
    LineSet lines = enumerate_lines(space, threads);

    VerifyReport rep = verify_point_set(space, lines, group, M, with_sections, threads);
    Json report = report_to_json(space, rep);
    if (!out.empty()) write_json_file(out, report);
    if (json_out) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "verdict: " << (rep.pass ? "pass" : "fail") << "\n";
        for (const auto& check : report["checks"]) {
            std::cout << "  " << check["name"].get<std::string>() << ": "
                      << (check["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
            if (!check["pass"].get<bool>() && !check["witnesses"].empty())
                std::cout << "    witness: " << check["witnesses"][0].dump() << "\n";
        }
        std::ostringstream hist;
        hist << "  line histogram:";
        for (const auto& [k, v] : rep.m_ovoid.histogram) hist << " " << k << "x" << v;
        std::cout << hist.str() << "\n";
        if (rep.sections)
            std::cout << "  mod-q conjecture scan: " << (rep.sections->mod_q_holds ? "holds" : "fails")
                      << "\n";
        std::cout << "  wall time: " << rep.wall_ms << " ms\n";
    }
    return rep.pass ? 0 : 1;
}

int cmd_census(int q, const std::string& family_name, const std::string& out, int threads,
               bool json_out) {
    PrimePower pp = parse_prime_power(q);
    Family family = family_for(q, family_name);
    require_residue(family, q);
    Model model = family == Family::QMinus1 ? Model::Split : Model::Trace;
    Workspace ws(pp, model, threads);

    std::vector<Orbit> orbits = orbit_census(ws.group);
    Json j = census_to_json(ws.group, orbits);
    if (!out.empty()) write_json_file(out, j);
    if (json_out) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << orbits.size() << " orbits on " << ws.space.size() << " points of Q(4," << q
                  << "), model " << model_name(model) << ", |A| = " << ws.group.order() << "\n";
        for (const auto& row : j["orbits"])
            std::cout << "  rep " << row["representative"].dump() << "  length " << row["length"]
                      << "  stab " << row["stabilizer_order"] << "  " << row["class"].get<std::string>()
                      << "\n";
    }
    return 0;
}

// ---- selftest ----

struct SelftestSink {
    bool all_ok = true;
    void check(int q, const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << "q=" << q << " " << name;
        if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        all_ok = all_ok && ok;
    }
};

void selftest_field(const FieldCtx& F, SelftestSink& sink) {
    const int q = F.q();
    bool frob_ok = true, norm_ok = true, sgn_ok = true;
    std::vector<int> norm_fibers(q, 0);
    for (int u = 0; u < q && frob_ok; ++u)
        for (int v = 0; v < q; ++v) {
            Fq2 x = F.make2(static_cast<Fq>(u), static_cast<Fq>(v));
            if (F.frobenius(F.frobenius(x)) != x) { frob_ok = false; break; }
            if (F.mul2(x, F.frobenius(x)) != F.lift(F.norm(x))) { norm_ok = false; break; }
            if (x != 0) ++norm_fibers[F.norm(x)];
        }
    for (int c = 1; c < q; ++c) norm_ok = norm_ok && norm_fibers[c] == q + 1;
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            sgn_ok = sgn_ok &&
                     F.sgn(F.mul(static_cast<Fq>(a), static_cast<Fq>(b))) ==
                         F.sgn(static_cast<Fq>(a)) * F.sgn(static_cast<Fq>(b));
    bool qcs_ok = true;
    for (int c = 0; c < q; ++c) {
        Fq cc = static_cast<Fq>(c);
        Fq disc = F.sub(F.mul(cc, cc), F.scalar(4));
        long expect = disc == 0 ? q - 1 : -1;
        if (F.quad_char_sum(cc) != expect) qcs_ok = false;
    }
    sink.check(q, "field: frobenius involution", frob_ok);
    sink.check(q, "field: norm = x*x^q with fibers of size q+1", norm_ok);
    sink.check(q, "field: sgn multiplicative", sgn_ok);
    sink.check(q, "field: quadratic character sums", qcs_ok);
}

void selftest_geometry(const QuadricSpace& space, const LineSet& lines, SelftestSink& sink) {
    const int q = space.q();
    const std::size_t expect = static_cast<std::size_t>(q + 1) * (static_cast<std::size_t>(q) * q + 1);
    sink.check(q, "geometry: |Q(4,q)| = (q+1)(q^2+1)", space.size() == expect);
    sink.check(q, "geometry: line count = (q+1)(q^2+1)", lines.count == expect);

    std::vector<int> per_point(space.size(), 0);
    for (std::uint32_t li = 0; li < lines.count; ++li)
        for (std::uint32_t j = 0; j < lines.points_per_line; ++j) ++per_point[lines.line(li)[j]];
    bool ok = std::all_of(per_point.begin(), per_point.end(), [&](int c) { return c == q + 1; });
    sink.check(q, "geometry: q+1 lines through every point", ok);
}

void selftest_group(const GroupA& A, SelftestSink& sink) {
    const QuadricSpace& space = A.space();
    const int q = space.q();
    auto orbits = orbit_census(A);
    std::size_t total = 0;
    bool orb_stab_ok = true;
    for (const auto& o : orbits) {
        total += o.length();
        if (o.length() * stabilizer_order_in_A(A, o.representative) != A.order()) orb_stab_ok = false;
    }
    sink.check(q, "group: orbits partition the quadric", total == space.size());
    sink.check(q, "group: orbit-stabilizer identity", orb_stab_ok);

    if (space.model().variant() == Model::Split && q % 4 == 3) {
        // multiset comparison: the length classes collide at q=3 (q-1 = 2)
        std::multiset<std::uint32_t> lengths, expected{2, static_cast<std::uint32_t>(q - 1),
                                                       static_cast<std::uint32_t>(q + 1)};
        for (const auto& o : orbits) lengths.insert(o.length());
        for (int i = 0; i < (q + 1) / 2; ++i) expected.insert((q * q - 1) / 2);
        for (int i = 0; i < 3 * (q + 1) / 4; ++i) expected.insert(q * q - 1);
        sink.check(q, "group: split orbit census", lengths == expected);
    }
}

void selftest_family(const Workspace& ws, Family family, int threads, SelftestSink& sink) {
    const int q = ws.ctx.q();
    Construction c = family == Family::QMinus1 ? build_movoid_split(ws.space, ws.group)
                                               : build_movoid_trace(ws.space, ws.group);
    LineSet lines = enumerate_lines(ws.space, threads);
    bool small = q <= 13;
    VerifyReport rep = verify_point_set(ws.space, lines, ws.group, c.set, small, threads);
    sink.check(q, "construction: m-ovoid line check", rep.m_ovoid.pass);
    sink.check(q, "construction: perp profile", rep.perp.pass);
    sink.check(q, "construction: A-invariance", rep.invariance.pass);
    if (rep.sections) {
        sink.check(q, "construction: section spectrum (mod p)", rep.sections->pass);
        sink.check(q, "construction: set stabilizer is all of A",
                   stabilizer_in_A_of_set(ws.group, c.set, threads) == ws.group.order());
    }
    selftest_geometry(ws.space, lines, sink);
}

int cmd_selftest(const std::string& q_list, int threads) {
    SelftestSink sink;
    std::stringstream ss(q_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int q = std::stoi(tok);
        PrimePower pp = parse_prime_power(q);
        Family family = family_for(q, "");
        Model model = family == Family::QMinus1 ? Model::Split : Model::Trace;
        Workspace ws(pp, model, threads);
        selftest_field(ws.ctx, sink);
        selftest_group(ws.group, sink);
        if (q >= 5) selftest_family(ws, family, threads, sink);
    }
    std::cout << (sink.all_ok ? "selftest: all checks passed" : "selftest: FAILURES above") << "\n";
    return sink.all_ok ? 0 : 1;
}

} // namespace

int cli_run(int argc, const char* const* argv) {
    CLI::App app{"construct and verify m-ovoids of the parabolic quadric Q(4,q)"};
    app.require_subcommand(1);

    int q = 0;
    std::string family, out, input, q_list;
    int threads = 1;
    bool json_out = false, with_sections = false;
    std::optional<int> a_override;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--threads", threads, "worker threads for the scans (default 1)");
        cmd->add_flag("--json", json_out, "print machine-readable JSON to stdout");
    };

    CLI::App* construct = app.add_subcommand("construct", "build an m-ovoid point-set file");
    construct->add_option("--q", q, "odd prime power")->required();
    construct->add_option("--family", family, "qminus1 (q=3 mod 4) or qplus1 (q=1 mod 4)");
    construct->add_option("--a", a_override, "override the split parameter a (element encoding)");
    construct->add_option("--out", out, "output point-set JSON path");
    add_common(construct);

    CLI::App* verify = app.add_subcommand("verify", "verify a point-set file");
    verify->add_option("input", input, "point-set JSON file")->required();
    verify->add_flag("--sections", with_sections, "also run the exhaustive hyperplane-section scan");
    verify->add_option("--out", out, "write the report JSON here");
    add_common(verify);

    CLI::App* census = app.add_subcommand("census", "orbit census of A on Q(4,q)");
    census->add_option("--q", q, "odd prime power")->required();
    census->add_option("--family", family, "selects the model (split/trace)");
    census->add_option("--out", out, "write the census JSON here");
    add_common(census);

    CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suites");
    selftest->add_option("--q", q_list, "comma-separated q values, e.g. 7,11,5,9")->required();
    selftest->add_option("--threads", threads, "worker threads for the scans");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) return cmd_construct(q, family, a_override, out, threads, json_out);
        if (verify->parsed()) return cmd_verify(input, with_sections, out, threads, json_out);
        if (census->parsed()) return cmd_census(q, family, out, threads, json_out);
        if (selftest->parsed()) return cmd_selftest(q_list, threads);
    } catch (const Error& e) {
        std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace movoid
