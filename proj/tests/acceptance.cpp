// Acceptance suite: every claim that gates this artifact, checked exhaustively
// at its stated q values with zero tolerance. Prints one line per criterion.

#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <random>
#include <set>

#include "movoid/verification.hpp"

using namespace movoid;
using Clock = std::chrono::steady_clock;

namespace {

int g_threads = 1;

struct Env {
    FieldCtx F;
    QuadricSpace space;
    GroupA A;
    LineSet lines;

    Env(int p, int k, Model model)
        : F(FieldCtx::make(p, k)),
          space(QuadricModel(F, model), g_threads),
          A(space),
          lines(enumerate_lines(space, g_threads)) {}
};

std::pair<int, int> prime_power(int q) {
    int p = q;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    int k = 0;
    for (int acc = 1; acc < q; acc *= p) ++k;
    return {p, k};
}

Env& env_for(int q, Model model) {
    static std::map<std::pair<int, Model>, std::unique_ptr<Env>> cache;
    auto key = std::make_pair(q, model);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto [p, k] = prime_power(q);
        it = cache.emplace(key, std::make_unique<Env>(p, k, model)).first;
    }
    return *it->second;
}

struct Gate {
    bool all_pass = true;
    void criterion(int num, bool pass, const std::string& text) {
        std::printf("criterion %d [%s] %s\n", num, pass ? "PASS" : "FAIL", text.c_str());
        all_pass = all_pass && pass;
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- criteria 1 and 2: the two families exist and verify exhaustively ----

bool family_passes(int q, Model model, int expected_m, std::string& detail) {
    auto t0 = Clock::now();
    Env& env = env_for(q, model);
    Construction c = model == Model::Split ? build_movoid_split(env.space, env.A)
                                           : build_movoid_trace(env.space, env.A);
    VerifyReport rep = verify_point_set(env.space, env.lines, env.A, c.set, false, g_threads);

    const std::size_t expected_size =
        static_cast<std::size_t>(expected_m) * (static_cast<std::size_t>(q) * q + 1);
    bool ok = rep.pass && c.set.m == expected_m && c.set.size() == expected_size &&
              rep.m_ovoid.histogram ==
                  std::map<std::uint32_t, std::size_t>{
                      {static_cast<std::uint32_t>(expected_m), env.lines.count}};
    char buf[96];
    std::snprintf(buf, sizeof buf, " q=%d:|M|=%zu,%.2fs", q, c.set.size(), seconds_since(t0));
    detail += buf;
    return ok;
}

void criterion_1(Gate& gate) {
    std::string detail;
    bool ok = true;
    for (int q : {7, 11, 19, 23, 27, 31}) ok = family_passes(q, Model::Split, (q - 1) / 2, detail) && ok;
    gate.criterion(1, ok, "(q-1)/2-ovoids: every line meets M in exactly (q-1)/2 points —" + detail);
}

void criterion_2(Gate& gate) {
    std::string detail;
    bool ok = true;
    for (int q : {5, 9, 13, 17, 25, 29}) ok = family_passes(q, Model::Trace, (q + 1) / 2, detail) && ok;
    gate.criterion(2, ok, "(q+1)/2-ovoids: every line meets M in exactly (q+1)/2 points —" + detail);
}

// ---- criterion 3: split orbit census ----

void criterion_3(Gate& gate) {
    bool ok = true;
    std::string detail;
    for (int q : {7, 11, 19, 23, 27, 31}) {
        Env& env = env_for(q, Model::Split);
        auto orbits = orbit_census(env.A);
        std::multiset<std::uint64_t> lengths;
        std::uint64_t total = 0;
        for (const auto& o : orbits) {
            lengths.insert(o.length());
            total += o.length();
        }
        std::multiset<std::uint64_t> expected{2, static_cast<std::uint64_t>(q - 1),
                                              static_cast<std::uint64_t>(q + 1)};
        for (int i = 0; i < (q + 1) / 2; ++i) expected.insert(static_cast<std::uint64_t>(q) * q / 2);
        for (int i = 0; i < 3 * (q + 1) / 4; ++i) expected.insert(static_cast<std::uint64_t>(q) * q - 1);
        bool here = lengths == expected &&
                    total == static_cast<std::uint64_t>(q + 1) * (static_cast<std::uint64_t>(q) * q + 1);
        ok = ok && here;
        detail += " q=" + std::to_string(q) + ":" + std::to_string(orbits.size()) + "orbits";
    }
    gate.criterion(3, ok, "orbit census {2, q-1, q+1, (q+1)/2 x (q^2-1)/2, 3(q+1)/4 x (q^2-1)} —" + detail);
}

// ---- criterion 4: the short-orbit stabilizer criterion ----

void criterion_4(Gate& gate) {
    bool ok = true;
    for (int q : {7, 11}) {
        Env& env = env_for(q, Model::Split);
        const FieldCtx& F = env.F;
        for (std::uint32_t id = 0; id < env.space.size(); ++id) {
            const Point5& P = env.space.point(id);
            if (P.c[0] == 0 || P.c[1] == 0 || P.c[4] == 0) continue;
            if (P.c[2] == 0 && P.c[3] == 0) continue;
            Fq prod = F.mul(F.mul(P.c[0], P.c[1]), F.inv(F.mul(P.c[4], P.c[4])));
            bool criterion = F.sgn(prod) == -1 && F.sgn(F.sub(1, prod)) == 1;
            std::uint64_t expected = criterion ? 4 : 2;
            if (stabilizer_order_in_A(env.A, id) != expected) ok = false;
        }
    }
    gate.criterion(4, ok, "stabilizer in A is 4 iff x1x2 nonsquare and 1-x1x2 square (q=7,11, all points)");
}

// ---- criterion 5: hyperplane congruences ----

void criterion_5(Gate& gate) {
    bool ok = true;
    std::string detail;
    for (int q : {7, 11}) {
        Env& env = env_for(q, Model::Split);
        Construction c = build_movoid_split(env.space, env.A);
        SectionReport rep = section_spectrum(env.space, c.set, g_threads);
        bool here = rep.pass && rep.z0_count && *rep.z0_count == static_cast<std::size_t>(q) * q / 2 &&
                    rep.residues_mod_p ==
                        std::map<long, std::size_t>{{c.set.m % env.F.p(), rep.n_elliptic}};
        ok = ok && here;
        detail += " q=" + std::to_string(q) + ":z0=" + std::to_string(*rep.z0_count) +
                  ",mod-q-conjecture=" + (rep.mod_q_holds ? "holds" : "fails");
    }
    gate.criterion(5, ok, "z=0 section has (q^2-1)/2 members; elliptic sections have m (mod p) —" + detail);
}

// ---- criterion 6: the two membership conditions agree ----

void criterion_6(Gate& gate) {
    bool ok = true;
    for (int q : {5, 9, 13}) {
        auto [p, k] = prime_power(q);
        FieldCtx F = FieldCtx::make(p, k);
        for (int u = 0; u < q; ++u)
            for (int v = 0; v < q; ++v) {
                auto [lhs, rhs] = w_condition_equiv(F, F.make2(static_cast<Fq>(u), static_cast<Fq>(v)));
                if (lhs != rhs) ok = false;
            }
    }
    gate.criterion(6, ok, "cyclotomic membership equals the norm-and-trace condition (q=5,9,13, all z)");
}

// ---- criterion 7: quadratic character sums ----

void criterion_7(Gate& gate) {
    bool ok = true;
    for (int q : {3, 5, 7, 9, 11, 13}) {
        auto [p, k] = prime_power(q);
        FieldCtx F = FieldCtx::make(p, k);
        for (int c = 0; c < q; ++c) {
            Fq fc = static_cast<Fq>(c);
            long expected = F.sub(F.mul(fc, fc), F.scalar(4)) == 0 ? q - 1 : -1;
            if (F.quad_char_sum(fc) != expected) ok = false;
        }
    }
    gate.criterion(7, ok, "sum of sgn(x^2+cx+1) is -1 whenever c^2 != 4 (q=3,5,7,9,11,13)");
}

// ---- criterion 8: negative controls ----

void criterion_8(Gate& gate) {
    Env& env = env_for(7, Model::Split);
    Construction c = build_movoid_split(env.space, env.A);
    bool ok = true;

    for (std::size_t i = 0; i < c.set.ids.size(); ++i) {
        PointSet mutated = c.set;
        mutated.ids.erase(mutated.ids.begin() + i);
        if (check_m_ovoid(env.space, env.lines, mutated, g_threads).pass) ok = false;
    }

    std::mt19937 rng(20260809);
    auto mask = membership_mask(c.set, env.space.size());
    for (int trial = 0; trial < 50; ++trial) {
        PointSet mutated = c.set;
        std::size_t out_pos = rng() % mutated.ids.size();
        std::uint32_t in_id;
        do {
            in_id = rng() % env.space.size();
        } while (mask[in_id]);
        mutated.ids.erase(mutated.ids.begin() + out_pos);
        mutated.ids.insert(std::lower_bound(mutated.ids.begin(), mutated.ids.end(), in_id), in_id);
        if (check_m_ovoid(env.space, env.lines, mutated, g_threads).pass) ok = false;
    }
    gate.criterion(8, ok, "all 150 single-point removals and 50 random swaps fail the line check (q=7)");
}

// ---- criterion 9: choice independence, plus the declared substitute checks ----

void criterion_9(Gate& gate) {
    bool ok = true;
    for (int q : {7, 11}) {
        Env& env = env_for(q, Model::Split);
        SplitParams base = select_params_split(env.F);
        Construction ref = build_movoid_split(env.space, env.A, base);
        for (Fq2 mu : all_mu_choices(env.F))
            for (Fq d : both_d_choices(env.F, base.a)) {
                SplitParams P{base.a, d, mu};
                if (build_movoid_split(env.space, env.A, P).set.ids != ref.set.ids) ok = false;
            }
        // A-side substitute for the PGO(5,q) stabilizer claim
        if (stabilizer_in_A_of_set(env.A, ref.set, g_threads) != env.A.order()) ok = false;
    }
    for (int q : {5, 9}) {
        Env& env = env_for(q, Model::Trace);
        Construction c = build_movoid_trace(env.space, env.A);
        if (stabilizer_in_A_of_set(env.A, c.set, g_threads) != env.A.order()) ok = false;
    }
    gate.criterion(9, ok,
                   "M is identical for every mu and d choice (q=7,11); Stab_A(M) = A (q=7,11,5,9)");
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 2 && std::string(argv[1]) == "--threads") g_threads = std::atoi(argv[2]);
    auto t0 = Clock::now();
    Gate gate;
    criterion_1(gate);
    criterion_2(gate);
    criterion_3(gate);
    criterion_4(gate);
    criterion_5(gate);
    criterion_6(gate);
    criterion_7(gate);
    criterion_8(gate);
    criterion_9(gate);
    std::printf("declared out of reach: the full PGO(5,q) stabilizer computation and the\n"
                "Q-(5,q)-section inequivalence count; criterion 9 is the stated substitute.\n");
    std::printf("acceptance: %s (%.1fs total)\n", gate.all_pass ? "ALL CRITERIA PASS" : "FAILURES PRESENT",
                seconds_since(t0));
    return gate.all_pass ? 0 : 1;
}
