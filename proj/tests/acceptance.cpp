#include "commands.hpp"
#include "dsp/dsp.hpp"
#include "dsp/lattice.hpp"
#include "json.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace dsp;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

long rand_in(std::mt19937_64& rng, long lo, long hi) { return lo + static_cast<long>(rng() % (hi - lo + 1)); }

Partition random_partition(std::mt19937_64& rng, int r) {
    auto all = partitions_of(r);
    return all[rng() % all.size()];
}

MarkedPoints standard_points(int n) {
    std::vector<Scalar> p;
    for (int k = 0; k < n; ++k) p.push_back(Scalar(static_cast<long>(k % 2 ? (k + 1) / 2 : -(k / 2))));
    return MarkedPoints(p);
}

std::vector<FlagBlock> distinct_blocks(std::mt19937_64& rng, int r, std::set<long>& used) {
    std::vector<FlagBlock> row;
    while (static_cast<int>(row.size()) < r) {
        long v = rand_in(rng, -30, 30);
        if (used.insert(v).second) row.push_back({1, Scalar(v)});
    }
    return row;
}

// ---- criterion 1 ------------------------------------------------------------

Outcome worked_example() {
    // Matrices of the (3,2,1) example evaluated at xi_1 = 1, xi_2 = 2, entered by hand.
    auto M = [](std::vector<std::vector<long>> rows) {
        std::vector<std::vector<Scalar>> s;
        for (auto& r : rows) {
            std::vector<Scalar> row;
            for (long v : r) row.push_back(Scalar(v));
            s.push_back(row);
        }
        return Matrix::from_rows(s);
    };
    auto V = [](std::vector<long> v) {
        std::vector<Scalar> s;
        for (long x : v) s.push_back(Scalar(x));
        return s;
    };
    Matrix a0 = M({{1, 1, 1, 1, 1, 1},
                   {5, 4, 3, 2, 1, 0},
                   {10, 6, 3, 1, 0, 0},
                   {10, 4, 1, 0, 0, 0},
                   {32, 16, 8, 4, 2, 1},
                   {80, 32, 12, 4, 1, 0}});
    Matrix a1 = M({{1, 1, 1, 1, 1, 1}, {5, 4, 3, 2, 1, 0}, {32, 16, 8, 4, 2, 1}});
    Matrix a2 = M({{1, 1, 1, 1, 1, 1}});
    std::vector<Scalar> b0 = V({-1, -6, -15, -20, -64, -192}), b1 = V({0, 0, 0}), b2 = V({0});

    ParabolicData data({{{3, Scalar(1)}, {2, Scalar(2)}, {1, Scalar(1)}}});
    ConstraintSystem sys = build_constraints(data, MarkedPoints({Scalar(0)}));
    bool ok = sys.blocks.size() == 3 && sys.block(0, 0).A == a0 && sys.block(1, 0).A == a1 &&
              sys.block(2, 0).A == a2 && sys.block(0, 0).B == b0 && sys.block(1, 0).B == b1 &&
              sys.block(2, 0).B == b2;
    return {ok, ok ? "A_0 (6x6), A_1 (3x6), A_2 (1x6) and B_0, B_1, B_2 equal entry for entry"
                   : "constraint blocks differ from the worked example"};
}

// ---- criterion 2 ------------------------------------------------------------

Outcome level_identity() {
    long checked = 0, bad = 0;
    for (int n = 1; n <= 12; ++n)
        for (auto& p : partitions_of(n)) {
            long lhs = 0, rhs = 0;
            for (int mu = 1; mu <= n; ++mu) lhs += level_function(p, mu);
            for (int m : p.parts()) rhs += static_cast<long>(m) * (m + 1) / 2;
            ++checked;
            bad += lhs != rhs;
        }
    return {bad == 0, std::to_string(checked) + " partitions of size <= 12, " + std::to_string(bad) + " failures"};
}

// ---- criterion 3 ------------------------------------------------------------

Matrix pivot_submatrix(const std::vector<Scalar>& xs, const std::vector<int>& cs, int r) {
    Matrix a;
    int c = 0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        a = a.append_rows(vandermonde_block(xs[j], cs[j], r));
        c += cs[j];
    }
    return a.columns(r - c, c);
}

// +- prod_{j<k} (x_k - x_j)^(c_j c_k)
Scalar confluent_det(const std::vector<Scalar>& xs, const std::vector<int>& cs) {
    Scalar d(1);
    for (std::size_t j = 0; j < xs.size(); ++j)
        for (std::size_t k = j + 1; k < xs.size(); ++k) d *= (xs[k] - xs[j]).pow(static_cast<long>(cs[j]) * cs[k]);
    return d;
}

bool vandermonde_case(const std::vector<Scalar>& xs, const std::vector<int>& cs, int r, bool& distinct) {
    std::set<Scalar> s(xs.begin(), xs.end());
    distinct = s.size() == xs.size();
    Scalar det = determinant(pivot_submatrix(xs, cs, r));
    Scalar want = confluent_det(xs, cs);
    bool det_ok = det == want || det == -want;
    return det_ok && (det.is_zero() != distinct);
}

void compositions(int max_sum, int parts, std::vector<int>& cur, const std::function<void()>& f) {
    if (static_cast<int>(cur.size()) == parts) {
        f();
        return;
    }
    int used = 0;
    for (int c : cur) used += c;
    for (int c = 1; used + c + (parts - static_cast<int>(cur.size()) - 1) <= max_sum; ++c) {
        cur.push_back(c);
        compositions(max_sum, parts, cur, f);
        cur.pop_back();
    }
}

Outcome vandermonde() {
    std::mt19937_64 rng(30);
    long trials = 0, bad = 0, singular = 0;
    for (int t = 0; t < 1000; ++t) {
        int r = static_cast<int>(rand_in(rng, 1, 8));
        int e = static_cast<int>(rand_in(rng, 1, std::min(r, 4)));
        std::vector<int> cs(e, 1);
        int room = r - e;
        for (int j = 0; j < e && room > 0; ++j) {
            int add = static_cast<int>(rand_in(rng, 0, room));
            cs[j] += add;
            room -= add;
        }
        std::vector<Scalar> xs;
        for (int j = 0; j < e; ++j)
            xs.push_back(rng() % 5 == 0 ? Scalar::gauss(rand_in(rng, -2, 2), rand_in(rng, -1, 1))
                                        : Scalar::frac(rand_in(rng, -3, 3), rand_in(rng, 1, 2)));
        bool distinct;
        bad += !vandermonde_case(xs, cs, r, distinct);
        singular += !distinct;
        ++trials;
    }
    // every height pattern with two or three blocks sharing one eigenvalue
    long repeats = 0;
    for (int r = 2; r <= 8; ++r)
        for (int parts = 2; parts <= 3; ++parts) {
            std::vector<int> cur;
            compositions(r, parts, cur, [&] {
                for (int twin = 1; twin < parts; ++twin) {
                    std::vector<Scalar> xs;
                    for (int j = 0; j < parts; ++j) xs.push_back(Scalar(j == twin ? 0 : j));
                    bool distinct;
                    bad += !vandermonde_case(xs, cur, r, distinct) || distinct;
                    ++repeats;
                }
            });
        }
    std::ostringstream os;
    os << trials << " random trials (" << singular << " with repeats) and " << repeats
       << " repeated-value patterns; " << bad << " failures";
    return {bad == 0, os.str()};
}

// ---- criterion 4 ------------------------------------------------------------

Outcome pivot_counts() {
    long systems = 0, bad = 0;
    for (int r = 1; r <= 6; ++r)
        for (int n = 1; n <= 3; ++n)
            for (auto& tuple : partition_multisets(r, n))
                for (int mode = 0; mode < 3; ++mode) {
                    std::vector<std::vector<FlagBlock>> blocks;
                    for (auto& m : tuple) {
                        std::vector<FlagBlock> row;
                        for (int j = 0; j < m.length(); ++j) {
                            long xi = mode == 0 ? 0 : mode == 1 ? j : j % 2;
                            row.push_back({m.parts()[j], Scalar(xi)});
                        }
                        blocks.push_back(row);
                    }
                    ParabolicData data(blocks);
                    PivotFreeDecomposition pf = pivot_free(build_constraints(data, standard_points(n)));
                    for (int i = 0; i < n; ++i) {
                        auto gamma = level_sequence(tuple[i]);
                        for (int mu = 1; mu <= r; ++mu) bad += pf.t[i][mu] != gamma[mu - 1];
                    }
                    ++systems;
                }
    return {bad == 0, std::to_string(systems) + " constraint systems, " + std::to_string(bad) + " mismatched counts"};
}

// ---- criterion 5 ------------------------------------------------------------

Outcome constant_dimension() {
    std::mt19937_64 rng(50);
    int done = 0, bad = 0, modes[3] = {0, 0, 0};
    while (done < 100) {
        int r = static_cast<int>(rand_in(rng, 1, 5)), n = static_cast<int>(rand_in(rng, 3, 4));
        std::vector<Partition> ms;
        for (int i = 0; i < n; ++i) ms.push_back(random_partition(rng, r));
        if (!ok_condition(0, n, ms).pass) continue;
        int mode = done % 3;  // 0 generic, 1 zero, 2 partially repeated
        std::vector<std::vector<FlagBlock>> blocks;
        for (auto& m : ms) {
            std::vector<FlagBlock> row;
            std::set<long> used;
            for (int part : m.parts()) {
                long xi = 0;
                if (mode == 0) {
                    do xi = rand_in(rng, -20, 20);
                    while (!used.insert(xi).second);
                } else if (mode == 2) {
                    xi = rand_in(rng, 0, 1);
                }
                row.push_back({part, Scalar(xi)});
            }
            blocks.push_back(row);
        }
        MarkedPoints pts = standard_points(n);
        ParabolicData data(blocks);
        if (mode != 1) {
            try {
                data = residue_balanced(data, pts);
            } catch (const std::invalid_argument&) {
                continue;
            }
        }
        auto dim = solution_dimension(data, pts);
        long expect = expected_dimension(0, n, r, ms);
        bad += !dim || *dim != expect;
        ++modes[mode];
        ++done;
    }
    std::ostringstream os;
    os << done << " instances (" << modes[0] << " generic, " << modes[1] << " zero, " << modes[2]
       << " partially repeated); " << bad << " mismatches";
    return {bad == 0, os.str()};
}

// ---- witnesses for criteria 6 and 7 -----------------------------------------

struct Family {
    std::string name;
    int n;
    std::vector<std::pair<int, int>> head;  // (m, eigenvalue slot) at the first point
    int r;
};

ParabolicData family_data(const Family& f, std::uint64_t seed, const MarkedPoints& pts) {
    std::mt19937_64 rng(seed * 7919 + 17);
    for (;;) {
        std::set<long> used;
        long slots[2] = {rand_in(rng, -9, 9), 0};
        do slots[1] = rand_in(rng, -9, 9);
        while (slots[1] == slots[0]);
        std::vector<std::vector<FlagBlock>> blocks;
        std::vector<FlagBlock> head;
        for (auto [m, s] : f.head) head.push_back({m, Scalar(slots[s])});
        blocks.push_back(head);
        for (int i = 1; i < f.n; ++i) blocks.push_back(distinct_blocks(rng, f.r, used));
        try {
            return residue_balanced(ParabolicData(blocks), pts);
        } catch (const std::invalid_argument&) {
        }
    }
}

struct WitnessSet {
    std::vector<std::pair<WitnessReport, MarkedPoints>> runs;
    std::vector<std::string> families;
    double seconds = 0;
};

WitnessSet build_witnesses() {
    auto t0 = Clock::now();
    std::vector<Family> fams{
        {"(1,1)", 3, {{1, 0}, {1, 0}}, 2},
        {"(2,1)", 3, {{2, 0}, {1, 0}}, 3},
        {"(2,2)", 3, {{2, 0}, {2, 0}}, 4},
        {"(3,2,1)", 3, {{3, 0}, {2, 0}, {1, 0}}, 6},
        {"(2)", 4, {{2, 0}}, 2},
        {"(3)", 4, {{3, 0}}, 3},
        {"(3,1)+(2)", 3, {{3, 0}, {2, 1}, {1, 0}}, 6},
    };
    WitnessSet ws;
    for (auto& f : fams) {
        ws.families.push_back(f.name);
        MarkedPoints pts = standard_points(f.n);
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            ParabolicData data = family_data(f, seed, pts);
            WitnessOptions opt;
            opt.seed = seed;
            ws.runs.emplace_back(higgs_witness(data, pts, opt), pts);
        }
    }
    ws.seconds = seconds_since(t0);
    return ws;
}

// ---- criterion 6 ------------------------------------------------------------

Outcome local_equivalence(const WitnessSet& ws) {
    std::mt19937_64 rng(60);
    BiPoly Y = BiPoly::y();
    long disagree = 0, passing = 0;
    for (int t = 0; t < 500; ++t) {
        int r = static_cast<int>(rand_in(rng, 1, 5));
        Partition p = random_partition(rng, static_cast<int>(rand_in(rng, 1, r)));
        auto gamma = level_sequence(p);
        int k = p.size();
        BiPoly q = Y.pow(r);
        for (int mu = 1; mu <= r; ++mu) {
            int base = mu > r - k ? gamma[mu - (r - k) - 1] : 0;
            int order = std::max(0, base - 1 + static_cast<int>(rng() % 3));
            if (rng() % 3 == 0) order = base;
            q += BiPoly::monomial(Scalar(rand_in(rng, 1, 5)), order, r - mu);
            if (rng() % 2) q += BiPoly::monomial(Scalar(rand_in(rng, -2, 2)), order + 1, r - mu);
            if (rng() % 2) q += BiPoly::monomial(Scalar(rand_in(rng, -2, 2)), rand_in(rng, 0, 3), r - mu);
        }
        Scalar px(rand_in(rng, -3, 3)), xi = Scalar::gauss(rand_in(rng, -3, 3), rand_in(rng, -1, 1));
        LocalConditions lc = local_conditions(poly_translate(q, -px, -xi), px, xi, p);
        disagree += !lc.agree();
        passing += lc.blowup;
    }
    long centres = 0;
    for (auto& [w, pts] : ws.runs) {
        if (w.sections.empty()) continue;
        for (auto& c : w.centres) {
            LocalConditions lc = local_conditions(w.curve, pts[c.point], c.xi, c.sub);
            disagree += !lc.agree() || !lc.blowup;
            ++centres;
        }
    }
    std::ostringstream os;
    os << "500 random monic curves (" << passing << " satisfying) and " << centres << " witness centres; "
       << disagree << " disagreements";
    return {disagree == 0, os.str()};
}

// ---- criterion 7 ------------------------------------------------------------

Outcome jordan_theorem(const WitnessSet& ws) {
    long verified = 0, assertion = 0, exhausted = 0, centres = 0, wrong = 0;
    bool staircase = false;
    for (auto& [w, pts] : ws.runs) {
        if (w.status == WitnessStatus::AssertionFailed) ++assertion;
        if (w.status != WitnessStatus::Verified) {
            exhausted += w.status == WitnessStatus::RetriesExhausted;
            continue;
        }
        ++verified;
        for (auto& c : w.centres) {
            ++centres;
            bool ok = c.jordan && c.jordan->aggregate == conjugate(c.sub) && c.jordan->counts_match &&
                      w.integrality.verdict == Integrality::CertifiedIntegral;
            wrong += !ok;
            staircase = staircase || (ok && c.sub == Partition{3, 2, 1});
        }
    }
    std::ostringstream os;
    os << verified << " integral witnesses over " << ws.families.size() << " families, " << centres
       << " centres checked, " << wrong << " wrong Jordan types, " << assertion << " assertion failures, " << exhausted
       << " runs out of retries";
    return {verified >= 50 && wrong == 0 && assertion == 0 && staircase, os.str()};
}

// ---- criterion 8 ------------------------------------------------------------

Outcome appendix_sweep() {
    SweepResult s = equivalence_sweep(2, 6, {3, 4});
    return {s.mismatches == 0 && s.tuples > 0,
            std::to_string(s.tuples) + " tuples with a regular class, " + std::to_string(s.mismatches) + " mismatches"};
}

// ---- criterion 9 ------------------------------------------------------------

Outcome mu_one_compatibility() {
    std::mt19937_64 rng(90);
    long bad = 0, balanced = 0;
    for (int t = 0; t < 200; ++t) {
        int n = static_cast<int>(rand_in(rng, 3, 5)), r = static_cast<int>(rand_in(rng, 1, 4));
        std::vector<std::vector<FlagBlock>> blocks;
        for (int i = 0; i < n; ++i) {
            std::vector<FlagBlock> row;
            std::set<long> used;
            Partition part = random_partition(rng, r);
            for (int m : part.parts()) {
                long xi;
                do xi = rand_in(rng, -6, 6);
                while (!used.insert(xi).second);
                row.push_back({m, Scalar(xi)});
            }
            blocks.push_back(row);
        }
        std::vector<Scalar> pv;
        std::set<long> seen;
        while (static_cast<int>(pv.size()) < n) {
            long v = rand_in(rng, -8, 8);
            if (seen.insert(v).second) pv.push_back(Scalar::frac(v, 2));
        }
        MarkedPoints pts(pv);
        ParabolicData data(blocks);
        if (t % 2 == 0) {
            try {
                data = residue_balanced(data, pts);
            } catch (const std::invalid_argument&) {
            }
        }
        ConstraintSystem sys = build_constraints(data, pts);
        // mu = 1 targets are the first pivot values of each a = 0 block
        std::vector<std::vector<Scalar>> targets(n);
        Scalar functional;
        for (int i = 0; i < n; ++i) {
            Scalar s1 = solve_block(sys, 0, i, {})[0];
            targets[i].push_back(s1);
            functional += s1 / pts.residue_weight(i);
        }
        bool lift_ok = true;
        try {
            hermite_lift(1, pts, targets);
        } catch (const ConstructionError&) {
            lift_ok = false;
        }
        bool res = residue_condition(data, pts);
        balanced += res;
        bad += (functional.is_zero() != res) || (lift_ok != res) || functional != -residue_sum(data, pts);
    }
    return {bad == 0, "200 inputs (" + std::to_string(balanced) + " satisfying the residue condition), " +
                          std::to_string(bad) + " disagreements"};
}

// ---- criterion 10 -----------------------------------------------------------

Outcome end_to_end() {
    using nlohmann::json;
    auto run = [](const std::string& cmd, const std::string& in) {
        cli::RunConfig cfg;
        cfg.command = cmd;
        cfg.input = in;
        return cli::run(cfg);
    };
    const char* hyper = R"({"classes": [[{"lambda": 2, "blocks": [1]}, {"lambda": 3, "blocks": [1]}],
        [{"lambda": 5, "blocks": [1]}, {"lambda": 7, "blocks": [1]}],
        [{"lambda": "1/30", "blocks": [1]}, {"lambda": "1/7", "blocks": [1]}]]})";
    const char* all2 = R"({"classes": [[{"lambda": 2, "blocks": [1, 1]}], [{"lambda": 3, "blocks": [1, 1]}],
        [{"lambda": "-1/6", "blocks": [1, 1]}]]})";
    const char* witness = R"({"points": [0, 1, -1], "blocks": [[{"m": 1, "xi": 1}, {"m": 1, "xi": 2}],
        [{"m": 1, "xi": 1}, {"m": 1, "xi": 3}], [{"m": 1, "xi": 0}, {"m": 1, "xi": 2}]]})";

    auto v = run("verdict", hyper);
    bool solvable = v.exit_code == 0 && json::parse(v.out)["report"]["verdict"] == "solvable";

    auto w = run("witness", witness);
    bool verified = false;
    if (w.exit_code == 0) {
        json rep = json::parse(w.out)["report"];
        verified = rep["status"] == "verified" && rep["integrality"]["verdict"] == "certified_integral";
        // per marked point the residue is semisimple with two eigenvalues: Jordan type (1,1)
        std::map<int, Partition> per_point;
        for (auto& c : rep["centres"]) {
            std::vector<int> agg = c["jordan"]["aggregate"].get<std::vector<int>>();
            int pt = c["point"].get<int>();
            per_point[pt] = partition_union(per_point[pt], Partition(agg));
            verified = verified && c["jordan"]["matches"] == true;
        }
        verified = verified && per_point.size() == 3;
        for (auto& [pt, p] : per_point) verified = verified && p == Partition{1, 1};
    }

    auto f = run("verdict", all2);
    bool failed_at_2 = false;
    if (f.exit_code == 2) {
        json rep = json::parse(f.out)["report"];
        failed_at_2 = rep["verdict"] == "criterion-failed" && rep["inequality"]["first_failure"] == 2;
    }
    std::ostringstream os;
    os << "hypergeometric verdict " << (solvable ? "solvable" : "NOT solvable") << ", witness "
       << (verified ? "verified with (1,1) at every point" : "NOT verified") << ", all-(2) classes "
       << (failed_at_2 ? "criterion-failed at mu=2" : "NOT failing at mu=2");
    return {solvable && verified && failed_at_2, os.str()};
}

}  // namespace

int main() {
    std::cout.setf(std::ios::fixed);
    std::cout.precision(2);
    int failures = 0;
    auto report = [&](int id, const std::string& name, double budget, const std::function<Outcome()>& f,
                      double extra = 0) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = f();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double dt = seconds_since(t0) + extra;
        bool pass = o.pass && dt < budget;
        failures += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << o.detail << " ["
                  << dt << " s of " << budget << " s]" << std::endl;
    };

    WitnessSet ws = build_witnesses();

    report(1, "worked-example constraint matrices", 1, worked_example);
    report(2, "level-function identity", 10, level_identity);
    report(3, "generalized Vandermonde invertibility", 30, vandermonde);
    report(4, "pivot counts equal level functions", 60, pivot_counts);
    report(5, "constant solution dimension", 300, constant_dimension);
    report(6, "local conditions agree", 300, [&] { return local_equivalence(ws); });
    report(7, "residue Jordan type is the conjugate", 600, [&] { return jordan_theorem(ws); }, ws.seconds);
    report(8, "OK inequality against the Simpson criterion", 300, appendix_sweep);
    report(9, "mu = 1 compatibility against the residue condition", 10, mu_one_compatibility);
    report(10, "end-to-end verdicts and witness", 10, end_to_end);
    return failures == 0 ? 0 : 1;
}
