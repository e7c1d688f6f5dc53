#include "commands.hpp"

#include "dsp/lattice.hpp"
#include "dsp/version.hpp"
#include "json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace dsp::cli {

namespace {

using io::json;

json load(const std::string& input) {
    std::string text;
    if (!input.empty() && input.front() == '{') {
        text = input;
    } else if (input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(input);
        if (!f) throw io::InputError("cannot open input file " + input);
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw io::InputError(std::string("malformed JSON: ") + e.what());
    }
}

json envelope(const RunConfig& cfg, const json& input, json report) {
    return {{"command", cfg.command},
            {"version", kVersion},
            {"input_hash", io::fnv1a_hex(input.dump())},
            {"seed", cfg.seed},
            {"report", std::move(report)}};
}

std::string row_table(const CriterionReport& r) {
    std::ostringstream os;
    os << "  mu  lhs  threshold  pass\n";
    for (auto& row : r.rows)
        os << "  " << row.mu << "  " << row.lhs << "  " << row.threshold << "  " << (row.pass ? "yes" : "no") << "\n";
    return os.str();
}

std::string types_str(const std::vector<Partition>& ps) {
    std::string s;
    for (auto& p : ps) s += (s.empty() ? "" : " ") + p.str();
    return s;
}

CommandResult cmd_verdict(const RunConfig& cfg, const json& in) {
    io::ClassInput ci = io::parse_classes(in);
    int g = cfg.genus.value_or(ci.genus);
    DSPVerdict v;
    try {
        v = dsp_verdict(ci.classes, g);
    } catch (const std::invalid_argument& e) {
        throw io::InputError(e.what());
    }
    CommandResult res;
    res.exit_code = v.verdict == Verdict::Solvable ? 0 : 2;
    if (cfg.format == "table") {
        std::ostringstream os;
        os << "verdict: " << verdict_name(v.verdict);
        if (!v.failed_check.empty()) os << " (failed check: " << v.failed_check << ")";
        os << "\ngenus case: " << genus_case_name(v.genus_case) << "\nparabolic types: " << types_str(v.types)
           << "\ndet product = 1: " << (v.det_ok ? "yes" : "no")
           << "\nmultiplicatively generic: " << (v.generic ? "yes" : "no") << "\n"
           << row_table(v.inequality);
        if (v.witness_claim) os << "two non-row types (witness claim): " << (*v.witness_claim ? "yes" : "no") << "\n";
        res.out = os.str();
    } else {
        res.out = envelope(cfg, in, io::to_json(v)).dump(2) + "\n";
    }
    return res;
}

CommandResult cmd_witness(const RunConfig& cfg, const json& in) {
    io::ParabolicInput pi = io::parse_parabolic(in);
    int g = cfg.genus.value_or(pi.genus);
    if (g != 0) throw io::InputError("witness construction is available for genus 0 only");
    WitnessOptions opt;
    opt.seed = cfg.seed;
    opt.retries = cfg.retries;
    WitnessReport w = higgs_witness(pi.data, pi.points, opt);
    CommandResult res;
    res.exit_code = w.status == WitnessStatus::Verified ? 0 : 2;
    if (cfg.format == "table") {
        std::ostringstream os;
        os << "status: " << witness_status_name(w.status) << "\n" << w.message << "\n";
        os << "expected dimension: " << w.expected_dimension << "\n";
        if (!w.sections.empty()) os << "curve: " << w.curve.str() << "\n";
        if (!w.integrality.reason.empty())
            os << "integrality: " << integrality_name(w.integrality.verdict) << " (" << w.integrality.reason << ")\n";
        os << "  point  xi  subpartition  multiplicities  exact  jordan  expected\n";
        for (auto& c : w.centres) {
            os << "  " << pi.points[c.point].str() << "  " << c.xi.str() << "  " << c.sub.str() << "  ";
            for (std::size_t k = 0; k < c.local.multiplicities.size(); ++k)
                os << (k ? "," : "") << c.local.multiplicities[k];
            os << "  " << (c.exact ? "yes" : "no") << "  " << (c.jordan ? c.jordan->aggregate.str() : "-") << "  "
               << conjugate(c.sub).str() << "\n";
        }
        os << "attempts:\n";
        for (auto& a : w.attempts) os << "  seed " << a.seed << ": " << a.outcome << "\n";
        res.out = os.str();
    } else {
        res.out = envelope(cfg, in, io::to_json(w, pi.points)).dump(2) + "\n";
    }
    return res;
}

CommandResult cmd_dimensions(const RunConfig& cfg, const json& in) {
    io::ParabolicInput pi = io::parse_parabolic(in);
    int g = cfg.genus.value_or(pi.genus);
    int n = pi.data.points(), r = pi.data.rank();
    std::vector<Partition> ms;
    for (int i = 0; i < n; ++i) ms.push_back(pi.data.m(i));
    CriterionReport ok = ok_condition(g, n, ms);
    long expdim = expected_dimension(g, n, r, ms);
    json report = {{"ok_condition", io::to_json(ok)}, {"expected_dimension", expdim}};
    std::optional<long> computed;
    if (g == 0 && n >= 3) computed = solution_dimension(pi.data, pi.points);
    report["computed_dimension"] = computed ? json(*computed) : json(nullptr);
    report["strongly_parabolic_dimension"] = strongly_parabolic_dimension(g, n, r, ms);
    bool regular = false;
    for (auto& p : ms) regular = regular || p == Partition::column(r);
    if (g == 0 && n >= 3 && regular) {
        Equivalence e = criteria_equivalence(ms, r);
        report["equivalence"] = {{"ok", e.ok_verdict}, {"simpson", e.simpson_verdict}, {"agree", e.equivalent}};
    } else {
        report["equivalence"] = nullptr;
    }
    CommandResult res;
    if (cfg.format == "table") {
        std::ostringstream os;
        os << "OK condition: " << (ok.pass ? "pass" : "fail") << "\n" << row_table(ok);
        os << "expected dimension: " << expdim << "\ncomputed dimension: "
           << (computed ? std::to_string(*computed) : std::string("-")) << "\n";
        if (!report["equivalence"].is_null())
            os << "Simpson criterion agrees: " << (report["equivalence"]["agree"].get<bool>() ? "yes" : "no") << "\n";
        res.out = os.str();
    } else {
        res.out = envelope(cfg, in, report).dump(2) + "\n";
    }
    return res;
}

CommandResult cmd_sweep(const RunConfig& cfg, const json& in) {
    int r_max = 6;
    std::vector<int> ns{3, 4};
    if (!in.is_null()) {
        if (!in.is_object()) throw io::InputError("sweep input must be a JSON object");
        for (auto& [k, v] : in.items()) {
            if (k == "r_max") {
                if (!v.is_number_integer() || v.get<int>() < 1 || v.get<int>() > 10)
                    throw io::InputError("r_max must be an integer in [1, 10]");
                r_max = v.get<int>();
            } else if (k == "n") {
                ns.clear();
                if (!v.is_array()) throw io::InputError("n must be an array of integers");
                for (auto& x : v) {
                    if (!x.is_number_integer() || x.get<int>() < 3 || x.get<int>() > 6)
                        throw io::InputError("n entries must be integers in [3, 6]");
                    ns.push_back(x.get<int>());
                }
            } else {
                throw io::InputError("unknown key \"" + k + "\" in sweep input");
            }
        }
    }
    SweepResult s = equivalence_sweep(2, r_max, ns);
    json cases = json::array();
    for (auto& c : s.cases)
        cases.push_back(
            {{"r", c.r}, {"n", c.n}, {"tuples", c.tuples}, {"ok_pass", c.ok_pass}, {"mismatches", c.mismatches}});
    json examples = json::array();
    for (auto& t : s.examples) {
        json tj = json::array();
        for (auto& p : t) tj.push_back(io::to_json(p));
        examples.push_back(tj);
    }
    json report = {{"tuples", s.tuples}, {"mismatches", s.mismatches}, {"cases", cases}, {"examples", examples}};
    CommandResult res;
    res.exit_code = s.mismatches == 0 ? 0 : 2;
    if (cfg.format == "table") {
        std::ostringstream os;
        os << "  r  n  tuples  ok_pass  mismatches\n";
        for (auto& c : s.cases)
            os << "  " << c.r << "  " << c.n << "  " << c.tuples << "  " << c.ok_pass << "  " << c.mismatches << "\n";
        os << "total: " << s.tuples << " tuples, " << s.mismatches << " mismatches\n";
        res.out = os.str();
    } else {
        res.out = envelope(cfg, in, report).dump(2) + "\n";
    }
    return res;
}

}  // namespace

CommandResult run(const RunConfig& cfg) {
    CommandResult res;
    try {
        if (cfg.format != "json" && cfg.format != "table") throw io::InputError("format must be json or table");
        if (cfg.retries < 0) throw io::InputError("retries must be non-negative");
        if (cfg.genus && *cfg.genus < 0) throw io::InputError("genus must be non-negative");
        if (cfg.command == "sweep") return cmd_sweep(cfg, cfg.input.empty() ? json() : load(cfg.input));
        if (cfg.input.empty()) throw io::InputError("missing input");
        json in = load(cfg.input);
        if (cfg.command == "verdict") return cmd_verdict(cfg, in);
        if (cfg.command == "witness") return cmd_witness(cfg, in);
        if (cfg.command == "dimensions") return cmd_dimensions(cfg, in);
        throw io::InputError("unknown command " + cfg.command);
    } catch (const io::InputError& e) {
        res.exit_code = 1;
        res.err = std::string("input error: ") + e.what() + "\n";
    } catch (const std::invalid_argument& e) {
        res.exit_code = 1;
        res.err = std::string("input error: ") + e.what() + "\n";
    } catch (const ConstructionError& e) {
        res.exit_code = 2;
        res.err = std::string("construction failed: ") + e.what() + "\n";
    }
    return res;
}

}  // namespace dsp::cli
