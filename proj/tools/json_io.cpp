#include "json_io.hpp"

#include <cstdio>
#include <set>

namespace dsp::io {

namespace {

Rational parse_part(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError("scalar component must be an integer or a rational string");
}

int parse_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

Partition parse_partition(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw InputError(std::string(what) + " must be a non-empty array of integers");
    std::vector<int> parts;
    for (auto& x : j) {
        int v = parse_int(x, what);
        if (v <= 0) throw InputError(std::string(what) + " entries must be positive");
        parts.push_back(v);
    }
    return Partition(parts);
}

void check_keys(const json& j, const std::set<std::string>& allowed, const char* what) {
    if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
    for (auto& [k, v] : j.items())
        if (!allowed.count(k)) throw InputError(std::string("unknown key \"") + k + "\" in " + what);
}

int parse_genus(const json& j) {
    if (!j.contains("genus")) return 0;
    int g = parse_int(j["genus"], "genus");
    if (g < 0) throw InputError("genus must be non-negative");
    return g;
}

}  // namespace

Scalar parse_scalar(const json& j) {
    try {
        if (j.is_number_integer()) return Scalar(j.get<long>());
        if (j.is_string()) return Scalar::parse(j.get<std::string>());
        if (j.is_array() && j.size() == 2) return Scalar(parse_part(j[0]), parse_part(j[1]));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(std::string("bad scalar ") + j.dump() + ": " + e.what());
    }
    throw InputError("bad scalar " + j.dump() + ": use an integer, a string such as \"3/2-i\", or [re, im]");
}

json to_json(const Scalar& s) { return json::array({rational_str(s.re()), rational_str(s.im())}); }

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const UniPoly& p) {
    json terms = json::array();
    for (int k = 0; k <= p.degree(); ++k) {
        const Scalar& c = p.coeffs()[k];
        if (!c.is_zero()) terms.push_back({k, rational_str(c.re()), rational_str(c.im())});
    }
    return {{"terms", terms}};
}

json to_json(const BiPoly& p) {
    json terms = json::array();
    for (auto& [key, c] : p.terms()) terms.push_back({key.first, key.second, rational_str(c.re()), rational_str(c.im())});
    return {{"terms", terms}};
}

BiPoly parse_bipoly(const json& j) {
    check_keys(j, {"terms"}, "polynomial");
    if (!j.contains("terms") || !j["terms"].is_array()) throw InputError("polynomial needs a \"terms\" array");
    BiPoly out;
    for (auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 4) throw InputError("polynomial term must be [dx, dy, re, im]");
        int dx = parse_int(t[0], "dx"), dy = parse_int(t[1], "dy");
        if (dx < 0 || dy < 0) throw InputError("negative exponent in polynomial term");
        out += BiPoly::monomial(Scalar(parse_part(t[2]), parse_part(t[3])), dx, dy);
    }
    return out;
}

ParabolicInput parse_parabolic(const json& j) {
    check_keys(j, {"points", "blocks", "genus"}, "parabolic data");
    if (!j.contains("blocks") || !j["blocks"].is_array() || j["blocks"].empty())
        throw InputError("parabolic data needs a non-empty \"blocks\" array");
    ParabolicInput in;
    in.genus = parse_genus(j);
    std::vector<std::vector<FlagBlock>> blocks;
    for (auto& row : j["blocks"]) {
        if (!row.is_array() || row.empty()) throw InputError("each point needs a non-empty list of flag blocks");
        std::vector<FlagBlock> fb;
        for (auto& b : row) {
            check_keys(b, {"m", "xi"}, "flag block");
            if (!b.contains("m") || !b.contains("xi")) throw InputError("flag block needs \"m\" and \"xi\"");
            fb.push_back({parse_int(b["m"], "m"), parse_scalar(b["xi"])});
        }
        blocks.push_back(std::move(fb));
    }
    std::vector<Scalar> pts;
    if (j.contains("points")) {
        if (!j["points"].is_array()) throw InputError("\"points\" must be an array");
        for (auto& p : j["points"]) pts.push_back(parse_scalar(p));
    } else {
        // 0, 1, -1, 2, -2, ...
        for (std::size_t k = 0; k < blocks.size(); ++k)
            pts.push_back(Scalar(static_cast<long>(k % 2 ? (k + 1) / 2 : -static_cast<long>(k / 2))));
    }
    if (pts.size() != blocks.size()) throw InputError("\"points\" and \"blocks\" have different lengths");
    try {
        in.data = ParabolicData(std::move(blocks));
        in.points = MarkedPoints(std::move(pts));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return in;
}

ClassInput parse_classes(const json& j) {
    check_keys(j, {"classes", "genus"}, "class list");
    if (!j.contains("classes") || !j["classes"].is_array() || j["classes"].empty())
        throw InputError("class list needs a non-empty \"classes\" array");
    ClassInput in;
    in.genus = parse_genus(j);
    for (auto& cj : j["classes"]) {
        if (!cj.is_array() || cj.empty()) throw InputError("each class is a non-empty list of eigenvalue entries");
        ConjugacyClass c;
        for (auto& e : cj) {
            check_keys(e, {"lambda", "blocks"}, "eigenvalue entry");
            if (!e.contains("lambda") || !e.contains("blocks"))
                throw InputError("eigenvalue entry needs \"lambda\" and \"blocks\"");
            c.push_back({parse_scalar(e["lambda"]), parse_partition(e["blocks"], "blocks")});
        }
        try {
            validate_class(c);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        in.classes.push_back(std::move(c));
    }
    return in;
}

json to_json(const CriterionReport& r) {
    json rows = json::array();
    for (auto& row : r.rows)
        rows.push_back({{"mu", row.mu}, {"lhs", row.lhs}, {"threshold", row.threshold}, {"pass", row.pass}});
    json out = {{"genus_case", genus_case_name(r.genus_case)}, {"rows", rows}, {"pass", r.pass}};
    out["first_failure"] = r.first_failure ? json(r.first_failure) : json(nullptr);
    return out;
}

json to_json(const DSPVerdict& v) {
    json types = json::array();
    for (auto& p : v.types) types.push_back(to_json(p));
    json out = {{"verdict", verdict_name(v.verdict)},
                {"genus_case", genus_case_name(v.genus_case)},
                {"parabolic_types", types},
                {"checks",
                 {{"det", v.det_ok}, {"genericity", v.generic}, {"inequality", v.inequality.pass}}},
                {"inequality", to_json(v.inequality)}};
    out["failed_check"] = v.failed_check.empty() ? json(nullptr) : json(v.failed_check);
    out["witness_claim"] = v.witness_claim ? json(*v.witness_claim) : json(nullptr);
    return out;
}

json to_json(const IntegralityReport& r) {
    const char* mode = r.mode == IntegralityMode::Cyclic ? "cyclic"
                       : r.mode == IntegralityMode::Probabilistic ? "probabilistic"
                                                                  : "auto";
    json out = {{"verdict", integrality_name(r.verdict)},
                {"mode", mode},
                {"reason", r.reason},
                {"surviving_degrees", r.surviving_degrees}};
    out["factor"] = r.factor ? to_json(*r.factor) : json(nullptr);
    out["smooth_point"] =
        r.smooth_point ? json::array({to_json(r.smooth_point->first), to_json(r.smooth_point->second)}) : json(nullptr);
    return out;
}

json to_json(const JordanReport& r) {
    json charts = json::array();
    for (auto& c : r.charts)
        charts.push_back({{"j", c.j},
                          {"F", to_json(c.F)},
                          {"V", to_json(c.V)},
                          {"e", c.e},
                          {"expected_e", c.expected_e},
                          {"kernel_dims", c.kernel_dims},
                          {"blocks", to_json(c.blocks)}});
    return {{"charts", charts},
            {"aggregate", to_json(r.aggregate)},
            {"expected", to_json(r.expected)},
            {"matches", r.matches},
            {"counts_match", r.counts_match}};
}

json to_json(const WitnessReport& r, const MarkedPoints& pts) {
    json attempts = json::array();
    for (auto& a : r.attempts) attempts.push_back({{"seed", a.seed}, {"outcome", a.outcome}});
    json sections = json::array();
    for (auto& s : r.sections) sections.push_back(to_json(s));
    json centres = json::array();
    for (auto& c : r.centres) {
        json orders = json::array();
        for (int v : c.local.orders) orders.push_back(v >= kInfinity ? json("inf") : json(v));
        json cj = {{"point", c.point + 1},
                   {"p", to_json(pts[c.point])},
                   {"xi", to_json(c.xi)},
                   {"subpartition", to_json(c.sub)},
                   {"multiplicities", c.local.multiplicities},
                   {"required", c.local.required},
                   {"orders", orders},
                   {"order_bounds", c.local.order_bounds},
                   {"conditions",
                    {{"blowup", c.local.blowup}, {"orders", c.local.orders_ok}, {"jets", c.local.jets_ok}}},
                   {"exact", c.exact}};
        cj["jordan"] = c.jordan ? to_json(*c.jordan) : json(nullptr);
        centres.push_back(std::move(cj));
    }
    json out = {{"status", witness_status_name(r.status)},
                {"message", r.message},
                {"ok_condition", to_json(r.ok)},
                {"expected_dimension", r.expected_dimension},
                {"attempts", attempts},
                {"sections", sections},
                {"curve", r.sections.empty() ? json(nullptr) : to_json(r.curve)},
                {"centres", centres}};
    out["integrality"] = r.integrality.reason.empty() ? json(nullptr) : to_json(r.integrality);
    return out;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace dsp::io
