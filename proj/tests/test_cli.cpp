#include "commands.hpp"
#include "doctest.h"
#include "json_io.hpp"

using namespace dsp;
using nlohmann::json;

namespace {

const char* kHyper = R"({"classes": [[{"lambda": 2, "blocks": [1]}, {"lambda": 3, "blocks": [1]}],
    [{"lambda": 5, "blocks": [1]}, {"lambda": 7, "blocks": [1]}],
    [{"lambda": "1/30", "blocks": [1]}, {"lambda": "1/7", "blocks": [1]}]]})";
const char* kScalar = R"({"classes": [[{"lambda": 2, "blocks": [1, 1]}], [{"lambda": 3, "blocks": [1, 1]}],
    [{"lambda": "-1/6", "blocks": [1, 1]}]]})";
const char* kWitness = R"({"points": [0, 1, -1], "blocks": [[{"m": 1, "xi": 1}, {"m": 1, "xi": 2}],
    [{"m": 1, "xi": 1}, {"m": 1, "xi": 3}], [{"m": 1, "xi": 0}, {"m": 1, "xi": 2}]]})";
const char* kOkFail = R"({"points": [0, 1, -1], "blocks": [[{"m": 2, "xi": 0}], [{"m": 2, "xi": 0}],
    [{"m": 1, "xi": 1}, {"m": 1, "xi": -1}]]})";

cli::CommandResult run(const std::string& cmd, const std::string& input, std::uint64_t seed = 0) {
    cli::RunConfig cfg;
    cfg.command = cmd;
    cfg.input = input;
    cfg.seed = seed;
    return cli::run(cfg);
}

}  // namespace

TEST_CASE("verdict command exit codes") {
    auto ok = run("verdict", kHyper);
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.out)["report"]["verdict"] == "solvable");
    auto fail = run("verdict", kScalar);
    CHECK(fail.exit_code == 2);
    json r = json::parse(fail.out)["report"];
    CHECK(r["verdict"] == "criterion-failed");
    CHECK(r["inequality"]["first_failure"] == 2);
    CHECK(run("verdict", "{not json").exit_code == 1);
    CHECK(run("verdict", "/nonexistent/file.json").exit_code == 1);
    CHECK(run("verdict", R"({"classes": [], "genus": 0})").exit_code == 1);
    CHECK(run("verdict", R"({"classes": [[{"lambda": 1, "blocks": [1]}]], "extra": 1})").exit_code == 1);
}

TEST_CASE("witness command") {
    auto w = run("witness", kWitness);
    CHECK(w.exit_code == 0);
    json r = json::parse(w.out);
    CHECK(r["report"]["status"] == "verified");
    CHECK(r["report"]["centres"].size() == 6);
    CHECK(r["report"]["centres"][0]["jordan"]["aggregate"] == json::array({1}));
    auto f = run("witness", kOkFail);
    CHECK(f.exit_code == 2);
    CHECK(json::parse(f.out)["report"]["message"].get<std::string>().find("mu=2") != std::string::npos);
}

TEST_CASE("reports are reproducible and stamped") {
    auto a = run("witness", kWitness, 7), b = run("witness", kWitness, 7);
    CHECK(a.out == b.out);
    json r = json::parse(a.out);
    CHECK(r["input_hash"].get<std::string>().size() == 16);
    CHECK(r.contains("version"));
    // whitespace does not change the hash
    auto c = run("witness", json::parse(kWitness).dump(), 7);
    CHECK(json::parse(c.out)["input_hash"] == r["input_hash"]);
    auto d = run("witness", kWitness, 8);
    CHECK(json::parse(d.out)["report"]["status"] == "verified");
}

TEST_CASE("dimensions command") {
    auto d = run("dimensions", kWitness);
    CHECK(d.exit_code == 0);
    json r = json::parse(d.out)["report"];
    CHECK(r["expected_dimension"] == 0);
    CHECK(r["computed_dimension"] == 0);
    const char* four = R"({"points": [0, 1, -1, 2], "blocks": [[{"m": 1, "xi": 0}, {"m": 1, "xi": 0}],
        [{"m": 1, "xi": 0}, {"m": 1, "xi": 0}], [{"m": 1, "xi": 0}, {"m": 1, "xi": 0}],
        [{"m": 1, "xi": 0}, {"m": 1, "xi": 0}]]})";
    json r4 = json::parse(run("dimensions", four).out)["report"];
    CHECK(r4["expected_dimension"] == 1);
    CHECK(r4["computed_dimension"] == 1);
    CHECK(r4["equivalence"]["agree"] == true);
}

TEST_CASE("sweep command") {
    auto s = run("sweep", R"({"r_max": 4, "n": [3]})");
    CHECK(s.exit_code == 0);
    CHECK(json::parse(s.out)["report"]["mismatches"] == 0);
    CHECK(run("sweep", R"({"r_max": 40})").exit_code == 1);
}

TEST_CASE("scalar and polynomial JSON") {
    CHECK(io::parse_scalar(json(3)) == Scalar(3));
    CHECK(io::parse_scalar(json("1/2-i")) == Scalar(Rational(1, 2), Rational(-1)));
    CHECK(io::parse_scalar(json::array({"1/3", 2})) == Scalar(Rational(1, 3), Rational(2)));
    CHECK_THROWS_AS(io::parse_scalar(json(0.5)), io::InputError);
    BiPoly p = BiPoly::monomial(Scalar::frac(3, 4), 2, 1) + BiPoly::monomial(Scalar::gauss(0, -1), 0, 0);
    CHECK(io::parse_bipoly(io::to_json(p)) == p);
    CHECK(io::fnv1a_hex("") == "cbf29ce484222325");
    CHECK(io::fnv1a_hex("a") == "af63dc4c8601ec8c");
}
