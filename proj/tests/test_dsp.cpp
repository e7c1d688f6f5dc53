#include "doctest.h"
#include "dsp/dsp.hpp"

using namespace dsp;

namespace {

ConjugacyClass regular(std::vector<Scalar> lambdas) {
    ConjugacyClass c;
    for (auto& l : lambdas) c.push_back({l, Partition{1}});
    return c;
}

ConjugacyClass scalar_class(const Scalar& l, int r) { return {{l, Partition::column(r)}}; }

std::vector<FlagBlock> distinct_row(std::vector<long> xs) {
    std::vector<FlagBlock> row;
    for (long x : xs) row.push_back({1, Scalar(x)});
    return row;
}

}  // namespace

TEST_CASE("parabolic type from Jordan data") {
    ConjugacyClass c{{Scalar(2), Partition{2}}, {Scalar(3), Partition{1}}};
    CHECK(parabolic_type({c})[0] == Partition{1, 1, 1});
    CHECK(parabolic_type({regular({Scalar(1), Scalar(2), Scalar(3)})})[0] == Partition{1, 1, 1});
    CHECK(parabolic_type({{{Scalar(5), Partition{3}}}})[0] == Partition{1, 1, 1});
    CHECK(parabolic_type({scalar_class(Scalar(5), 3)})[0] == Partition{3});
    CHECK(parabolic_type({{{Scalar(2), Partition{2, 1}}, {Scalar(3), Partition{1}}}})[0] == Partition{2, 1, 1});
    CHECK_THROWS(parabolic_type({regular({Scalar(1), Scalar(2)}), regular({Scalar(1)})}));
    CHECK_THROWS(validate_class({{Scalar(0), Partition{1}}}));
    CHECK_THROWS(validate_class({{Scalar(2), Partition{1}}, {Scalar(2), Partition{1}}}));
}

TEST_CASE("hypergeometric verdict") {
    std::vector<ConjugacyClass> cl{regular({Scalar(2), Scalar(3)}), regular({Scalar(5), Scalar(7)}),
                                   regular({Scalar::frac(1, 30), Scalar::frac(1, 7)})};
    DSPVerdict v = dsp_verdict(cl, 0);
    CHECK(v.verdict == Verdict::Solvable);
    CHECK(v.det_ok);
    CHECK(v.generic);
    CHECK(v.inequality.rows[0].lhs == 3);
    CHECK(v.failed_check.empty());
}

TEST_CASE("scalar classes fail the inequality") {
    std::vector<ConjugacyClass> cl{scalar_class(Scalar(2), 2), scalar_class(Scalar(3), 2),
                                   scalar_class(Scalar::frac(-1, 6), 2)};
    DSPVerdict v = dsp_verdict(cl, 0);
    CHECK(v.verdict == Verdict::CriterionFailed);
    CHECK(v.failed_check == "inequality");
    CHECK(v.inequality.first_failure == 2);
    CHECK(v.inequality.rows[0].lhs == 6);
}

TEST_CASE("determinant and genericity failures are named") {
    std::vector<ConjugacyClass> det{regular({Scalar(2), Scalar(3)}), regular({Scalar(5), Scalar(7)}),
                                    regular({Scalar(11), Scalar(13)})};
    CHECK(dsp_verdict(det, 0).failed_check == "det");
    std::vector<ConjugacyClass> gen{regular({Scalar(2), Scalar(3)}), regular({Scalar(5), Scalar(7)}),
                                    regular({Scalar::frac(1, 10), Scalar::frac(1, 21)})};
    CHECK(dsp_verdict(gen, 0).failed_check == "genericity");
    CHECK_THROWS(dsp_verdict({regular({Scalar(1)}), regular({Scalar(1)})}, 0));
}

TEST_CASE("determinant product is order independent") {
    std::vector<ConjugacyClass> cl{regular({Scalar(2), Scalar(3)}), {{Scalar(5), Partition{2}}},
                                   regular({Scalar::gauss(0, 1), Scalar(7)})};
    Scalar d = det_product(cl);
    std::swap(cl[0], cl[2]);
    std::swap(cl[1][0], cl[1][0]);
    CHECK(det_product(cl) == d);
    CHECK(d == Scalar(2 * 3 * 25 * 7) * Scalar::gauss(0, 1));
}

TEST_CASE("genus one verdict and witness claim") {
    std::vector<ConjugacyClass> one{scalar_class(Scalar(-1), 2)};
    DSPVerdict v = dsp_verdict(one, 1);
    CHECK(v.verdict == Verdict::CriterionFailed);
    CHECK(v.failed_check == "inequality");
    REQUIRE(v.witness_claim);
    CHECK_FALSE(*v.witness_claim);

    // a single class whose type is not the row passes the theorem's hypothesis,
    // while the existence claim needs two such classes
    std::vector<ConjugacyClass> single{regular({Scalar(2), Scalar::frac(1, 2)}), scalar_class(Scalar(1), 2)};
    DSPVerdict w = dsp_verdict(single, 1);
    CHECK(w.inequality.pass);
    REQUIRE(w.witness_claim);
    CHECK_FALSE(*w.witness_claim);

    std::vector<ConjugacyClass> two{regular({Scalar(2), Scalar(3)}), regular({Scalar::frac(1, 2), Scalar::frac(1, 3)})};
    DSPVerdict u = dsp_verdict(two, 1);
    CHECK(*u.witness_claim);
    CHECK(dsp_verdict(one, 2).inequality.pass);
}

TEST_CASE("hypergeometric witness") {
    MarkedPoints pts({Scalar(0), Scalar(1), Scalar(-1)});
    ParabolicData d({distinct_row({1, 2}), distinct_row({1, 3}), distinct_row({0, 2})});
    WitnessReport w = higgs_witness(d, pts);
    REQUIRE(w.status == WitnessStatus::Verified);
    CHECK(w.integrality.verdict == Integrality::CertifiedIntegral);
    CHECK(w.centres.size() == 6);
    for (auto& c : w.centres) {
        REQUIRE(c.jordan);
        CHECK(c.jordan->aggregate == Partition{1});
        CHECK(c.exact);
    }
    // a different seed keeps every verdict
    WitnessOptions o;
    o.seed = 7;
    WitnessReport w7 = higgs_witness(d, pts, o);
    CHECK(w7.status == WitnessStatus::Verified);
    CHECK(w7.curve == w.curve);
}

TEST_CASE("strongly parabolic point with a double block") {
    MarkedPoints pts({Scalar(0), Scalar(1), Scalar(-1), Scalar(2)});
    ParabolicData d({{{2, Scalar(0)}}, distinct_row({1, -1}), distinct_row({2, -2}), distinct_row({3, -3})});
    WitnessReport w = higgs_witness(d, pts);
    REQUIRE(w.status == WitnessStatus::Verified);
    REQUIRE(w.centres[0].jordan);
    CHECK(w.centres[0].jordan->aggregate == Partition{1, 1});
}

TEST_CASE("repeated eigenvalue at one point") {
    MarkedPoints pts({Scalar(0), Scalar(1), Scalar(-1)});
    ParabolicData raw({{{3, Scalar(1)}, {2, Scalar(4)}, {1, Scalar(1)}}, distinct_row({2, 3, 5, 7, 11, 13}),
                       distinct_row({-2, -3, -5, -7, -11, -13})});
    ParabolicData d = residue_balanced(raw, pts);
    WitnessReport w = higgs_witness(d, pts);
    REQUIRE(w.status == WitnessStatus::Verified);
    REQUIRE(w.centres[0].jordan);
    CHECK(w.centres[0].sub == Partition{3, 1});
    CHECK(w.centres[0].jordan->aggregate == Partition{2, 1, 1});
    CHECK(w.centres[1].sub == Partition{2});
    CHECK(w.centres[1].jordan->aggregate == Partition{1, 1});
}

TEST_CASE("witness refuses data outside the criterion") {
    MarkedPoints pts({Scalar(0), Scalar(1), Scalar(-1)});
    ParabolicData ok_fail({{{2, Scalar(0)}}, {{2, Scalar(0)}}, distinct_row({1, -1})});
    WitnessReport w = higgs_witness(ok_fail, pts);
    CHECK(w.status == WitnessStatus::CriterionFailed);
    CHECK(w.ok.first_failure == 2);
    ParabolicData residue({distinct_row({1, 2}), distinct_row({1, 3}), distinct_row({0, 5})});
    CHECK(higgs_witness(residue, pts).status == WitnessStatus::CriterionFailed);
}
