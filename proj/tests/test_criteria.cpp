#include "doctest.h"
#include "dsp/criteria.hpp"

using namespace dsp;

TEST_CASE("degree of the twisted bundle") {
    std::vector<Partition> p3(3, Partition{1, 1}), p4(4, Partition{1, 1});
    CHECK(deg_L(0, 3, 2, p3) == -1);
    CHECK(deg_L(0, 4, 2, p4) == 0);
    CHECK(deg_L(1, 1, 2, {Partition{1, 1}}) == 1);
}

TEST_CASE("OK condition in genus 0") {
    auto pass = ok_condition(0, 3, std::vector<Partition>(3, Partition{1, 1}));
    CHECK(pass.pass);
    REQUIRE(pass.rows.size() == 1);
    CHECK(pass.rows[0].lhs == 3);
    CHECK(pass.rows[0].threshold == 4);
    auto fail = ok_condition(0, 3, std::vector<Partition>(3, Partition{2}));
    CHECK_FALSE(fail.pass);
    CHECK(fail.first_failure == 2);
    CHECK(fail.rows[0].lhs == 6);
}

TEST_CASE("OK condition in genus 1 and higher") {
    for (int r = 2; r <= 5; ++r) CHECK_FALSE(ok_condition(1, 1, {Partition::row(r)}).pass);
    CHECK(ok_condition(1, 2, {Partition::row(3), Partition{2, 1}}).pass);
    CHECK(ok_condition(2, 1, {Partition::row(4)}).pass);
    CHECK(ok_condition(1, 1, {Partition::row(1)}).pass);
}

TEST_CASE("controllability") {
    CHECK(controllability(0, 2, {1, 1, 1}));
    CHECK_FALSE(controllability(0, 1, {1, 1, 1}));
    CHECK(controllability(0, 2, {0, 0, 0}));
    CHECK(controllability_inequality(0, 2, {1, 1, 1}));
    CHECK_FALSE(controllability_inequality(0, 1, {2, 1}));
}

TEST_CASE("Simpson invariants") {
    for (int r = 1; r <= 6; ++r) {
        auto col = simpson_invariants(Partition::column(r));
        CHECK(col.d == r * r - r);
        CHECK(col.R == r - 1);
        auto row = simpson_invariants(Partition::row(r));
        CHECK(row.d == 0);
        CHECK(row.R == 0);
    }
    auto p = simpson_invariants(Partition{2, 1});
    CHECK(p.d == 4);
    CHECK(p.R == 1);
}

TEST_CASE("Simpson criterion and agreement with OK") {
    std::vector<Partition> good(3, Partition{1, 1});
    CHECK(simpson_criterion(good, 2));
    std::vector<Partition> bad{Partition{2}, Partition{2}, Partition{1, 1}};
    CHECK_FALSE(simpson_criterion(bad, 2));
    CHECK_FALSE(simpson_criterion({Partition{1}, Partition{1}, Partition{1}}, 1));
    auto e1 = criteria_equivalence(good, 2);
    CHECK(e1.ok_verdict);
    CHECK(e1.simpson_verdict);
    auto e2 = criteria_equivalence(bad, 2);
    CHECK_FALSE(e2.ok_verdict);
    CHECK_FALSE(e2.simpson_verdict);
    CHECK_THROWS(simpson_criterion({Partition{2}, Partition{2}, Partition{2}}, 2));
}

TEST_CASE("small equivalence sweep") {
    SweepResult s = equivalence_sweep(2, 4, {3, 4});
    CHECK(s.mismatches == 0);
    CHECK(s.tuples > 0);
}
