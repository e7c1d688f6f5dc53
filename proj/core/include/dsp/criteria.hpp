#pragma once

#include "dsp/partition.hpp"

#include <string>
#include <vector>

namespace dsp {

long deg_L(int g, int n, int mu, const std::vector<Partition>& p);

enum class GenusCase { Zero, One, Higher };
std::string genus_case_name(GenusCase c);

struct CriterionRow {
    int mu = 0;
    long lhs = 0;        // sum_i gamma_{P^i}(mu)
    long threshold = 0;  // g = 0: (n-2)mu + 2 (strict); g = 1: n (all gamma equal mu)
    bool pass = true;
};

struct CriterionReport {
    GenusCase genus_case = GenusCase::Zero;
    std::vector<CriterionRow> rows;
    bool pass = true;
    int first_failure = 0;  // mu of the first failing row, 0 if none
};

CriterionReport ok_condition(int g, int n, const std::vector<Partition>& p);

// Strict inequality sum t < deg L - (2g - 2).
bool controllability_inequality(int g, long deg, const std::vector<int>& t);
// For g = 0 the exact criterion deg - sum t >= -1; otherwise the strict inequality.
bool controllability(int g, long deg, const std::vector<int>& t);

struct SimpsonInvariants {
    long d = 0;
    long R = 0;
};
SimpsonInvariants simpson_invariants(const Partition& p);
bool simpson_criterion(const std::vector<Partition>& p, int r);

struct Equivalence {
    bool equivalent = false;
    bool ok_verdict = false;
    bool simpson_verdict = false;
};
Equivalence criteria_equivalence(const std::vector<Partition>& p, int r);

struct SweepCase {
    int r = 0;
    int n = 0;
    long tuples = 0;
    long ok_pass = 0;
    long mismatches = 0;
};
struct SweepResult {
    std::vector<SweepCase> cases;
    long tuples = 0;
    long mismatches = 0;
    std::vector<std::vector<Partition>> examples;  // first few mismatching tuples
};
// All tuples (1^r, P^2, ..., P^n) with P^2..P^n an unordered choice, for
// r in [r_min, r_max] and each n in ns: OK verdict against the Simpson verdict.
SweepResult equivalence_sweep(int r_min, int r_max, const std::vector<int>& ns);

}  // namespace dsp
