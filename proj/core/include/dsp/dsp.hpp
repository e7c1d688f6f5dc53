#pragma once

#include "dsp/criteria.hpp"
#include "dsp/jordan.hpp"
#include "dsp/linear_system.hpp"
#include "dsp/parabolic.hpp"
#include "dsp/spectral.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dsp {

struct EigenBlock {
    Scalar lambda;
    Partition blocks;  // Jordan block sizes for lambda
};
// Eigenvalue-labelled partitions; eigenvalues nonzero and pairwise distinct.
using ConjugacyClass = std::vector<EigenBlock>;

int class_rank(const ConjugacyClass& c);
void validate_class(const ConjugacyClass& c);
// P^i: union over eigenvalues of the conjugate Jordan partitions.
std::vector<Partition> parabolic_type(const std::vector<ConjugacyClass>& classes);
// prod_i prod_lambda lambda^|P^lambda|
Scalar det_product(const std::vector<ConjugacyClass>& classes);

enum class Verdict { Solvable, CriterionFailed };
std::string verdict_name(Verdict v);

struct DSPVerdict {
    GenusCase genus_case = GenusCase::Zero;
    std::vector<Partition> types;
    bool det_ok = false;
    bool generic = false;
    CriterionReport inequality;
    // g = 1 only: at least two types differ from (r), the hypothesis under which
    // a Higgs bundle with these types is known to exist.
    std::optional<bool> witness_claim;
    Verdict verdict = Verdict::CriterionFailed;
    std::string failed_check;  // "det", "genericity" or "inequality"; empty when solvable
};
DSPVerdict dsp_verdict(const std::vector<ConjugacyClass>& classes, int g, SubsetBound bound = SubsetBound::Rank);

struct WitnessOptions {
    std::uint64_t seed = 0;
    int retries = 8;
    IntegralityMode integrality = IntegralityMode::Auto;
};

struct CentreReport {
    int point = 0;  // 0-based
    Scalar xi;
    Partition sub;
    LocalConditions local;
    bool exact = false;
    std::optional<JordanReport> jordan;
};

struct AttemptLog {
    std::uint64_t seed = 0;
    std::string outcome;
};

enum class WitnessStatus { Verified, CriterionFailed, AssertionFailed, RetriesExhausted };
std::string witness_status_name(WitnessStatus s);

struct WitnessReport {
    WitnessStatus status = WitnessStatus::RetriesExhausted;
    std::string message;
    CriterionReport ok;
    long expected_dimension = 0;
    std::vector<AttemptLog> attempts;
    SectionTuple sections;
    BiPoly curve;
    std::vector<CentreReport> centres;
    IntegralityReport integrality;
};

// Builds a spectral curve for genus 0 data, certifies it and checks the
// residue Jordan type at every centre. Input errors throw; semantic failures
// are reported through the status.
WitnessReport higgs_witness(const ParabolicData& data, const MarkedPoints& pts, const WitnessOptions& opt = {});

}  // namespace dsp
