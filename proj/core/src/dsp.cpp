#include "dsp/dsp.hpp"

#include "dsp/lattice.hpp"

#include <set>

namespace dsp {

int class_rank(const ConjugacyClass& c) {
    int r = 0;
    for (auto& eb : c) r += eb.blocks.size();
    return r;
}

void validate_class(const ConjugacyClass& c) {
    if (c.empty()) throw std::invalid_argument("empty conjugacy class");
    std::set<Scalar> seen;
    for (auto& eb : c) {
        if (eb.lambda.is_zero()) throw std::invalid_argument("eigenvalue zero in a conjugacy class");
        if (eb.blocks.empty()) throw std::invalid_argument("eigenvalue " + eb.lambda.str() + " has no Jordan blocks");
        if (!seen.insert(eb.lambda).second)
            throw std::invalid_argument("eigenvalue " + eb.lambda.str() + " listed twice in one class");
    }
}

std::vector<Partition> parabolic_type(const std::vector<ConjugacyClass>& classes) {
    if (classes.empty()) throw std::invalid_argument("no conjugacy classes");
    std::vector<Partition> out;
    int r = class_rank(classes[0]);
    for (auto& c : classes) {
        validate_class(c);
        if (class_rank(c) != r) throw std::invalid_argument("conjugacy classes of different ranks");
        Partition p;
        for (auto& eb : c) p = partition_union(p, conjugate(eb.blocks));
        out.push_back(std::move(p));
    }
    return out;
}

Scalar det_product(const std::vector<ConjugacyClass>& classes) {
    Scalar d(1);
    for (auto& c : classes)
        for (auto& eb : c) d *= eb.lambda.pow(eb.blocks.size());
    return d;
}

std::string verdict_name(Verdict v) { return v == Verdict::Solvable ? "solvable" : "criterion-failed"; }

DSPVerdict dsp_verdict(const std::vector<ConjugacyClass>& classes, int g, SubsetBound bound) {
    if (g < 0) throw std::invalid_argument("negative genus");
    DSPVerdict v;
    v.types = parabolic_type(classes);
    int n = static_cast<int>(classes.size());
    int r = v.types[0].size();
    if (g == 0 && n < 3) throw std::invalid_argument("genus 0 needs at least three classes");

    v.det_ok = det_product(classes).is_one();
    EigenTable table;
    for (auto& c : classes) {
        std::vector<Scalar> row;
        for (auto& eb : c)
            for (int k = 0; k < eb.blocks.size(); ++k) row.push_back(eb.lambda);
        table.push_back(std::move(row));
    }
    v.generic = is_multiplicatively_generic(table, bound);
    v.inequality = ok_condition(g, n, v.types);
    v.genus_case = v.inequality.genus_case;
    if (g == 1) {
        int non_row = 0;
        for (auto& p : v.types) non_row += p != Partition::row(r);
        v.witness_claim = non_row >= 2;
    }
    if (!v.det_ok)
        v.failed_check = "det";
    else if (!v.generic)
        v.failed_check = "genericity";
    else if (!v.inequality.pass)
        v.failed_check = "inequality";
    v.verdict = v.failed_check.empty() ? Verdict::Solvable : Verdict::CriterionFailed;
    return v;
}

std::string witness_status_name(WitnessStatus s) {
    switch (s) {
        case WitnessStatus::Verified: return "verified";
        case WitnessStatus::CriterionFailed: return "criterion-failed";
        case WitnessStatus::AssertionFailed: return "assertion-failed";
        case WitnessStatus::RetriesExhausted: return "retries-exhausted";
    }
    return "";
}

namespace {

std::string centre_name(const MarkedPoints& pts, int i, const Scalar& xi) {
    return "(" + pts[i].str() + ", " + xi.str() + ")";
}

}  // namespace

WitnessReport higgs_witness(const ParabolicData& data, const MarkedPoints& pts, const WitnessOptions& opt) {
    if (pts.size() != data.points()) throw std::invalid_argument("point count mismatch");
    if (opt.retries < 0) throw std::invalid_argument("negative retry count");
    WitnessReport rep;
    int n = data.points(), r = data.rank();
    std::vector<Partition> ms;
    for (int i = 0; i < n; ++i) ms.push_back(data.m(i));
    if (n < 3) {
        rep.status = WitnessStatus::CriterionFailed;
        rep.message = "genus 0 construction needs at least three marked points";
        return rep;
    }
    rep.ok = ok_condition(0, n, flag_partitions(data));
    rep.expected_dimension = expected_dimension(0, n, r, ms);
    if (!rep.ok.pass) {
        rep.status = WitnessStatus::CriterionFailed;
        rep.message = "OK condition fails at mu=" + std::to_string(rep.ok.first_failure);
        return rep;
    }
    if (!residue_condition(data, pts)) {
        rep.status = WitnessStatus::CriterionFailed;
        rep.message = "residue condition fails: weighted eigenvalue sum is " + residue_sum(data, pts).str();
        return rep;
    }
    ConstraintSystem sys = build_constraints(data, pts);

    for (int k = 0; k <= opt.retries; ++k) {
        AttemptLog log;
        log.seed = opt.seed + static_cast<std::uint64_t>(k);
        SectionTuple s;
        try {
            s = construct_section(data, pts, SectionOptions{log.seed});
        } catch (const ConstructionError& e) {
            rep.status = WitnessStatus::CriterionFailed;
            rep.message = e.what();
            log.outcome = "construction failed";
            rep.attempts.push_back(log);
            return rep;
        }
        BiPoly q = assemble(s);
        rep.sections = s;
        rep.curve = q;
        rep.centres.clear();
        if (!satisfies_constraints(sys, pts, s)) {
            rep.status = WitnessStatus::AssertionFailed;
            rep.message = "constructed sections violate the linear constraints";
            log.outcome = rep.message;
            rep.attempts.push_back(log);
            return rep;
        }

        std::string retry_reason;
        auto distinct = distinct_part(data);
        for (int i = 0; i < n && retry_reason.empty(); ++i)
            for (auto& ep : distinct[i]) {
                CentreReport c;
                c.point = i;
                c.xi = ep.xi;
                c.sub = ep.sub;
                c.local = local_conditions(q, pts[i], ep.xi, ep.sub);
                if (!c.local.agree() || !c.local.blowup) {
                    rep.status = WitnessStatus::AssertionFailed;
                    rep.message = "local conditions " + std::string(c.local.agree() ? "fail" : "disagree") + " at " +
                                  centre_name(pts, i, ep.xi);
                    rep.centres.push_back(std::move(c));
                    log.outcome = rep.message;
                    rep.attempts.push_back(log);
                    return rep;
                }
                c.exact = check_exact_multiplicity(q, pts[i], ep.xi, ep.sub);
                if (!c.exact) retry_reason = "multiplicity above the minimum at " + centre_name(pts, i, ep.xi);
                rep.centres.push_back(std::move(c));
                if (!retry_reason.empty()) break;
            }
        if (!retry_reason.empty()) {
            log.outcome = retry_reason;
            rep.attempts.push_back(log);
            continue;
        }

        IntegralityOptions io;
        io.seed = log.seed;
        for (auto& c : rep.centres) io.hints.emplace_back(pts[c.point], c.xi);
        rep.integrality = integrality_certificate(q, opt.integrality, io);
        if (rep.integrality.verdict != Integrality::CertifiedIntegral) {
            log.outcome = "curve " + integrality_name(rep.integrality.verdict) + ": " + rep.integrality.reason;
            rep.attempts.push_back(log);
            continue;
        }

        try {
            for (auto& c : rep.centres) c.jordan = residue_jordan_type(q, pts[c.point], c.xi, c.sub);
        } catch (const DegenerateChart& e) {
            log.outcome = e.what();
            rep.attempts.push_back(log);
            continue;
        }
        for (auto& c : rep.centres)
            if (!c.jordan->matches || !c.jordan->counts_match) {
                rep.status = WitnessStatus::AssertionFailed;
                rep.message = "residue Jordan type " + c.jordan->aggregate.str() + " differs from " +
                              c.jordan->expected.str() + " at " + centre_name(pts, c.point, c.xi);
                log.outcome = rep.message;
                rep.attempts.push_back(log);
                return rep;
            }
        log.outcome = "verified";
        rep.attempts.push_back(log);
        rep.status = WitnessStatus::Verified;
        rep.message = "integral spectral curve with the predicted residue Jordan types";
        return rep;
    }
    rep.status = WitnessStatus::RetriesExhausted;
    rep.message = "no verified witness after " + std::to_string(opt.retries + 1) + " attempts";
    return rep;
}

}  // namespace dsp
