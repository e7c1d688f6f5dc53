#include "dsp/criteria.hpp"

#include <numeric>
#include <stdexcept>

namespace dsp {

long deg_L(int g, int n, int mu, const std::vector<Partition>& p) {
    long d = static_cast<long>(mu) * (2 * g - 2 + n);
    for (auto& part : p) d -= level_function(part, mu);
    return d;
}

std::string genus_case_name(GenusCase c) {
    switch (c) {
        case GenusCase::Zero: return "genus-0";
        case GenusCase::One: return "genus-1";
        case GenusCase::Higher: return "genus-2+";
    }
    return "";
}

CriterionReport ok_condition(int g, int n, const std::vector<Partition>& p) {
    if (p.empty()) throw std::invalid_argument("no partitions");
    int r = p[0].size();
    for (auto& part : p)
        if (part.size() != r) throw std::invalid_argument("partitions of unequal size");
    CriterionReport rep;
    rep.genus_case = g == 0 ? GenusCase::Zero : g == 1 ? GenusCase::One : GenusCase::Higher;
    for (int mu = 2; mu <= r; ++mu) {
        CriterionRow row;
        row.mu = mu;
        long all_equal = 0;
        for (auto& part : p) {
            int gm = level_function(part, mu);
            row.lhs += gm;
            all_equal += gm == mu;
        }
        if (g == 0) {
            row.threshold = static_cast<long>(n - 2) * mu + 2;
            row.pass = row.lhs < row.threshold;
        } else if (g == 1) {
            row.threshold = n;
            row.pass = all_equal != n;
        }
        if (!row.pass && rep.pass) {
            rep.pass = false;
            rep.first_failure = mu;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

bool controllability_inequality(int g, long deg, const std::vector<int>& t) {
    long s = std::accumulate(t.begin(), t.end(), 0L);
    return s < deg - (2L * g - 2);
}

bool controllability(int g, long deg, const std::vector<int>& t) {
    if (g != 0) return controllability_inequality(g, deg, t);
    long s = std::accumulate(t.begin(), t.end(), 0L);
    return deg - s >= -1;
}

SimpsonInvariants simpson_invariants(const Partition& p) {
    std::vector<int> gamma = level_sequence(p);
    long r = p.size();
    long s = std::accumulate(gamma.begin(), gamma.end(), 0L);
    return {r * (r + 1) - 2 * s, gamma.empty() ? 0 : r - gamma.back()};
}

bool simpson_criterion(const std::vector<Partition>& p, int r) {
    bool regular = false;
    for (auto& part : p) {
        if (part.size() != r) throw std::invalid_argument("partition size differs from the rank");
        regular = regular || part == Partition::column(r);
    }
    if (!regular) throw std::invalid_argument("no class with distinct eigenvalues");
    long dsum = 0, rsum = 0;
    std::vector<SimpsonInvariants> inv;
    for (auto& part : p) {
        inv.push_back(simpson_invariants(part));
        dsum += inv.back().d;
        rsum += inv.back().R;
    }
    if (dsum < 2L * r * r - 2) return false;
    for (auto& v : inv)
        if (rsum - v.R < r) return false;
    return true;
}

Equivalence criteria_equivalence(const std::vector<Partition>& p, int r) {
    Equivalence e;
    e.simpson_verdict = simpson_criterion(p, r);
    e.ok_verdict = ok_condition(0, static_cast<int>(p.size()), p).pass;
    e.equivalent = e.ok_verdict == e.simpson_verdict;
    return e;
}

SweepResult equivalence_sweep(int r_min, int r_max, const std::vector<int>& ns) {
    if (r_min < 1 || r_max < r_min) throw std::invalid_argument("bad rank range");
    SweepResult out;
    for (int r = r_min; r <= r_max; ++r)
        for (int n : ns) {
            if (n < 3) throw std::invalid_argument("sweep needs at least three points");
            SweepCase c{r, n, 0, 0, 0};
            for (auto& rest : partition_multisets(r, n - 1)) {
                std::vector<Partition> tuple{Partition::column(r)};
                tuple.insert(tuple.end(), rest.begin(), rest.end());
                Equivalence e = criteria_equivalence(tuple, r);
                ++c.tuples;
                c.ok_pass += e.ok_verdict;
                if (!e.equivalent) {
                    ++c.mismatches;
                    if (out.examples.size() < 10) out.examples.push_back(tuple);
                }
            }
            out.tuples += c.tuples;
            out.mismatches += c.mismatches;
            out.cases.push_back(c);
        }
    return out;
}

}  // namespace dsp
