#include "dsp/parabolic.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace dsp {

MarkedPoints::MarkedPoints(std::vector<Scalar> pts) : p_(std::move(pts)) {
    if (p_.empty()) throw std::invalid_argument("at least one marked point is required");
    for (std::size_t i = 0; i < p_.size(); ++i)
        for (std::size_t k = i + 1; k < p_.size(); ++k)
            if (p_[i] == p_[k]) throw std::invalid_argument("marked points must be distinct");
}

Scalar MarkedPoints::residue_weight(int i) const {
    Scalar w(1);
    for (int k = 0; k < size(); ++k)
        if (k != i) w *= p_[i] - p_[k];
    return w;
}

ParabolicData::ParabolicData(std::vector<std::vector<FlagBlock>> blocks) : b_(std::move(blocks)) {
    if (b_.empty()) throw std::invalid_argument("parabolic data needs at least one point");
    for (std::size_t i = 0; i < b_.size(); ++i) {
        if (b_[i].empty()) throw std::invalid_argument("point " + std::to_string(i + 1) + " has no blocks");
        int r = 0;
        for (auto& fb : b_[i]) {
            if (fb.m <= 0) throw std::invalid_argument("multiplicities must be positive");
            r += fb.m;
        }
        if (i == 0) r_ = r;
        else if (r != r_) throw std::invalid_argument("all points must carry the same rank");
    }
}

Partition ParabolicData::m(int i) const {
    std::vector<int> parts;
    for (auto& fb : b_[i]) parts.push_back(fb.m);
    return Partition(std::move(parts));
}

DistinctPart distinct_part(const ParabolicData& data) {
    DistinctPart out;
    for (auto& row : data.blocks()) {
        std::vector<Scalar> order;
        std::vector<std::vector<int>> parts;
        for (auto& fb : row) {
            std::size_t k = 0;
            while (k < order.size() && order[k] != fb.xi) ++k;
            if (k == order.size()) {
                order.push_back(fb.xi);
                parts.emplace_back();
            }
            parts[k].push_back(fb.m);
        }
        std::vector<EigenPart> ep;
        for (std::size_t k = 0; k < order.size(); ++k) ep.push_back({order[k], Partition(parts[k])});
        out.push_back(std::move(ep));
    }
    return out;
}

std::vector<Partition> flag_partitions(const ParabolicData& data) {
    std::vector<Partition> out;
    for (int i = 0; i < data.points(); ++i) out.push_back(data.m(i));
    return out;
}

Scalar residue_sum(const ParabolicData& data, const MarkedPoints& pts) {
    if (pts.size() != data.points()) throw std::invalid_argument("point count mismatch");
    Scalar total;
    for (int i = 0; i < data.points(); ++i) {
        Scalar tr;
        for (auto& fb : data.blocks()[i]) tr += Scalar(fb.m) * fb.xi;
        if (!tr.is_zero()) total += tr / pts.residue_weight(i);
    }
    return total;
}

bool residue_condition(const ParabolicData& data, const MarkedPoints& pts) {
    return residue_sum(data, pts).is_zero();
}

ParabolicData residue_balanced(const ParabolicData& data, const MarkedPoints& pts) {
    auto blocks = data.blocks();
    int last = data.points() - 1;
    FlagBlock& fb = blocks[last].back();
    Scalar sum = residue_sum(data, pts);
    Scalar w = pts.residue_weight(last);
    fb.xi -= sum * w / Scalar(fb.m);
    for (std::size_t k = 0; k + 1 < blocks[last].size(); ++k)
        if (blocks[last][k].xi == fb.xi) throw std::invalid_argument("balancing eigenvalue collides with another block");
    return ParabolicData(std::move(blocks));
}

EigenTable eigen_table(const ParabolicData& data) {
    EigenTable t;
    for (auto& row : data.blocks()) {
        std::vector<Scalar> v;
        for (auto& fb : row)
            for (int k = 0; k < fb.m; ++k) v.push_back(fb.xi);
        t.push_back(std::move(v));
    }
    return t;
}

namespace {

// Values of op-combinations over all size-m subsets of one row.
std::set<Scalar> subset_values(const std::vector<Scalar>& row, int m, bool mult) {
    std::set<Scalar> out;
    std::function<void(int, int, Scalar)> rec = [&](int start, int left, Scalar acc) {
        if (left == 0) {
            out.insert(acc);
            return;
        }
        for (int k = start; k + left <= static_cast<int>(row.size()); ++k)
            rec(k + 1, left - 1, mult ? acc * row[k] : acc + row[k]);
    };
    rec(0, m, mult ? Scalar(1) : Scalar(0));
    return out;
}

std::set<Scalar> combine(const std::vector<std::set<Scalar>>& sets, std::size_t lo, std::size_t hi, bool mult) {
    std::set<Scalar> acc{mult ? Scalar(1) : Scalar(0)};
    for (std::size_t i = lo; i < hi; ++i) {
        std::set<Scalar> next;
        for (auto& a : acc)
            for (auto& b : sets[i]) next.insert(mult ? a * b : a + b);
        acc = std::move(next);
    }
    return acc;
}

bool generic(const EigenTable& table, SubsetBound bound, bool mult) {
    if (table.empty()) throw std::invalid_argument("empty eigenvalue table");
    std::size_t r = table[0].size();
    for (auto& row : table) {
        if (row.size() != r) throw std::invalid_argument("eigenvalue rows must have equal length");
        if (mult)
            for (auto& x : row)
                if (x.is_zero()) throw std::invalid_argument("zero eigenvalue in a multiplicative table");
    }
    int limit = bound == SubsetBound::Rank ? static_cast<int>(r) : static_cast<int>(table.size());
    Scalar target = mult ? Scalar(1) : Scalar(0);
    for (int m = 1; m < limit && m <= static_cast<int>(r); ++m) {
        std::vector<std::set<Scalar>> sets;
        for (auto& row : table) sets.push_back(subset_values(row, m, mult));
        // meet in the middle: look for a * b == target with a, b from the two halves
        std::size_t half = sets.size() / 2;
        std::set<Scalar> left = combine(sets, 0, half, mult);
        std::set<Scalar> right = combine(sets, half, sets.size(), mult);
        for (auto& a : left) {
            Scalar need = mult ? target / a : target - a;
            if (right.count(need)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_multiplicatively_generic(const EigenTable& table, SubsetBound bound) {
    return generic(table, bound, true);
}

bool is_additively_generic(const EigenTable& table, SubsetBound bound) {
    return generic(table, bound, false);
}

}  // namespace dsp
