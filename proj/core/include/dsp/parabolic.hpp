#pragma once

#include "dsp/partition.hpp"
#include "dsp/scalar.hpp"

#include <vector>

namespace dsp {

// Affine coordinates of the marked points on P^1; pairwise distinct.
class MarkedPoints {
public:
    MarkedPoints() = default;
    explicit MarkedPoints(std::vector<Scalar> pts);
    const std::vector<Scalar>& points() const { return p_; }
    int size() const { return static_cast<int>(p_.size()); }
    const Scalar& operator[](int i) const { return p_[i]; }
    // prod_{k != i} (p_i - p_k)
    Scalar residue_weight(int i) const;

private:
    std::vector<Scalar> p_;
};

struct FlagBlock {
    int m = 0;
    Scalar xi;
};

// Per point, the multiplicities m_{i,j} paired with eigenvalues xi_{i,j}.
class ParabolicData {
public:
    ParabolicData() = default;
    explicit ParabolicData(std::vector<std::vector<FlagBlock>> blocks);
    const std::vector<std::vector<FlagBlock>>& blocks() const { return b_; }
    int points() const { return static_cast<int>(b_.size()); }
    int rank() const { return r_; }
    Partition m(int i) const;

private:
    std::vector<std::vector<FlagBlock>> b_;
    int r_ = 0;
};

struct EigenPart {
    Scalar xi;
    Partition sub;
};
// Distinct eigenvalues of each point in order of first appearance.
using DistinctPart = std::vector<std::vector<EigenPart>>;

DistinctPart distinct_part(const ParabolicData& data);
// P^i = union of the subpartitions at point i (equals sorted m_i).
std::vector<Partition> flag_partitions(const ParabolicData& data);

// Residue of the trace: sum_{i,j} m_{i,j} xi_{i,j} / prod_{k != i}(p_i - p_k).
Scalar residue_sum(const ParabolicData& data, const MarkedPoints& pts);
bool residue_condition(const ParabolicData& data, const MarkedPoints& pts);
// Shifts the eigenvalue of the last block at the last point so that the
// residue condition holds. Throws if that block would collide with another
// eigenvalue at the same point.
ParabolicData residue_balanced(const ParabolicData& data, const MarkedPoints& pts);

// Rows are points, each row lists the r eigenvalues with multiplicity.
using EigenTable = std::vector<std::vector<Scalar>>;
EigenTable eigen_table(const ParabolicData& data);

// Subset sizes enumerated: 1 <= m < r (proper subsets) by default, or
// 1 <= m < n when the bound is taken from the number of points.
enum class SubsetBound { Rank, Points };
bool is_multiplicatively_generic(const EigenTable& table, SubsetBound bound = SubsetBound::Rank);
bool is_additively_generic(const EigenTable& table, SubsetBound bound = SubsetBound::Rank);

}  // namespace dsp
