#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dsp {

// Weakly decreasing positive parts; the empty partition has size 0.
class Partition {
public:
    Partition() = default;
    // Sorts the input; rejects non-positive parts.
    Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition column(int r) { return Partition(std::vector<int>(r, 1)); }
    static Partition row(int r) { return r > 0 ? Partition({r}) : Partition(); }

    const std::vector<int>& parts() const { return p_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(p_.size()); }
    bool empty() const { return p_.empty(); }
    // 1-based part, zero beyond the length.
    int part(int j) const { return j >= 1 && j <= length() ? p_[j - 1] : 0; }

    friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.p_ != b.p_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.p_ < b.p_; }

    std::string str() const;

private:
    std::vector<int> p_;
    int size_ = 0;
};

using Cell = std::pair<int, int>;  // (u, a)

Partition conjugate(const Partition& p);
Partition partition_union(const Partition& p, const Partition& q);
// Column of the mu-th box when boxes are numbered down each column, columns left to right.
int level_function(const Partition& p, int mu);
std::vector<int> level_sequence(const Partition& p);  // gamma(1..|P|)
std::set<Cell> level_domain(const Partition& p);

// J_min uses box indices mu; G_min holds the derivative cells (|P| - mu, gamma(mu)).
struct MinimalIndices {
    std::set<int> j_min;
    std::set<Cell> g_min;
};
MinimalIndices minimal_level_indices(const Partition& p);

std::vector<Partition> partitions_of(int n);
// Unordered k-tuples of partitions of n (multisets), each sorted by partitions_of order.
std::vector<std::vector<Partition>> partition_multisets(int n, int k);

}  // namespace dsp
