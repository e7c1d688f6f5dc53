#include "dsp/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dsp {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
    for (int x : p_)
        if (x <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(p_.begin(), p_.end(), std::greater<int>());
    for (int x : p_) size_ += x;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < p_.size(); ++k) s += (k ? "," : "") + std::to_string(p_[k]);
    return s + ")";
}

Partition conjugate(const Partition& p) {
    std::vector<int> n;
    for (int j = 1; j <= p.part(1); ++j) {
        int count = 0;
        for (int m : p.parts()) count += m >= j;
        n.push_back(count);
    }
    return Partition(std::move(n));
}

Partition partition_union(const Partition& p, const Partition& q) {
    std::vector<int> all(p.parts());
    all.insert(all.end(), q.parts().begin(), q.parts().end());
    return Partition(std::move(all));
}

std::vector<int> level_sequence(const Partition& p) {
    std::vector<int> g;
    g.reserve(p.size());
    Partition n = conjugate(p);
    for (int col = 1; col <= n.length(); ++col)
        for (int k = 0; k < n.part(col); ++k) g.push_back(col);
    return g;
}

int level_function(const Partition& p, int mu) {
    if (mu < 1 || mu > p.size()) throw std::out_of_range("level function index out of range");
    return level_sequence(p)[mu - 1];
}

std::set<Cell> level_domain(const Partition& p) {
    std::set<Cell> g;
    std::vector<int> gamma = level_sequence(p);
    int k = p.size();
    for (int u = 0; u < k; ++u)
        for (int a = 0; a < gamma[k - u - 1]; ++a) g.insert({u, a});
    return g;
}

MinimalIndices minimal_level_indices(const Partition& p) {
    MinimalIndices out;
    Partition n = conjugate(p);
    std::vector<int> gamma = level_sequence(p);
    for (int j = 1; j <= p.length(); ++j) {
        int s = 0;
        for (int b = 1; b <= p.part(j); ++b) s += n.part(b);
        out.j_min.insert(s);
    }
    for (int mu : out.j_min) out.g_min.insert({p.size() - mu, gamma[mu - 1]});
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<std::vector<Partition>> partition_multisets(int n, int k) {
    std::vector<Partition> all = partitions_of(n);
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t t = from; t < all.size(); ++t) {
            cur.push_back(all[t]);
            rec(t);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace dsp
