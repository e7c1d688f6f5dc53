#pragma once

#include "dsp/partition.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dsp {

// Numerical lattice of the blown-up ruled surface over a genus g curve with n
// marked points: basis (C_0, fiber, Xi_{i,j}). Indices (i, j) are 1-based.
struct LatticeShape {
    int genus = 0;
    std::vector<int> lengths;  // l(i): number of exceptional curves over point i
    int points() const { return static_cast<int>(lengths.size()); }
    int base_degree() const { return 2 * genus - 2 + points(); }  // deg K_C(D) = C_0^2
};

struct DivisorClass {
    long a = 0;  // coefficient of C_0
    long b = 0;  // coefficient of a fiber
    std::map<std::pair<int, int>, long> exc;

    friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
        return x.a == y.a && x.b == y.b && x.exc == y.exc;
    }
    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(long k) const;
    std::string str() const;
};

DivisorClass zero_class(const LatticeShape& s);
DivisorClass section_class(const LatticeShape& s);        // C_0
DivisorClass fiber_class(const LatticeShape& s);          // general fiber
DivisorClass exceptional_class(const LatticeShape& s, int i, int j);
DivisorClass fiber_strict(const LatticeShape& s, int i);  // F_i = fiber - sum_j Xi_{i,j}
DivisorClass infinity_section(const LatticeShape& s);     // C_0 - deg * fiber

long intersect(const DivisorClass& x, const DivisorClass& y, const LatticeShape& s);

// The unique class with Sigma.C_inf = 0, Sigma.F_i = 0, Sigma.Xi_{i,j} = m_{i,j}.
DivisorClass solve_curve_class(const std::vector<Partition>& m, int genus = 0);
// -sum F_i - 2 C_inf; cross-checked against -n*fiber - 2 C_inf + sum Xi.
DivisorClass canonical_class(const LatticeShape& s);

long expected_dimension(int g, int n, int r, const std::vector<Partition>& m);
long strongly_parabolic_dimension(int g, int n, int r, const std::vector<Partition>& p);

}  // namespace dsp
