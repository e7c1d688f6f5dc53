#pragma once

#include "dsp/matrix.hpp"
#include "dsp/partition.hpp"
#include "dsp/poly.hpp"

#include <stdexcept>
#include <vector>

namespace dsp {

// Raised when the strict transform meets the corner E_j ∩ E_{j+1}; a new
// random choice of free values normally avoids it.
class DegenerateChart : public std::runtime_error {
public:
    DegenerateChart(const std::string& what, int j) : std::runtime_error(what), j_(j) {}
    int chart() const { return j_; }

private:
    int j_;
};

// Strict transform in chart j: q(u^j v^(j-1), u v) with the power of u removed,
// and for j >= 2 also the power of v (v = 0 is the previous exceptional curve).
// q must already be centred at the origin.
BiPoly chart_equation(const BiPoly& q, int j);

struct ExceptionalIntersection {
    int e = 0;                // points of the strict transform on E_j in this chart
    bool degenerate = false;  // F_j(0, 0) = 0 for j >= 2
};
ExceptionalIntersection exceptional_intersections(const BiPoly& f, int j);

// Monic-in-v factor V of f modulo u^j whose reduction at u = 0 carries the
// nonzero roots of f(0, v) (all roots when j = 1). Slot x holds u, slot y holds v.
BiPoly hensel_unit_part(const BiPoly& f, int j);

struct ChartModule {
    int j = 0;
    int e = 0;
    BiPoly V;
    Matrix y_operator;  // basis u^a v^b, index a*e + b, a < j, b < e
};
ChartModule chart_module(const BiPoly& f, int j);

// Block sizes of a nilpotent matrix; throws std::invalid_argument otherwise.
Partition jordan_type(const Matrix& m);
// dim ker(M^k) for k = 0, 1, ... until the kernel is everything.
std::vector<int> kernel_dimensions(const Matrix& m);

struct ChartReport {
    int j = 0;
    BiPoly F;
    BiPoly V;
    int e = 0;
    int expected_e = 0;  // m_j - m_{j+1}
    std::vector<int> kernel_dims;
    Partition blocks;
};

struct JordanReport {
    std::vector<ChartReport> charts;
    Partition aggregate;
    Partition expected;  // conjugate of the subpartition
    bool matches = false;
    bool counts_match = false;  // e_j = m_j - m_{j+1} for every chart
};

// Residue Jordan type at the centre (p, xi) for the subpartition part.
JordanReport residue_jordan_type(const BiPoly& q, const Scalar& p, const Scalar& xi, const Partition& part);

}  // namespace dsp
