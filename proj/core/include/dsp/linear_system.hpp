#pragma once

#include "dsp/matrix.hpp"
#include "dsp/parabolic.hpp"
#include "dsp/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace dsp {

// Rows of the divided form are the Taylor coefficients in (y - xi); the raw
// form scales row u by u!.
enum class Normalization { Divided, Raw };

// c x r block: row u, column mu (1-based) holds C(r-mu, u) xi^(r-mu-u).
Matrix vandermonde_block(const Scalar& xi, int c, int r, Normalization norm = Normalization::Divided);
// Entries -C(r, u) xi^(r-u), u = 0..c-1.
std::vector<Scalar> rhs_block(const Scalar& xi, int c, int r, Normalization norm = Normalization::Divided);

// c(a, P) = #{mu : gamma_P(mu) > a}, the length of row a of the level domain.
int level_row_count(const Partition& p, int a);

struct ConstraintBlock {
    int a = 0;
    int i = 0;  // 0-based point index
    Matrix A;
    std::vector<Scalar> B;
    std::vector<int> heights;  // c(a, xi°_{i,j}) per distinct eigenvalue, in order
    int c() const { return A.rows(); }
};

struct ConstraintSystem {
    int r = 0;
    int n = 0;
    Normalization norm = Normalization::Divided;
    DistinctPart distinct;
    std::vector<int> max_order;  // m_{i,1}: a ranges over 0..max_order-1
    std::map<std::pair<int, int>, ConstraintBlock> blocks;  // key (a, i)
    const ConstraintBlock& block(int a, int i) const { return blocks.at({a, i}); }
    int c(int a, int i) const;
    int row_count() const;
};

ConstraintSystem build_constraints(const ParabolicData& data, const MarkedPoints& pts,
                                   Normalization norm = Normalization::Divided);

using Triple = std::tuple<int, int, int>;  // (mu, a, i), mu 1-based, i 0-based
struct PivotFreeDecomposition {
    std::set<Triple> pivot;
    std::set<Triple> free;
    std::vector<std::vector<int>> t;  // t[i][mu], mu = 1..r (index 0 unused)
};
PivotFreeDecomposition pivot_free(const ConstraintSystem& sys);

class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, int mu = 0, int a = -1, int i = -1)
        : std::runtime_error(what), mu_(mu), a_(a), i_(i) {}
    int mu() const { return mu_; }
    int a() const { return a_; }
    int i() const { return i_; }

private:
    int mu_, a_, i_;
};

// Pivot unknowns mu = r-c+1..r of block (a, i) given the free ones mu = 1..r-c.
std::vector<Scalar> solve_block(const ConstraintSystem& sys, int a, int i, const std::vector<Scalar>& free_values);

// Polynomial of degree <= mu(n-2) with prescribed Taylor coefficients
// targets[i][a] at pts[i]. Returns the minimal-degree interpolant.
UniPoly hermite_lift(int mu, const MarkedPoints& pts, const std::vector<std::vector<Scalar>>& targets);

using SectionTuple = std::vector<UniPoly>;  // s_1..s_r at indices 0..r-1

struct SectionOptions {
    std::optional<std::uint64_t> seed;  // random free values when set
    int spread = 5;                     // free coefficients drawn from [-spread, spread]
};
SectionTuple construct_section(const ParabolicData& data, const MarkedPoints& pts, const SectionOptions& opt = {});

// Maximum residual of all constraint rows on a section tuple (zero when satisfied).
bool satisfies_constraints(const ConstraintSystem& sys, const MarkedPoints& pts, const SectionTuple& s);

// Affine dimension of the solution space in coefficient space, nullopt when empty.
std::optional<long> solution_dimension(const ParabolicData& data, const MarkedPoints& pts);

}  // namespace dsp
