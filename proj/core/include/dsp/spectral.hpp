#pragma once

#include "dsp/linear_system.hpp"
#include "dsp/partition.hpp"
#include "dsp/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dsp {

// y^r + s_1(x) y^(r-1) + ... + s_r(x)
BiPoly assemble(const SectionTuple& s);
// Lowest total degree of the expansion at (x0, y0); 0 when Q(x0, y0) != 0.
int multiplicity_at(const BiPoly& q, const Scalar& x0, const Scalar& y0);

// Multiplicity at the origin of F_0, F_1, ... where F_0 is q moved to the
// centre and F_j(u, y) = F_{j-1}(u y, y).
std::vector<int> total_transform_multiplicities(const BiPoly& q, const Scalar& p, const Scalar& xi,
                                                const Partition& part);
// v(mu) for mu = 1..r (index mu-1): order at x = p of the coefficient of
// y^(r-mu) once y is centred at xi; kInfinity for a vanishing coefficient.
std::vector<int> vanishing_orders(const BiPoly& q, const Scalar& p, const Scalar& xi);
// Flags d_y^u d_x^a q(p, xi) == 0 for each cell of g.
std::map<Cell, bool> derivative_vanishing(const BiPoly& q, const Scalar& p, const Scalar& xi, const std::set<Cell>& g);

struct LocalConditions {
    std::vector<int> multiplicities;
    std::vector<int> required;  // m_1 + ... + m_j
    std::vector<int> orders;
    std::vector<int> order_bounds;  // gamma bound per mu, 0 where unconstrained
    std::map<Cell, bool> derivatives;
    bool blowup = false;      // multiplicity chain condition
    bool orders_ok = false;   // vanishing-order condition
    bool jets_ok = false;     // derivative condition on the level domain
    bool agree() const { return blowup == orders_ok && orders_ok == jets_ok; }
};
LocalConditions local_conditions(const BiPoly& q, const Scalar& p, const Scalar& xi, const Partition& part);
// Common verdict of the three conditions; throws std::logic_error if they disagree.
bool check_equivalence(const BiPoly& q, const Scalar& p, const Scalar& xi, const Partition& part);
// Non-vanishing of the derivatives indexed by the minimal cells.
bool check_exact_multiplicity(const BiPoly& q, const Scalar& p, const Scalar& xi, const Partition& part);

enum class Integrality { CertifiedIntegral, CertifiedNonintegral, Inconclusive };
enum class IntegralityMode { Auto, Cyclic, Probabilistic };
std::string integrality_name(Integrality v);

struct IntegralityOptions {
    std::vector<std::pair<Scalar, Scalar>> hints;  // known points of the curve
    std::uint64_t seed = 0;
    int specializations = 8;
};

struct IntegralityReport {
    Integrality verdict = Integrality::Inconclusive;
    IntegralityMode mode = IntegralityMode::Auto;
    std::string reason;
    std::vector<int> surviving_degrees;  // factor degrees not excluded by the patterns
    std::optional<BiPoly> factor;
    std::optional<std::pair<Scalar, Scalar>> smooth_point;
};

IntegralityReport integrality_certificate(const BiPoly& q, IntegralityMode mode, const IntegralityOptions& opt = {});

// Roots of f lying in Q(i), each listed once.
std::vector<Scalar> gaussian_rational_roots(const UniPoly& f);

}  // namespace dsp
