#include "dsp/spectral.hpp"

#include <stdexcept>

namespace dsp {

BiPoly assemble(const SectionTuple& s) {
    int r = static_cast<int>(s.size());
    BiPoly q = BiPoly::monomial(Scalar(1), 0, r);
    for (int mu = 1; mu <= r; ++mu) q += BiPoly::from_x(s[mu - 1]) * BiPoly::monomial(Scalar(1), 0, r - mu);
    return q;
}

int multiplicity_at(const BiPoly& q, const Scalar& x0, const Scalar& y0) {
    if (q.is_zero()) throw std::invalid_argument("multiplicity of the zero polynomial");
    return poly_translate(q, x0, y0).min_total_degree();
}

std::vector<int> total_transform_multiplicities(const BiPoly& q, const Scalar& p, const Scalar& xi,
                                                const Partition& part) {
    BiPoly f = poly_translate(q, p, xi);
    const BiPoly uy = BiPoly::monomial(Scalar(1), 1, 1);
    std::vector<int> out;
    for (int j = 1; j <= part.length(); ++j) {
        out.push_back(f.min_total_degree());
        if (j < part.length()) f = poly_substitute(f, uy, BiPoly::y());
    }
    return out;
}

std::vector<int> vanishing_orders(const BiPoly& q, const Scalar& p, const Scalar& xi) {
    BiPoly f = poly_translate(q, p, xi);
    int r = q.degree(Var::Y);
    std::vector<int> v;
    for (int mu = 1; mu <= r; ++mu) v.push_back(f.coeff_in_y(r - mu).order_at(Scalar(0)));
    return v;
}

std::map<Cell, bool> derivative_vanishing(const BiPoly& q, const Scalar& p, const Scalar& xi, const std::set<Cell>& g) {
    std::map<Cell, bool> out;
    std::map<int, BiPoly> dy;
    for (auto& [u, a] : g) {
        auto it = dy.find(u);
        if (it == dy.end()) it = dy.emplace(u, poly_derivative(q, Var::Y, u)).first;
        out[{u, a}] = poly_eval(poly_derivative(it->second, Var::X, a), p, xi).is_zero();
    }
    return out;
}

LocalConditions local_conditions(const BiPoly& q, const Scalar& p, const Scalar& xi, const Partition& part) {
    LocalConditions lc;
    int r = q.degree(Var::Y), k = part.size();
    if (k > r) throw std::invalid_argument("subpartition larger than the degree of the curve");

    lc.multiplicities = total_transform_multiplicities(q, p, xi, part);
    lc.blowup = true;
    int acc = 0;
    for (int j = 1; j <= part.length(); ++j) {
        acc += part.part(j);
        lc.required.push_back(acc);
        lc.blowup = lc.blowup && lc.multiplicities[j - 1] >= acc;
    }

    lc.orders = vanishing_orders(q, p, xi);
    std::vector<int> gamma = level_sequence(part);
    lc.orders_ok = true;
    for (int mu = 1; mu <= r; ++mu) {
        int bound = mu > r - k ? gamma[mu - (r - k) - 1] : 0;
        lc.order_bounds.push_back(bound);
        lc.orders_ok = lc.orders_ok && lc.orders[mu - 1] >= bound;
    }

    lc.derivatives = derivative_vanishing(q, p, xi, level_domain(part));
    lc.jets_ok = true;
    for (auto& [cell, zero] : lc.derivatives) lc.jets_ok = lc.jets_ok && zero;
    return lc;
}

bool check_equivalence(const BiPoly& q, const Scalar& p, const Scalar& xi, const Partition& part) {
    LocalConditions lc = local_conditions(q, p, xi, part);
    if (!lc.agree())
        throw std::logic_error("local conditions disagree at (" + p.str() + ", " + xi.str() + ") for " + part.str());
    return lc.blowup;
}

bool check_exact_multiplicity(const BiPoly& q, const Scalar& p, const Scalar& xi, const Partition& part) {
    for (auto& [cell, zero] : derivative_vanishing(q, p, xi, minimal_level_indices(part).g_min))
        if (zero) return false;
    return true;
}

std::string integrality_name(Integrality v) {
    switch (v) {
        case Integrality::CertifiedIntegral: return "certified_integral";
        case Integrality::CertifiedNonintegral: return "certified_nonintegral";
        case Integrality::Inconclusive: return "inconclusive";
    }
    return "";
}

}  // namespace dsp
