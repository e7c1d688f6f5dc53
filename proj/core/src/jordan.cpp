#include "dsp/jordan.hpp"

namespace dsp {

BiPoly chart_equation(const BiPoly& q, int j) {
    if (j < 1) throw std::invalid_argument("chart index starts at 1");
    if (q.is_zero()) throw std::invalid_argument("chart equation of the zero polynomial");
    BiPoly f = poly_substitute(q, BiPoly::monomial(Scalar(1), j, j - 1), BiPoly::monomial(Scalar(1), 1, 1));
    f = extract_monomial_cofactor(f, Var::X).cofactor;
    if (j >= 2) f = extract_monomial_cofactor(f, Var::Y).cofactor;
    return f;
}

ExceptionalIntersection exceptional_intersections(const BiPoly& f, int j) {
    UniPoly f0 = f.coeff_in_x(0);
    ExceptionalIntersection out;
    if (f0.is_zero()) throw std::invalid_argument("chart polynomial is divisible by u");
    if (j == 1) {
        out.e = f0.degree();
        return out;
    }
    out.e = f0.degree() - f0.order_at(Scalar(0));
    out.degenerate = f0.coeff(0).is_zero();
    return out;
}

BiPoly hensel_unit_part(const BiPoly& f, int j) {
    UniPoly f0 = f.coeff_in_x(0);
    if (f0.is_zero()) throw std::invalid_argument("chart polynomial is divisible by u");
    if (j == 1) return BiPoly::from_y(f0.monic());

    int s = f0.order_at(Scalar(0));
    UniPoly v0 = divmod(f0, UniPoly::monomial(Scalar(1), s)).first.monic();
    UniPoly u0 = UniPoly::monomial(f0.leading(), s);
    XGcd g = xgcd(u0, v0);
    if (g.g != UniPoly(Scalar(1)))
        throw DegenerateChart("chart " + std::to_string(j) + ": unit part shares a root with the corner", j);

    std::vector<UniPoly> U(j), V(j);
    U[0] = u0;
    V[0] = v0;
    for (int a = 1; a < j; ++a) {
        UniPoly err = f.coeff_in_x(a);
        for (int k = 0; k <= a; ++k) err = err - U[k] * V[a - k];
        if (err.is_zero()) continue;
        UniPoly dv = (g.s * err) % v0;
        auto [du, rem] = divmod(err - u0 * dv, v0);
        if (!rem.is_zero()) throw std::logic_error("Hensel step left a remainder");
        V[a] = dv;
        U[a] = du;
    }
    BiPoly out;
    for (int a = 0; a < j; ++a) out += BiPoly::from_y(V[a]) * BiPoly::monomial(Scalar(1), a, 0);
    return out;
}

ChartModule chart_module(const BiPoly& f, int j) {
    ChartModule cm;
    cm.j = j;
    cm.V = hensel_unit_part(f, j);
    cm.e = cm.V.degree(Var::Y);
    int e = cm.e, d = j * e;
    cm.y_operator = Matrix(d, d);
    auto idx = [e](int a, int b) { return a * e + b; };
    for (int a = 0; a < j; ++a)
        for (int b = 0; b < e; ++b) {
            int col = idx(a, b);
            if (a + 1 >= j) continue;
            if (b + 1 < e) {
                cm.y_operator(idx(a + 1, b + 1), col) += Scalar(1);
                continue;
            }
            // u^(a+1) v^e = -sum V_{c,d} u^(a+1+c) v^d
            for (auto& [key, coef] : cm.V.terms()) {
                auto [c, dd] = key;
                if (dd == e || a + 1 + c >= j) continue;
                cm.y_operator(idx(a + 1 + c, dd), col) -= coef;
            }
        }
    return cm;
}

std::vector<int> kernel_dimensions(const Matrix& m) {
    int d = m.rows();
    if (m.cols() != d) throw std::invalid_argument("Jordan type of a non-square matrix");
    std::vector<int> dims{0};
    Matrix pw = Matrix::identity(d);
    while (dims.back() < d) {
        if (static_cast<int>(dims.size()) > d) throw std::invalid_argument("matrix is not nilpotent");
        pw = pw * m;
        dims.push_back(d - rank(pw));
    }
    return dims;
}

Partition jordan_type(const Matrix& m) {
    std::vector<int> dims = kernel_dimensions(m);
    std::vector<int> b;
    for (std::size_t k = 1; k < dims.size(); ++k) b.push_back(dims[k] - dims[k - 1]);
    return conjugate(Partition(b));
}

JordanReport residue_jordan_type(const BiPoly& q, const Scalar& p, const Scalar& xi, const Partition& part) {
    JordanReport rep;
    BiPoly qt = poly_translate(q, p, xi);
    rep.expected = conjugate(part);
    rep.counts_match = true;
    for (int j = 1; j <= part.length(); ++j) {
        ChartReport cr;
        cr.j = j;
        cr.F = chart_equation(qt, j);
        ExceptionalIntersection ei = exceptional_intersections(cr.F, j);
        if (ei.degenerate)
            throw DegenerateChart("strict transform passes through E_" + std::to_string(j) + " ∩ E_" +
                                      std::to_string(j + 1) + " at (" + p.str() + ", " + xi.str() +
                                      "); re-seed the free values",
                                  j);
        ChartModule cm = chart_module(cr.F, j);
        cr.V = cm.V;
        cr.e = cm.e;
        cr.expected_e = part.part(j) - part.part(j + 1);
        cr.kernel_dims = kernel_dimensions(cm.y_operator);
        cr.blocks = jordan_type(cm.y_operator);
        rep.counts_match = rep.counts_match && cr.e == cr.expected_e && cr.e == ei.e;
        rep.aggregate = partition_union(rep.aggregate, cr.blocks);
        rep.charts.push_back(std::move(cr));
    }
    rep.matches = rep.aggregate == rep.expected;
    return rep;
}

}  // namespace dsp
