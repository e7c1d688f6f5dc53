#include "dsp/lattice.hpp"

#include "dsp/matrix.hpp"

#include <stdexcept>

namespace dsp {

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    DivisorClass c = *this;
    c.a += o.a;
    c.b += o.b;
    for (auto& [k, v] : o.exc) c.exc[k] += v;
    return c;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + o * -1; }

DivisorClass DivisorClass::operator*(long k) const {
    DivisorClass c = *this;
    c.a *= k;
    c.b *= k;
    for (auto& [key, v] : c.exc) v *= k;
    return c;
}

std::string DivisorClass::str() const {
    std::string s = std::to_string(a) + "*C0 + " + std::to_string(b) + "*F";
    for (auto& [k, v] : exc)
        if (v != 0) s += " + " + std::to_string(v) + "*X" + std::to_string(k.first) + "," + std::to_string(k.second);
    return s;
}

DivisorClass zero_class(const LatticeShape& s) {
    DivisorClass c;
    for (int i = 1; i <= s.points(); ++i)
        for (int j = 1; j <= s.lengths[i - 1]; ++j) c.exc[{i, j}] = 0;
    return c;
}

DivisorClass section_class(const LatticeShape& s) {
    DivisorClass c = zero_class(s);
    c.a = 1;
    return c;
}

DivisorClass fiber_class(const LatticeShape& s) {
    DivisorClass c = zero_class(s);
    c.b = 1;
    return c;
}

DivisorClass exceptional_class(const LatticeShape& s, int i, int j) {
    DivisorClass c = zero_class(s);
    if (!c.exc.count({i, j})) throw std::out_of_range("no exceptional curve with that index");
    c.exc[{i, j}] = 1;
    return c;
}

DivisorClass fiber_strict(const LatticeShape& s, int i) {
    DivisorClass c = fiber_class(s);
    for (int j = 1; j <= s.lengths.at(i - 1); ++j) c.exc[{i, j}] = -1;
    return c;
}

DivisorClass infinity_section(const LatticeShape& s) {
    return section_class(s) - fiber_class(s) * s.base_degree();
}

long intersect(const DivisorClass& x, const DivisorClass& y, const LatticeShape& s) {
    DivisorClass z = zero_class(s);
    if (x.exc.size() != z.exc.size() || y.exc.size() != z.exc.size())
        throw std::invalid_argument("divisor classes over different lattices");
    long v = x.a * y.a * s.base_degree() + x.a * y.b + x.b * y.a;
    for (auto& [k, c] : x.exc) {
        auto it = y.exc.find(k);
        if (it == y.exc.end()) throw std::invalid_argument("divisor classes over different lattices");
        v -= c * it->second;
    }
    return v;
}

DivisorClass solve_curve_class(const std::vector<Partition>& m, int genus) {
    if (m.empty()) throw std::invalid_argument("no points");
    int r = m[0].size();
    LatticeShape s{genus, {}};
    for (auto& p : m) {
        if (p.size() != r) throw std::invalid_argument("unequal ranks across points");
        s.lengths.push_back(p.length());
    }
    // unknown order: a, b, then exceptional coefficients in map order
    DivisorClass z = zero_class(s);
    std::vector<std::pair<int, int>> keys;
    for (auto& [k, v] : z.exc) keys.push_back(k);
    int nvar = 2 + static_cast<int>(keys.size());
    auto coords = [&](const DivisorClass& c) {
        std::vector<Scalar> row(nvar);
        // linear functional X -> X.c expressed on the basis
        DivisorClass e = zero_class(s);
        e.a = 1;
        row[0] = Scalar(intersect(e, c, s));
        e.a = 0;
        e.b = 1;
        row[1] = Scalar(intersect(e, c, s));
        e.b = 0;
        for (std::size_t k = 0; k < keys.size(); ++k) {
            DivisorClass x = zero_class(s);
            x.exc[keys[k]] = 1;
            row[2 + k] = Scalar(intersect(x, c, s));
        }
        return row;
    };
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
    rows.push_back(coords(infinity_section(s)));
    rhs.emplace_back(0);
    for (int i = 1; i <= s.points(); ++i) {
        rows.push_back(coords(fiber_strict(s, i)));
        rhs.emplace_back(0);
    }
    for (auto& k : keys) {
        rows.push_back(coords(exceptional_class(s, k.first, k.second)));
        rhs.emplace_back(m[k.first - 1].part(k.second));
    }
    AffineSolution sol = solve_affine(Matrix::from_rows(rows), rhs);
    if (!sol.consistent || sol.dimension != 0) throw std::logic_error("curve class system is not uniquely solvable");
    auto to_long = [](const Scalar& v) {
        if (!v.is_real() || v.re().get_den() != 1) throw std::logic_error("non-integral curve class");
        return v.re().get_num().get_si();
    };
    DivisorClass c = z;
    c.a = to_long(sol.particular[0]);
    c.b = to_long(sol.particular[1]);
    for (std::size_t k = 0; k < keys.size(); ++k) c.exc[keys[k]] = to_long(sol.particular[2 + k]);
    return c;
}

DivisorClass canonical_class(const LatticeShape& s) {
    DivisorClass k1 = infinity_section(s) * -2;
    for (int i = 1; i <= s.points(); ++i) k1 = k1 - fiber_strict(s, i);
    DivisorClass k2 = infinity_section(s) * -2 - fiber_class(s) * s.points();
    for (auto& [key, v] : k2.exc) v = 1;
    if (!(k1 == k2)) throw std::logic_error("canonical class expressions disagree");
    return k1;
}

long expected_dimension(int g, int n, int r, const std::vector<Partition>& m) {
    long sq = 0;
    for (auto& p : m)
        for (int x : p.parts()) sq += static_cast<long>(x) * x;
    long num = static_cast<long>(n) * r * r - sq;
    if (num % 2 != 0) throw std::logic_error("odd numerator in the dimension formula");
    return 1 + static_cast<long>(r) * r * (g - 1) + num / 2;
}

long strongly_parabolic_dimension(int g, int n, int r, const std::vector<Partition>& p) {
    long total = 0;
    for (auto& part : p)
        for (int gmu : level_sequence(part)) total += gmu;
    return 1 + static_cast<long>(r) * r * (g - 1) + static_cast<long>(n) * r * (r + 1) / 2 - total;
}

}  // namespace dsp
