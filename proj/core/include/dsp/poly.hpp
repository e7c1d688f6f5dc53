#pragma once

#include "dsp/scalar.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dsp {

// Dense univariate polynomial, lowest degree first, trailing zeros trimmed.
class UniPoly {
public:
    static constexpr int kZeroDegree = -1;

    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs);
    UniPoly(const Scalar& c) : UniPoly(std::vector<Scalar>{c}) {}

    static UniPoly monomial(const Scalar& c, int degree);
    static UniPoly x() { return monomial(Scalar(1), 1); }
    // (x - root)
    static UniPoly linear(const Scalar& root);

    const std::vector<Scalar>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(int k) const;
    Scalar leading() const;

    Scalar eval(const Scalar& x0) const;
    UniPoly derivative() const;
    // Coefficient of (x - p)^a in the expansion at p.
    Scalar taylor_coeff(const Scalar& p, int a) const;
    // p(x + shift)
    UniPoly shift(const Scalar& s) const;
    UniPoly monic() const;
    // Multiplicity of x = p as a root; kInfinity for the zero polynomial.
    int order_at(const Scalar& p) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const Scalar& s);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str(const char* var = "x") const;

private:
    void trim();
    std::vector<Scalar> c_;
};

constexpr int kInfinity = 1 << 30;

// Euclidean division; throws on zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
// Monic gcd (zero when both are zero).
UniPoly gcd(UniPoly a, UniPoly b);
struct XGcd {
    UniPoly g, s, t;  // s*a + t*b = g, g monic
};
XGcd xgcd(const UniPoly& a, const UniPoly& b);
// Squarefree decomposition: result[k] is the product of the monic irreducible
// factors of multiplicity exactly k (result[0] unused).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& f);

enum class Var { X, Y };

// Sparse bivariate polynomial; keys are (deg_x, deg_y). The variable names are
// positional: after a chart substitution the two slots hold (u, v).
class BiPoly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Scalar>;

    BiPoly() = default;
    BiPoly(const Scalar& c);
    explicit BiPoly(Terms terms);

    static BiPoly monomial(const Scalar& c, int dx, int dy);
    static BiPoly x() { return monomial(Scalar(1), 1, 0); }
    static BiPoly y() { return monomial(Scalar(1), 0, 1); }
    static BiPoly from_x(const UniPoly& p);
    static BiPoly from_y(const UniPoly& p);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Scalar coeff(int dx, int dy) const;
    int degree(Var v) const;
    int total_degree() const;
    int min_total_degree() const;

    // Coefficient of y^k as a polynomial in x (resp. x^k as a polynomial in y).
    UniPoly coeff_in_y(int k) const;
    UniPoly coeff_in_x(int k) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const Scalar& s);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }
    BiPoly pow(int e) const;

    std::string str(const char* xname = "x", const char* yname = "y") const;

private:
    void add_term(const Key& k, const Scalar& c);
    Terms t_;
};

BiPoly poly_derivative(const BiPoly& p, Var var, int order);
Scalar poly_eval(const BiPoly& p, const Scalar& x0, const Scalar& y0);
// p(f(u,v), g(u,v))
BiPoly poly_substitute(const BiPoly& p, const BiPoly& f, const BiPoly& g);
// p(x + x0, y + y0)
BiPoly poly_translate(const BiPoly& p, const Scalar& x0, const Scalar& y0);

struct MonomialSplit {
    int exponent = 0;
    BiPoly cofactor;
};
MonomialSplit extract_monomial_cofactor(const BiPoly& p, Var var);

}  // namespace dsp
