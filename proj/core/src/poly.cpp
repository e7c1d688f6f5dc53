#include "dsp/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dsp {

namespace {

Rational binomial(long n, long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

std::string term_str(const Scalar& c, const std::string& mono) {
    if (mono.empty()) return c.str();
    if (c.is_one()) return mono;
    if (c == Scalar(-1)) return "-" + mono;
    std::string cs = c.str();
    if (!c.is_real()) cs = "(" + cs + ")";
    return cs + "*" + mono;
}

std::string power(const char* var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

std::string join_terms(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) {
        const std::string& p = parts[k];
        if (!p.empty() && p[0] == '-') out += " - " + p.substr(1);
        else out += " + " + p;
    }
    return out;
}

}  // namespace

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monomial(const Scalar& c, int degree) {
    std::vector<Scalar> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear(const Scalar& root) { return UniPoly({-root, Scalar(1)}); }

Scalar UniPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return Scalar();
    return c_[k];
}

Scalar UniPoly::leading() const { return c_.empty() ? Scalar() : c_.back(); }

Scalar UniPoly::eval(const Scalar& x0) const {
    Scalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Scalar(static_cast<long>(k));
    return UniPoly(std::move(d));
}

Scalar UniPoly::taylor_coeff(const Scalar& p, int a) const {
    Scalar acc;
    Scalar pw(1);
    // sum_k C(k,a) c_k p^(k-a), accumulated from k = a upward
    for (int k = a; k <= degree(); ++k) {
        if (!c_[k].is_zero()) acc += c_[k] * Scalar(binomial(k, a)) * pw;
        pw *= p;
    }
    return acc;
}

UniPoly UniPoly::shift(const Scalar& s) const {
    // Horner in the shifted variable
    UniPoly acc;
    UniPoly lin({s, Scalar(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UniPoly(*it);
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    Scalar inv = leading().inverse();
    return *this * inv;
}

int UniPoly::order_at(const Scalar& p) const {
    if (is_zero()) return kInfinity;
    UniPoly q = p.is_zero() ? *this : shift(p);
    int k = 0;
    while (q.c_[k].is_zero()) ++k;
    return k;
}

UniPoly UniPoly::operator-() const {
    std::vector<Scalar> v(c_);
    for (auto& c : v) c = -c;
    return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const Scalar& s) {
    std::vector<Scalar> v(a.c_);
    for (auto& c : v) c *= s;
    return UniPoly(std::move(v));
}

std::string UniPoly::str(const char* var) const {
    std::vector<std::string> parts;
    for (int k = degree(); k >= 0; --k)
        if (!c_[k].is_zero()) parts.push_back(term_str(c_[k], power(var, k)));
    return join_terms(parts);
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Scalar> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Scalar> quo(a.degree() - db + 1);
    Scalar inv = b.leading().inverse();
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k].is_zero()) continue;
        Scalar q = rem[k] * inv;
        quo[k - db] = q;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs()[j];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

XGcd xgcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b, s0(Scalar(1)), s1, t0, t1(Scalar(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Scalar inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& f) {
    // Yun's algorithm in characteristic zero
    std::vector<UniPoly> out(1);
    if (f.degree() < 1) return out;
    UniPoly fm = f.monic();
    UniPoly d = fm.derivative();
    UniPoly g = gcd(fm, d);
    UniPoly b = divmod(fm, g).first;
    UniPoly c = divmod(d, g).first;
    UniPoly dd = c - b.derivative();
    while (b.degree() > 0) {
        UniPoly a = gcd(b, dd);
        out.push_back(a);
        b = divmod(b, a).first;
        c = divmod(dd, a).first;
        dd = c - b.derivative();
    }
    return out;
}

BiPoly::BiPoly(const Scalar& c) {
    if (!c.is_zero()) t_.emplace(Key{0, 0}, c);
}

BiPoly::BiPoly(Terms terms) {
    for (auto& [k, c] : terms)
        if (!c.is_zero()) t_.emplace(k, c);
}

BiPoly BiPoly::monomial(const Scalar& c, int dx, int dy) {
    BiPoly p;
    p.add_term({dx, dy}, c);
    return p;
}

BiPoly BiPoly::from_x(const UniPoly& p) {
    BiPoly q;
    for (int k = 0; k <= p.degree(); ++k) q.add_term({k, 0}, p.coeffs()[k]);
    return q;
}

BiPoly BiPoly::from_y(const UniPoly& p) {
    BiPoly q;
    for (int k = 0; k <= p.degree(); ++k) q.add_term({0, k}, p.coeffs()[k]);
    return q;
}

void BiPoly::add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

Scalar BiPoly::coeff(int dx, int dy) const {
    auto it = t_.find({dx, dy});
    return it == t_.end() ? Scalar() : it->second;
}

int BiPoly::degree(Var v) const {
    int d = -1;
    for (auto& [k, c] : t_) d = std::max(d, v == Var::X ? k.first : k.second);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (auto& [k, c] : t_) d = std::max(d, k.first + k.second);
    return d;
}

int BiPoly::min_total_degree() const {
    if (t_.empty()) return kInfinity;
    int d = kInfinity;
    for (auto& [k, c] : t_) d = std::min(d, k.first + k.second);
    return d;
}

UniPoly BiPoly::coeff_in_y(int k) const {
    std::vector<Scalar> v(std::max(degree(Var::X) + 1, 0));
    for (auto& [key, c] : t_)
        if (key.second == k) v[key.first] = c;
    return UniPoly(std::move(v));
}

UniPoly BiPoly::coeff_in_x(int k) const {
    std::vector<Scalar> v(std::max(degree(Var::Y) + 1, 0));
    for (auto& [key, c] : t_)
        if (key.first == k) v[key.second] = c;
    return UniPoly(std::move(v));
}

BiPoly BiPoly::operator-() const {
    BiPoly q(*this);
    for (auto& [k, c] : q.t_) c = -c;
    return q;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (auto& [k, c] : o.t_) add_term(k, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly q;
    for (auto& [ka, ca] : a.t_)
        for (auto& [kb, cb] : b.t_) q.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return q;
}

BiPoly operator*(const BiPoly& a, const Scalar& s) {
    if (s.is_zero()) return BiPoly();
    BiPoly q(a);
    for (auto& [k, c] : q.t_) c *= s;
    return q;
}

BiPoly BiPoly::pow(int e) const {
    BiPoly result(Scalar(1)), base(*this);
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string BiPoly::str(const char* xname, const char* yname) const {
    std::vector<std::string> parts;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        std::string mono = power(xname, it->first.first);
        std::string ym = power(yname, it->first.second);
        if (!mono.empty() && !ym.empty()) mono += "*";
        mono += ym;
        parts.push_back(term_str(it->second, mono));
    }
    return join_terms(parts);
}

BiPoly poly_derivative(const BiPoly& p, Var var, int order) {
    if (order < 0) throw std::invalid_argument("negative derivative order");
    BiPoly::Terms out;
    for (auto& [k, c] : p.terms()) {
        int e = var == Var::X ? k.first : k.second;
        if (e < order) continue;
        mpz_class f = 1;
        for (int j = 0; j < order; ++j) f *= e - j;
        BiPoly::Key nk = var == Var::X ? BiPoly::Key{k.first - order, k.second}
                                       : BiPoly::Key{k.first, k.second - order};
        out.emplace(nk, c * Scalar(Rational(f)));
    }
    return BiPoly(std::move(out));
}

Scalar poly_eval(const BiPoly& p, const Scalar& x0, const Scalar& y0) {
    Scalar acc;
    std::map<int, Scalar> xp, yp;
    auto pw = [](std::map<int, Scalar>& cache, const Scalar& b, int e) -> const Scalar& {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        return cache.emplace(e, b.pow(e)).first->second;
    };
    for (auto& [k, c] : p.terms()) acc += c * pw(xp, x0, k.first) * pw(yp, y0, k.second);
    return acc;
}

BiPoly poly_substitute(const BiPoly& p, const BiPoly& f, const BiPoly& g) {
    std::vector<BiPoly> fp{BiPoly(Scalar(1))}, gp{BiPoly(Scalar(1))};
    int dx = std::max(p.degree(Var::X), 0), dy = std::max(p.degree(Var::Y), 0);
    for (int k = 1; k <= dx; ++k) fp.push_back(fp.back() * f);
    for (int k = 1; k <= dy; ++k) gp.push_back(gp.back() * g);
    BiPoly out;
    for (auto& [k, c] : p.terms()) out += fp[k.first] * gp[k.second] * c;
    return out;
}

BiPoly poly_translate(const BiPoly& p, const Scalar& x0, const Scalar& y0) {
    BiPoly f = BiPoly::x() + BiPoly(x0);
    BiPoly g = BiPoly::y() + BiPoly(y0);
    return poly_substitute(p, f, g);
}

MonomialSplit extract_monomial_cofactor(const BiPoly& p, Var var) {
    if (p.is_zero()) throw std::invalid_argument("monomial cofactor of the zero polynomial");
    int e = kInfinity;
    for (auto& [k, c] : p.terms()) e = std::min(e, var == Var::X ? k.first : k.second);
    BiPoly::Terms out;
    for (auto& [k, c] : p.terms())
        out.emplace(var == Var::X ? BiPoly::Key{k.first - e, k.second} : BiPoly::Key{k.first, k.second - e}, c);
    return {e, BiPoly(std::move(out))};
}

}  // namespace dsp
