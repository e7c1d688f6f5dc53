#include "dsp/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace dsp {

namespace {

using u64 = std::uint64_t;
using PolyP = std::vector<u64>;  // coefficients mod p, lowest first

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Primes congruent to 1 mod 4, so that i has a square root mod p.
std::vector<u64> gaussian_split_primes(std::size_t count) {
    std::vector<u64> out;
    for (u64 p = 1000033; out.size() < count; p += 4)
        if (p % 4 == 1 && is_prime(p)) out.push_back(p);
    return out;
}

u64 sqrt_minus_one(u64 p) {
    for (u64 g = 2;; ++g)
        if (powmod(g, (p - 1) / 2, p) == p - 1) return powmod(g, (p - 1) / 4, p);
}

void trim(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const PolyP& f) { return static_cast<int>(f.size()) - 1; }

PolyP sub(PolyP a, const PolyP& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t k = 0; k < b.size(); ++k) a[k] = (a[k] + p - b[k]) % p;
    trim(a);
    return a;
}

PolyP mul(const PolyP& a, const PolyP& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolyP c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
    trim(c);
    return c;
}

std::pair<PolyP, PolyP> divmod_p(PolyP a, const PolyP& b, u64 p) {
    if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
    if (a.size() < b.size()) return {{}, a};
    PolyP q(a.size() - b.size() + 1, 0);
    u64 inv = invmod(b.back(), p);
    for (int k = deg(a); k >= deg(b); --k) {
        u64 c = mulmod(a[k], inv, p);
        q[k - deg(b)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= deg(b); ++j) a[k - deg(b) + j] = (a[k - deg(b) + j] + p - mulmod(c, b[j], p)) % p;
    }
    trim(a);
    trim(q);
    return {q, a};
}

PolyP monic_p(PolyP f, u64 p) {
    if (f.empty()) return f;
    u64 inv = invmod(f.back(), p);
    for (auto& c : f) c = mulmod(c, inv, p);
    return f;
}

PolyP gcd_p(PolyP a, PolyP b, u64 p) {
    while (!b.empty()) {
        PolyP r = divmod_p(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic_p(a, p);
}

PolyP derivative_p(const PolyP& f, u64 p) {
    PolyP d;
    for (std::size_t k = 1; k < f.size(); ++k) d.push_back(mulmod(f[k], k % p, p));
    trim(d);
    return d;
}

PolyP powmod_poly(PolyP base, u64 e, const PolyP& f, u64 p) {
    PolyP r{1};
    base = divmod_p(base, f, p).second;
    while (e) {
        if (e & 1) r = divmod_p(mul(r, base, p), f, p).second;
        base = divmod_p(mul(base, base, p), f, p).second;
        e >>= 1;
    }
    return r;
}

// Degrees of the irreducible factors of a squarefree monic f.
std::vector<int> factor_degrees(PolyP f, u64 p) {
    std::vector<int> out;
    PolyP h{0, 1};
    for (int d = 1; deg(f) >= 2 * d; ++d) {
        h = powmod_poly(h, p, f, p);
        PolyP g = gcd_p(f, sub(h, PolyP{0, 1}, p), p);
        if (deg(g) > 0) {
            for (int k = 0; k < deg(g) / d; ++k) out.push_back(d);
            f = divmod_p(f, g, p).first;
            h = divmod_p(h, f, p).second;
        }
    }
    if (deg(f) > 0) out.push_back(deg(f));
    return out;
}

// Distinct roots of a squarefree f mod p.
std::vector<u64> roots_p(const PolyP& f, u64 p, std::mt19937_64& rng) {
    PolyP g = gcd_p(f, sub(powmod_poly(PolyP{0, 1}, p, f, p), PolyP{0, 1}, p), p);
    std::vector<u64> out;
    std::vector<PolyP> stack{g};
    while (!stack.empty()) {
        PolyP h = stack.back();
        stack.pop_back();
        if (deg(h) <= 0) continue;
        if (deg(h) == 1) {
            out.push_back((p - mulmod(h[0], invmod(h[1], p), p)) % p);
            continue;
        }
        for (;;) {
            u64 delta = rng() % p;
            PolyP w = powmod_poly(PolyP{delta, 1}, (p - 1) / 2, h, p);
            PolyP s = gcd_p(h, sub(w, PolyP{1}, p), p);
            if (deg(s) > 0 && deg(s) < deg(h)) {
                stack.push_back(s);
                stack.push_back(divmod_p(h, s, p).first);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Image of q under i -> iota in Z/M; nullopt when a denominator is not invertible.
std::optional<mpz_class> map_rational(const Rational& q, const mpz_class& M) {
    mpz_class den = q.get_den(), inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), M.get_mpz_t()) == 0) return std::nullopt;
    mpz_class v = q.get_num() * inv;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), M.get_mpz_t());
    return v;
}

std::optional<mpz_class> map_scalar(const Scalar& s, const mpz_class& iota, const mpz_class& M) {
    auto a = map_rational(s.re(), M);
    auto b = map_rational(s.im(), M);
    if (!a || !b) return std::nullopt;
    mpz_class v = *a + *b * iota;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), M.get_mpz_t());
    return v;
}

std::optional<PolyP> map_poly(const UniPoly& f, u64 iota, u64 p) {
    PolyP out;
    mpz_class M(static_cast<unsigned long>(p)), io(static_cast<unsigned long>(iota));
    for (auto& c : f.coeffs()) {
        auto v = map_scalar(c, io, M);
        if (!v) return std::nullopt;
        out.push_back(v->get_ui());
    }
    trim(out);
    return out;
}

std::optional<Rational> reconstruct(const mpz_class& a, const mpz_class& M) {
    mpz_class bound;
    mpz_class half = M / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = M, r1 = a, t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), t1.get_mpz_t(), M.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rational q(r1, t1);
    q.canonicalize();
    return q;
}

mpz_class eval_mod(const std::vector<mpz_class>& c, const mpz_class& z, const mpz_class& M) {
    mpz_class acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z + *it;
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), M.get_mpz_t());
    }
    return acc;
}

std::optional<std::vector<mpz_class>> map_poly_big(const UniPoly& f, const mpz_class& iota, const mpz_class& M) {
    std::vector<mpz_class> out;
    for (auto& c : f.coeffs()) {
        auto v = map_scalar(c, iota, M);
        if (!v) return std::nullopt;
        out.push_back(*v);
    }
    return out;
}

std::vector<Rational> sample_points(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::set<Rational> seen;
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        long num = static_cast<long>(rng() % 101) - 50;
        long den = static_cast<long>(rng() % 7) + 1;
        Rational q(num, den);
        q.canonicalize();
        if (seen.insert(q).second) out.push_back(q);
    }
    return out;
}

UniPoly specialize_x(const BiPoly& q, const Scalar& x0) {
    int r = q.degree(Var::Y);
    std::vector<Scalar> c(r + 1);
    for (int k = 0; k <= r; ++k) c[k] = q.coeff_in_y(k).eval(x0);
    return UniPoly(std::move(c));
}

bool squarefree(const UniPoly& f) { return gcd(f, f.derivative()).degree() == 0; }

// Power-series root through (x0, y0), truncated at degree d and tested as an exact factor.
std::optional<UniPoly> linear_factor(const BiPoly& q, const Scalar& x0, const Scalar& y0, int d) {
    BiPoly qt = poly_translate(q, x0, Scalar(0));
    Scalar qy = poly_eval(poly_derivative(q, Var::Y, 1), x0, y0);
    if (qy.is_zero()) return std::nullopt;
    int r = q.degree(Var::Y);
    std::vector<UniPoly> coef;
    for (int k = 0; k <= r; ++k) coef.push_back(qt.coeff_in_y(k));
    auto trunc = [](const UniPoly& f, int n) {
        std::vector<Scalar> c(f.coeffs().begin(), f.coeffs().begin() + std::min(n + 1, f.degree() + 1));
        return UniPoly(std::move(c));
    };
    UniPoly y(y0);
    for (int k = 1; k <= d; ++k) {
        UniPoly acc;
        for (int e = r; e >= 0; --e) acc = trunc(acc * y + coef[e], k);
        Scalar res = acc.coeff(k);
        if (!res.is_zero()) y = y + UniPoly::monomial(-res / qy, k);
    }
    UniPoly h = y.shift(-x0);
    BiPoly rest = poly_substitute(q, BiPoly::x(), BiPoly::from_x(h));
    if (!rest.is_zero()) return std::nullopt;
    return h;
}

bool smooth_point(const BiPoly& q, const Scalar& x0, const Scalar& y0) {
    if (!poly_eval(q, x0, y0).is_zero()) return false;
    return !poly_eval(poly_derivative(q, Var::X, 1), x0, y0).is_zero() ||
           !poly_eval(poly_derivative(q, Var::Y, 1), x0, y0).is_zero();
}

bool monic_in_y(const BiPoly& q) {
    int r = q.degree(Var::Y);
    return r >= 1 && q.coeff_in_y(r) == UniPoly(Scalar(1));
}

IntegralityReport cyclic_certificate(const BiPoly& q) {
    IntegralityReport rep;
    rep.mode = IntegralityMode::Cyclic;
    int r = q.degree(Var::Y);
    for (int k = 1; k < r; ++k)
        if (!q.coeff_in_y(k).is_zero()) {
            rep.reason = "cyclic mode needs s_1 = ... = s_{r-1} = 0";
            return rep;
        }
    if (r == 1) {
        rep.verdict = Integrality::CertifiedIntegral;
        rep.reason = "degree one in y";
        return rep;
    }
    UniPoly g = -q.coeff_in_y(0);
    if (g.is_zero()) {
        rep.verdict = Integrality::CertifiedNonintegral;
        rep.reason = "y^r is non-reduced";
        return rep;
    }
    std::vector<UniPoly> sq = squarefree_decomposition(g);
    long common = 0;
    for (std::size_t k = 1; k < sq.size(); ++k)
        if (sq[k].degree() > 0) common = std::gcd(common, static_cast<long>(k));
    if (common == 0) {
        rep.verdict = Integrality::CertifiedNonintegral;
        rep.reason = "s_r is constant, the curve splits into r horizontal sections";
        return rep;
    }
    long shared = std::gcd(common, static_cast<long>(r));
    if (shared == 1) {
        rep.verdict = Integrality::CertifiedIntegral;
        rep.reason = "root multiplicities of s_r have gcd " + std::to_string(common) + ", coprime to r";
    } else {
        rep.verdict = Integrality::CertifiedNonintegral;
        rep.reason = "s_r is a " + std::to_string(shared) + "-th power up to a constant";
    }
    return rep;
}

IntegralityReport probabilistic_certificate(const BiPoly& q, const IntegralityOptions& opt) {
    IntegralityReport rep;
    rep.mode = IntegralityMode::Probabilistic;
    int r = q.degree(Var::Y);
    int dx = std::max(q.degree(Var::X), 0);
    if (r == 1) {
        rep.verdict = Integrality::CertifiedIntegral;
        rep.reason = "degree one in y";
        return rep;
    }

    // reducedness: one squarefree fibre suffices; more than deg(disc) bad fibres prove a square factor
    int bound = (2 * r - 1) * dx;
    bool reduced = false;
    for (int k = 0; k <= bound && !reduced; ++k) {
        long v = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
        reduced = squarefree(specialize_x(q, Scalar(v)));
    }
    if (!reduced) {
        rep.verdict = Integrality::CertifiedNonintegral;
        rep.reason = "discriminant vanishes identically: repeated factor";
        return rep;
    }

    std::vector<Rational> xs = sample_points(opt.specializations, opt.seed);
    std::vector<u64> primes = gaussian_split_primes(2);
    std::set<int> alive;
    for (int d = 1; d < r; ++d) alive.insert(d);
    int patterns = 0;
    for (auto& x0 : xs) {
        UniPoly f = specialize_x(q, Scalar(x0));
        for (u64 p : primes) {
            u64 iota = sqrt_minus_one(p);
            auto fp = map_poly(f, iota, p);
            if (!fp || deg(*fp) != r) continue;
            if (deg(gcd_p(*fp, derivative_p(*fp, p), p)) != 0) continue;
            std::vector<int> degs = factor_degrees(monic_p(*fp, p), p);
            std::set<int> sums{0};
            for (int dd : degs) {
                std::set<int> next(sums);
                for (int s : sums) next.insert(s + dd);
                sums = std::move(next);
            }
            std::set<int> keep;
            for (int d : alive)
                if (sums.count(d)) keep.insert(d);
            alive = std::move(keep);
            ++patterns;
        }
    }
    rep.surviving_degrees.assign(alive.begin(), alive.end());

    auto search_roots = [&](auto&& on_point) {
        for (auto& x0 : xs) {
            for (auto& y0 : gaussian_rational_roots(specialize_x(q, Scalar(x0))))
                if (on_point(Scalar(x0), y0)) return true;
        }
        return false;
    };

    if (alive.empty() && patterns > 0) {
        for (auto& [hx, hy] : opt.hints)
            if (smooth_point(q, hx, hy)) {
                rep.smooth_point = std::make_pair(hx, hy);
                break;
            }
        if (!rep.smooth_point)
            search_roots([&](const Scalar& x0, const Scalar& y0) {
                if (!smooth_point(q, x0, y0)) return false;
                rep.smooth_point = std::make_pair(x0, y0);
                return true;
            });
        if (rep.smooth_point) {
            rep.verdict = Integrality::CertifiedIntegral;
            rep.reason = "irreducible over Q(i) by " + std::to_string(patterns) +
                         " factorization patterns, with a smooth Q(i)-point";
        } else {
            rep.reason = "irreducible over Q(i) but no smooth Q(i)-point found";
        }
        return rep;
    }

    if (alive.count(1) || alive.count(r - 1)) {
        bool found = search_roots([&](const Scalar& x0, const Scalar& y0) {
            auto h = linear_factor(q, x0, y0, dx);
            if (!h) return false;
            rep.factor = BiPoly::y() - BiPoly::from_x(*h);
            return true;
        });
        if (found) {
            rep.verdict = Integrality::CertifiedNonintegral;
            rep.reason = "explicit factor y - h(x)";
            return rep;
        }
    }
    rep.reason = "factorization patterns leave possible factor degrees";
    return rep;
}

}  // namespace

std::vector<Scalar> gaussian_rational_roots(const UniPoly& f0) {
    std::vector<Scalar> out;
    if (f0.degree() < 1) return out;
    UniPoly f = divmod(f0, gcd(f0, f0.derivative())).first.monic();
    if (f.degree() == 1) return {-f.coeff(0)};
    std::mt19937_64 rng(12345);
    for (u64 p : gaussian_split_primes(6)) {
        u64 iota0 = sqrt_minus_one(p);
        auto f1 = map_poly(f, iota0, p);
        auto f2 = map_poly(f, p - iota0, p);
        if (!f1 || !f2 || deg(*f1) != f.degree() || deg(*f2) != f.degree()) continue;
        if (deg(gcd_p(*f1, derivative_p(*f1, p), p)) != 0) continue;
        std::vector<u64> r1 = roots_p(*f1, p, rng), r2 = roots_p(*f2, p, rng);
        if (r1.empty() || r2.empty()) return out;
        UniPoly df = f.derivative();
        mpz_class M(static_cast<unsigned long>(p)), iota(static_cast<unsigned long>(iota0));
        std::vector<mpz_class> z1, z2;
        for (u64 z : r1) z1.emplace_back(static_cast<unsigned long>(z));
        for (u64 z : r2) z2.emplace_back(static_cast<unsigned long>(z));
        std::set<Scalar> found;
        for (int step = 0; step < 9; ++step) {
            mpz_class M2 = M * M;
            // lift sqrt(-1) and each root by one Newton step
            mpz_class num = iota * iota + 1, den = 2 * iota, inv;
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), M2.get_mpz_t());
            iota = iota - num * inv;
            mpz_mod(iota.get_mpz_t(), iota.get_mpz_t(), M2.get_mpz_t());
            mpz_class miota = M2 - iota;
            auto lift = [&](std::vector<mpz_class>& zs, const mpz_class& io) {
                auto fc = map_poly_big(f, io, M2);
                auto dc = map_poly_big(df, io, M2);
                for (auto& z : zs) {
                    mpz_class fz = eval_mod(*fc, z, M2), dz = eval_mod(*dc, z, M2), di;
                    mpz_invert(di.get_mpz_t(), dz.get_mpz_t(), M2.get_mpz_t());
                    z = z - fz * di;
                    mpz_mod(z.get_mpz_t(), z.get_mpz_t(), M2.get_mpz_t());
                }
            };
            lift(z1, iota);
            lift(z2, miota);
            M = M2;
            if (step < 2) continue;
            mpz_class two_inv, two_iota_inv, t2 = 2, ti = 2 * iota;
            mpz_invert(two_inv.get_mpz_t(), t2.get_mpz_t(), M.get_mpz_t());
            mpz_invert(two_iota_inv.get_mpz_t(), ti.get_mpz_t(), M.get_mpz_t());
            for (auto& a1 : z1)
                for (auto& a2 : z2) {
                    mpz_class re = (a1 + a2) * two_inv, im = (a1 - a2) * two_iota_inv;
                    mpz_mod(re.get_mpz_t(), re.get_mpz_t(), M.get_mpz_t());
                    mpz_mod(im.get_mpz_t(), im.get_mpz_t(), M.get_mpz_t());
                    auto qre = reconstruct(re, M), qim = reconstruct(im, M);
                    if (!qre || !qim) continue;
                    Scalar cand(*qre, *qim);
                    if (!found.count(cand) && f.eval(cand).is_zero()) found.insert(cand);
                }
            if (static_cast<int>(found.size()) == static_cast<int>(std::min(r1.size(), r2.size()))) break;
        }
        out.assign(found.begin(), found.end());
        return out;
    }
    return out;
}

IntegralityReport integrality_certificate(const BiPoly& q, IntegralityMode mode, const IntegralityOptions& opt) {
    if (!monic_in_y(q)) throw std::invalid_argument("integrality certificate needs a polynomial monic in y");
    if (mode == IntegralityMode::Cyclic) return cyclic_certificate(q);
    if (mode == IntegralityMode::Probabilistic) return probabilistic_certificate(q, opt);
    IntegralityReport cyc = cyclic_certificate(q);
    if (cyc.verdict != Integrality::Inconclusive) return cyc;
    return probabilistic_certificate(q, opt);
}

}  // namespace dsp
