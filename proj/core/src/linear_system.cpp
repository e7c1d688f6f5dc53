#include "dsp/linear_system.hpp"

#include <random>

namespace dsp {

namespace {

Rational binom(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

}  // namespace

Matrix vandermonde_block(const Scalar& xi, int c, int r, Normalization norm) {
    if (c < 0 || c > r) throw std::invalid_argument("block height must lie in [0, r]");
    Matrix m(c, r);
    for (int u = 0; u < c; ++u)
        for (int mu = 1; mu <= r; ++mu) {
            int e = r - mu - u;
            if (e < 0) continue;
            Rational k = binom(r - mu, u);
            if (norm == Normalization::Raw) k *= factorial(u);
            m(u, mu - 1) = Scalar(k) * xi.pow(e);
        }
    return m;
}

std::vector<Scalar> rhs_block(const Scalar& xi, int c, int r, Normalization norm) {
    if (c < 0 || c > r) throw std::invalid_argument("block height must lie in [0, r]");
    std::vector<Scalar> b(c);
    for (int u = 0; u < c; ++u) {
        Rational k = binom(r, u);
        if (norm == Normalization::Raw) k *= factorial(u);
        b[u] = -(Scalar(k) * xi.pow(r - u));
    }
    return b;
}

int level_row_count(const Partition& p, int a) {
    int c = 0;
    for (int g : level_sequence(p)) c += g > a;
    return c;
}

int ConstraintSystem::c(int a, int i) const {
    auto it = blocks.find({a, i});
    return it == blocks.end() ? 0 : it->second.c();
}

int ConstraintSystem::row_count() const {
    int total = 0;
    for (auto& [k, b] : blocks) total += b.c();
    return total;
}

ConstraintSystem build_constraints(const ParabolicData& data, const MarkedPoints& pts, Normalization norm) {
    if (pts.size() != data.points()) throw std::invalid_argument("point count mismatch");
    ConstraintSystem sys;
    sys.r = data.rank();
    sys.n = data.points();
    sys.norm = norm;
    sys.distinct = distinct_part(data);
    for (int i = 0; i < sys.n; ++i) {
        int top = data.m(i).part(1);
        sys.max_order.push_back(top);
        for (int a = 0; a < top; ++a) {
            ConstraintBlock blk;
            blk.a = a;
            blk.i = i;
            for (auto& ep : sys.distinct[i]) {
                int c = level_row_count(ep.sub, a);
                blk.heights.push_back(c);
                if (c == 0) continue;
                blk.A = blk.A.append_rows(vandermonde_block(ep.xi, c, sys.r, norm));
                std::vector<Scalar> b =
                    a == 0 ? rhs_block(ep.xi, c, sys.r, norm) : std::vector<Scalar>(c, Scalar());
                blk.B.insert(blk.B.end(), b.begin(), b.end());
            }
            sys.blocks.emplace(std::make_pair(a, i), std::move(blk));
        }
    }
    return sys;
}

PivotFreeDecomposition pivot_free(const ConstraintSystem& sys) {
    PivotFreeDecomposition d;
    d.t.assign(sys.n, std::vector<int>(sys.r + 1, 0));
    for (int i = 0; i < sys.n; ++i)
        for (int a = 0; a < sys.max_order[i]; ++a) {
            int c = sys.c(a, i);
            for (int mu = 1; mu <= sys.r; ++mu) {
                if (mu >= sys.r - c + 1) {
                    d.pivot.insert({mu, a, i});
                    ++d.t[i][mu];
                } else {
                    d.free.insert({mu, a, i});
                }
            }
        }
    return d;
}

std::vector<Scalar> solve_block(const ConstraintSystem& sys, int a, int i, const std::vector<Scalar>& free_values) {
    const ConstraintBlock& blk = sys.block(a, i);
    int c = blk.c(), r = sys.r;
    if (c == 0) return {};
    if (static_cast<int>(free_values.size()) != r - c)
        throw std::invalid_argument("solve_block expects r - c free values");
    Matrix piv = blk.A.columns(r - c, c);
    Matrix fre = blk.A.columns(0, r - c);
    std::vector<Scalar> rhs = blk.B;
    if (r - c > 0) {
        std::vector<Scalar> f = fre * free_values;
        for (int k = 0; k < c; ++k) rhs[k] -= f[k];
    }
    auto sol = solve_square(piv, rhs);
    if (!sol)
        throw ConstructionError("pivot submatrix of block (a=" + std::to_string(a) + ", i=" + std::to_string(i + 1) +
                                    ") is singular; eigenvalues at a point must be distinct",
                                0, a, i);
    return *sol;
}

UniPoly hermite_lift(int mu, const MarkedPoints& pts, const std::vector<std::vector<Scalar>>& targets) {
    int n = pts.size();
    if (static_cast<int>(targets.size()) != n) throw std::invalid_argument("one target list per point");
    int bound = mu * (n - 2);
    int T = 0;
    for (auto& t : targets) T += static_cast<int>(t.size());
    if (T == 0) return UniPoly();
    if (mu >= 2 && T > bound + 1)
        throw ConstructionError("prescribed orders " + std::to_string(T) + " exceed the " +
                                    std::to_string(bound + 1) + " coefficients available at mu=" + std::to_string(mu),
                                mu);
    Matrix m(T, T);
    std::vector<Scalar> rhs;
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < static_cast<int>(targets[i].size()); ++a, ++row) {
            Scalar pw(1);
            for (int k = a; k < T; ++k) {
                m(row, k) = Scalar(binom(k, a)) * pw;
                pw *= pts[i];
            }
            rhs.push_back(targets[i][a]);
        }
    auto sol = solve_square(m, rhs);
    if (!sol) throw std::logic_error("confluent Vandermonde system is singular");
    UniPoly h(*sol);
    if (h.degree() > bound)
        throw ConstructionError("compatibility fails at mu=" + std::to_string(mu) +
                                    ": the interpolant needs degree " + std::to_string(h.degree()),
                                mu);
    return h;
}

SectionTuple construct_section(const ParabolicData& data, const MarkedPoints& pts, const SectionOptions& opt) {
    int n = data.points(), r = data.rank();
    if (n < 3) throw ConstructionError("section construction needs at least three marked points");
    ConstraintSystem sys = build_constraints(data, pts);
    PivotFreeDecomposition pf = pivot_free(sys);
    std::mt19937_64 rng(opt.seed.value_or(0));
    auto draw = [&]() { return Scalar(static_cast<long>(rng() % (2 * opt.spread + 1)) - opt.spread); };

    // vals[i][a][mu]: Taylor coefficient a of s_mu at p_i; piv holds block solutions
    std::vector<std::vector<std::vector<Scalar>>> vals(n), piv(n);
    for (int i = 0; i < n; ++i) {
        vals[i].assign(sys.max_order[i], std::vector<Scalar>(r + 1));
        piv[i].assign(sys.max_order[i], std::vector<Scalar>(r + 1));
    }
    SectionTuple s;
    for (int mu = 1; mu <= r; ++mu) {
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < sys.max_order[i]; ++a) {
                int c = sys.c(a, i);
                if (c == 0 || r - c + 1 != mu) continue;
                std::vector<Scalar> fv(vals[i][a].begin() + 1, vals[i][a].begin() + mu);
                std::vector<Scalar> p;
                try {
                    p = solve_block(sys, a, i, fv);
                } catch (ConstructionError& e) {
                    throw ConstructionError(e.what(), mu, a, i);
                }
                for (int k = 0; k < c; ++k) piv[i][a][mu + k] = p[k];
            }
        std::vector<std::vector<Scalar>> targets(n);
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < pf.t[i][mu]; ++a) targets[i].push_back(piv[i][a][mu]);
        UniPoly h = hermite_lift(mu, pts, targets);
        int room = mu * (n - 2);
        for (auto& t : targets) room -= static_cast<int>(t.size());
        if (opt.seed && room >= 0) {
            std::vector<Scalar> w(room + 1);
            for (auto& c : w) c = draw();
            UniPoly vanish(Scalar(1));
            for (int i = 0; i < n; ++i)
                for (std::size_t k = 0; k < targets[i].size(); ++k) vanish = vanish * UniPoly::linear(pts[i]);
            h = h + UniPoly(w) * vanish;
        }
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < sys.max_order[i]; ++a) {
                vals[i][a][mu] = h.taylor_coeff(pts[i], a);
                if (a < pf.t[i][mu] && vals[i][a][mu] != piv[i][a][mu])
                    throw std::logic_error("Hermite lift missed a pivot value");
            }
        s.push_back(std::move(h));
    }
    return s;
}

bool satisfies_constraints(const ConstraintSystem& sys, const MarkedPoints& pts, const SectionTuple& s) {
    if (static_cast<int>(s.size()) != sys.r) return false;
    for (auto& [key, blk] : sys.blocks) {
        auto [a, i] = key;
        if (blk.c() == 0) continue;
        std::vector<Scalar> x(sys.r);
        Rational scale = sys.norm == Normalization::Raw ? factorial(a) : Rational(1);
        for (int mu = 1; mu <= sys.r; ++mu) x[mu - 1] = s[mu - 1].taylor_coeff(pts[i], a) * Scalar(scale);
        if (blk.A * x != blk.B) return false;
    }
    return true;
}

std::optional<long> solution_dimension(const ParabolicData& data, const MarkedPoints& pts) {
    int n = data.points(), r = data.rank();
    if (n < 3) throw std::invalid_argument("solution dimension needs at least three marked points");
    ConstraintSystem sys = build_constraints(data, pts);
    std::vector<int> off(r + 2, 0);
    for (int mu = 1; mu <= r; ++mu) off[mu + 1] = off[mu] + mu * (n - 2) + 1;
    int N = off[r + 1];
    Matrix M(sys.row_count(), N);
    std::vector<Scalar> rhs;
    int row = 0;
    for (auto& [key, blk] : sys.blocks) {
        auto [a, i] = key;
        for (int u = 0; u < blk.c(); ++u, ++row) {
            for (int mu = 1; mu <= r; ++mu) {
                const Scalar& w = blk.A(u, mu - 1);
                if (w.is_zero()) continue;
                Scalar pw(1);  // Taylor coefficient a of x^k at p_i
                for (int k = a; k <= mu * (n - 2); ++k) {
                    M(row, off[mu] + k) += w * Scalar(binom(k, a)) * pw;
                    pw *= pts[i];
                }
            }
            rhs.push_back(blk.B[u]);
        }
    }
    AffineSolution sol = solve_affine(M, rhs);
    if (!sol.consistent) return std::nullopt;
    return sol.dimension;
}

}  // namespace dsp
