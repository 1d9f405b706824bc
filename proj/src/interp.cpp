#include "hermdec/interp.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermdec {

ConfluentSystem build_confluent_system(const Field& F, int q,
                                       const std::vector<PointMultiplicity>& pts) {
    int N = 0;
    for (const auto& pm : pts) {
        if (pm.mu < 1) throw std::runtime_error("multiplicity must be >= 1");
        N += pm.mu;
    }
    ConfluentSystem sys{FMatrix(F, N, N), std::vector<fe>(N, 0)};

    // Column block for a point: the j-th Hasse derivative of f at alpha
    // must match the j-th coefficient of the local y-series.
    int col = 0;
    for (const auto& pm : pts) {
        const fe alpha = pm.point.alpha;
        const fe beta = pm.point.beta;
        for (int j = 0; j < pm.mu; ++j, ++col) {
            for (int i = j; i < N; ++i) {
                fe b = F.from_int(binom_mod_p(i, j, F.p()));
                sys.A.at(i, col) = F.mul(b, F.pow(alpha, i - j));
            }
            fe c = 0;
            if (j == 0) c = beta;
            else if (j == 1) c = F.pow(alpha, q);
            // series coefficient (-1)^m at exponent (q+1)*q^m
            long long e = static_cast<long long>(q) + 1;
            for (int m = 0; e <= j; ++m, e *= q) {
                if (e == j) c = F.add(c, m % 2 == 0 ? F.from_int(1) : F.neg(F.from_int(1)));
            }
            sys.C[col] = c;
        }
    }
    return sys;
}

XPoly solve_y_minus_f(const Field& F, int q,
                      const std::vector<PointMultiplicity>& pts) {
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i].point.alpha == pts[j].point.alpha)
                throw std::runtime_error("points must have distinct x-coordinates");
    ConfluentSystem sys = build_confluent_system(F, q, pts);
    std::vector<fe> v = solve_row_system(sys.A, sys.C);
    return XPoly(F, v);
}

std::vector<RingElement> jn_generators(const Curve& curve,
                                       const std::vector<int>& valuations) {
    const Field& F = curve.field();
    const int q = curve.q();
    const int q2 = F.size();
    if (static_cast<int>(valuations.size()) != curve.n())
        throw std::runtime_error("jn_generators: valuation vector length != n");

    // Within each x-class, arrange the points by required valuation,
    // largest first (stable, so ties keep the enumeration order).
    struct Slot {
        int point;  // 1-based
        int mu;
    };
    std::vector<std::vector<Slot>> arranged(q2);
    for (int a = 0; a < q2; ++a) {
        for (int idx : curve.x_class(a)) {
            int mu = valuations[idx - 1];
            if (mu < 0) throw std::runtime_error("negative valuation requirement");
            arranged[a].push_back({idx, mu});
        }
        std::stable_sort(arranged[a].begin(), arranged[a].end(),
                         [](const Slot& s, const Slot& t) { return s.mu > t.mu; });
    }

    std::vector<RingElement> gens;
    gens.reserve(q);
    for (int c = 1; c <= q; ++c) {
        XPoly xpart = XPoly::one(F);
        for (int a = 0; a < q2; ++a) {
            int mu = arranged[a][c - 1].mu;
            fe alpha = curve.point(arranged[a][c - 1].point).alpha;
            for (int e = 0; e < mu; ++e) xpart = xpart * XPoly::linear_root(F, alpha);
        }
        RingElement g = RingElement::from_xpoly(q, xpart);
        for (int b = 1; b < c; ++b) {
            std::vector<PointMultiplicity> cons;
            for (int a = 0; a < q2; ++a) {
                int m = arranged[a][b - 1].mu - arranged[a][c - 1].mu;
                if (m > 0) cons.push_back({curve.point(arranged[a][b - 1].point), m});
            }
            XPoly f = cons.empty() ? XPoly(F) : solve_y_minus_f(F, q, cons);
            RingElement yf(F, q);
            yf.ycoeff(1) = XPoly::one(F);
            yf.ycoeff(0) = f.scaled(F.neg(F.from_int(1)));
            g = g * yf;
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

int GeneratorSet::diagonal_degree_sum() const {
    int sum = 0;
    for (int s = 0; s <= l; ++s)
        for (int t = 0; t < q; ++t) sum += rows[s * q + t].coord(s, t).degree();
    return sum;
}

GeneratorSet algorithm_B(const MultiplicityMatrix& M, int l, const Curve& curve,
                         std::vector<BStep>* trace) {
    const Field& F = curve.field();
    const int q = curve.q();
    const int n = curve.n();
    if (M.q2() != F.size() || M.n() != n)
        throw std::runtime_error("algorithm_B: matrix shape mismatch");
    if (l < 0) throw std::runtime_error("algorithm_B: l must be >= 0");

    MultiplicityMatrix W = M;
    GeneratorSet out;
    out.q = q;
    out.l = l;
    out.rows.resize(static_cast<size_t>(l + 1) * q);

    ZPoly prod = ZPoly::from_ring(RingElement::one(F, q));
    for (int s = 0; s <= l; ++s) {
        std::vector<int> nvec(n, 0);
        std::vector<fe> gvec(n, 0);
        for (int i = 0; i < n; ++i) {
            int best = 0, bg = 0;
            for (int g = 0; g < F.size(); ++g)
                if (W.at(g, i) > best) {
                    best = W.at(g, i);
                    bg = g;
                }
            nvec[i] = best;
            gvec[i] = static_cast<fe>(bg);
        }
        std::vector<RingElement> eta = jn_generators(curve, nvec);
        for (int t = 0; t < q; ++t) out.rows[s * q + t] = ZPoly::from_ring(eta[t]) * prod;

        std::vector<fe> hvec(n, 0);
        for (int i = 0; i < n; ++i)
            if (nvec[i] > 0) {
                hvec[i] = gvec[i];
                W.at(gvec[i], i) -= 1;
            }
        RingElement h = curve.h_combination(hvec);
        if (trace) trace->push_back({h, W});

        if (s < l) {
            ZPoly zmh(F, q);
            zmh.set_zcoeff(1, RingElement::one(F, q));
            zmh.set_zcoeff(0, h.scaled(F.neg(F.from_int(1))));
            prod = prod * zmh;
        }
    }
    return out;
}

GroebnerResult algorithm_I(const GeneratorSet& gens, int u) {
    const int q = gens.q;
    const int T = gens.size();
    GroebnerResult res;
    res.basis = gens;
    auto& rows = res.basis.rows;
    const Field& F = rows[0].field();

    auto lt_pos = [&](const ZPoly& g) {
        Monomial m = g.leading_monomial_u(u);
        return m.ze * q + m.ye;
    };

    long long budget =
        16LL * T * (gens.diagonal_degree_sum() + T + 4) + 1024;
    for (int r = 1; r < T; ++r) {
        for (;;) {
            if (rows[r].is_zero())
                throw std::runtime_error("basis conversion produced a zero row");
            int s = lt_pos(rows[r]);
            if (s == r) break;
            if (s > r) throw std::runtime_error("basis conversion invariant violated");
            if (--budget < 0)
                throw std::runtime_error("basis conversion iteration budget exceeded");
            Monomial mr = rows[r].leading_monomial_u(u);
            Monomial ms = rows[s].leading_monomial_u(u);
            int d = mr.xe - ms.xe;
            fe c = F.div(rows[r].leading_coeff_u(u), rows[s].leading_coeff_u(u));
            if (d >= 0) {
                rows[r] -= rows[s].xshifted(c, d);
            } else {
                ZPoly old_r = rows[r];
                rows[r] = old_r.xshifted(1, -d) - rows[s].scaled(c);
                rows[s] = std::move(old_r);
            }
        }
    }

    res.min_row = 0;
    for (int r = 1; r < T; ++r) {
        Monomial a = rows[r].leading_monomial_u(u);
        Monomial b = rows[res.min_row].leading_monomial_u(u);
        if (wdeg_greater(b, a, q, u)) res.min_row = r;
    }
    res.Q = rows[res.min_row];
    return res;
}

QResult q_polynomial(const MultiplicityMatrix& M, const Code& code, int l_cap) {
    const Field& F = code.field();
    QResult res;
    res.bounds = degree_bounds(M, code.u(), code.q());
    res.l_used = std::min(res.bounds.l, l_cap);
    GeneratorSet gens = algorithm_B(M, res.l_used, code.curve());
    GroebnerResult gr = algorithm_I(gens, code.u());
    fe lead = gr.Q.zcoeff(gr.Q.zdeg()).leading_coeff();
    res.Q = gr.Q.scaled(F.inv(lead));
    return res;
}

}  // namespace hermdec
