#include "hermdec/curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermdec {

namespace {

std::vector<fe> series_mul(const Field& f, const std::vector<fe>& a,
                           const std::vector<fe>& b, int prec) {
    std::vector<fe> r(prec, 0);
    for (int i = 0; i < std::min<int>(prec, a.size()); ++i) {
        if (a[i] == 0) continue;
        int jmax = std::min<int>(prec - i, b.size());
        for (int j = 0; j < jmax; ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return r;
}

}  // namespace

CurvePtr Curve::make(FieldPtr field) { return std::make_shared<Curve>(std::move(field)); }

Curve::Curve(FieldPtr field) : field_(std::move(field)) {
    const Field& F = *field_;
    q_ = F.q();
    n_ = q_ * q_ * q_;
    classes_.resize(F.size());
    for (fe a = 0; a < F.size(); ++a) {
        fe rhs = F.pow(a, q_ + 1);
        for (fe b = 0; b < F.size(); ++b) {
            if (F.trace_to_subfield(b) == rhs) {
                RationalPoint P{a, b, static_cast<int>(points_.size()) + 1};
                classes_[a].push_back(P.index);
                points_.push_back(P);
            }
        }
    }
    if (static_cast<int>(points_.size()) != n_)
        throw std::runtime_error("point count is not q^3");

    // h_i = -(x^{q^2}-x)(y^q+y-beta^q-beta) / ((x-alpha)(y-beta)), computed
    // by exact division: first by (y-beta) in y, then by (x-alpha) in x.
    h_.reserve(n_);
    for (const RationalPoint& P : points_) {
        // Numerator as a polynomial in y of degree q (not yet reduced).
        // y^q + y - (beta^q + beta), times -(x^{q^2} - x).
        XPoly xq2x = XPoly::monomial(F, 1, q_ * q_) - XPoly::monomial(F, 1, 1);
        XPoly neg_xq2x = xq2x.scaled(F.neg(1));
        std::vector<XPoly> num(q_ + 1, XPoly(F));
        num[q_] = neg_xq2x;
        num[1] = neg_xq2x;
        num[0] = neg_xq2x.scaled(F.neg(F.trace_to_subfield(P.beta)));
        // Synthetic division by (y - beta).
        std::vector<XPoly> quo(q_, XPoly(F));
        XPoly rem(F);
        {
            XPoly carry(F);
            for (int j = q_; j >= 1; --j) {
                carry = num[j] + carry.scaled(P.beta);
                quo[j - 1] = carry;
            }
            rem = num[0] + carry.scaled(P.beta);
        }
        if (!rem.is_zero()) throw std::runtime_error("h_i: inexact division by y-beta");
        // Divide each y-coefficient by (x - alpha).
        XPoly lin = XPoly::linear_root(F, P.alpha);
        RingElement h(F, q_);
        for (int j = 0; j < q_; ++j)
            h.ycoeff(j) = quo[j].divide_exact(lin);
        h_.push_back(std::move(h));
    }
}

RingElement Curve::h_combination(const std::vector<fe>& v) const {
    if (static_cast<int>(v.size()) != n_) throw std::runtime_error("vector length != n");
    RingElement r(*field_, q_);
    for (int i = 0; i < n_; ++i)
        if (v[i] != 0) r += h_[i].scaled(v[i]);
    return r;
}

std::vector<fe> Curve::evaluate(const RingElement& f) const {
    std::vector<fe> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = f.eval(points_[i].alpha, points_[i].beta);
    return out;
}

std::vector<fe> Curve::y_series(const RationalPoint& P, int prec) const {
    const Field& F = *field_;
    // y = beta + alpha^q t + sum_i (-1)^i t^{(q+1) q^i}   (t = x - alpha)
    std::vector<fe> s(prec, 0);
    if (prec > 0) s[0] = P.beta;
    if (prec > 1) s[1] = F.add(s[1], F.conj(P.alpha));
    long long exp = q_ + 1;
    fe sign = 1;
    fe minus1 = F.neg(1);
    while (exp < prec) {
        s[exp] = F.add(s[exp], sign);
        exp *= q_;
        sign = F.mul(sign, minus1);
    }
    return s;
}

std::vector<fe> Curve::local_expansion(const RingElement& f, const RationalPoint& P,
                                       int prec) const {
    const Field& F = *field_;
    if (prec < 1) throw std::runtime_error("precision must be >= 1");
    std::vector<fe> ys = y_series(P, prec);
    std::vector<fe> ypow(prec, 0);
    ypow[0] = 1;
    std::vector<fe> out(prec, 0);
    for (int j = 0; j < q_; ++j) {
        if (j > 0) ypow = series_mul(F, ypow, ys, prec);
        if (f.ycoeff(j).is_zero()) continue;
        std::vector<fe> cj = f.ycoeff(j).taylor_at(P.alpha, prec);
        std::vector<fe> term = series_mul(F, cj, ypow, prec);
        for (int i = 0; i < prec; ++i) out[i] = F.add(out[i], term[i]);
    }
    return out;
}

int Curve::valuation(const RingElement& f, const RationalPoint& P) const {
    if (f.is_zero()) throw std::runtime_error("valuation of zero");
    // v_P(f) <= pole_order(f): the function has as many zeros as poles.
    int cap = f.pole_order() + 1;
    int prec = std::min(q_ + 2, cap);
    for (;;) {
        std::vector<fe> s = local_expansion(f, P, prec);
        for (int i = 0; i < prec; ++i)
            if (s[i] != 0) return i;
        if (prec >= cap)
            throw std::runtime_error("valuation: precision cap exceeded");
        prec = std::min(2 * prec, cap);
    }
}

int Curve::surface_multiplicity(const ZPoly& f, const RationalPoint& P, fe gamma) const {
    const Field& F = *field_;
    if (f.is_zero()) throw std::runtime_error("multiplicity of zero");
    // Substitute z = gamma + s; the s^a coefficient is
    //   b_a = sum_{i >= a} binom(i, a) gamma^(i-a) psi_i.
    int mult = INT32_MAX;
    const int l = f.zdeg();
    for (int a = 0; a <= l; ++a) {
        RingElement b(F, q_);
        for (int i = a; i <= l; ++i) {
            fe c = F.mul(F.from_int(binom_mod_p(i, a, F.p())), F.pow(gamma, i - a));
            if (c != 0) b += f.zcoeff(i).scaled(c);
        }
        if (b.is_zero()) continue;
        mult = std::min(mult, a + valuation(b, P));
        if (mult <= a) break;  // later a cannot lower the minimum below a
    }
    if (mult == INT32_MAX) throw std::runtime_error("multiplicity of zero");
    return mult;
}

}  // namespace hermdec
