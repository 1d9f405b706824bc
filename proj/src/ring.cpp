#include "hermdec/ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermdec/textio.hpp"

namespace hermdec {

RingElement RingElement::one(const Field& f, int q) {
    RingElement r(f, q);
    r.yc_[0] = XPoly::one(f);
    return r;
}

RingElement RingElement::monomial(const Field& f, int q, fe coeff, int xe, int ye) {
    if (ye >= q) throw std::runtime_error("monomial y-degree must be < q");
    RingElement r(f, q);
    r.yc_[ye] = XPoly::monomial(f, coeff, xe);
    return r;
}

RingElement RingElement::from_xpoly(int q, const XPoly& p) {
    RingElement r(p.field(), q);
    r.yc_[0] = p;
    return r;
}

bool RingElement::is_zero() const {
    for (const auto& p : yc_)
        if (!p.is_zero()) return false;
    return true;
}

int RingElement::ydeg() const {
    for (int j = q_ - 1; j >= 0; --j)
        if (!yc_[j].is_zero()) return j;
    return -1;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    for (int j = 0; j < q_; ++j) yc_[j] += o.yc_[j];
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    for (int j = 0; j < q_; ++j) yc_[j] -= o.yc_[j];
    return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    const Field& f = *a.f_;
    const int q = a.q_;
    // Convolve in y (degree up to 2q-2), then rewrite y^q -> x^(q+1) - y.
    std::vector<XPoly> conv(2 * q - 1, XPoly(f));
    for (int i = 0; i < q; ++i) {
        if (a.yc_[i].is_zero()) continue;
        for (int j = 0; j < q; ++j) {
            if (b.yc_[j].is_zero()) continue;
            conv[i + j] += a.yc_[i] * b.yc_[j];
        }
    }
    XPoly xq1 = XPoly::monomial(f, 1, q + 1);
    for (int j = 2 * q - 2; j >= q; --j) {
        if (conv[j].is_zero()) continue;
        conv[j - q] += conv[j] * xq1;
        conv[j - q + 1] -= conv[j];
        conv[j] = XPoly(f);
    }
    RingElement r(f, q);
    for (int j = 0; j < q; ++j) r.yc_[j] = std::move(conv[j]);
    return r;
}

RingElement RingElement::scaled(fe c) const {
    RingElement r(*f_, q_);
    for (int j = 0; j < q_; ++j) r.yc_[j] = yc_[j].scaled(c);
    return r;
}

int RingElement::pole_order() const {
    int best = -1;
    for (int j = 0; j < q_; ++j)
        if (!yc_[j].is_zero())
            best = std::max(best, q_ * yc_[j].degree() + (q_ + 1) * j);
    return best;
}

Monomial RingElement::leading_monomial() const {
    Monomial m;
    int best = -1;
    for (int j = 0; j < q_; ++j) {
        if (yc_[j].is_zero()) continue;
        int d = q_ * yc_[j].degree() + (q_ + 1) * j;
        if (d > best) {
            best = d;
            m = {yc_[j].degree(), j, 0};
        }
    }
    return m;
}

fe RingElement::leading_coeff() const {
    Monomial m = leading_monomial();
    return yc_[m.ye].coeff(m.xe);
}

fe RingElement::eval(fe alpha, fe beta) const {
    fe r = 0, bp = 1;
    for (int j = 0; j < q_; ++j) {
        r = f_->add(r, f_->mul(yc_[j].eval(alpha), bp));
        bp = f_->mul(bp, beta);
    }
    return r;
}

std::string RingElement::str() const {
    if (is_zero()) return "0";
    // Terms in descending pole order (ties cannot occur for y-deg < q).
    std::vector<Term> terms;
    for (int j = 0; j < q_; ++j)
        for (int i = 0; i <= yc_[j].degree(); ++i)
            if (yc_[j].coeff(i) != 0) terms.push_back({yc_[j].coeff(i), i, j, 0});
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return q_ * a.xe + (q_ + 1) * a.ye > q_ * b.xe + (q_ + 1) * b.ye;
    });
    std::string s;
    for (const Term& t : terms) {
        if (!s.empty()) s += '+';
        s += format_term(*f_, t);
    }
    return s;
}

RingElement RingElement::parse(const Field& f, int q, std::string_view s) {
    RingElement r(f, q);
    for (const Term& t : parse_terms(f, s)) {
        if (t.ze) throw std::runtime_error("unexpected z in ring element");
        if (t.ye >= q) throw std::runtime_error("y-degree must be < q");
        r.yc_[t.ye] += XPoly::monomial(f, t.coeff, t.xe);
    }
    return r;
}

// ---------------------------------------------------------------------------

ZPoly ZPoly::from_ring(const RingElement& r) {
    ZPoly z(r.field(), r.q());
    z.zc_.push_back(r);
    z.trim();
    return z;
}

ZPoly ZPoly::monomial(const Field& f, int q, fe coeff, int xe, int ye, int ze) {
    ZPoly z(f, q);
    if (coeff != 0) {
        z.zc_.assign(ze + 1, RingElement(f, q));
        z.zc_[ze] = RingElement::monomial(f, q, coeff, xe, ye);
    }
    return z;
}

bool ZPoly::is_zero() const { return zc_.empty(); }

int ZPoly::zdeg() const { return static_cast<int>(zc_.size()) - 1; }

const RingElement& ZPoly::zcoeff(int i) const {
    if (i < 0 || i >= static_cast<int>(zc_.size()))
        throw std::out_of_range("z-coefficient index");
    return zc_[i];
}

void ZPoly::set_zcoeff(int i, RingElement r) {
    if (i >= static_cast<int>(zc_.size())) zc_.resize(i + 1, RingElement(*f_, q_));
    zc_[i] = std::move(r);
    trim();
}

XPoly ZPoly::coord(int i, int j) const {
    if (i < 0 || i >= static_cast<int>(zc_.size())) return XPoly(*f_);
    return zc_[i].ycoeff(j);
}

void ZPoly::trim() {
    while (!zc_.empty() && zc_.back().is_zero()) zc_.pop_back();
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.zc_.size() > zc_.size()) zc_.resize(o.zc_.size(), RingElement(*f_, q_));
    for (size_t i = 0; i < o.zc_.size(); ++i) zc_[i] += o.zc_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (o.zc_.size() > zc_.size()) zc_.resize(o.zc_.size(), RingElement(*f_, q_));
    for (size_t i = 0; i < o.zc_.size(); ++i) zc_[i] -= o.zc_[i];
    trim();
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    ZPoly r(*a.f_, a.q_);
    if (a.is_zero() || b.is_zero()) return r;
    r.zc_.assign(a.zc_.size() + b.zc_.size() - 1, RingElement(*a.f_, a.q_));
    for (size_t i = 0; i < a.zc_.size(); ++i) {
        if (a.zc_[i].is_zero()) continue;
        for (size_t j = 0; j < b.zc_.size(); ++j) {
            if (b.zc_[j].is_zero()) continue;
            r.zc_[i + j] += a.zc_[i] * b.zc_[j];
        }
    }
    r.trim();
    return r;
}

ZPoly ZPoly::scaled(fe c) const {
    ZPoly r(*f_, q_);
    if (c == 0) return r;
    for (const auto& rc : zc_) r.zc_.push_back(rc.scaled(c));
    r.trim();
    return r;
}

ZPoly ZPoly::xshifted(fe c, int k) const {
    ZPoly r(*f_, q_);
    if (c == 0) return r;
    XPoly m = XPoly::monomial(*f_, c, k);
    RingElement rm = RingElement::from_xpoly(q_, m);
    for (const auto& rc : zc_) r.zc_.push_back(rc * rm);
    r.trim();
    return r;
}

bool ZPoly::operator==(const ZPoly& o) const {
    if (zc_.size() != o.zc_.size()) return false;
    for (size_t i = 0; i < zc_.size(); ++i)
        if (!(zc_[i] == o.zc_[i])) return false;
    return true;
}

int ZPoly::weighted_degree_u(int u) const {
    int best = -1;
    for (size_t i = 0; i < zc_.size(); ++i) {
        int po = zc_[i].pole_order();
        if (po >= 0) best = std::max(best, po + u * static_cast<int>(i));
    }
    return best;
}

Monomial ZPoly::leading_monomial_u(int u) const {
    Monomial best;
    int bestd = -1, bestz = -1;
    for (size_t i = 0; i < zc_.size(); ++i) {
        if (zc_[i].is_zero()) continue;
        Monomial m = zc_[i].leading_monomial();
        m.ze = static_cast<int>(i);
        int d = weighted_degree(m, q_, u);
        if (d > bestd || (d == bestd && m.ze > bestz)) {
            best = m;
            bestd = d;
            bestz = m.ze;
        }
    }
    return best;
}

fe ZPoly::leading_coeff_u(int u) const {
    Monomial m = leading_monomial_u(u);
    return coord(m.ze, m.ye).coeff(m.xe);
}

std::string ZPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = zdeg(); i >= 0; --i) {
        if (zc_[i].is_zero()) continue;
        std::vector<Term> terms;
        for (int j = 0; j < q_; ++j)
            for (int d = 0; d <= zc_[i].ycoeff(j).degree(); ++d)
                if (zc_[i].ycoeff(j).coeff(d) != 0)
                    terms.push_back({zc_[i].ycoeff(j).coeff(d), d, j, i});
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return q_ * a.xe + (q_ + 1) * a.ye > q_ * b.xe + (q_ + 1) * b.ye;
        });
        for (const Term& t : terms) {
            if (!s.empty()) s += '+';
            s += format_term(*f_, t);
        }
    }
    return s;
}

ZPoly ZPoly::parse(const Field& f, int q, std::string_view s) {
    ZPoly r(f, q);
    for (const Term& t : parse_terms(f, s)) {
        if (t.ye >= q) throw std::runtime_error("y-degree must be < q");
        r += monomial(f, q, t.coeff, t.xe, t.ye, t.ze);
    }
    return r;
}

}  // namespace hermdec
