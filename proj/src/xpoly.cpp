#include "hermdec/xpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hermdec/textio.hpp"

namespace hermdec {

int binom_mod_p(long long n, long long k, int p) {
    if (k < 0 || k > n) return 0;
    // Lucas: multiply binomials of base-p digits.
    long long r = 1;
    while (n > 0 || k > 0) {
        int nd = static_cast<int>(n % p), kd = static_cast<int>(k % p);
        if (kd > nd) return 0;
        long long b = 1;
        for (int i = 0; i < kd; ++i) b = b * (nd - i) / (i + 1);
        r = r * (b % p) % p;
        n /= p;
        k /= p;
    }
    return static_cast<int>(r);
}

XPoly XPoly::monomial(const Field& f, fe coeff, int deg) {
    XPoly r(f);
    if (coeff != 0) {
        r.c_.assign(deg + 1, 0);
        r.c_[deg] = coeff;
    }
    return r;
}

XPoly XPoly::linear_root(const Field& f, fe alpha) {
    XPoly r(f);
    r.c_ = {f.neg(alpha), 1};
    return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->add(c_[i], o.c_[i]);
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    const Field& f = *a.f_;
    XPoly r(f);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return r;
}

XPoly XPoly::scaled(fe c) const {
    XPoly r(*f_);
    if (c == 0) return r;
    r.c_ = c_;
    for (fe& v : r.c_) v = f_->mul(v, c);
    return r;
}

XPoly XPoly::shifted(fe c, int k) const {
    XPoly r(*f_);
    if (c == 0 || is_zero()) return r;
    r.c_.assign(c_.size() + k, 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = f_->mul(c_[i], c);
    return r;
}

fe XPoly::eval(fe x) const {
    fe r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
    return r;
}

std::pair<XPoly, XPoly> XPoly::divrem(const XPoly& d) const {
    if (d.is_zero()) throw std::runtime_error("division by zero polynomial");
    XPoly q(*f_), r = *this;
    fe ilc = f_->inv(d.lc());
    int dd = d.degree();
    if (r.degree() >= dd) q.c_.assign(r.degree() - dd + 1, 0);
    while (r.degree() >= dd) {
        int k = r.degree() - dd;
        fe c = f_->mul(r.lc(), ilc);
        q.c_[k] = c;
        r -= d.shifted(c, k);
    }
    q.trim();
    return {q, r};
}

XPoly XPoly::divide_exact(const XPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw std::runtime_error("inexact polynomial division");
    return q;
}

std::vector<fe> XPoly::taylor_at(fe alpha, int prec) const {
    std::vector<fe> out(prec, 0);
    // Repeated synthetic division by (x - alpha).
    std::vector<fe> cur = c_;
    for (int k = 0; k < prec && !cur.empty(); ++k) {
        fe rem = 0;
        for (size_t i = cur.size(); i-- > 0;) {
            fe t = f_->add(f_->mul(rem, alpha), cur[i]);
            cur[i] = rem;
            rem = t;
        }
        out[k] = rem;
        // cur now holds the quotient in place (top slot left as zero)
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
    }
    return out;
}

std::string XPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += '+';
        s += format_term(*f_, Term{c_[i], i, 0, 0});
    }
    return s;
}

XPoly XPoly::parse(const Field& f, std::string_view s) {
    XPoly r(f);
    for (const Term& t : parse_terms(f, s)) {
        if (t.ye || t.ze) throw std::runtime_error("unexpected y/z in x-polynomial");
        r += monomial(f, t.coeff, t.xe);
    }
    return r;
}

XGcd xgcd(const XPoly& a, const XPoly& b) {
    const Field& f = a.field();
    XPoly r0 = a, r1 = b;
    XPoly s0 = XPoly::one(f), s1(f);
    XPoly t0(f), t1 = XPoly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        XPoly s = s0 - q * s1;
        XPoly t = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s;
        t0 = t1; t1 = t;
    }
    if (!r0.is_zero()) {
        fe ilc = f.inv(r0.lc());
        r0 = r0.scaled(ilc);
        s0 = s0.scaled(ilc);
        t0 = t0.scaled(ilc);
    }
    return {r0, s0, t0};
}

}  // namespace hermdec
