/**
 * @file ring.hpp
 * @brief The coordinate ring R = F[x,y]/(y^q + y - x^(q+1)) and R[z].
 *
 * A RingElement is stored as q coefficients in F[x], position j holding
 * the coefficient of y^j; the canonical form always has y-degree < q.
 * A ZPoly is a polynomial in z over R, equivalently a q*(l+1)-vector
 * over F[x] on the basis y^j z^i.
 */
#ifndef HERMDEC_RING_HPP
#define HERMDEC_RING_HPP

#include <string>
#include <vector>

#include "hermdec/xpoly.hpp"

namespace hermdec {

struct Monomial {
    int xe = 0, ye = 0, ze = 0;
};

/// deg_u(x^i y^j z^k) = q*i + (q+1)*j + u*k.
inline int weighted_degree(const Monomial& m, int q, int u) {
    return q * m.xe + (q + 1) * m.ye + u * m.ze;
}

/// Total order >_u: compare weighted degree, ties broken by larger z-degree.
/// Returns true when a >_u b.
inline bool wdeg_greater(const Monomial& a, const Monomial& b, int q, int u) {
    int da = weighted_degree(a, q, u), db = weighted_degree(b, q, u);
    if (da != db) return da > db;
    return a.ze > b.ze;
}

class RingElement {
public:
    RingElement() : f_(nullptr), q_(0) {}
    RingElement(const Field& f, int q) : f_(&f), q_(q), yc_(q, XPoly(f)) {}

    static RingElement zero(const Field& f, int q) { return RingElement(f, q); }
    static RingElement one(const Field& f, int q);
    static RingElement monomial(const Field& f, int q, fe coeff, int xe, int ye);
    /// Lift an x-polynomial (y-degree 0).
    static RingElement from_xpoly(int q, const XPoly& p);

    const Field& field() const { return *f_; }
    int q() const { return q_; }
    bool is_zero() const;
    const XPoly& ycoeff(int j) const { return yc_[j]; }
    XPoly& ycoeff(int j) { return yc_[j]; }
    int ydeg() const;

    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    /// Product reduced to canonical form via y^q = x^(q+1) - y.
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement scaled(fe c) const;
    bool operator==(const RingElement& o) const { return yc_ == o.yc_; }

    /// -v_{P_inf}: max over nonzero monomials of q*i + (q+1)*j; -1 for zero.
    int pole_order() const;
    /// Monomial and coefficient attaining pole_order (unique for y-deg < q).
    Monomial leading_monomial() const;
    fe leading_coeff() const;

    fe eval(fe alpha, fe beta) const;

    std::string str() const;
    static RingElement parse(const Field& f, int q, std::string_view s);

private:
    const Field* f_;
    int q_;
    std::vector<XPoly> yc_;
};

/// Element of R[z]; index i holds the z^i coefficient.
class ZPoly {
public:
    ZPoly() : f_(nullptr), q_(0) {}
    ZPoly(const Field& f, int q) : f_(&f), q_(q) {}

    static ZPoly from_ring(const RingElement& r);
    /// coeff * y^ye * z^ze
    static ZPoly monomial(const Field& f, int q, fe coeff, int xe, int ye, int ze);

    const Field& field() const { return *f_; }
    int q() const { return q_; }
    bool is_zero() const;
    int zdeg() const;
    /// Requires 0 <= i <= zdeg().
    const RingElement& zcoeff(int i) const;
    void set_zcoeff(int i, RingElement r);
    /// F[x]-module coordinate at basis element y^j z^i; zero out of range.
    XPoly coord(int i, int j) const;

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly scaled(fe c) const;
    /// this * c * x^k (used by the basis conversion).
    ZPoly xshifted(fe c, int k) const;
    bool operator==(const ZPoly& o) const;

    /// max over monomials of q*i + (q+1)*j + u*k; -1 for zero.
    int weighted_degree_u(int u) const;
    /// Largest monomial under >_u, with its coefficient.
    Monomial leading_monomial_u(int u) const;
    fe leading_coeff_u(int u) const;

    std::string str() const;
    static ZPoly parse(const Field& f, int q, std::string_view s);

private:
    void trim();
    const Field* f_;
    int q_;
    std::vector<RingElement> zc_;
};

}  // namespace hermdec

#endif
