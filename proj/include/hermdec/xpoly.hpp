/**
 * @file xpoly.hpp
 * @brief Dense univariate polynomials over GF(q^2).
 */
#ifndef HERMDEC_XPOLY_HPP
#define HERMDEC_XPOLY_HPP

#include <utility>
#include <vector>

#include "hermdec/field.hpp"

namespace hermdec {

/// binom(n, k) mod p by Lucas' theorem.
int binom_mod_p(long long n, long long k, int p);

/// Polynomial in x over GF(q^2). Coefficients ascending, no trailing zeros.
class XPoly {
public:
    XPoly() : f_(nullptr) {}
    explicit XPoly(const Field& f) : f_(&f) {}
    XPoly(const Field& f, std::vector<fe> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

    static XPoly monomial(const Field& f, fe coeff, int deg);
    static XPoly one(const Field& f) { return monomial(f, 1, 0); }
    /// x - alpha
    static XPoly linear_root(const Field& f, fe alpha);

    const Field& field() const { return *f_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    fe coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : fe{0};
    }
    fe lc() const { return c_.empty() ? fe{0} : c_.back(); }
    const std::vector<fe>& coeffs() const { return c_; }

    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    bool operator==(const XPoly& o) const { return c_ == o.c_; }

    XPoly scaled(fe c) const;
    /// this * c * x^k
    XPoly shifted(fe c, int k) const;
    fe eval(fe x) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<XPoly, XPoly> divrem(const XPoly& d) const;
    /// Division with zero-remainder check.
    XPoly divide_exact(const XPoly& d) const;

    /// Coefficients of this(alpha + t) modulo t^prec (Taylor expansion).
    std::vector<fe> taylor_at(fe alpha, int prec) const;

    std::string str() const;
    static XPoly parse(const Field& f, std::string_view s);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const Field* f_;
    std::vector<fe> c_;
};

/// Extended gcd over GF(q^2)[x]: returns (g, s, t) with s*a + t*b = g, g monic.
struct XGcd {
    XPoly g, s, t;
};
XGcd xgcd(const XPoly& a, const XPoly& b);

}  // namespace hermdec

#endif
