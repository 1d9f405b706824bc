/**
 * @file curve.hpp
 * @brief The Hermitian curve y^q + y = x^(q+1): rational points, local
 *        expansions, valuations, indicator functions and multiplicity of
 *        curves on the surface H x A^1.
 */
#ifndef HERMDEC_CURVE_HPP
#define HERMDEC_CURVE_HPP

#include <memory>
#include <vector>

#include "hermdec/ring.hpp"

namespace hermdec {

struct RationalPoint {
    fe alpha = 0;   ///< x-coordinate
    fe beta = 0;    ///< y-coordinate
    int index = 0;  ///< 1-based position in the canonical point order
};

class Curve;
using CurvePtr = std::shared_ptr<const Curve>;

/// Precomputed data for one Hermitian curve over a fixed field.
/// Immutable after construction.
class Curve {
public:
    static CurvePtr make(FieldPtr field);

    const Field& field() const { return *field_; }
    FieldPtr field_ptr() const { return field_; }
    int q() const { return q_; }
    /// Code length n = q^3.
    int n() const { return n_; }
    int genus() const { return q_ * (q_ - 1) / 2; }

    /// All q^3 affine rational points, ordered by x then y in field
    /// enumeration order.
    const std::vector<RationalPoint>& points() const { return points_; }
    const RationalPoint& point(int i) const { return points_[i - 1]; }

    /// Points sharing the x-coordinate of enumeration index a (0-based
    /// class index); each class has exactly q points.
    const std::vector<int>& x_class(int a) const { return classes_[a]; }

    /// Indicator function h_i with h_i(P_j) = [i == j]; 1 <= i <= n.
    const RingElement& h(int i) const { return h_[i - 1]; }

    /// h_v = sum v_i h_i, so that ev(h_v) = v.
    RingElement h_combination(const std::vector<fe>& v) const;

    /// f(P_i) for all i in point order.
    std::vector<fe> evaluate(const RingElement& f) const;

    /// Truncated series of f at P in the uniformizer t = x - alpha,
    /// modulo t^prec.
    std::vector<fe> local_expansion(const RingElement& f, const RationalPoint& P,
                                    int prec) const;

    /// v_P(f); f must be nonzero.
    int valuation(const RingElement& f, const RationalPoint& P) const;

    /// Multiplicity of the curve f = 0 on H x A^1 at (P, gamma); f nonzero.
    int surface_multiplicity(const ZPoly& f, const RationalPoint& P, fe gamma) const;

    explicit Curve(FieldPtr field);
    Curve(const Curve&) = delete;

private:
    std::vector<fe> y_series(const RationalPoint& P, int prec) const;

    FieldPtr field_;
    int q_, n_;
    std::vector<RationalPoint> points_;
    std::vector<std::vector<int>> classes_;
    std::vector<RingElement> h_;
};

}  // namespace hermdec

#endif
