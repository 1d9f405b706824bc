/**
 * @file interp.hpp
 * @brief Interpolation engine: generators of the one-variable ideal J_N,
 *        the y - f solver, the module generator construction for I_{M,l}
 *        and the Groebner conversion extracting the Q-polynomial.
 */
#ifndef HERMDEC_INTERP_HPP
#define HERMDEC_INTERP_HPP

#include <optional>
#include <vector>

#include "hermdec/curve.hpp"
#include "hermdec/linalg.hpp"
#include "hermdec/softinfo.hpp"

namespace hermdec {

struct PointMultiplicity {
    RationalPoint point;
    int mu = 0;  ///< required valuation, >= 1
};

/// The confluent Vandermonde system v * A = C whose solution gives f with
/// v_{Q_i}(y - f) >= mu_i.
struct ConfluentSystem {
    FMatrix A;
    std::vector<fe> C;
};

ConfluentSystem build_confluent_system(const Field& f, int q,
                                       const std::vector<PointMultiplicity>& pts);

/// f in F[x] of degree < sum(mu) with v_{Q_i}(y - f) >= mu_i for all i.
/// Points must have distinct x-coordinates.
XPoly solve_y_minus_f(const Field& f, int q,
                      const std::vector<PointMultiplicity>& pts);

/// Generators g_1, ..., g_q of J_N = {f in R | v_{P_i}(f) >= n_i} as a
/// module over F[x]; g_c has y-degree c-1. `valuations` is indexed by the
/// canonical point order (0-based), length n.
std::vector<RingElement> jn_generators(const Curve& curve,
                                       const std::vector<int>& valuations);

/// Generators of I_{M,l} as a module over F[x]. Row s*q + t carries the
/// generator with leading position y^t z^s under lex x < y < z.
struct GeneratorSet {
    int q = 0, l = 0;
    std::vector<ZPoly> rows;

    int size() const { return static_cast<int>(rows.size()); }
    const ZPoly& row(int s, int t) const { return rows[s * q + t]; }
    /// Sum over rows of the diagonal coordinate degree (invariant under
    /// the unimodular conversion).
    int diagonal_degree_sum() const;
};

/// Per-step record of the generator construction (for inspection/tests).
struct BStep {
    RingElement h;           ///< h^{(s)}
    MultiplicityMatrix M;    ///< matrix after the decrement of step s
};

GeneratorSet algorithm_B(const MultiplicityMatrix& M, int l, const Curve& curve,
                         std::vector<BStep>* trace = nullptr);

struct GroebnerResult {
    GeneratorSet basis;
    int min_row = 0;  ///< index of the row with the smallest leading term
    ZPoly Q;
};

/// Converts the generator set to a Groebner basis with respect to >_u and
/// picks out the element with the smallest leading term.
GroebnerResult algorithm_I(const GeneratorSet& gens, int u);

struct QResult {
    ZPoly Q;
    DegreeBounds bounds;
    int l_used = 0;
};

/// Full interpolation: degree bounds, generator construction, Groebner
/// conversion; Q is normalized so the leading coefficient of its top
/// z-coefficient is 1.
QResult q_polynomial(const MultiplicityMatrix& M, const Code& code, int l_cap);

}  // namespace hermdec

#endif
