/**
 * @file code.hpp
 * @brief One-point Hermitian codes C_u = ev(L(u P_inf)).
 */
#ifndef HERMDEC_CODE_HPP
#define HERMDEC_CODE_HPP

#include <memory>
#include <vector>

#include "hermdec/curve.hpp"
#include "hermdec/linalg.hpp"

namespace hermdec {

/// Ordered basis of L(u P_inf): pairs (i, j) for x^i y^j with j < q and
/// q*i + (q+1)*j <= u, sorted by pole order ascending.
std::vector<std::pair<int, int>> monomial_basis(int q, int u);

class Code;
using CodePtr = std::shared_ptr<const Code>;

class Code {
public:
    /// Requires 0 < u < n.
    static CodePtr make(CurvePtr curve, int u);
    /// The unique u with dim C_u = k (found by basis enumeration).
    static int dimension_to_u(int q, int k);

    const Curve& curve() const { return *curve_; }
    const Field& field() const { return curve_->field(); }
    int q() const { return curve_->q(); }
    int u() const { return u_; }
    int n() const { return curve_->n(); }
    int k() const { return k_; }

    const std::vector<std::pair<int, int>>& basis() const { return basis_; }
    RingElement basis_element(int r) const;

    /// Generator matrix: the evaluation matrix of the ordered basis,
    /// row-reduced to reduced echelon form over the information set.
    const FMatrix& generator_matrix() const { return G_; }
    /// Raw evaluation matrix (row r = ev(basis_r)).
    const FMatrix& evaluation_matrix() const { return Graw_; }
    /// 1-based positions of the information set (pivot columns).
    const std::vector<int>& information_set() const { return info_set_; }

    std::vector<fe> encode(const std::vector<fe>& message) const;
    /// Projection of a codeword onto the information set.
    std::vector<fe> extract_message(const std::vector<fe>& codeword) const;

    /// The function in L(u P_inf) with ev = given codeword (solves against
    /// the raw evaluation matrix); used by exhaustive tests.
    RingElement function_for_message(const std::vector<fe>& message) const;

    Code(CurvePtr curve, int u);

private:
    CurvePtr curve_;
    int u_, k_;
    std::vector<std::pair<int, int>> basis_;
    FMatrix Graw_, G_;
    FMatrix basis_change_;  // message coords -> basis coords, k x k
    std::vector<int> info_set_;
};

}  // namespace hermdec

#endif
