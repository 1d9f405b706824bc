/**
 * @file rootfind.hpp
 * @brief Roots of Q(z) in L(u P_inf) for Q in R[z].
 */
#ifndef HERMDEC_ROOTFIND_HPP
#define HERMDEC_ROOTFIND_HPP

#include <vector>

#include "hermdec/code.hpp"

namespace hermdec {

/// Q evaluated at z = mu (Horner in R).
RingElement substitute(const ZPoly& Q, const RingElement& mu);

/// All mu in L(u P_inf) with Q(mu) = 0, by coefficient peeling: the basis
/// monomials are fixed from the largest pole order down, and at each level
/// the candidate coefficients are the field roots of the constraint
/// polynomial read off the top graded component. Every result is verified
/// by exact substitution. Deterministic order (branch values in field
/// enumeration order). Throws if the search tree exceeds node_cap nodes.
std::vector<RingElement> find_roots(const ZPoly& Q, const Code& code,
                                    long long node_cap = 1000000);

/// Exhaustive reference: tries every element of L(u P_inf). Guarded to
/// q^(2k) <= 2^20 combinations.
std::vector<RingElement> brute_force_roots(const ZPoly& Q, const Code& code);

}  // namespace hermdec

#endif
