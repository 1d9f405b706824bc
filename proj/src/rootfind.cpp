#include "hermdec/rootfind.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermdec {

RingElement substitute(const ZPoly& Q, const RingElement& mu) {
    const Field& F = Q.field();
    const int q = Q.q();
    if (Q.is_zero()) return RingElement::zero(F, q);
    RingElement acc = Q.zcoeff(Q.zdeg());
    for (int i = Q.zdeg() - 1; i >= 0; --i) acc = acc * mu + Q.zcoeff(i);
    return acc;
}

namespace {

/// G(z + phi) via the binomial expansion; zdeg is small.
ZPoly shift_z(const ZPoly& G, const RingElement& phi) {
    const Field& F = G.field();
    const int q = G.q();
    const int l = G.zdeg();
    std::vector<RingElement> pw(l + 1, RingElement::one(F, q));
    for (int i = 1; i <= l; ++i) pw[i] = pw[i - 1] * phi;
    ZPoly out(F, q);
    for (int j = 0; j <= l; ++j) {
        RingElement c(F, q);
        for (int i = j; i <= l; ++i) {
            fe b = F.from_int(binom_mod_p(i, j, F.p()));
            if (b != 0) c += (G.zcoeff(i) * pw[i - j]).scaled(b);
        }
        out.set_zcoeff(j, std::move(c));
    }
    return out;
}

struct Search {
    const Field& F;
    const std::vector<RingElement>& basis;  // pole order descending
    const std::vector<int>& orders;
    long long nodes_left;
    std::vector<RingElement> found;

    void run(const ZPoly& G, const RingElement& mu, size_t level) {
        if (--nodes_left < 0)
            throw std::runtime_error("root search exceeded the node cap");
        if (level == basis.size()) {
            if (G.zcoeff(0).is_zero()) found.push_back(mu);
            return;
        }
        const int d = orders[level];
        // Top graded component of G(c*phi + lower order terms): the graded
        // piece of gr R at one weighted degree is one-dimensional, so the
        // contributions collapse to a polynomial constraint on c.
        int D = -1;
        for (int i = 0; i <= G.zdeg(); ++i)
            if (!G.zcoeff(i).is_zero())
                D = std::max(D, G.zcoeff(i).pole_order() + i * d);
        std::vector<fe> T(static_cast<size_t>(G.zdeg()) + 1, 0);
        for (int i = 0; i <= G.zdeg(); ++i)
            if (!G.zcoeff(i).is_zero() && G.zcoeff(i).pole_order() + i * d == D)
                T[i] = G.zcoeff(i).leading_coeff();
        for (int c = 0; c < F.size(); ++c) {
            fe v = 0;
            for (int i = G.zdeg(); i >= 0; --i)
                v = F.add(F.mul(v, static_cast<fe>(c)), T[i]);
            if (v != 0) continue;
            if (c == 0) {
                run(G, mu, level + 1);
            } else {
                RingElement cphi = basis[level].scaled(static_cast<fe>(c));
                run(shift_z(G, cphi), mu + cphi, level + 1);
            }
        }
    }
};

}  // namespace

std::vector<RingElement> find_roots(const ZPoly& Q, const Code& code,
                                    long long node_cap) {
    const Field& F = code.field();
    const int q = code.q();
    if (Q.is_zero()) throw std::runtime_error("find_roots of the zero polynomial");

    std::vector<RingElement> basis;
    std::vector<int> orders;
    for (auto it = code.basis().rbegin(); it != code.basis().rend(); ++it) {
        basis.push_back(RingElement::monomial(F, q, 1, it->first, it->second));
        orders.push_back(q * it->first + (q + 1) * it->second);
    }

    Search s{F, basis, orders, node_cap, {}};
    s.run(Q, RingElement::zero(F, q), 0);

    std::vector<RingElement> verified;
    for (const auto& mu : s.found)
        if (substitute(Q, mu).is_zero()) verified.push_back(mu);
    return verified;
}

std::vector<RingElement> brute_force_roots(const ZPoly& Q, const Code& code) {
    const Field& F = code.field();
    const int q = code.q();
    const int k = code.k();
    double total = 1.0;
    for (int r = 0; r < k; ++r) total *= F.size();
    if (total > static_cast<double>(1 << 20))
        throw std::runtime_error("brute_force_roots: search space too large");

    std::vector<RingElement> roots;
    std::vector<fe> coeffs(k, 0);
    for (;;) {
        RingElement mu(F, q);
        for (int r = 0; r < k; ++r)
            if (coeffs[r] != 0)
                mu += code.basis_element(r).scaled(coeffs[r]);
        if (substitute(Q, mu).is_zero()) roots.push_back(mu);
        int pos = 0;
        while (pos < k && coeffs[pos] == F.size() - 1) coeffs[pos++] = 0;
        if (pos == k) break;
        ++coeffs[pos];
    }
    return roots;
}

}  // namespace hermdec
