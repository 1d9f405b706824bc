#include <doctest.h>

#include <random>

#include "hermdec/xpoly.hpp"

using namespace hermdec;

namespace {

XPoly random_poly(const Field& F, std::mt19937& rng, int maxdeg) {
    std::vector<fe> c(rng() % (maxdeg + 2));
    for (auto& v : c) v = static_cast<fe>(rng() % F.size());
    return XPoly(F, c);
}

}  // namespace

TEST_CASE("binomials mod p match Pascal's triangle") {
    for (int p : {2, 3}) {
        std::vector<std::vector<long long>> pas(20, std::vector<long long>(20, 0));
        for (int n = 0; n < 20; ++n) {
            pas[n][0] = 1;
            for (int k = 1; k <= n; ++k) pas[n][k] = pas[n - 1][k - 1] + pas[n - 1][k];
        }
        for (int n = 0; n < 20; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(binom_mod_p(n, k, p) == pas[n][k] % p);
    }
}

TEST_CASE("division is consistent with multiplication") {
    auto F = Field::make(3);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        XPoly a = random_poly(*F, rng, 12);
        XPoly b = random_poly(*F, rng, 6);
        if (b.is_zero()) continue;
        auto [quo, rem] = a.divrem(b);
        CHECK(quo * b + rem == a);
        CHECK(rem.degree() < b.degree());
        CHECK((a * b).divide_exact(b) == a);
    }
}

TEST_CASE("taylor expansion agrees with evaluation") {
    for (int q : {2, 3, 4}) {
        auto F = Field::make(q);
        std::mt19937 rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            XPoly p = random_poly(*F, rng, 8);
            fe alpha = static_cast<fe>(rng() % F->size());
            auto t = p.taylor_at(alpha, p.degree() + 2);
            for (fe s = 0; s < F->size(); ++s) {
                fe direct = p.eval(F->add(alpha, s));
                fe acc = 0, sp = 1;
                for (fe c : t) {
                    acc = F->add(acc, F->mul(c, sp));
                    sp = F->mul(sp, s);
                }
                CHECK(direct == acc);
            }
        }
    }
}

TEST_CASE("taylor coefficients locate the root multiplicity") {
    auto F = Field::make(2);
    // (x - a)^3 * (x - 1)
    XPoly p = XPoly::linear_root(*F, 2) * XPoly::linear_root(*F, 2) *
              XPoly::linear_root(*F, 2) * XPoly::linear_root(*F, 1);
    auto t = p.taylor_at(2, 5);
    CHECK(t[0] == 0);
    CHECK(t[1] == 0);
    CHECK(t[2] == 0);
    CHECK(t[3] != 0);
}

TEST_CASE("extended gcd") {
    auto F = Field::make(4);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        XPoly a = random_poly(*F, rng, 8);
        XPoly b = random_poly(*F, rng, 8);
        if (a.is_zero() && b.is_zero()) continue;
        XGcd r = xgcd(a, b);
        CHECK(r.s * a + r.t * b == r.g);
        CHECK(r.g.lc() == 1);
        if (!a.is_zero()) CHECK(a.divrem(r.g).second.is_zero());
        if (!b.is_zero()) CHECK(b.divrem(r.g).second.is_zero());
    }
}

TEST_CASE("polynomial text form round trips") {
    auto F = Field::make(2);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        XPoly p = random_poly(*F, rng, 6);
        CHECK(XPoly::parse(*F, p.str()) == p);
    }
}
