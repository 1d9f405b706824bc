#include "hermdec/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace hermdec {

namespace {

using Poly = std::vector<int>;  // dense over GF(p), ascending

Poly poly_mod(Poly a, const Poly& m, int p) {
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) > dm) {
        int top = a.back();
        if (top != 0) {
            int k = static_cast<int>(a.size()) - 1 - dm;
            // m is monic
            for (int i = 0; i <= dm; ++i) {
                int& c = a[k + i];
                c = ((c - top * m[i]) % p + p) % p;
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), m, p);
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Field::Field(int p, int e, std::vector<int> modulus, std::vector<int> primitive)
    : p_(p), e_(e), modulus_(std::move(modulus)), primitive_(std::move(primitive)) {
    if (!is_prime(p_)) throw field_error("p is not prime");
    if (e_ < 1) throw field_error("bad exponent");
    q_ = 1;
    for (int i = 0; i < e_; ++i) q_ *= p_;
    q2_ = q_ * q_;
    if (static_cast<int>(modulus_.size()) != 2 * e_ + 1 || modulus_.back() % p_ != 1)
        throw field_error("modulus must be monic of degree 2e");
    for (int& c : modulus_) c = ((c % p_) + p_) % p_;
    for (int& c : primitive_) c = ((c % p_) + p_) % p_;

    // Build the enumeration: powers of the primitive element.
    std::vector<Poly> rep(q2_);
    std::map<Poly, fe> index;
    rep[0] = {};
    index[rep[0]] = 0;
    rep[1] = {1};
    index[rep[1]] = 1;
    Poly g = poly_mod(Poly(primitive_), modulus_, p_);
    Poly cur = {1};
    for (int k = 2; k < q2_; ++k) {
        cur = (k == 2) ? g : poly_mul_mod(cur, g, modulus_, p_);
        if (index.count(cur))
            throw field_error("primitive element does not generate the group");
        rep[k] = cur;
        index[cur] = static_cast<fe>(k);
    }
    // g^(q2-1) must be 1; together with the q2-1 distinct powers above this
    // also certifies that the modulus is irreducible.
    if (poly_mul_mod(rep[q2_ - 1], g, modulus_, p_) != rep[1])
        throw field_error("primitive element has wrong order (modulus reducible?)");

    add_.assign(static_cast<size_t>(q2_) * q2_, 0);
    neg_.assign(q2_, 0);
    for (int a = 0; a < q2_; ++a) {
        for (int b = 0; b < q2_; ++b) {
            Poly s(std::max(rep[a].size(), rep[b].size()), 0);
            for (size_t i = 0; i < rep[a].size(); ++i) s[i] = rep[a][i];
            for (size_t i = 0; i < rep[b].size(); ++i) s[i] = (s[i] + rep[b][i]) % p_;
            while (!s.empty() && s.back() == 0) s.pop_back();
            add_[static_cast<size_t>(a) * q2_ + b] = index.at(s);
        }
        Poly n = rep[a];
        for (int& c : n) c = (p_ - c) % p_;
        while (!n.empty() && n.back() == 0) n.pop_back();
        neg_[a] = index.at(n);
    }
}

FieldPtr Field::make(int q) {
    switch (q) {
        case 2: return std::make_shared<Field>(2, 1, std::vector<int>{1, 1, 1}, std::vector<int>{0, 1});
        case 3: return std::make_shared<Field>(3, 1, std::vector<int>{2, 2, 1}, std::vector<int>{0, 1});
        case 4: return std::make_shared<Field>(2, 2, std::vector<int>{1, 1, 0, 0, 1}, std::vector<int>{0, 1});
        default:
            throw field_error("no built-in field for q=" + std::to_string(q));
    }
}

fe Field::pow(fe a, long long n) const {
    if (a == 0) {
        if (n < 0) throw field_error("inversion of zero");
        return n == 0 ? static_cast<fe>(1) : static_cast<fe>(0);
    }
    long long ord = q2_ - 1;
    long long k = (static_cast<long long>(a - 1) % ord) * (n % ord) % ord;
    k = ((k % ord) + ord) % ord;
    return static_cast<fe>(1 + k);
}

fe Field::from_int(long long m) const {
    m = ((m % p_) + p_) % p_;
    fe r = 0;
    for (long long i = 0; i < m; ++i) r = add(r, 1);
    return r;
}

std::string Field::to_string(fe a) const {
    if (a == 0) return "0";
    if (a == 1) return "1";
    if (a == 2) return "a";
    return "a^" + std::to_string(a - 1);
}

fe Field::parse(std::string_view s) const {
    if (s == "0") return 0;
    if (s == "1") return 1;
    if (s == "a") return 2;
    if (s.size() > 2 && s.substr(0, 2) == "a^") {
        int k = 0;
        auto rest = s.substr(2);
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
        if (ec == std::errc() && ptr == rest.data() + rest.size() && k >= 0)
            return static_cast<fe>(1 + k % (q2_ - 1));
    }
    throw field_error("bad field element: '" + std::string(s) + "'");
}

}  // namespace hermdec
