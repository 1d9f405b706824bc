#include "hermdec/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermdec {

std::vector<std::pair<int, int>> monomial_basis(int q, int u) {
    std::vector<std::pair<int, int>> basis;
    for (int j = 0; j < q; ++j)
        for (int i = 0; q * i + (q + 1) * j <= u; ++i) basis.emplace_back(i, j);
    std::sort(basis.begin(), basis.end(), [&](const auto& a, const auto& b) {
        return q * a.first + (q + 1) * a.second < q * b.first + (q + 1) * b.second;
    });
    return basis;
}

CodePtr Code::make(CurvePtr curve, int u) {
    return std::make_shared<Code>(std::move(curve), u);
}

int Code::dimension_to_u(int q, int k) {
    int n = q * q * q;
    for (int u = 1; u < n; ++u)
        if (static_cast<int>(monomial_basis(q, u).size()) == k) return u;
    throw std::runtime_error("no u with the requested dimension");
}

Code::Code(CurvePtr curve, int u) : curve_(std::move(curve)), u_(u) {
    const Field& F = curve_->field();
    const int q = curve_->q();
    const int n = curve_->n();
    if (u <= 0 || u >= n) throw std::runtime_error("require 0 < u < n");
    basis_ = monomial_basis(q, u);
    k_ = static_cast<int>(basis_.size());

    Graw_ = FMatrix(F, k_, n);
    for (int r = 0; r < k_; ++r) {
        auto ev = curve_->evaluate(
            RingElement::monomial(F, q, 1, basis_[r].first, basis_[r].second));
        for (int c = 0; c < n; ++c) Graw_.at(r, c) = ev[c];
    }

    G_ = Graw_;
    std::vector<int> pivots = G_.rref();
    if (static_cast<int>(pivots.size()) != k_)
        throw std::runtime_error("evaluation matrix is rank deficient");
    info_set_.reserve(k_);
    for (int c : pivots) info_set_.push_back(c + 1);

    // G = basis_change * Graw; since G is the identity on the information
    // columns, basis_change is the inverse of Graw restricted to them.
    FMatrix ginfo(F, k_, k_);
    for (int r = 0; r < k_; ++r)
        for (int c = 0; c < k_; ++c) ginfo.at(r, c) = Graw_.at(r, pivots[c]);
    basis_change_ = FMatrix(F, k_, k_);
    for (int r = 0; r < k_; ++r) {
        std::vector<fe> e(k_, 0);
        e[r] = 1;
        std::vector<fe> t = solve_row_system(ginfo, e);
        for (int c = 0; c < k_; ++c) basis_change_.at(r, c) = t[c];
    }
}

RingElement Code::basis_element(int r) const {
    return RingElement::monomial(field(), q(), 1, basis_[r].first, basis_[r].second);
}

std::vector<fe> Code::encode(const std::vector<fe>& message) const {
    if (static_cast<int>(message.size()) != k_)
        throw std::runtime_error("message length != k");
    return message * G_;
}

std::vector<fe> Code::extract_message(const std::vector<fe>& codeword) const {
    if (static_cast<int>(codeword.size()) != n())
        throw std::runtime_error("codeword length != n");
    std::vector<fe> m(k_);
    for (int r = 0; r < k_; ++r) m[r] = codeword[info_set_[r] - 1];
    return m;
}

RingElement Code::function_for_message(const std::vector<fe>& message) const {
    std::vector<fe> coords = message * basis_change_;
    RingElement mu(field(), q());
    for (int r = 0; r < k_; ++r)
        if (coords[r] != 0)
            mu += RingElement::monomial(field(), q(), coords[r], basis_[r].first,
                                        basis_[r].second);
    return mu;
}

}  // namespace hermdec
