#include "hermdec/linalg.hpp"

#include <stdexcept>

namespace hermdec {

std::vector<int> FMatrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int r = row; r < rows_; ++r)
            if (at(r, col) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < cols_; ++c) std::swap(at(p, c), at(row, c));
        fe ilc = f_->inv(at(row, col));
        for (int c = 0; c < cols_; ++c) at(row, c) = f_->mul(at(row, c), ilc);
        for (int r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            fe m = at(r, col);
            for (int c = 0; c < cols_; ++c)
                at(r, c) = f_->sub(at(r, c), f_->mul(m, at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int FMatrix::rank() const {
    FMatrix tmp = *this;
    return static_cast<int>(tmp.rref().size());
}

std::vector<fe> operator*(const std::vector<fe>& v, const FMatrix& m) {
    if (static_cast<int>(v.size()) != m.rows_)
        throw std::runtime_error("vector/matrix size mismatch");
    std::vector<fe> out(m.cols_, 0);
    const Field& f = *m.f_;
    for (int r = 0; r < m.rows_; ++r) {
        if (v[r] == 0) continue;
        for (int c = 0; c < m.cols_; ++c)
            out[c] = f.add(out[c], f.mul(v[r], m.at(r, c)));
    }
    return out;
}

std::vector<fe> solve_row_system(const FMatrix& A, const std::vector<fe>& b) {
    if (A.rows() != A.cols() || static_cast<int>(b.size()) != A.cols())
        throw std::runtime_error("solve: shape mismatch");
    const Field& f = A.field();
    const int n = A.rows();
    // x * A = b  <=>  A^T x^T = b^T; eliminate on the augmented transpose.
    FMatrix aug(f, n, n + 1);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = A.at(c, r);
        aug.at(r, n) = b[r];
    }
    auto pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != n || pivots.back() == n)
        throw std::runtime_error("solve: singular system");
    std::vector<fe> x(n);
    for (int r = 0; r < n; ++r) x[pivots[r]] = aug.at(r, n);
    return x;
}

}  // namespace hermdec
