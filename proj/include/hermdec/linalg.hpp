/**
 * @file linalg.hpp
 * @brief Dense matrices over GF(q^2) with Gaussian elimination.
 */
#ifndef HERMDEC_LINALG_HPP
#define HERMDEC_LINALG_HPP

#include <vector>

#include "hermdec/field.hpp"

namespace hermdec {

class FMatrix {
public:
    FMatrix() : f_(nullptr), rows_(0), cols_(0) {}
    FMatrix(const Field& f, int rows, int cols)
        : f_(&f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    const Field& field() const { return *f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    fe& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    fe at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const FMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    /// In-place reduced row echelon form; returns the pivot columns
    /// (the lexicographically first maximal independent column set).
    std::vector<int> rref();

    int rank() const;

    friend std::vector<fe> operator*(const std::vector<fe>& v, const FMatrix& m);

private:
    const Field* f_;
    int rows_, cols_;
    std::vector<fe> a_;
};

/// Solve x * A = b for square A (row vector convention). Throws if singular.
std::vector<fe> solve_row_system(const FMatrix& A, const std::vector<fe>& b);

}  // namespace hermdec

#endif
