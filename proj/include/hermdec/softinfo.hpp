/**
 * @file softinfo.hpp
 * @brief Reliability matrices, Koetter-Vardy multiplicity assignment and
 *        the degree bound bookkeeping (G(i), C(i), N, w, l).
 */
#ifndef HERMDEC_SOFTINFO_HPP
#define HERMDEC_SOFTINFO_HPP

#include <string>
#include <vector>

#include "hermdec/code.hpp"

namespace hermdec {

/// Posterior probabilities pi[gamma][i], q^2 rows in field enumeration
/// order, n columns in point order. Columns sum to 1 within 1e-9.
class ReliabilityMatrix {
public:
    ReliabilityMatrix(int q2, int n)
        : q2_(q2), n_(n), p_(static_cast<size_t>(q2) * n, 0.0) {}

    int q2() const { return q2_; }
    int n() const { return n_; }
    double& at(int gamma, int i) { return p_[static_cast<size_t>(gamma) * n_ + i]; }
    double at(int gamma, int i) const { return p_[static_cast<size_t>(gamma) * n_ + i]; }

    void validate() const;

    static ReliabilityMatrix load_csv(const std::string& path);
    void save_csv(const std::string& path) const;

private:
    int q2_, n_;
    std::vector<double> p_;
};

/// Nonnegative interpolation multiplicities m[gamma][i], same indexing.
class MultiplicityMatrix {
public:
    MultiplicityMatrix() : q2_(0), n_(0) {}
    MultiplicityMatrix(int q2, int n)
        : q2_(q2), n_(n), m_(static_cast<size_t>(q2) * n, 0) {}

    int q2() const { return q2_; }
    int n() const { return n_; }
    int& at(int gamma, int i) { return m_[static_cast<size_t>(gamma) * n_ + i]; }
    int at(int gamma, int i) const { return m_[static_cast<size_t>(gamma) * n_ + i]; }
    bool operator==(const MultiplicityMatrix& o) const {
        return q2_ == o.q2_ && n_ == o.n_ && m_ == o.m_;
    }

    /// sum binom(m+1, 2) over all entries.
    long long cost() const;
    bool all_zero() const;

    static MultiplicityMatrix load_csv(const std::string& path);
    void save_csv(const std::string& path) const;

private:
    int q2_, n_;
    std::vector<int> m_;
};

struct DegreeBounds {
    long long N = 0;  ///< 1 + cost(M)
    int w = 0;        ///< minimal with N <= sum_{i<=w} C(i)
    int l = 0;        ///< floor(w / u)
};

/// G(i) = 1 iff i is a pole order at P_inf (not a Weierstrass gap).
bool gap_indicator(int i, int q);
/// Number of monomials of R[z] with u-weighted degree exactly i.
long long count_monomials_C(int i, int u, int q);

DegreeBounds degree_bounds(const MultiplicityMatrix& M, int u, int q);

/// Score of a vector: sum_i m_{i, v_i}.
long long score(const MultiplicityMatrix& M, const std::vector<fe>& v);

/// Greedy Koetter-Vardy assignment. Repeatedly increments the entry
/// maximizing pi/(m+1) (ties by point index, then by gamma); stops before
/// the z-degree bound l would exceed L.
MultiplicityMatrix kv_assign(const ReliabilityMatrix& pi, int L, const Code& code);

/// Variant stopping after exactly `budget` increments.
MultiplicityMatrix kv_assign_budget(const ReliabilityMatrix& pi, long long budget,
                                    const Code& code);

}  // namespace hermdec

#endif
