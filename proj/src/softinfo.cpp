#include "hermdec/softinfo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hermdec/textio.hpp"

namespace hermdec {

void ReliabilityMatrix::validate() const {
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int g = 0; g < q2_; ++g) {
            double v = at(g, i);
            if (v < 0.0 || v > 1.0)
                throw std::runtime_error("probability out of [0,1]");
            s += v;
        }
        if (std::abs(s - 1.0) > 1e-9)
            throw std::runtime_error("reliability column does not sum to 1");
    }
}

ReliabilityMatrix ReliabilityMatrix::load_csv(const std::string& path) {
    auto rows = read_csv_doubles(path);
    if (rows.empty()) throw std::runtime_error("empty reliability matrix");
    ReliabilityMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int g = 0; g < m.q2_; ++g) {
        if (static_cast<int>(rows[g].size()) != m.n_)
            throw std::runtime_error("ragged reliability matrix");
        for (int i = 0; i < m.n_; ++i) m.at(g, i) = rows[g][i];
    }
    return m;
}

void ReliabilityMatrix::save_csv(const std::string& path) const {
    std::vector<std::vector<double>> rows(q2_, std::vector<double>(n_));
    for (int g = 0; g < q2_; ++g)
        for (int i = 0; i < n_; ++i) rows[g][i] = at(g, i);
    write_csv(path, rows);
}

long long MultiplicityMatrix::cost() const {
    long long c = 0;
    for (int v : m_) c += static_cast<long long>(v + 1) * v / 2;
    return c;
}

bool MultiplicityMatrix::all_zero() const {
    for (int v : m_)
        if (v != 0) return false;
    return true;
}

MultiplicityMatrix MultiplicityMatrix::load_csv(const std::string& path) {
    auto rows = read_csv_doubles(path);
    if (rows.empty()) throw std::runtime_error("empty multiplicity matrix");
    MultiplicityMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int g = 0; g < m.q2_; ++g) {
        if (static_cast<int>(rows[g].size()) != m.n_)
            throw std::runtime_error("ragged multiplicity matrix");
        for (int i = 0; i < m.n_; ++i) {
            double v = rows[g][i];
            int iv = static_cast<int>(std::llround(v));
            if (iv < 0 || std::abs(v - iv) > 1e-9)
                throw std::runtime_error("multiplicities must be nonnegative integers");
            m.at(g, i) = iv;
        }
    }
    return m;
}

void MultiplicityMatrix::save_csv(const std::string& path) const {
    std::vector<std::vector<double>> rows(q2_, std::vector<double>(n_));
    for (int g = 0; g < q2_; ++g)
        for (int i = 0; i < n_; ++i) rows[g][i] = at(g, i);
    write_csv(path, rows);
}

bool gap_indicator(int i, int q) {
    if (i < 0) return false;
    for (int b = 0; b < q; ++b) {
        int rest = i - (q + 1) * b;
        if (rest >= 0 && rest % q == 0) return true;
    }
    return false;
}

long long count_monomials_C(int i, int u, int q) {
    long long c = 0;
    for (int j = 0; j <= i / u; ++j) c += gap_indicator(i - u * j, q) ? 1 : 0;
    return c;
}

DegreeBounds degree_bounds(const MultiplicityMatrix& M, int u, int q) {
    if (M.all_zero()) throw std::runtime_error("degree_bounds of zero matrix");
    DegreeBounds b;
    b.N = 1 + M.cost();
    long long acc = 0;
    int w = 0;
    for (;; ++w) {
        acc += count_monomials_C(w, u, q);
        if (acc >= b.N) break;
    }
    b.w = w;
    b.l = w / u;
    return b;
}

long long score(const MultiplicityMatrix& M, const std::vector<fe>& v) {
    if (static_cast<int>(v.size()) != M.n())
        throw std::runtime_error("score: vector length != n");
    long long s = 0;
    for (int i = 0; i < M.n(); ++i) s += M.at(v[i], i);
    return s;
}

namespace {

MultiplicityMatrix kv_greedy(const ReliabilityMatrix& pi, const Code& code,
                             long long max_increments, int L) {
    const int q2 = pi.q2();
    const int n = pi.n();
    if (q2 != code.field().size() || n != code.n())
        throw std::runtime_error("kv_assign: shape mismatch");
    pi.validate();
    MultiplicityMatrix M(q2, n);
    const int u = code.u();
    const int q = code.q();

    // Cumulative C(i) table, grown on demand, for the w search.
    std::vector<long long> cum;
    auto cum_to = [&](int w) {
        while (static_cast<int>(cum.size()) <= w) {
            int i = static_cast<int>(cum.size());
            long long prev = cum.empty() ? 0 : cum.back();
            cum.push_back(prev + count_monomials_C(i, u, q));
        }
        return cum[w];
    };
    auto l_of = [&](long long N) {
        int w = 0;
        while (cum_to(w) < N) ++w;
        return w / u;
    };

    long long N = 1;
    for (long long step = 0; step < max_increments; ++step) {
        double best = -1.0;
        int bi = -1, bg = -1;
        for (int i = 0; i < n; ++i)
            for (int g = 0; g < q2; ++g) {
                double r = pi.at(g, i) / (M.at(g, i) + 1);
                if (r > best) {
                    best = r;
                    bi = i;
                    bg = g;
                }
            }
        if (best <= 0.0) break;
        long long newN = N + M.at(bg, bi) + 1;  // cost delta of one increment
        if (L >= 0 && l_of(newN) > L) break;
        M.at(bg, bi) += 1;
        N = newN;
    }
    return M;
}

}  // namespace

MultiplicityMatrix kv_assign(const ReliabilityMatrix& pi, int L, const Code& code) {
    if (L < 1) throw std::runtime_error("kv_assign: L must be >= 1");
    return kv_greedy(pi, code, std::numeric_limits<long long>::max(), L);
}

MultiplicityMatrix kv_assign_budget(const ReliabilityMatrix& pi, long long budget,
                                    const Code& code) {
    return kv_greedy(pi, code, budget, -1);
}

}  // namespace hermdec
