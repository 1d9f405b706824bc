#include "hermdec/decoder.hpp"

#include <stdexcept>

namespace hermdec {

std::vector<fe> hard_decision(const ReliabilityMatrix& pi) {
    std::vector<fe> v(pi.n(), 0);
    for (int i = 0; i < pi.n(); ++i) {
        int best = 0;
        for (int g = 1; g < pi.q2(); ++g)
            if (pi.at(g, i) > pi.at(best, i)) best = g;
        v[i] = static_cast<fe>(best);
    }
    return v;
}

namespace {

std::vector<fe> hard_decision_from_M(const MultiplicityMatrix& M) {
    std::vector<fe> v(M.n(), 0);
    for (int i = 0; i < M.n(); ++i) {
        int best = 0;
        for (int g = 1; g < M.q2(); ++g)
            if (M.at(g, i) > M.at(best, i)) best = g;
        v[i] = static_cast<fe>(best);
    }
    return v;
}

DecodeResult decode_core(const MultiplicityMatrix& M, const Code& code, int l_cap,
                         const std::vector<fe>& fallback) {
    DecodeResult res;
    if (!M.all_zero()) {
        QResult qr = q_polynomial(M, code, l_cap);
        res.bounds = qr.bounds;
        res.l_used = qr.l_used;
        for (const RingElement& mu : find_roots(qr.Q, code)) {
            Candidate c;
            c.mu = mu;
            c.codeword = code.curve().evaluate(mu);
            c.message = code.extract_message(c.codeword);
            c.score = score(M, c.codeword);
            res.candidates.push_back(std::move(c));
        }
    }
    if (res.candidates.empty()) {
        res.status = DecodeStatus::hard_decision_fallback;
        res.message = code.extract_message(fallback);
        res.chosen_score = M.all_zero() ? 0 : score(M, fallback);
        return res;
    }
    size_t best = 0;
    for (size_t i = 1; i < res.candidates.size(); ++i)
        if (res.candidates[i].score > res.candidates[best].score) best = i;
    res.status = DecodeStatus::decoded_from_list;
    res.message = res.candidates[best].message;
    res.chosen_score = res.candidates[best].score;
    return res;
}

}  // namespace

DecodeResult decode(const ReliabilityMatrix& pi, const Code& code, int L) {
    if (L < 1) throw std::runtime_error("decode: list size must be >= 1");
    MultiplicityMatrix M = kv_assign(pi, L, code);
    return decode_core(M, code, L, hard_decision(pi));
}

DecodeResult decode_from_M(const MultiplicityMatrix& M, const Code& code, int l_cap) {
    return decode_core(M, code, l_cap, hard_decision_from_M(M));
}

}  // namespace hermdec
