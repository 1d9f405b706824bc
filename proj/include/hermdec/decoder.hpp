/**
 * @file decoder.hpp
 * @brief List decoding pipeline: multiplicity assignment, interpolation,
 *        root finding and candidate selection.
 */
#ifndef HERMDEC_DECODER_HPP
#define HERMDEC_DECODER_HPP

#include <vector>

#include "hermdec/interp.hpp"
#include "hermdec/rootfind.hpp"

namespace hermdec {

enum class DecodeStatus {
    decoded_from_list,       ///< best-scoring interpolation root
    hard_decision_fallback,  ///< empty list; per-column argmax projected
};

struct Candidate {
    RingElement mu;
    std::vector<fe> codeword;
    std::vector<fe> message;
    long long score = 0;
};

struct DecodeResult {
    std::vector<fe> message;
    DecodeStatus status = DecodeStatus::hard_decision_fallback;
    std::vector<Candidate> candidates;  ///< in root search order
    long long chosen_score = 0;
    DegreeBounds bounds;
    int l_used = 0;
};

/// Soft-decision decode: Koetter-Vardy assignment with list size L, then
/// interpolation and root finding. Fallback uses the columnwise argmax of
/// the reliability matrix.
DecodeResult decode(const ReliabilityMatrix& pi, const Code& code, int L);

/// Decode from a given multiplicity matrix; z-degree capped at l_cap.
/// Fallback uses the columnwise argmax of M (smallest symbol on ties).
DecodeResult decode_from_M(const MultiplicityMatrix& M, const Code& code, int l_cap);

/// Columnwise argmax symbols (smallest symbol index on ties).
std::vector<fe> hard_decision(const ReliabilityMatrix& pi);

}  // namespace hermdec

#endif
