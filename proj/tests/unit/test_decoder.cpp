#include <doctest.h>

#include <random>

#include "hermdec/decoder.hpp"

using namespace hermdec;

namespace {

ReliabilityMatrix certainty(const Field& F, const std::vector<fe>& v) {
    ReliabilityMatrix pi(F.size(), static_cast<int>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) pi.at(v[i], static_cast<int>(i)) = 1.0;
    return pi;
}

ReliabilityMatrix noisy(const Field& F, const std::vector<fe>& v, double p,
                        std::mt19937& rng) {
    // mass p on the true symbol, rest spread with random perturbation
    ReliabilityMatrix pi(F.size(), static_cast<int>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        double rest = 1.0 - p;
        std::vector<double> r(F.size());
        double s = 0;
        for (int g = 0; g < F.size(); ++g) s += r[g] = (rng() % 100) + 1;
        for (int g = 0; g < F.size(); ++g)
            pi.at(g, static_cast<int>(i)) = (g == v[i] ? p : 0.0) + rest * r[g] / s;
        double tot = 0;
        for (int g = 0; g < F.size(); ++g) tot += pi.at(g, static_cast<int>(i));
        for (int g = 0; g < F.size(); ++g) pi.at(g, static_cast<int>(i)) /= tot;
    }
    return pi;
}

}  // namespace

TEST_CASE("certain reliabilities decode to the sent message") {
    auto F = Field::make(2);
    auto code = Code::make(Curve::make(F), 4);
    std::mt19937 rng(113);
    for (int L : {1, 2}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<fe> msg(code->k());
            for (auto& m : msg) m = static_cast<fe>(rng() % F->size());
            auto pi = certainty(*F, code->encode(msg));
            auto res = decode(pi, *code, L);
            CHECK(res.status == DecodeStatus::decoded_from_list);
            CHECK(res.message == msg);
        }
    }
}

TEST_CASE("mildly noisy reliabilities still decode") {
    auto F = Field::make(2);
    auto code = Code::make(Curve::make(F), 4);
    std::mt19937 rng(127);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<fe> msg(code->k());
        for (auto& m : msg) m = static_cast<fe>(rng() % F->size());
        auto pi = noisy(*F, code->encode(msg), 0.85, rng);
        auto res = decode(pi, *code, 2);
        CHECK(res.message == msg);
    }
}

TEST_CASE("best score wins among multiple candidates") {
    // the worked example: two roots with scores 22 and 23
    auto F = Field::make(2);
    auto code = Code::make(Curve::make(F), 4);
    int rows[4][8] = {{3, 0, 0, 0, 2, 4, 5, 2},
                      {2, 0, 3, 0, 0, 0, 0, 0},
                      {0, 0, 0, 5, 1, 0, 0, 2},
                      {0, 4, 0, 0, 0, 0, 0, 0}};
    MultiplicityMatrix M(4, 8);
    for (int g = 0; g < 4; ++g)
        for (int i = 0; i < 8; ++i) M.at(g, i) = rows[g][i];
    auto res = decode_from_M(M, *code, 5);
    CHECK(res.status == DecodeStatus::decoded_from_list);
    REQUIRE(res.candidates.size() == 2);
    CHECK(res.chosen_score == 23);
    CHECK(res.message == std::vector<fe>{1, 3, 0, 2});
    for (const auto& c : res.candidates)
        CHECK(code->encode(c.message) == c.codeword);
}

TEST_CASE("empty list falls back to hard decision") {
    auto F = Field::make(2);
    auto code = Code::make(Curve::make(F), 4);
    MultiplicityMatrix M(4, 8);  // all zero: no interpolation possible
    auto res = decode_from_M(M, *code, 1);
    CHECK(res.status == DecodeStatus::hard_decision_fallback);
    CHECK(res.message == std::vector<fe>(4, 0));
}

TEST_CASE("hard decision picks columnwise argmax") {
    auto F = Field::make(2);
    ReliabilityMatrix pi(4, 3);
    double v[4][3] = {{0.1, 0.7, 0.25}, {0.2, 0.1, 0.25}, {0.4, 0.1, 0.25}, {0.3, 0.1, 0.25}};
    for (int g = 0; g < 4; ++g)
        for (int i = 0; i < 3; ++i) pi.at(g, i) = v[g][i];
    CHECK(hard_decision(pi) == std::vector<fe>{2, 0, 0});
}

TEST_CASE("invalid list size throws") {
    auto code = Code::make(Curve::make(Field::make(2)), 4);
    ReliabilityMatrix pi(4, 8);
    CHECK_THROWS(decode(pi, *code, 0));
}
