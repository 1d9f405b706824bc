/**
 * @file sim.hpp
 * @brief AWGN Monte-Carlo harness: modulation, posterior computation,
 *        frame loop and BER/FER tabulation.
 *
 * Energy convention: all constellations are normalized to average symbol
 * energy Es = 1, and Eb = Es / (rate * bits-per-channel-use) where rate
 * is k/n of the code. BPSK sends one bit per channel use.
 *
 * Randomness is a counter-based generator keyed by (seed, frame, draw),
 * so each frame is reproducible in isolation.
 */
#ifndef HERMDEC_SIM_HPP
#define HERMDEC_SIM_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hermdec/decoder.hpp"

namespace hermdec {

enum class Modulation { BPSK, QPSK, QAM16 };

Modulation parse_modulation(const std::string& name);
std::string modulation_name(Modulation m);

struct ChannelConfig {
    Modulation mod = Modulation::QPSK;
    double ebn0_db = 0.0;
    std::uint64_t seed = 0;
    long long frames = 1;
};

struct RunRecord {
    double ebn0_db = 0.0;
    long long frames = 0;
    long long bit_errors = 0;
    long long frame_errors = 0;
    double ber = 0.0;
    double fer = 0.0;

    bool operator==(const RunRecord& o) const = default;
};

/// Keyed counter generator (splitmix-style finalizer); uniform in [0, 2^64).
std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t frame, std::uint64_t draw);
/// Standard normal deviate, consuming draw indices 2*draw and 2*draw+1.
double counter_gauss(std::uint64_t seed, std::uint64_t frame, std::uint64_t draw);

/// Code bits carried per channel use (BPSK 1, QPSK 2, 16-QAM 4).
int bits_per_use(Modulation m);
/// Bits represented by one field symbol (log2 of the field size).
int bits_per_symbol(const Field& f);
/// Throws unless the modulation fits the field (QPSK needs GF(4), 16-QAM
/// needs GF(16), BPSK needs a characteristic-2 field).
void check_modulation(Modulation m, const Field& f);

/// Gray-mapped signal points for a symbol vector, Es = 1. BPSK emits
/// bits_per_symbol real points per symbol (high bit first).
std::vector<std::complex<double>> modulate(const std::vector<fe>& symbols,
                                           Modulation m, const Field& f);

/// Columnwise-normalized symbol posteriors from received points; n0 is the
/// total noise power per channel use (two dimensions for complex points).
/// BPSK symbol posteriors are products of the bit posteriors.
ReliabilityMatrix demodulate_posteriors(const std::vector<std::complex<double>>& received,
                                        Modulation m, const Field& f, double n0);

/// One Monte-Carlo point: random messages, AWGN, soft decode with list
/// size L, errors counted on the message bits.
RunRecord run_point(const Code& code, const ChannelConfig& config, int L);

/// Sweep over Eb/N0 values (dB).
std::vector<RunRecord> run_simulation(const Code& code, Modulation mod,
                                      const std::vector<double>& ebn0_db,
                                      long long frames, std::uint64_t seed, int L);

/// Two-column "snr value" lines.
void emit_table(const std::vector<RunRecord>& records, bool frame_rate,
                const std::string& path);
/// fer.table, ber.table and summary.json under dir (created if missing).
void write_run_outputs(const std::vector<RunRecord>& records, const Code& code,
                       Modulation mod, long long frames, std::uint64_t seed, int L,
                       const std::string& dir);

}  // namespace hermdec

#endif
