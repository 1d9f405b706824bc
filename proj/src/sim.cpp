#include "hermdec/sim.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace hermdec {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

}  // namespace

std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t frame, std::uint64_t draw) {
    std::uint64_t z = seed;
    z = mix64(z + 0x9E3779B97F4A7C15ULL * (frame + 1));
    z = mix64(z + 0x9E3779B97F4A7C15ULL * (draw + 1));
    return mix64(z);
}

double counter_gauss(std::uint64_t seed, std::uint64_t frame, std::uint64_t draw) {
    // Box-Muller; u1 shifted into (0,1] so the log is finite.
    double u1 = 1.0 - (counter_rng(seed, frame, 2 * draw) >> 11) * 0x1p-53;
    double u2 = (counter_rng(seed, frame, 2 * draw + 1) >> 11) * 0x1p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

Modulation parse_modulation(const std::string& name) {
    std::string s;
    for (char c : name) s.push_back(static_cast<char>(std::tolower(c)));
    if (s == "bpsk") return Modulation::BPSK;
    if (s == "qpsk") return Modulation::QPSK;
    if (s == "qam16" || s == "16qam") return Modulation::QAM16;
    throw std::runtime_error("unknown modulation: " + name);
}

std::string modulation_name(Modulation m) {
    switch (m) {
        case Modulation::BPSK: return "bpsk";
        case Modulation::QPSK: return "qpsk";
        case Modulation::QAM16: return "qam16";
    }
    return "?";
}

int bits_per_use(Modulation m) {
    switch (m) {
        case Modulation::BPSK: return 1;
        case Modulation::QPSK: return 2;
        case Modulation::QAM16: return 4;
    }
    return 0;
}

int bits_per_symbol(const Field& f) {
    int sz = f.size();
    int b = 0;
    while ((1 << b) < sz) ++b;
    if ((1 << b) != sz)
        throw std::runtime_error("field size is not a power of two");
    return b;
}

void check_modulation(Modulation m, const Field& f) {
    switch (m) {
        case Modulation::BPSK:
            bits_per_symbol(f);  // throws unless characteristic 2
            return;
        case Modulation::QPSK:
            if (f.size() != 4) throw std::runtime_error("qpsk requires GF(4)");
            return;
        case Modulation::QAM16:
            if (f.size() != 16) throw std::runtime_error("qam16 requires GF(16)");
            return;
    }
}

namespace {

// Gray-coded 4-PAM levels for two bits (high, low), Es-normalized later.
double pam4(int b_hi, int b_lo) {
    static const double lvl[4] = {-3.0, -1.0, +1.0, +3.0};  // 00,01,11,10
    int idx = b_hi ? (b_lo ? 2 : 3) : (b_lo ? 1 : 0);
    return lvl[idx];
}

std::complex<double> map_point(fe s, Modulation m) {
    switch (m) {
        case Modulation::QPSK: {
            double i = (s & 1) ? -1.0 : 1.0;
            double q = (s & 2) ? -1.0 : 1.0;
            return {i / std::sqrt(2.0), q / std::sqrt(2.0)};
        }
        case Modulation::QAM16: {
            double i = pam4((s >> 3) & 1, (s >> 2) & 1);
            double q = pam4((s >> 1) & 1, s & 1);
            return {i / std::sqrt(10.0), q / std::sqrt(10.0)};
        }
        case Modulation::BPSK: break;
    }
    throw std::runtime_error("map_point: bad modulation");
}

}  // namespace

std::vector<std::complex<double>> modulate(const std::vector<fe>& symbols,
                                           Modulation m, const Field& f) {
    check_modulation(m, f);
    std::vector<std::complex<double>> out;
    if (m == Modulation::BPSK) {
        int bps = bits_per_symbol(f);
        out.reserve(symbols.size() * bps);
        for (fe s : symbols)
            for (int b = bps - 1; b >= 0; --b)
                out.emplace_back((s >> b) & 1 ? -1.0 : 1.0, 0.0);
    } else {
        out.reserve(symbols.size());
        for (fe s : symbols) out.push_back(map_point(s, m));
    }
    return out;
}

ReliabilityMatrix demodulate_posteriors(const std::vector<std::complex<double>>& received,
                                        Modulation m, const Field& f, double n0) {
    check_modulation(m, f);
    const int q2 = f.size();
    const int uses = m == Modulation::BPSK ? bits_per_symbol(f) : 1;
    if (received.size() % uses != 0)
        throw std::runtime_error("received length not a multiple of the symbol size");
    const int n = static_cast<int>(received.size()) / uses;

    ReliabilityMatrix pi(q2, n);
    std::vector<double> logp(q2);
    for (int i = 0; i < n; ++i) {
        for (int g = 0; g < q2; ++g) {
            double d2 = 0.0;
            if (m == Modulation::BPSK) {
                for (int b = 0; b < uses; ++b) {
                    double s = (g >> (uses - 1 - b)) & 1 ? -1.0 : 1.0;
                    double dr = received[i * uses + b].real() - s;
                    d2 += dr * dr;
                }
            } else {
                d2 = std::norm(received[i] - map_point(static_cast<fe>(g), m));
            }
            logp[g] = -d2 / n0;
        }
        double mx = *std::max_element(logp.begin(), logp.end());
        double sum = 0.0;
        for (int g = 0; g < q2; ++g) sum += std::exp(logp[g] - mx);
        for (int g = 0; g < q2; ++g) pi.at(g, i) = std::exp(logp[g] - mx) / sum;
    }
    return pi;
}

RunRecord run_point(const Code& code, const ChannelConfig& config, int L) {
    const Field& F = code.field();
    check_modulation(config.mod, F);
    if (config.frames < 1) throw std::runtime_error("frames must be >= 1");

    const int k = code.k();
    const int bps = bits_per_symbol(F);
    const double rate = static_cast<double>(k) / code.n();
    const double eb = 1.0 / (rate * bits_per_use(config.mod));
    const double n0 = eb / std::pow(10.0, config.ebn0_db / 10.0);
    const double sigma = std::sqrt(n0 / 2.0);
    const bool complex_noise = config.mod != Modulation::BPSK;

    RunRecord rec;
    rec.ebn0_db = config.ebn0_db;
    rec.frames = config.frames;
    for (long long frame = 0; frame < config.frames; ++frame) {
        std::vector<fe> msg(k);
        for (int r = 0; r < k; ++r)
            msg[r] = static_cast<fe>(counter_rng(config.seed, frame, r) % F.size());

        auto sent = modulate(code.encode(msg), config.mod, F);
        std::uint64_t draw = k;  // gauss indices start past the message draws
        for (auto& pt : sent) {
            double nr = sigma * counter_gauss(config.seed, frame, draw++);
            double ni = complex_noise
                            ? sigma * counter_gauss(config.seed, frame, draw++)
                            : 0.0;
            pt += std::complex<double>(nr, ni);
        }

        ReliabilityMatrix pi = demodulate_posteriors(sent, config.mod, F, n0);
        DecodeResult res = decode(pi, code, L);

        int bits = 0;
        for (int r = 0; r < k; ++r) {
            int diff = msg[r] ^ res.message[r];
            while (diff) {
                bits += diff & 1;
                diff >>= 1;
            }
        }
        rec.bit_errors += bits;
        if (bits > 0) rec.frame_errors += 1;
    }
    rec.ber = static_cast<double>(rec.bit_errors) /
              (static_cast<double>(rec.frames) * k * bps);
    rec.fer = static_cast<double>(rec.frame_errors) / rec.frames;
    return rec;
}

std::vector<RunRecord> run_simulation(const Code& code, Modulation mod,
                                      const std::vector<double>& ebn0_db,
                                      long long frames, std::uint64_t seed, int L) {
    std::vector<RunRecord> out;
    out.reserve(ebn0_db.size());
    for (double snr : ebn0_db)
        out.push_back(run_point(code, ChannelConfig{mod, snr, seed, frames}, L));
    return out;
}

void emit_table(const std::vector<RunRecord>& records, bool frame_rate,
                const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    for (const auto& r : records)
        os << r.ebn0_db << " " << (frame_rate ? r.fer : r.ber) << "\n";
}

void write_run_outputs(const std::vector<RunRecord>& records, const Code& code,
                       Modulation mod, long long frames, std::uint64_t seed, int L,
                       const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::filesystem::path base(dir);
    emit_table(records, true, (base / "fer.table").string());
    emit_table(records, false, (base / "ber.table").string());

    nlohmann::json j;
    j["code"] = {{"q", code.q()}, {"u", code.u()}, {"n", code.n()}, {"k", code.k()}};
    j["modulation"] = modulation_name(mod);
    j["frames"] = frames;
    j["seed"] = seed;
    j["L"] = L;
    j["points"] = nlohmann::json::array();
    for (const auto& r : records)
        j["points"].push_back({{"ebn0_db", r.ebn0_db},
                               {"frames", r.frames},
                               {"bit_errors", r.bit_errors},
                               {"frame_errors", r.frame_errors},
                               {"ber", r.ber},
                               {"fer", r.fer}});
    std::ofstream os(base / "summary.json");
    if (!os) throw std::runtime_error("cannot write summary.json");
    os << j.dump(2) << "\n";
}

}  // namespace hermdec
