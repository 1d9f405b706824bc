// Command-line front end: encode, qpoly, decode, simulate.

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hermdec/sim.hpp"
#include "hermdec/textio.hpp"

using namespace hermdec;

namespace {

CodePtr make_code(int q, int u) { return Code::make(Curve::make(Field::make(q)), u); }

// "2:6:1" or "2:6" (step 1) or a single value
std::vector<double> parse_sweep(const std::string& s) {
    std::vector<double> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(':', pos);
        if (next == std::string::npos) next = s.size();
        parts.push_back(std::stod(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (parts.size() == 1) return parts;
    if (parts.size() == 2) parts.push_back(1.0);
    if (parts.size() != 3 || parts[2] <= 0) throw std::runtime_error("bad sweep: " + s);
    std::vector<double> out;
    for (double v = parts[0]; v <= parts[1] + 1e-9; v += parts[2]) out.push_back(v);
    return out;
}

void print_result(const Code& code, const DecodeResult& res, bool verbose) {
    if (verbose) {
        for (const auto& c : res.candidates)
            std::printf("candidate %s  score %lld  codeword %s\n", c.mu.str().c_str(),
                        c.score, format_vector(code.field(), c.codeword).c_str());
        std::printf("N %lld  w %d  l %d\n", res.bounds.N, res.bounds.w, res.l_used);
    }
    std::printf("message %s\n", format_vector(code.field(), res.message).c_str());
    std::printf("status %s\n", res.status == DecodeStatus::decoded_from_list
                                   ? "decoded-from-list"
                                   : "hard-decision-fallback");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Soft-decision list decoder for one-point Hermitian codes"};
    app.require_subcommand(1);

    int q = 2, u = 4, L = 1;
    std::string message, mult_path, rel_path, mod_name = "qpsk";
    std::string snr = "2:6:1", out_dir = ".";
    long long frames = 1000;
    std::uint64_t seed = 42;
    bool verbose = false;

    auto add_code_opts = [&](CLI::App* c) {
        c->add_option("--q", q, "base field size q (code over GF(q^2))")->required();
        c->add_option("--u", u, "pole order bound of the code C_u")->required();
    };

    auto* enc = app.add_subcommand("encode", "encode a message to a codeword");
    add_code_opts(enc);
    enc->add_option("--message", message, "comma-separated message symbols")->required();

    auto* qp = app.add_subcommand("qpoly", "interpolation polynomial for a multiplicity matrix");
    add_code_opts(qp);
    qp->add_option("--L", L, "list size bound (caps the z-degree)")->required();
    qp->add_option("--mult-matrix", mult_path, "CSV multiplicity matrix")->required();

    auto* dec = app.add_subcommand("decode", "decode soft information");
    add_code_opts(dec);
    dec->add_option("--L", L, "list size")->required();
    auto* rel = dec->add_option("--reliability", rel_path, "CSV reliability matrix");
    auto* mm = dec->add_option("--mult-matrix", mult_path, "CSV multiplicity matrix");
    rel->excludes(mm);
    dec->add_flag("--verbose", verbose, "print the candidate list with scores");

    auto* sim = app.add_subcommand("simulate", "AWGN Monte-Carlo sweep");
    add_code_opts(sim);
    sim->add_option("--L", L, "list size")->required();
    sim->add_option("--mod", mod_name, "bpsk, qpsk or 16qam");
    sim->add_option("--snr", snr, "Eb/N0 sweep in dB, start:stop[:step]");
    sim->add_option("--frames", frames, "frames per point");
    sim->add_option("--seed", seed, "random seed");
    sim->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enc) {
            auto code = make_code(q, u);
            auto msg = parse_vector(code->field(), message);
            std::printf("%s\n", format_vector(code->field(), code->encode(msg)).c_str());
        } else if (*qp) {
            auto code = make_code(q, u);
            auto M = MultiplicityMatrix::load_csv(mult_path);
            auto qr = q_polynomial(M, *code, L);
            std::printf("Q %s\n", qr.Q.str().c_str());
            std::printf("N %lld  w %d  l %d  deg_u(Q) %d  zdeg(Q) %d\n", qr.bounds.N,
                        qr.bounds.w, qr.l_used, qr.Q.weighted_degree_u(u), qr.Q.zdeg());
        } else if (*dec) {
            auto code = make_code(q, u);
            if (!rel_path.empty()) {
                auto pi = ReliabilityMatrix::load_csv(rel_path);
                print_result(*code, decode(pi, *code, L), verbose);
            } else if (!mult_path.empty()) {
                auto M = MultiplicityMatrix::load_csv(mult_path);
                print_result(*code, decode_from_M(M, *code, L), verbose);
            } else {
                throw std::runtime_error("decode needs --reliability or --mult-matrix");
            }
        } else if (*sim) {
            auto code = make_code(q, u);
            auto mod = parse_modulation(mod_name);
            auto recs = run_simulation(*code, mod, parse_sweep(snr), frames, seed, L);
            write_run_outputs(recs, *code, mod, frames, seed, L, out_dir);
            for (const auto& r : recs)
                std::printf("%g dB  fer %g  ber %g\n", r.ebn0_db, r.fer, r.ber);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
