// Python bindings for the main operations: codes, interpolation decoding
// and the AWGN simulation harness. Field elements cross the boundary as
// small integers in the internal encoding (0, 1, a, a^2, ... as 0, 1, 2,
// 3, ...); conversion helpers to the textual form are provided.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hermdec/sim.hpp"
#include "hermdec/textio.hpp"

namespace py = pybind11;
using namespace hermdec;

namespace {

ReliabilityMatrix to_reliability(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::runtime_error("empty reliability matrix");
    ReliabilityMatrix pi(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t g = 0; g < rows.size(); ++g) {
        if (rows[g].size() != rows[0].size())
            throw std::runtime_error("ragged reliability matrix");
        for (size_t i = 0; i < rows[g].size(); ++i)
            pi.at(static_cast<int>(g), static_cast<int>(i)) = rows[g][i];
    }
    pi.validate();
    return pi;
}

MultiplicityMatrix to_multiplicity(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw std::runtime_error("empty multiplicity matrix");
    MultiplicityMatrix M(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t g = 0; g < rows.size(); ++g) {
        if (rows[g].size() != rows[0].size())
            throw std::runtime_error("ragged multiplicity matrix");
        for (size_t i = 0; i < rows[g].size(); ++i)
            M.at(static_cast<int>(g), static_cast<int>(i)) = rows[g][i];
    }
    return M;
}

py::dict result_dict(const Code& code, const DecodeResult& res) {
    py::dict d;
    d["message"] = res.message;
    d["status"] = res.status == DecodeStatus::decoded_from_list
                      ? "decoded-from-list"
                      : "hard-decision-fallback";
    d["chosen_score"] = res.chosen_score;
    py::list cands;
    for (const auto& c : res.candidates) {
        py::dict e;
        e["function"] = c.mu.str();
        e["codeword"] = c.codeword;
        e["message"] = c.message;
        e["score"] = c.score;
        cands.append(e);
    }
    d["candidates"] = cands;
    d["N"] = res.bounds.N;
    d["w"] = res.bounds.w;
    d["l"] = res.l_used;
    (void)code;
    return d;
}

class PyCode {
public:
    PyCode(int q, int u) : code_(Code::make(Curve::make(Field::make(q)), u)) {}

    int q() const { return code_->q(); }
    int u() const { return code_->u(); }
    int n() const { return code_->n(); }
    int k() const { return code_->k(); }
    std::vector<int> information_set() const { return code_->information_set(); }

    std::vector<fe> encode(const std::vector<fe>& msg) const { return code_->encode(msg); }
    std::vector<fe> extract_message(const std::vector<fe>& cw) const {
        return code_->extract_message(cw);
    }

    std::string element_str(fe v) const { return code_->field().to_string(v); }
    fe parse_element(const std::string& s) const { return code_->field().parse(s); }

    py::dict decode(const std::vector<std::vector<double>>& pi, int L) const {
        return result_dict(*code_, hermdec::decode(to_reliability(pi), *code_, L));
    }
    py::dict decode_multiplicities(const std::vector<std::vector<int>>& M, int l_cap) const {
        return result_dict(*code_, decode_from_M(to_multiplicity(M), *code_, l_cap));
    }

    py::dict q_polynomial(const std::vector<std::vector<int>>& M, int l_cap) const {
        auto qr = hermdec::q_polynomial(to_multiplicity(M), *code_, l_cap);
        py::dict d;
        d["Q"] = qr.Q.str();
        d["N"] = qr.bounds.N;
        d["w"] = qr.bounds.w;
        d["l"] = qr.l_used;
        d["weighted_degree"] = qr.Q.weighted_degree_u(code_->u());
        d["z_degree"] = qr.Q.zdeg();
        return d;
    }

    std::vector<std::string> find_roots(const std::string& Q) const {
        auto poly = ZPoly::parse(code_->field(), code_->q(), Q);
        std::vector<std::string> out;
        for (const auto& r : hermdec::find_roots(poly, *code_)) out.push_back(r.str());
        return out;
    }

    py::list simulate(const std::string& modulation, const std::vector<double>& ebn0_db,
                      long long frames, std::uint64_t seed, int L) const {
        auto recs = run_simulation(*code_, parse_modulation(modulation), ebn0_db,
                                   frames, seed, L);
        py::list out;
        for (const auto& r : recs) {
            py::dict d;
            d["ebn0_db"] = r.ebn0_db;
            d["frames"] = r.frames;
            d["bit_errors"] = r.bit_errors;
            d["frame_errors"] = r.frame_errors;
            d["ber"] = r.ber;
            d["fer"] = r.fer;
            out.append(d);
        }
        return out;
    }

private:
    CodePtr code_;
};

}  // namespace

PYBIND11_MODULE(_hermdec, m) {
    m.doc() = "Soft-decision list decoding of one-point Hermitian codes";

    py::class_<PyCode>(m, "Code")
        .def(py::init<int, int>(), py::arg("q"), py::arg("u"))
        .def_property_readonly("q", &PyCode::q)
        .def_property_readonly("u", &PyCode::u)
        .def_property_readonly("n", &PyCode::n)
        .def_property_readonly("k", &PyCode::k)
        .def_property_readonly("information_set", &PyCode::information_set)
        .def("encode", &PyCode::encode, py::arg("message"))
        .def("extract_message", &PyCode::extract_message, py::arg("codeword"))
        .def("element_str", &PyCode::element_str, py::arg("value"))
        .def("parse_element", &PyCode::parse_element, py::arg("text"))
        .def("decode", &PyCode::decode, py::arg("reliability"), py::arg("L"))
        .def("decode_multiplicities", &PyCode::decode_multiplicities, py::arg("M"),
             py::arg("l_cap"))
        .def("q_polynomial", &PyCode::q_polynomial, py::arg("M"), py::arg("l_cap"))
        .def("find_roots", &PyCode::find_roots, py::arg("Q"))
        .def("simulate", &PyCode::simulate, py::arg("modulation"), py::arg("ebn0_db"),
             py::arg("frames"), py::arg("seed"), py::arg("L"));

    m.def("dimension_to_u", &Code::dimension_to_u, py::arg("q"), py::arg("k"),
          "pole order bound giving a code of the requested dimension");
}
