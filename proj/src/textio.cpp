#include "hermdec/textio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hermdec {

namespace {

std::string strip(std::string_view s) {
    std::string r;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) r += c;
    return r;
}

int parse_exp(std::string_view s) {
    if (s.empty()) return 1;  // "x" == "x^1"
    if (s[0] != '^') throw std::runtime_error("bad exponent: " + std::string(s));
    int k = 0;
    auto rest = s.substr(1);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || k < 0)
        throw std::runtime_error("bad exponent: " + std::string(s));
    return k;
}

}  // namespace

std::vector<Term> parse_terms(const Field& f, std::string_view sv) {
    std::string s = strip(sv);
    if (s.empty()) throw std::runtime_error("empty polynomial");
    std::vector<Term> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find('+', pos);
        std::string part = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() + 1 : next + 1;
        if (part.empty()) throw std::runtime_error("empty term");
        Term t;
        t.coeff = 1;
        bool saw_coeff = false, saw_var = false;
        size_t tp = 0;
        while (tp < part.size()) {
            size_t star = part.find('*', tp);
            std::string factor = part.substr(tp, star == std::string::npos ? star : star - tp);
            tp = star == std::string::npos ? part.size() : star + 1;
            if (factor.empty()) throw std::runtime_error("empty factor");
            char c = factor[0];
            if (c == 'x' || c == 'y' || c == 'z') {
                int k = parse_exp(std::string_view(factor).substr(1));
                if (c == 'x') t.xe += k;
                else if (c == 'y') t.ye += k;
                else t.ze += k;
                saw_var = true;
            } else {
                if (saw_coeff || saw_var)
                    throw std::runtime_error("coefficient must lead the term: " + part);
                t.coeff = f.parse(factor);
                saw_coeff = true;
            }
        }
        if (t.coeff != 0) out.push_back(t);
        if (pos == s.size() + 1) break;
    }
    return out;
}

std::string format_term(const Field& f, const Term& t) {
    std::string s;
    if (t.coeff != 1 || (t.xe == 0 && t.ye == 0 && t.ze == 0)) s = f.to_string(t.coeff);
    auto app = [&](char v, int k) {
        if (k == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (k > 1) s += "^" + std::to_string(k);
    };
    app('x', t.xe);
    app('y', t.ye);
    app('z', t.ze);
    return s;
}

std::vector<fe> parse_vector(const Field& f, std::string_view sv) {
    std::string s = strip(sv);
    std::vector<fe> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(',', pos);
        std::string part = s.substr(pos, next == std::string::npos ? next : next - pos);
        out.push_back(f.parse(part));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

std::string format_vector(const Field& f, const std::vector<fe>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += f.to_string(v[i]);
    }
    return s;
}

std::vector<std::vector<double>> read_csv_doubles(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (strip(line).empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_csv(const std::string& path, const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    }
}

}  // namespace hermdec
