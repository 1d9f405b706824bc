/**
 * @file textio.hpp
 * @brief Textual formats shared by the CLI and tests.
 *
 * Field elements use log form ("0", "1", "a", "a^2", ...). Polynomial
 * terms are written "c*x^i*y^j*z^k" with unit coefficients and zero
 * exponents omitted; terms are joined by '+'.
 */
#ifndef HERMDEC_TEXTIO_HPP
#define HERMDEC_TEXTIO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hermdec/field.hpp"

namespace hermdec {

struct Term {
    fe coeff = 0;
    int xe = 0, ye = 0, ze = 0;
};

/// Parse a '+'-separated sum of terms. Whitespace is ignored.
std::vector<Term> parse_terms(const Field& f, std::string_view s);

/// Render one term; coefficient of 1 with a nontrivial monomial is omitted.
std::string format_term(const Field& f, const Term& t);

/// Comma-separated vector of field elements.
std::vector<fe> parse_vector(const Field& f, std::string_view s);
std::string format_vector(const Field& f, const std::vector<fe>& v);

/// CSV matrices, one row per line.
std::vector<std::vector<double>> read_csv_doubles(const std::string& path);
void write_csv(const std::string& path, const std::vector<std::vector<double>>& rows);

}  // namespace hermdec

#endif
