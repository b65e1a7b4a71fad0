#pragma once

#include <string>
#include <vector>

#include "vandervolt/basis.hpp"
#include "vandervolt/vandermonde.hpp"

namespace vandervolt {

/// Doubles as "%.9g"; infinities print as "inf"/"-inf".
std::string format_double(double v);

/// Node file: CSV, one node per row, d columns (d inferred from the first
/// data row), no header, '#' starts a comment. Throws ParseError with the
/// offending 1-based line.
NodeSet parse_node_file(const std::string& path);

/// Values file: one number per row, same comment rules.
std::vector<double> parse_value_file(const std::string& path);

/// Basis spec "family:degree=K" with family in {monomial, chebyshev};
/// expands to the full total-degree sequence in dimension d.
BasisSequence parse_basis_spec(const std::string& spec, int d);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace vandervolt
