#include "vandervolt/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vandervolt/errors.hpp"

namespace vandervolt {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& field, int line) {
  const std::string t = strip(field);
  if (t.empty()) throw ParseError("empty numeric field", line);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    throw ParseError("cannot parse number '" + t + "'", line);
  return value;
}

std::vector<std::vector<double>> parse_numeric_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'", 0);
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (strip(line).empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) row.push_back(parse_number(field, lineno));
    if (row.empty()) throw ParseError("empty row", lineno);
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("expected " + std::to_string(rows.front().size()) + " columns, got " +
                           std::to_string(row.size()),
                       lineno);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("file '" + path + "' contains no data rows", 0);
  return rows;
}

}  // namespace

NodeSet parse_node_file(const std::string& path) {
  const auto rows = parse_numeric_rows(path);
  const int d = static_cast<int>(rows.front().size());
  std::vector<double> coords;
  coords.reserve(rows.size() * static_cast<std::size_t>(d));
  for (const auto& row : rows) coords.insert(coords.end(), row.begin(), row.end());
  try {
    return NodeSet(d, std::move(coords));
  } catch (const InvalidNodeSetError& e) {
    throw ParseError(std::string("invalid node set: ") + e.what(), 0);
  }
}

std::vector<double> parse_value_file(const std::string& path) {
  const auto rows = parse_numeric_rows(path);
  if (rows.front().size() != 1) throw ParseError("value file must have one column", 0);
  std::vector<double> values;
  values.reserve(rows.size());
  for (const auto& row : rows) values.push_back(row.front());
  return values;
}

BasisSequence parse_basis_spec(const std::string& spec, int d) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw ParseError("basis spec must look like 'monomial:degree=2'", 0);
  const std::string family_name = strip(spec.substr(0, colon));
  BasisFamily family;
  if (family_name == "monomial")
    family = BasisFamily::Monomial;
  else if (family_name == "chebyshev")
    family = BasisFamily::ChebyshevTensor;
  else
    throw ParseError("unknown basis family '" + family_name + "'", 0);

  const std::string rest = strip(spec.substr(colon + 1));
  const std::string prefix = "degree=";
  if (rest.rfind(prefix, 0) != 0)
    throw ParseError("basis spec must set 'degree=<k>'", 0);
  const std::string deg_str = rest.substr(prefix.size());
  int degree = 0;
  const auto [ptr, ec] = std::from_chars(deg_str.data(), deg_str.data() + deg_str.size(), degree);
  if (ec != std::errc{} || ptr != deg_str.data() + deg_str.size() || degree < 0)
    throw ParseError("bad degree '" + deg_str + "'", 0);
  return BasisSequence::total_degree(family, d, degree);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace vandervolt
