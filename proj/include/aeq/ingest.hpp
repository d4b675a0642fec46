#ifndef AEQ_INGEST_HPP
#define AEQ_INGEST_HPP

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "aeq/factor_integer_poly.hpp"
#include "aeq/int_polynomial.hpp"

namespace aeq {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldRecord {
  std::string label;
  IntPolynomial coeffs;
};

struct IngestResult {
  std::vector<FieldRecord> records;
  unsigned skipped = 0; // malformed or invalid rows
};

namespace detail {

inline bool parse_record_line(const std::string &line, FieldRecord &out)
{
  if (!line.empty() && line.front() == '{') {
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("label") || !j.contains("coeffs") ||
        !j["coeffs"].is_array())
      return false;
    std::vector<Int> cs;
    for (const auto &c : j["coeffs"]) {
      if (c.is_number_integer())
        cs.emplace_back(c.get<long long>());
      else if (c.is_string())
        cs.emplace_back(Int(c.get<std::string>()));
      else
        return false;
    }
    out.label = j["label"].get<std::string>();
    out.coeffs = IntPolynomial(std::move(cs));
    return true;
  }
  std::size_t tab = line.find('\t');
  if (tab == std::string::npos)
    return false;
  out.label = line.substr(0, tab);
  try {
    out.coeffs = IntPolynomial::parse(line.substr(tab + 1));
  } catch (const std::exception &) {
    return false;
  }
  return true;
}

} // namespace detail

// Line-oriented reader: either `label TAB [c0,...,1]` or a JSON object per
// line. Rows must define a monic irreducible degree-7 polynomial; anything
// else is counted and skipped. Duplicate polynomials are dropped, keeping
// the first label.
inline IngestResult ingest(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open input file: " + path);
  IngestResult result;
  std::set<std::vector<Int>> seen;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty() || line.front() == '#')
      continue;
    FieldRecord rec;
    if (!detail::parse_record_line(line, rec)) {
      ++result.skipped;
      continue;
    }
    if (rec.coeffs.degree() != 7 || !rec.coeffs.is_monic() ||
        !is_irreducible_z(rec.coeffs)) {
      ++result.skipped;
      continue;
    }
    if (!seen.insert(rec.coeffs.coeffs()).second)
      continue; // duplicate polynomial
    result.records.push_back(std::move(rec));
  }
  return result;
}

} // namespace aeq

#endif
