#ifndef AEQ_REPORT_HPP
#define AEQ_REPORT_HPP

#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "aeq/search.hpp"
#include "aeq/verify.hpp"

namespace aeq {

enum class ReportFormat { Text, Machine };

inline nlohmann::json to_json(const FactorizationType &t)
{
  nlohmann::json fs = nlohmann::json::array();
  nlohmann::json es = nlohmann::json::array();
  for (const auto &p : t.pairs()) {
    fs.push_back(p.f);
    es.push_back(p.e);
  }
  return {{"f", fs}, {"e", es}};
}

inline nlohmann::json to_json(const EquivalenceCertificate &c)
{
  nlohmann::json j;
  j["verdict"] = to_string(c.verdict);
  j["method"] = c.method == EquivalenceMethod::PrimeDegreeCompositum
                    ? "prime_degree_compositum"
                    : (c.method == EquivalenceMethod::AellMismatch
                           ? "a_ell_mismatch"
                           : "none");
  j["compositum_degrees"] = c.compositum_degrees;
  j["a_ell_checked_bound"] = c.a_ell_checked_bound.str();
  if (c.first_mismatch_prime)
    j["first_mismatch_prime"] = c.first_mismatch_prime->str();
  j["isomorphic_fields"] = c.isomorphic_fields;
  j["notes"] = c.notes;
  return j;
}

inline std::string render_certificate_text(const EquivalenceCertificate &c)
{
  std::ostringstream os;
  os << "verdict: " << to_string(c.verdict) << "\n";
  os << "method:  "
     << (c.method == EquivalenceMethod::PrimeDegreeCompositum
             ? "prime_degree_compositum"
             : (c.method == EquivalenceMethod::AellMismatch ? "a_ell_mismatch"
                                                            : "none"))
     << "\n";
  if (!c.compositum_degrees.empty()) {
    os << "compositum degrees: ";
    for (std::size_t i = 0; i < c.compositum_degrees.size(); ++i)
      os << (i ? " " : "") << c.compositum_degrees[i];
    os << "\n";
  }
  os << "a_ell agreement checked for unramified primes <= "
     << c.a_ell_checked_bound << "\n";
  if (c.first_mismatch_prime)
    os << "first mismatch prime: " << *c.first_mismatch_prime << "\n";
  if (c.isomorphic_fields)
    os << "fields are isomorphic\n";
  if (!c.notes.empty())
    os << "notes: " << c.notes << "\n";
  return os.str();
}

inline std::string render_ramsum_text(const std::vector<RamSumComparison> &rows)
{
  std::ostringstream os;
  os << "prime      type(K)                 type(K')                sums  differ\n";
  for (const auto &r : rows) {
    std::ostringstream a, b;
    a << r.type_k;
    b << r.type_k1;
    os << r.prime << std::string(r.prime.str().size() < 10
                                     ? 11 - r.prime.str().size()
                                     : 1,
                                 ' ')
       << a.str() << std::string(a.str().size() < 23 ? 24 - a.str().size() : 1,
                                 ' ')
       << b.str() << std::string(b.str().size() < 23 ? 24 - b.str().size() : 1,
                                 ' ')
       << r.sum_k << " " << r.sum_k1 << "   " << (r.differs ? "yes" : "no");
    if (!r.types_match)
      os << "  [arithmetic types differ]";
    os << "\n";
  }
  return os.str();
}

inline nlohmann::json to_json(const RamSumComparison &r)
{
  return {{"prime", r.prime.str()},
          {"type_K", to_json(r.type_k)},
          {"type_K1", to_json(r.type_k1)},
          {"sum_K", r.sum_k},
          {"sum_K1", r.sum_k1},
          {"differs", r.differs},
          {"arithmetic_types_match", r.types_match}};
}

inline std::string render_search_report(const SearchReport &report,
                                        ReportFormat format)
{
  if (format == ReportFormat::Machine) {
    nlohmann::json j;
    j["ingested"] = report.ingested;
    j["stages"] = nlohmann::json::array();
    for (const auto &s : report.stages)
      j["stages"].push_back({{"stage", s.stage}, {"survivors", s.survivors}});
    j["pairs"] = nlohmann::json::array();
    for (const auto &p : report.pairs) {
      nlohmann::json pj;
      pj["K"] = {{"label", p.k.label}, {"coeffs", p.k.coeffs.to_string()}};
      pj["K1"] = {{"label", p.k1.label}, {"coeffs", p.k1.coeffs.to_string()}};
      pj["certificate"] = to_json(p.certificate);
      pj["comparisons"] = nlohmann::json::array();
      for (const auto &r : p.comparisons)
        pj["comparisons"].push_back(to_json(r));
      j["pairs"].push_back(std::move(pj));
    }
    j["inconclusive"] = report.inconclusive;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "search pipeline (" << report.ingested << " fields ingested)\n";
  for (const auto &s : report.stages)
    os << "  " << s.stage << ": " << s.survivors << "\n";
  os << "\n";
  if (report.pairs.empty())
    os << "no counterexample pairs found\n";
  for (const auto &p : report.pairs) {
    os << "pair: " << p.k.label << " " << p.k.coeffs << "\n";
    os << "      " << p.k1.label << " " << p.k1.coeffs << "\n";
    os << render_certificate_text(p.certificate);
    os << render_ramsum_text(p.comparisons);
    os << "\n";
  }
  for (const auto &note : report.inconclusive)
    os << "inconclusive: " << note << "\n";
  return os.str();
}

inline std::string render_verify_report(const VerifyReport &report,
                                        ReportFormat format)
{
  if (format == ReportFormat::Machine) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto &i : report.items)
      j.push_back({{"id", i.id},
                   {"description", i.description},
                   {"pass", i.pass},
                   {"detail", i.detail}});
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto &i : report.items) {
    os << (i.pass ? "[PASS] " : "[FAIL] ") << i.id << "  " << i.description;
    if (!i.detail.empty())
      os << "  (" << i.detail << ")";
    os << "\n";
  }
  os << (report.all_pass() ? "all checks passed" : "SOME CHECKS FAILED")
     << "\n";
  return os.str();
}

// the grouped degree-n table: sections by g, sub-grouped by the partition
// f1 e1 + ... + fg eg, listing types with at least one e > 1
inline std::string render_types_table(int degree,
                                      const std::set<FactorizationType> *realizable,
                                      ReportFormat format)
{
  auto all = enumerate_factorization_types(degree);
  if (format == ReportFormat::Machine) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto &t : all) {
      nlohmann::json e = to_json(t);
      e["g"] = t.pairs().size();
      e["ramification_sum"] = t.ramification_sum();
      if (realizable)
        e["realizable"] = realizable->count(t) > 0;
      j.push_back(std::move(e));
    }
    return j.dump(2) + "\n";
  }
  std::map<std::size_t, std::map<std::vector<int>, std::vector<FactorizationType>>>
      by_g;
  for (const auto &t : all) {
    std::vector<int> partition;
    for (const auto &p : t.pairs())
      partition.push_back(p.f * p.e);
    std::sort(partition.begin(), partition.end());
    by_g[t.pairs().size()][partition].push_back(t);
  }
  std::ostringstream os;
  for (const auto &[g, parts] : by_g) {
    os << "g = " << g << "\n";
    for (const auto &[partition, types] : parts) {
      os << "  ";
      for (std::size_t i = 0; i < partition.size(); ++i)
        os << (i ? "+" : "") << partition[i];
      os << ":";
      bool any = false;
      for (const auto &t : types) {
        if (t.is_unramified())
          continue;
        any = true;
        os << "  " << t;
        if (realizable)
          os << (realizable->count(t) ? " [realizable]" : " [not realizable]");
      }
      if (!any)
        os << "  (unramified only)";
      os << "\n";
    }
  }
  return os.str();
}

} // namespace aeq

#endif
