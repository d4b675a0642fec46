#ifndef AEQ_SEARCH_HPP
#define AEQ_SEARCH_HPP

#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aeq/equivalence.hpp"
#include "aeq/ingest.hpp"
#include "aeq/splitting.hpp"
#include "aeq/types_enumeration.hpp"

namespace aeq {

struct SearchConfig {
  std::set<unsigned> a_exponents{3, 4}; // disc = 2^(2a) p^(2b)
  std::set<unsigned> b_exponents{1, 2};
  Int a_ell_bound = 1000;
  Int galois_bound = 1000;
  double pair_timeout_seconds = 120.0;
  std::uint64_t seed = kDefaultFactorSeed;
};

struct StageCount {
  std::string stage;
  std::size_t survivors;
};

struct CounterexamplePair {
  FieldRecord k, k1;
  EquivalenceCertificate certificate;
  std::vector<RamSumComparison> comparisons;
};

struct SearchReport {
  SearchConfig config;
  std::vector<StageCount> stages;
  std::vector<CounterexamplePair> pairs;
  std::vector<std::string> inconclusive; // per-pair timeout notes
  unsigned ingested = 0;
};

// The five-stage search over an ingested field table:
//   (i)   discriminant of the form 2^(2a) p^(2b),
//   (ii)  pairs with equal discriminant and signature whose type at 2 or p
//         is one of the sum-ambiguous arithmetic types,
//   (iii) PSL2(F7) fields,
//   (iv)  arithmetic equivalence,
//   (v)   a ramified prime with differing ramification sums.
inline SearchReport run_search(const std::vector<FieldRecord> &records,
                               const SearchConfig &config)
{
  SearchReport report;
  report.config = config;
  report.ingested = static_cast<unsigned>(records.size());

  struct Candidate {
    FieldRecord record;
    std::shared_ptr<NumberField> field;
    Int odd_prime;
  };

  // (i) discriminant form filter. The b window constrains the odd prime
  // only where the {2,4}-valuation corollary applies, i.e. when that prime
  // is tamely ramified; a wildly ramified odd prime escapes the window just
  // as ell = 2 does with its own {6,8} exponents.
  std::vector<Candidate> stage1;
  for (const auto &rec : records) {
    auto field = std::make_shared<NumberField>(rec.coeffs);
    const Int &d = field->field_disc();
    if (d <= 0)
      continue;
    auto fac = factor_integer(d);
    if (fac.size() != 2 || fac[0].first != 2)
      continue;
    unsigned v2 = fac[0].second, vp = fac[1].second;
    if (v2 % 2 || vp % 2)
      continue;
    if (!config.a_exponents.count(v2 / 2))
      continue;
    if (!config.b_exponents.count(vp / 2) &&
        !field->decompose(fac[1].first).wild)
      continue;
    stage1.push_back({rec, field, fac[1].first});
  }
  std::sort(stage1.begin(), stage1.end(),
            [](const Candidate &a, const Candidate &b) {
              return a.record.label < b.record.label;
            });
  report.stages.push_back({"(i) discriminant form 2^(2a) p^(2b)",
                           stage1.size()});

  // ambiguous arithmetic types under the PSL2(F7) realizability filter,
  // mode by mode (tame plus the wild regimes that can actually occur)
  PermGroup action = psl27_on_7_points();
  std::vector<std::set<FactorizationType>> filters;
  filters.push_back(realizable_splittings(action, RamificationMode::Tame()));
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    std::set<FactorizationType> wild;
    for (const auto &pat :
         realizable_splittings(action, RamificationMode::Wild(p)))
      if (pat.wild_at(static_cast<int>(p)))
        wild.insert(pat);
    filters.push_back(std::move(wild));
  }
  std::set<ArithmeticType> ambiguous;
  for (const auto &a : ambiguous_arithmetic_types(7, filters))
    ambiguous.insert(a.type);

  auto type_in_list = [&](const Candidate &c) {
    for (const Int &ell : {Int(2), c.odd_prime}) {
      auto dec = c.field->decompose(ell);
      if (ambiguous.count(dec.type.arithmetic_type()))
        return true;
    }
    return false;
  };

  // (ii) equal invariants + ambiguous type at a ramified prime
  std::vector<std::pair<std::size_t, std::size_t>> stage2;
  std::vector<bool> type_ok(stage1.size());
  for (std::size_t i = 0; i < stage1.size(); ++i)
    type_ok[i] = type_in_list(stage1[i]);
  for (std::size_t i = 0; i < stage1.size(); ++i)
    for (std::size_t j = i + 1; j < stage1.size(); ++j) {
      if (stage1[i].field->field_disc() != stage1[j].field->field_disc())
        continue;
      if (stage1[i].field->signature_real() !=
          stage1[j].field->signature_real())
        continue;
      if (!type_ok[i] || !type_ok[j])
        continue;
      stage2.emplace_back(i, j);
    }
  report.stages.push_back(
      {"(ii) equal (disc, signature), ambiguous type at 2 or p",
       stage2.size()});

  // (iii) PSL2(F7) Galois group
  std::vector<std::pair<std::size_t, std::size_t>> stage3;
  std::map<std::size_t, bool> is_psl;
  auto psl_check = [&](std::size_t i) {
    auto it = is_psl.find(i);
    if (it != is_psl.end())
      return it->second;
    bool ok = identify_galois7(*stage1[i].field, config.galois_bound).label ==
              GaloisLabel::PSL2_7;
    is_psl.emplace(i, ok);
    return ok;
  };
  for (const auto &[i, j] : stage2)
    if (psl_check(i) && psl_check(j))
      stage3.emplace_back(i, j);
  report.stages.push_back({"(iii) PSL2(F7) septic fields", stage3.size()});

  // (iv) arithmetic equivalence
  std::vector<std::tuple<std::size_t, std::size_t, EquivalenceCertificate>>
      stage4;
  for (const auto &[i, j] : stage3) {
    Deadline deadline = Deadline::after_seconds(config.pair_timeout_seconds);
    try {
      auto cert = check_equivalence(*stage1[i].field, *stage1[j].field,
                                    config.a_ell_bound, deadline);
      if (cert.verdict == Verdict::Equivalent)
        stage4.emplace_back(i, j, std::move(cert));
    } catch (const TimeoutExpired &) {
      report.inconclusive.push_back(stage1[i].record.label + " / " +
                                    stage1[j].record.label +
                                    ": timeout, inconclusive");
    }
  }
  report.stages.push_back({"(iv) arithmetically equivalent", stage4.size()});

  // (v) differing ramification sums
  for (const auto &[i, j, cert] : stage4) {
    auto rows =
        compare_ramification_sums(*stage1[i].field, *stage1[j].field, cert);
    bool any = false;
    for (const auto &r : rows)
      any = any || r.differs;
    if (!any)
      continue;
    CounterexamplePair pair;
    pair.k = stage1[i].record;
    pair.k1 = stage1[j].record;
    pair.certificate = cert;
    pair.comparisons = std::move(rows);
    report.pairs.push_back(std::move(pair));
  }
  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const CounterexamplePair &a, const CounterexamplePair &b) {
              if (a.k.label != b.k.label)
                return a.k.label < b.k.label;
              return a.k1.label < b.k1.label;
            });
  report.stages.push_back(
      {"(v) differing ramification sums", report.pairs.size()});
  return report;
}

} // namespace aeq

#endif
