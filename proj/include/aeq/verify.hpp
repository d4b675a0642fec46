#ifndef AEQ_VERIFY_HPP
#define AEQ_VERIFY_HPP

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "aeq/equivalence.hpp"
#include "aeq/search.hpp"
#include "aeq/types_enumeration.hpp"

namespace aeq {

// The four witness polynomials; overridable for fault-injection tests.
struct PaperData {
  IntPolynomial f1{1, -2, -1, 3, -5, 4, -3, 1};
  IntPolynomial g1{4, -1, 2, -2, -2, -1, 0, 1};
  IntPolynomial f2{2, -7, 0, -7, -14, -7, 0, 1};
  IntPolynomial g2{22, 7, -14, -14, 0, 0, 0, 1};
};

struct VerifyItem {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyItem> items;

  bool all_pass() const
  {
    for (const auto &i : items)
      if (!i.pass)
        return false;
    return true;
  }
};

namespace detail {

struct VerifyRunner {
  VerifyReport &report;

  void item(const std::string &id, const std::string &description,
            const std::function<std::pair<bool, std::string>()> &body)
  {
    VerifyItem it;
    it.id = id;
    it.description = description;
    try {
      auto [ok, detail] = body();
      it.pass = ok;
      it.detail = detail;
    } catch (const std::exception &e) {
      it.pass = false;
      it.detail = std::string("exception: ") + e.what();
    }
    report.items.push_back(std::move(it));
  }
};

inline std::string types_to_string(const std::vector<ArithmeticType> &ts)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i)
      os << ' ';
    os << ts[i];
  }
  return os.str();
}

} // namespace detail

// Every reproduced source value in one checklist. Failures are entries, not
// exceptions, so a single corrupted input only breaks its own items.
inline VerifyReport verify_paper(const PaperData &data = PaperData())
{
  VerifyReport report;
  detail::VerifyRunner run{report};

  const Int disc_pair1 = pow_int(2, 6) * pow_int(691, 2);
  const Int disc_pair2 = pow_int(2, 8) * pow_int(7, 8);

  // shared lazily-built objects; failures surface per item
  auto make_field = [](const IntPolynomial &f) {
    return std::make_shared<NumberField>(f);
  };
  std::shared_ptr<NumberField> k1, k1p, k2, k2p;

  auto field_disc_item = [&](const std::string &id, const IntPolynomial &poly,
                             std::shared_ptr<NumberField> &slot,
                             const Int &expected) {
    run.item(id, "field discriminant of " + poly.to_string(), [&] {
      slot = make_field(poly);
      std::ostringstream os;
      os << "disc = " << slot->field_disc() << ", expected " << expected;
      return std::make_pair(slot->field_disc() == expected, os.str());
    });
  };
  field_disc_item("disc.K1", data.f1, k1, disc_pair1);
  field_disc_item("disc.K1'", data.g1, k1p, disc_pair1);
  field_disc_item("disc.K2", data.f2, k2, disc_pair2);
  field_disc_item("disc.K2'", data.g2, k2p, disc_pair2);

  auto type_item = [&](const std::string &id,
                       const std::shared_ptr<NumberField> &field,
                       const Int &ell, const FactorizationType &expected) {
    run.item(id, "factorization type at " + ell.str(), [&] {
      if (!field)
        return std::make_pair(false, std::string("field unavailable"));
      FactorizationType got = field->decompose(ell).type;
      std::ostringstream os;
      os << "got " << got << ", expected " << expected;
      return std::make_pair(got == expected, os.str());
    });
  };
  type_item("type.K1.2", k1, 2, FactorizationType{{1, 4}, {3, 1}});
  type_item("type.K1'.2", k1p, 2, FactorizationType{{1, 1}, {3, 2}});
  type_item("type.K1.691", k1, 691,
            FactorizationType{{1, 1}, {1, 1}, {1, 1}, {2, 2}});
  type_item("type.K1'.691", k1p, 691,
            FactorizationType{{1, 2}, {1, 1}, {1, 2}, {2, 1}});
  type_item("type.K2.2", k2, 2, FactorizationType{{1, 1}, {1, 4}, {2, 1}});
  type_item("type.K2'.2", k2p, 2, FactorizationType{{1, 1}, {1, 2}, {2, 2}});

  auto equiv_item = [&](const std::string &id,
                        const std::shared_ptr<NumberField> &a,
                        const std::shared_ptr<NumberField> &b,
                        std::vector<RamSumComparison> &rows_out) {
    run.item(id, "arithmetic equivalence via compositum degrees <= 28", [&] {
      if (!a || !b)
        return std::make_pair(false, std::string("fields unavailable"));
      auto cert = check_equivalence(*a, *b, 1000);
      bool ok = cert.verdict == Verdict::Equivalent;
      long maxdeg = 0;
      bool has7 = false;
      for (long d : cert.compositum_degrees) {
        maxdeg = std::max(maxdeg, d);
        has7 = has7 || d == 7;
      }
      ok = ok && maxdeg <= 28 && !has7;
      if (ok)
        rows_out = compare_ramification_sums(*a, *b, cert);
      std::ostringstream os;
      os << to_string(cert.verdict) << ", compositum degrees [";
      for (std::size_t i = 0; i < cert.compositum_degrees.size(); ++i)
        os << (i ? "," : "") << cert.compositum_degrees[i];
      os << "]";
      return std::make_pair(ok, os.str());
    });
  };
  std::vector<RamSumComparison> rows1, rows2;
  equiv_item("equiv.pair1", k1, k1p, rows1);
  equiv_item("equiv.pair2", k2, k2p, rows2);

  auto ramsum_item = [&](const std::string &id,
                         const std::vector<RamSumComparison> &rows,
                         const Int &ell, int expect_a, int expect_b) {
    std::ostringstream desc;
    desc << "ramification sums at " << ell << " are " << expect_a << " vs "
         << expect_b;
    run.item(id, desc.str(), [&] {
      for (const auto &r : rows)
        if (r.prime == ell) {
          std::ostringstream os;
          os << r.sum_k << " vs " << r.sum_k1;
          return std::make_pair(r.sum_k == expect_a && r.sum_k1 == expect_b &&
                                    r.differs,
                                os.str());
        }
      return std::make_pair(false, std::string("prime not compared"));
    });
  };
  ramsum_item("ramsum.pair1.2", rows1, 2, 5, 3);
  ramsum_item("ramsum.pair1.691", rows1, 691, 5, 6);
  ramsum_item("ramsum.pair2.2", rows2, 2, 6, 5);

  // group engine
  std::shared_ptr<PermGroup> psl;
  run.item("group.order", "PSL2(F7) transitive on 7 points, order 168", [&] {
    psl = std::make_shared<PermGroup>(psl27_on_7_points());
    std::ostringstream os;
    os << "order " << psl->order() << ", degree " << psl->degree();
    return std::make_pair(psl->order() == 168 && psl->degree() == 7 &&
                              psl->is_transitive(),
                          os.str());
  });
  run.item("group.classes", "conjugacy class sizes {1,21,42,56,24,24}", [&] {
    if (!psl)
      return std::make_pair(false, std::string("group unavailable"));
    std::multiset<std::size_t> sizes;
    for (const auto &c : conjugacy_classes(*psl))
      sizes.insert(c.size());
    std::multiset<std::size_t> expected{1, 21, 24, 24, 42, 56};
    std::ostringstream os;
    for (auto s : sizes)
      os << s << ' ';
    return std::make_pair(sizes == expected, os.str());
  });
  run.item("group.subgroups",
           "15 subgroup classes, orders {1,2,3,4,4,4,6,7,8,12,12,21,24,24,168}",
           [&] {
             if (!psl)
               return std::make_pair(false, std::string("group unavailable"));
             std::multiset<std::size_t> orders;
             for (const auto &c : subgroup_classes(*psl))
               orders.insert(c.order());
             std::multiset<std::size_t> expected{1, 2, 3,  4,  4,  4,  6, 7,
                                                 8, 12, 12, 21, 24, 24, 168};
             std::ostringstream os;
             for (auto o : orders)
               os << o << ' ';
             return std::make_pair(orders == expected, os.str());
           });
  run.item("group.cycletypes",
           "cycle types exactly {1^7, 1^3 2^2, 1 3 3, 1 2 4, 7}", [&] {
             if (!psl)
               return std::make_pair(false, std::string("group unavailable"));
             std::set<std::vector<int>> types;
             for (const auto &e : psl->elements())
               types.insert(e.cycle_type());
             std::set<std::vector<int>> expected{{1, 1, 1, 1, 1, 1, 1},
                                                 {1, 1, 1, 2, 2},
                                                 {1, 3, 3},
                                                 {1, 2, 4},
                                                 {7}};
             return std::make_pair(types == expected, std::string());
           });
  run.item("group.gassmann",
           "the two S4 classes are quasi-conjugate but not conjugate", [&] {
             auto cert = gassmann_certificate_psl27();
             std::ostringstream os;
             os << "quasi=" << cert.quasi.quasi_conjugate
                << " conj=" << cert.conjugate;
             return std::make_pair(cert.quasi.quasi_conjugate &&
                                       !cert.conjugate,
                                   os.str());
           });

  // realizability oracle
  std::shared_ptr<std::set<FactorizationType>> tame;
  run.item("realize.esporadicos",
           "{(1,2,2),(3,1,1)} is not a tame PSL2(F7) splitting", [&] {
             if (!psl)
               return std::make_pair(false, std::string("group unavailable"));
             tame = std::make_shared<std::set<FactorizationType>>(
                 realizable_splittings(*psl, RamificationMode::Tame()));
             FactorizationType t{{1, 3}, {2, 1}, {2, 1}};
             return std::make_pair(tame->count(t) == 0, t.to_string());
           });
  auto absent_item = [&](const std::string &id, const FactorizationType &t) {
    run.item(id, t.to_string() + " is not a tame PSL2(F7) splitting", [&] {
      if (!tame)
        return std::make_pair(false, std::string("tame set unavailable"));
      return std::make_pair(tame->count(t) == 0, t.to_string());
    });
  };
  absent_item("realize.difi.32", FactorizationType{{1, 3}, {2, 2}});
  absent_item("realize.difi.51", FactorizationType{{1, 5}, {2, 1}});
  absent_item("realize.remarque", FactorizationType{{1, 1}, {2, 3}});

  // partition case analysis
  run.item("cases.filtered",
           "realizability-filtered ambiguous types = {(1,3),(1,1,2),(1,1,1,2)}",
           [&] {
             if (!psl)
               return std::make_pair(false, std::string("group unavailable"));
             std::vector<std::set<FactorizationType>> filters;
             filters.push_back(
                 realizable_splittings(*psl, RamificationMode::Tame()));
             for (unsigned p : {2u, 3u, 5u, 7u}) {
               std::set<FactorizationType> wild;
               for (const auto &pat : realizable_splittings(
                        *psl, RamificationMode::Wild(p)))
                 if (pat.wild_at(static_cast<int>(p)))
                   wild.insert(pat);
               filters.push_back(std::move(wild));
             }
             std::vector<ArithmeticType> got;
             for (const auto &a : ambiguous_arithmetic_types(7, filters))
               got.push_back(a.type);
             std::vector<ArithmeticType> expected{
                 ArithmeticType{1, 1, 1, 2}, ArithmeticType{1, 1, 2},
                 ArithmeticType{1, 3}};
             std::sort(got.begin(), got.end());
             std::sort(expected.begin(), expected.end());
             return std::make_pair(got == expected,
                                   detail::types_to_string(got));
           });
  run.item("cases.unfiltered",
           "unfiltered ambiguous types add (1,2) and (1,2,2)", [&] {
             std::vector<ArithmeticType> got;
             for (const auto &a : ambiguous_arithmetic_types(7))
               got.push_back(a.type);
             std::vector<ArithmeticType> expected{
                 ArithmeticType{1, 1, 1, 2}, ArithmeticType{1, 1, 2},
                 ArithmeticType{1, 2}, ArithmeticType{1, 2, 2},
                 ArithmeticType{1, 3}};
             std::sort(got.begin(), got.end());
             std::sort(expected.begin(), expected.end());
             return std::make_pair(got == expected,
                                   detail::types_to_string(got));
           });

  // discriminant-valuation windows
  run.item("window.tame", "tame valuation window {2,4}", [&] {
    auto amb = ambiguous_arithmetic_types(7);
    auto window = elcoro_valuation_window(amb, ValuationRegime::Tame);
    std::ostringstream os;
    for (int v : window)
      os << v << ' ';
    return std::make_pair(window == std::set<int>{2, 4}, os.str());
  });
  run.item("window.wild2", "wild-2 valuation window {6,8}", [&] {
    auto amb = ambiguous_arithmetic_types(7);
    auto window = elcoro_valuation_window(amb, ValuationRegime::WildTwo);
    std::ostringstream os;
    for (int v : window)
      os << v << ' ';
    return std::make_pair(window == std::set<int>{6, 8}, os.str());
  });
  run.item("window.v691", "v_691(disc) = 2 for pair 1", [&] {
    if (!k1)
      return std::make_pair(false, std::string("field unavailable"));
    unsigned v = valuation(k1->field_disc(), 691);
    std::ostringstream os;
    os << "v = " << v;
    return std::make_pair(v == 2, os.str());
  });

  return report;
}

} // namespace aeq

#endif
