#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aeq/report.hpp"

namespace {

aeq::ReportFormat parse_format(const std::string &s)
{
  if (s == "machine")
    return aeq::ReportFormat::Machine;
  return aeq::ReportFormat::Text;
}

aeq::NumberField field_from_arg(const std::string &poly)
{
  return aeq::NumberField(aeq::IntPolynomial::parse(poly));
}

void print_group_report(aeq::ReportFormat format)
{
  using namespace aeq;
  PermGroup g = psl27_on_7_points();
  auto classes = conjugacy_classes(g);
  auto subs = subgroup_classes(g);
  auto cert = gassmann_certificate_psl27();
  if (format == ReportFormat::Machine) {
    nlohmann::json j;
    j["order"] = g.order();
    j["degree"] = g.degree();
    j["generators"] = nlohmann::json::array();
    for (const auto &gen : g.generators())
      j["generators"].push_back(gen.to_string());
    j["conjugacy_classes"] = nlohmann::json::array();
    for (const auto &c : classes)
      j["conjugacy_classes"].push_back(
          {{"size", c.size()},
           {"representative", c.representative.to_string()},
           {"order", c.representative.order()}});
    j["subgroup_classes"] = nlohmann::json::array();
    for (const auto &s : subs)
      j["subgroup_classes"].push_back(
          {{"order", s.order()}, {"conjugates", s.conjugate_count}});
    nlohmann::json table = nlohmann::json::array();
    for (const auto &row : cert.quasi.table)
      table.push_back({{"class_size", row.class_size},
                       {"count_H1", row.count_h},
                       {"count_H2", row.count_h1}});
    j["gassmann"] = {{"quasi_conjugate", cert.quasi.quasi_conjugate},
                     {"conjugate", cert.conjugate},
                     {"table", table}};
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "PSL2(F7), transitive degree-7 action\n";
  std::cout << "order: " << g.order() << "\n";
  std::cout << "generators:";
  for (const auto &gen : g.generators())
    std::cout << " " << gen;
  std::cout << "\n\nconjugacy classes (size, element order):\n";
  for (const auto &c : classes)
    std::cout << "  size " << c.size() << ", order "
              << c.representative.order() << ", rep " << c.representative
              << "\n";
  std::cout << "\nsubgroup lattice up to conjugacy (order, #conjugates):\n";
  for (const auto &s : subs)
    std::cout << "  order " << s.order() << ", conjugates "
              << s.conjugate_count << "\n";
  std::cout << "\nGassmann certificate for the two S4 classes:\n";
  std::cout << "  quasi-conjugate: "
            << (cert.quasi.quasi_conjugate ? "yes" : "no")
            << ", conjugate: " << (cert.conjugate ? "yes" : "no") << "\n";
  std::cout << "  class size | #(C∩H1) | #(C∩H2)\n";
  for (const auto &row : cert.quasi.table)
    std::cout << "  " << row.class_size << "  " << row.count_h << "  "
              << row.count_h1 << "\n";
}

void print_field_info(const aeq::NumberField &k, aeq::ReportFormat format)
{
  using namespace aeq;
  if (format == ReportFormat::Machine) {
    nlohmann::json j;
    j["poly"] = k.defining_poly().to_string();
    j["degree"] = k.degree();
    j["poly_disc"] = k.poly_disc().str();
    j["field_disc"] = k.field_disc().str();
    j["index"] = k.index().str();
    j["signature"] = {k.signature_real(), k.signature_complex_pairs()};
    nlohmann::json basis = nlohmann::json::array();
    for (const auto &row : k.basis_numerators()) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto &c : row)
        r.push_back(c.str());
      basis.push_back(std::move(r));
    }
    j["basis_numerators"] = std::move(basis);
    j["basis_denominator"] = k.basis_denominator().str();
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "poly:       " << k.defining_poly() << "\n";
  std::cout << "degree:     " << k.degree() << "\n";
  std::cout << "disc(f):    " << k.poly_disc() << "\n";
  std::cout << "field disc: " << k.field_disc() << "\n";
  std::cout << "index:      " << k.index() << "\n";
  std::cout << "signature:  (" << k.signature_real() << ","
            << k.signature_complex_pairs() << ")\n";
  std::cout << "integral basis rows (x " << 1 << "/" << k.basis_denominator()
            << "):\n";
  for (const auto &row : k.basis_numerators()) {
    std::cout << "  [";
    for (std::size_t i = 0; i < row.size(); ++i)
      std::cout << (i ? "," : "") << row[i];
    std::cout << "]\n";
  }
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"exact toolkit for septic arithmetic equivalence"};
  app.require_subcommand(1);
  std::string format_name = "text";
  app.add_option("--format", format_name, "output format: text|machine")
      ->check(CLI::IsMember({"text", "machine"}));

  // group
  auto *group = app.add_subcommand("group", "permutation group engine");
  auto *psl = group->add_subcommand("psl27", "the PSL2(F7) degree-7 action");
  bool psl_report = false;
  psl->add_flag("--report", psl_report,
                "full report: classes, lattice, Gassmann certificate");

  // types
  auto *types = app.add_subcommand("types", "factorization-type analysis");
  auto *tenum = types->add_subcommand("enumerate", "degree-n type table");
  int tdegree = 7;
  std::string tgroup;
  bool ttame = false;
  tenum->add_option("--degree", tdegree, "field degree")->required();
  tenum->add_option("--group", tgroup, "realizability filter (psl27)");
  tenum->add_flag("--tame", ttame, "tame-only realizability marks");

  // field
  auto *field = app.add_subcommand("field", "number fields");
  auto *finfo = field->add_subcommand("info", "maximal-order data");
  std::string fpoly;
  finfo->add_option("--poly", fpoly, "[c0,c1,...] ascending")->required();
  auto *fsplit = field->add_subcommand("split", "prime decomposition");
  std::string spoly, sprime;
  fsplit->add_option("--poly", spoly, "[c0,c1,...]")->required();
  fsplit->add_option("--prime", sprime, "rational prime")->required();
  auto *fcomp = field->add_subcommand("compositum", "compositum degrees");
  std::string cpa, cpb;
  fcomp->add_option("--poly-a", cpa, "[c0,...]")->required();
  fcomp->add_option("--poly-b", cpb, "[c0,...]")->required();

  // equiv
  auto *equiv = app.add_subcommand("equiv", "arithmetic equivalence");
  auto *echeck = equiv->add_subcommand("check", "equivalence certificate");
  std::string epa, epb;
  std::string ebound = "1000";
  echeck->add_option("--poly-a", epa)->required();
  echeck->add_option("--poly-b", epb)->required();
  echeck->add_option("--bound", ebound, "a_ell scan bound");
  auto *eram = equiv->add_subcommand("ramsum", "ramification-sum comparison");
  std::string rpa, rpb, rbound = "1000";
  eram->add_option("--poly-a", rpa)->required();
  eram->add_option("--poly-b", rpb)->required();
  eram->add_option("--bound", rbound, "a_ell scan bound");
  equiv->add_subcommand("gassmann-psl27",
                        "quasi-conjugacy certificate for the S4 classes");

  // search
  auto *search = app.add_subcommand("search", "counterexample search");
  auto *srun = search->add_subcommand("run", "run the five-stage pipeline");
  std::string input;
  std::string sbound = "1000";
  std::vector<unsigned> aexp{3, 4}, bexp{1, 2};
  double timeout = 120.0;
  srun->add_option("--input", input, "field table (TSV or JSON lines)")
      ->required();
  srun->add_option("--bound", sbound, "a_ell scan bound");
  srun->add_option("--a", aexp, "allowed a in disc = 2^(2a) p^(2b)")
      ->delimiter(',');
  srun->add_option("--b", bexp, "allowed b in disc = 2^(2a) p^(2b)")
      ->delimiter(',');
  srun->add_option("--timeout", timeout, "per-pair timeout in seconds");
  search->add_subcommand("verify-paper", "run the reproduction checklist");

  CLI11_PARSE(app, argc, argv);
  aeq::ReportFormat format = parse_format(format_name);

  try {
    if (psl->parsed()) {
      if (psl_report)
        print_group_report(format);
      else {
        aeq::PermGroup g = aeq::psl27_on_7_points();
        std::cout << "order " << g.order() << ", degree " << g.degree()
                  << ", transitive\n";
      }
    } else if (tenum->parsed()) {
      std::optional<std::set<aeq::FactorizationType>> filter;
      if (tgroup == "psl27") {
        aeq::PermGroup action = aeq::psl27_on_7_points();
        filter = ttame ? aeq::realizable_splittings(
                             action, aeq::RamificationMode::Tame())
                       : aeq::realizable_anywhere(action);
      } else if (!tgroup.empty()) {
        std::cerr << "unknown group filter: " << tgroup << "\n";
        return 1;
      }
      std::cout << aeq::render_types_table(
          tdegree, filter ? &*filter : nullptr, format);
      if (tdegree <= aeq::kMaxEnumerationDegree) {
        std::cout << "\nambiguous arithmetic types";
        std::vector<std::set<aeq::FactorizationType>> filters;
        if (filter) {
          aeq::PermGroup action = aeq::psl27_on_7_points();
          filters.push_back(aeq::realizable_splittings(
              action, aeq::RamificationMode::Tame()));
          if (!ttame)
            for (unsigned p : {2u, 3u, 5u, 7u}) {
              std::set<aeq::FactorizationType> wild;
              for (const auto &pat : aeq::realizable_splittings(
                       action, aeq::RamificationMode::Wild(p)))
                if (pat.wild_at(static_cast<int>(p)))
                  wild.insert(pat);
              filters.push_back(std::move(wild));
            }
          std::cout << " (filtered)";
        }
        std::cout << ":\n";
        for (const auto &amb :
             aeq::ambiguous_arithmetic_types(tdegree, filters)) {
          std::cout << "  " << amb.type << " with sums {";
          bool first = true;
          for (int s : amb.ramification_sums) {
            std::cout << (first ? "" : ",") << s;
            first = false;
          }
          std::cout << "}\n";
        }
      }
    } else if (finfo->parsed()) {
      print_field_info(field_from_arg(fpoly), format);
    } else if (fsplit->parsed()) {
      aeq::NumberField k = field_from_arg(spoly);
      auto dec = k.decompose(aeq::Int(sprime));
      if (format == aeq::ReportFormat::Machine) {
        nlohmann::json j;
        j["prime"] = dec.prime.str();
        j["type"] = aeq::to_json(dec.type);
        j["wild"] = dec.wild;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "prime " << dec.prime << ": " << dec.type
                  << (dec.wild ? "  (wild)" : "  (tame or unramified)")
                  << "\n";
      }
    } else if (fcomp->parsed()) {
      aeq::NumberField a = field_from_arg(cpa), b = field_from_arg(cpb);
      auto comp = aeq::compositum_degrees(a, b);
      if (format == aeq::ReportFormat::Machine) {
        nlohmann::json j;
        j["shift_k"] = comp.shift_k.str();
        j["degrees"] = comp.degrees;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "shift k = " << comp.shift_k << ", compositum degrees:";
        for (long d : comp.degrees)
          std::cout << " " << d;
        std::cout << "\n";
      }
    } else if (echeck->parsed()) {
      aeq::NumberField a = field_from_arg(epa), b = field_from_arg(epb);
      auto cert = aeq::check_equivalence(a, b, aeq::Int(ebound));
      if (format == aeq::ReportFormat::Machine)
        std::cout << aeq::to_json(cert).dump(2) << "\n";
      else
        std::cout << aeq::render_certificate_text(cert);
    } else if (eram->parsed()) {
      aeq::NumberField a = field_from_arg(rpa), b = field_from_arg(rpb);
      auto cert = aeq::check_equivalence(a, b, aeq::Int(rbound));
      if (cert.verdict != aeq::Verdict::Equivalent) {
        std::cerr << "pair is not certified equivalent; ramsum requires an "
                     "equivalent pair\n";
        return 1;
      }
      auto rows = aeq::compare_ramification_sums(a, b, cert);
      if (format == aeq::ReportFormat::Machine) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto &r : rows)
          j.push_back(aeq::to_json(r));
        std::cout << j.dump(2) << "\n";
      } else
        std::cout << aeq::render_ramsum_text(rows);
    } else if (equiv->got_subcommand("gassmann-psl27")) {
      auto cert = aeq::gassmann_certificate_psl27();
      if (format == aeq::ReportFormat::Machine) {
        nlohmann::json table = nlohmann::json::array();
        for (const auto &row : cert.quasi.table)
          table.push_back({{"class_size", row.class_size},
                           {"count_H1", row.count_h},
                           {"count_H2", row.count_h1}});
        nlohmann::json j = {{"quasi_conjugate", cert.quasi.quasi_conjugate},
                            {"conjugate", cert.conjugate},
                            {"table", table}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "S4 classes of PSL2(F7): quasi-conjugate="
                  << (cert.quasi.quasi_conjugate ? "yes" : "no")
                  << ", conjugate=" << (cert.conjugate ? "yes" : "no") << "\n";
        for (const auto &row : cert.quasi.table)
          std::cout << "  class size " << row.class_size << ": "
                    << row.count_h << " vs " << row.count_h1 << "\n";
      }
    } else if (srun->parsed()) {
      aeq::IngestResult in;
      try {
        in = aeq::ingest(input);
      } catch (const aeq::IoError &e) {
        std::cerr << e.what() << "\n";
        return 2;
      }
      aeq::SearchConfig config;
      config.a_ell_bound = aeq::Int(sbound);
      config.galois_bound = aeq::Int(sbound);
      config.a_exponents.clear();
      config.a_exponents.insert(aexp.begin(), aexp.end());
      config.b_exponents.clear();
      config.b_exponents.insert(bexp.begin(), bexp.end());
      config.pair_timeout_seconds = timeout;
      auto report = aeq::run_search(in.records, config);
      if (in.skipped)
        std::cerr << "warning: skipped " << in.skipped << " invalid rows\n";
      std::cout << aeq::render_search_report(report, format);
    } else if (search->got_subcommand("verify-paper")) {
      auto report = aeq::verify_paper();
      std::cout << aeq::render_verify_report(report, format);
      return report.all_pass() ? 0 : 1;
    }
  } catch (const aeq::IoError &e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
