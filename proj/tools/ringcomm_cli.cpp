// ringcomm: exact commuting-probability toolkit for finite rings.
//
// Exit codes: 0 success, 1 claim or verdict failure, 2 input error,
// 3 internal inconsistency, 4 search budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ringcomm/catalog.hpp"
#include "ringcomm/errors.hpp"
#include "ringcomm/graph.hpp"
#include "ringcomm/isoclinism.hpp"
#include "ringcomm/probability.hpp"
#include "ringcomm/ring_file.hpp"
#include "ringcomm/subgroup.hpp"
#include "ringcomm/verification.hpp"

namespace {

using namespace ringcomm;

enum ExitCode : int { kOk = 0, kFailed = 1, kInputError = 2, kInternal = 3, kBudget = 4 };

int cmd_validate(const std::string& path) {
  const FiniteRing ring = load_ring_file(path);
  std::cout << "order " << ring.order() << ", " << (ring.is_commutative() ? "commutative" : "non-commutative")
            << ", |Z|=" << center(ring).size() << ", |[R,R]|=" << commutator_subgroup(ring).size() << '\n';
  return kOk;
}

int cmd_prob(const std::string& path, const std::string& r_text, bool all) {
  const FiniteRing ring = load_ring_file(path);
  if (all) {
    const auto formula = formula_spectrum(ring);
    const auto counts = commutator_counts(ring);
    const auto n = static_cast<std::int64_t>(ring.order());
    Fraction sum{0};
    for (std::size_t i = 0; i < ring.order(); ++i) {
      const Probability brute(counts[i], n * n);
      if (formula[i] != brute) {
        throw InternalInconsistency("formula " + to_string(formula[i]) + " != enumeration " + to_string(brute) +
                                    " at r = " + to_string(ring.element(static_cast<ElementIndex>(i))));
      }
      sum += formula[i].value();
      std::cout << to_string(ring.element(static_cast<ElementIndex>(i))) << '\t' << formula[i] << '\n';
    }
    std::cout << "sum\t" << to_string(sum) << '\n';
    return kOk;
  }
  const RingElement r = parse_element(ring.shape(), r_text);
  const Probability formula = pr_formula(ring, r);
  const Probability brute = pr_bruteforce(ring, r);
  if (formula != brute) {
    throw InternalInconsistency("formula " + to_string(formula) + " != enumeration " + to_string(brute));
  }
  std::cout << to_string(r) << '\t' << formula << '\n';
  return kOk;
}

int cmd_verify(const std::string& path) {
  const FiniteRing ring = load_ring_file(path);
  const VerificationReport report = verify_ring(ring, path);
  std::cout << format_report(report);
  return report.passed() ? kOk : kFailed;
}

int cmd_graph(const std::string& path, const std::string& r_text, const std::string& dot_path) {
  const FiniteRing ring = load_ring_file(path);
  const RingElement r = parse_element(ring.shape(), r_text);
  const NoncommGraph graph = build_graph(ring, r);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path, std::ios::binary);
    if (!out) throw RingError("cannot write '" + dot_path + "'");
    out << export_dot(graph);
    if (!out) throw RingError("write to '" + dot_path + "' failed");
  }
  const EdgeIdentityReport identity = verify_edge_identity(ring, r);
  std::cout << "edges\t" << graph.edge_count() << '\n'
            << "identity\t" << (identity.holds ? "pass" : "fail") << '\t' << to_string(identity.which) << '\t'
            << identity.pr_r << '\t' << to_string(identity.from_edges) << '\n';
  return identity.holds ? kOk : kFailed;
}

int cmd_isoclinic(const std::string& path1, const std::string& path2, std::size_t budget) {
  const FiniteRing r1 = load_ring_file(path1);
  const FiniteRing r2 = load_ring_file(path2);
  IsoclinismSearchOptions options;
  options.node_budget = budget;
  const auto witness = find_isoclinism(r1, r2, options);
  if (!witness) {
    std::cout << "NotIsoclinic\n";
    return kFailed;
  }
  std::cout << serialize_witness(*witness);
  const InvarianceReport report = verify_invariance(r1, r2, *witness);
  std::cout << "invariance:\n";
  for (const auto& row : report.rows) {
    std::cout << to_string(row.r) << " -> " << to_string(row.image) << '\t' << row.pr_r1 << '\t' << row.pr_r2
              << '\t' << (row.pr_r1 == row.pr_r2 ? "pass" : "fail") << '\n';
  }
  std::cout << "central index\t" << to_string(report.central_index_r1) << '\t'
            << to_string(report.central_index_r2) << '\n'
            << "image sizes\t" << (report.image_sizes_match ? "pass" : "fail") << '\n'
            << "result\t" << (report.holds ? "pass" : "fail") << '\n';
  return report.holds ? kOk : kFailed;
}

int cmd_product(const std::string& path1, const std::string& path2, const std::string& out) {
  const FiniteRing product = direct_product(load_ring_file(path1), load_ring_file(path2));
  save_ring_file(product, out);
  std::cout << "order " << product.order() << '\n';
  return kOk;
}

int cmd_catalog(const std::string& name, const std::vector<int>& params, const std::string& out) {
  const FiniteRing ring = catalog(name, params);
  if (out.empty()) {
    std::cout << serialize_ring(ring);
  } else {
    save_ring_file(ring, out);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized commuting probability of finite rings"};
  app.require_subcommand(1);

  std::string path, path2, r_text, dot_path, out_path, name;
  bool all = false;
  std::size_t budget = IsoclinismSearchOptions{}.node_budget;
  std::vector<int> params;

  auto* validate = app.add_subcommand("validate", "Check a ring file and summarise it");
  validate->add_option("ring", path, "Ring file")->required();

  auto* prob = app.add_subcommand("prob", "Pr_r by the centralizer formula, cross-checked by enumeration");
  prob->add_option("ring", path, "Ring file")->required();
  auto* r_opt = prob->add_option("--r", r_text, "Element, comma-separated coordinates");
  auto* all_flag = prob->add_flag("--all", all, "Print the whole spectrum and its sum");
  r_opt->excludes(all_flag);
  prob->callback([&] {
    if (r_text.empty() && !all) throw CLI::RequiredError("--r or --all");
  });

  auto* verify = app.add_subcommand("verify", "Run every identity and bound against a ring");
  verify->add_option("ring", path, "Ring file")->required();

  auto* graph = app.add_subcommand("graph", "Build the r-noncommuting graph and check the edge identity");
  graph->add_option("ring", path, "Ring file")->required();
  graph->add_option("--r", r_text, "Element, comma-separated coordinates")->required();
  graph->add_option("--dot", dot_path, "Write Graphviz output here");

  auto* isoclinic = app.add_subcommand("isoclinic", "Search for a Z-isoclinism and check invariance");
  isoclinic->add_option("ring1", path, "First ring file")->required();
  isoclinic->add_option("ring2", path2, "Second ring file")->required();
  isoclinic->add_option("--budget", budget, "Search node budget");

  auto* product = app.add_subcommand("product", "Write the direct product of two rings");
  product->add_option("ring1", path, "First ring file")->required();
  product->add_option("ring2", path2, "Second ring file")->required();
  product->add_option("-o,--output", out_path, "Output ring file")->required();

  auto* cat = app.add_subcommand("catalog", "Write a catalog ring (E4, zero_ring n, cyclic_ring n, triangular n s, full_matrix n s)");
  cat->add_option("name", name, "Catalog name")->required();
  cat->add_option("params", params, "Integer parameters");
  cat->add_option("-o,--output", out_path, "Output ring file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return cmd_validate(path);
    if (*prob) return cmd_prob(path, r_text, all);
    if (*verify) return cmd_verify(path);
    if (*graph) return cmd_graph(path, r_text, dot_path);
    if (*isoclinic) return cmd_isoclinic(path, path2, budget);
    if (*product) return cmd_product(path, path2, out_path);
    if (*cat) return cmd_catalog(name, params, out_path);
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const SearchBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const SearchGateExceeded& e) {
    std::cerr << "error: search gate: " << e.what() << '\n';
    return kInputError;
  } catch (const RingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
