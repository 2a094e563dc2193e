// Command-line front end: census, tables, verification and per-signature
// queries on signed Petersen graphs.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sigraph/clustering.h"
#include "sigraph/coloring.h"
#include "sigraph/frustration.h"
#include "sigraph/io.h"
#include "sigraph/petersen.h"
#include "sigraph/petersen_notation.h"
#include "sigraph/signed_groups.h"
#include "sigraph/six_types.h"
#include "sigraph/tables.h"
#include "sigraph/verify.h"

namespace {

using namespace sigraph;

constexpr int kExitDiff = 1;
constexpr int kExitInput = 2;

struct Source {
  std::string mask;
  std::string file;

  SignedGraph load() const {
    if (!mask.empty()) return petersen_signature(parse_mask(mask));
    return load_signed_graph(file);
  }
};

void add_source(CLI::App* cmd, Source& src, bool file_allowed) {
  auto* m = cmd->add_option("--mask", src.mask, "15-bit Petersen sign mask in hex");
  if (!file_allowed) {
    m->required();
    return;
  }
  auto* f = cmd->add_option("--file", src.file, "signed edge-list file");
  m->excludes(f);
  cmd->require_option(1);
}

std::string edge_list(const Graph& g, const EdgeSet& edges) {
  std::string out;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!edges.test(i)) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(g.edge(i).u) + "-" + std::to_string(g.edge(i).v);
  }
  return out.empty() ? "(none)" : out;
}

int run_census_command() {
  const auto start = std::chrono::steady_clock::now();
  const CensusReport& c = shared_census();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << render(emit_table("census"), TableFormat::kText) << '\n';
  std::cout << "class  mask    l  l0  c5-  c6-  chi  chi*  chi(3)\n";
  for (const CensusRow& r : c.rows) {
    const ClassInvariants& v = r.invariants;
    std::printf("%-5s  %s  %d  %2d  %3d  %3d  %3d  %4d  %6lld\n", to_string(r.type),
                format_mask(r.representative_mask).c_str(), v.l, v.l0, v.c5, v.c6, v.chi,
                v.chi_star, static_cast<long long>(v.chi3));
  }
  std::printf("\nl0 != l for %lld signatures\n", static_cast<long long>(c.l0_mismatches));
  std::printf("workers %d, %.2f s\n", census_workers(), secs);
  return 0;
}

int run_classify(const SignedGraph& s) {
  const SixType t = classify_six(s);
  const FrustrationReport f = frustration_report(s);
  const auto circles = negative_circle_counts(s, {5, 6});
  const MinimalRepresentative m = minimal_representative(s);
  std::cout << "class " << to_string(t) << '\n'
            << "l " << f.l << '\n'
            << "l0 " << f.l0 << '\n'
            << "c5- " << circles.at(5) << '\n'
            << "c6- " << circles.at(6) << '\n'
            << "minimal " << format_mask(petersen_mask(m.signature)) << '\n'
            << "balancing edges " << edge_list(s.graph(), f.witness_edges) << '\n';
  return 0;
}

std::string rep_name(int i) { return "r" + std::to_string(i); }

int run_group(const SignedGraph& s, bool coset_table) {
  const PermutationGroup aut = aut_signed(s);
  const SwitchingGroup sw = swaut(s);
  std::cout << "Aut   " << aut.order() << ' ' << identify_group(aut).name() << '\n'
            << "SwAut " << sw.order() << ' ' << identify_group(sw).name() << '\n';
  const OrbitCounts oc = orbit_counts(s);
  std::cout << "copies " << oc.copies << ", switching classes " << oc.switching_classes
            << '\n';
  const CosetSystem cs = coset_system(s, sw, aut);
  std::cout << "coset representatives (" << cs.representatives.size() << ")"
            << (cs.conjugation_closed ? "" : ", not conjugation-closed") << '\n';
  for (size_t i = 0; i < cs.representatives.size(); ++i) {
    std::cout << "  " << rep_name(static_cast<int>(i)) << " = "
              << format_switching_permutation(cs.representatives[i]) << '\n';
  }
  if (!coset_table) return 0;
  if (!cs.conjugation_closed) {
    std::cout << "products not tabulated: representatives are not conjugation-closed\n";
    return 0;
  }
  const Permutation id = Permutation::identity(s.graph().vertex_count());
  std::cout << "products r_i * r_j = [-] r_k nu\n";
  const int n = static_cast<int>(cs.representatives.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const ProductDecomposition d = general_product(cs, i, id, j, id);
      std::cout << "  " << rep_name(i) << " * " << rep_name(j) << " = "
                << (d.negated ? "-" : "") << rep_name(d.representative) << ' '
                << format_petersen_perm(d.nu) << '\n';
    }
  }
  return 0;
}

int run_color(const SignedGraph& s, int k, bool zero_free) {
  const std::int64_t count = count_colorations(s, k, zero_free);
  std::cout << (zero_free ? "zero-free " : "") << "colorations with k=" << k << ": " << count
            << '\n';
  return 0;
}

int run_cluster(const SignedGraph& s) {
  const ClusterReport r = cluster_report(s);
  std::cout << "clusterable " << (r.clusterable ? "yes" : "no") << '\n'
            << "clun " << (r.clun ? std::to_string(*r.clun) : std::string("-")) << '\n'
            << "Q " << r.q << '\n';
  if (r.clusterable) {
    std::cout << "clusters";
    for (const int c : r.clusters) std::cout << ' ' << c;
    std::cout << '\n';
  } else {
    std::cout << "deletion " << edge_list(s.graph(), r.deletion) << '\n';
  }
  return 0;
}

int run_verify() {
  const VerifyResult r = verify_all();
  for (const CellDiff& d : r.diffs) std::cout << "DIFF " << format_diff(d) << '\n';
  for (const std::string& n : r.notes) std::cout << "note: " << n << '\n';
  std::cout << r.cells_checked << " cells checked, " << r.diffs.size() << " differ\n";
  return r.ok() ? 0 : kExitDiff;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed Petersen graph census and tables"};
  app.require_subcommand(1);

  app.add_subcommand("census", "classify all 2^15 signatures");

  auto* table = app.add_subcommand("table", "print one table");
  std::string table_id;
  std::string format = "text";
  table->add_option("id", table_id, "table id")
      ->required()
      ->check(CLI::IsMember(table_ids()));
  table->add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  Source classify_src;
  auto* classify = app.add_subcommand("classify", "switching class of a signature");
  add_source(classify, classify_src, true);

  Source group_src;
  bool coset_table = false;
  auto* group = app.add_subcommand("group", "automorphism and switching groups");
  add_source(group, group_src, false);
  group->add_flag("--coset-table", coset_table, "print coset representative products");

  Source color_src;
  int k = 1;
  bool zero_free = false;
  auto* color = app.add_subcommand("color", "count proper colorations");
  add_source(color, color_src, false);
  color->add_option("--k", k, "colors -k..k")->required()->check(CLI::NonNegativeNumber);
  color->add_flag("--zero-free", zero_free, "exclude color 0");

  Source cluster_src;
  auto* cluster = app.add_subcommand("cluster", "clusterability measures");
  add_source(cluster, cluster_src, true);

  app.add_subcommand("verify", "recompute every table and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (app.got_subcommand("census")) return run_census_command();
    if (app.got_subcommand(table)) {
      std::cout << render(emit_table(table_id), parse_table_format(format));
      return 0;
    }
    if (app.got_subcommand(classify)) return run_classify(classify_src.load());
    if (app.got_subcommand(group)) return run_group(group_src.load(), coset_table);
    if (app.got_subcommand(color)) return run_color(color_src.load(), k, zero_free);
    if (app.got_subcommand(cluster)) return run_cluster(cluster_src.load());
    if (app.got_subcommand("verify")) return run_verify();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
