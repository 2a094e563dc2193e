#include "sigraph/census.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "sigraph/coloring.h"
#include "sigraph/frustration.h"
#include "sigraph/petersen.h"

namespace sigraph {

int census_workers() {
  if (const char* env = std::getenv("PETERSEN_WORKERS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ClassInvariants class_invariants(const SignedGraph& s) {
  ClassInvariants out;
  const FrustrationReport f = frustration_report(s);
  out.l = f.l;
  out.l0 = f.l0;
  const auto counts =
      negative_circle_counts(petersen_short_circles(), s.negative_edges(), {5, 6});
  out.c5 = counts.at(5);
  out.c6 = counts.at(6);
  const ChromaticNumbers chi = chromatic_numbers(s);
  out.chi = chi.chi;
  out.chi_star = chi.chi_star;
  out.chi3 = count_colorations(s, 1, false);
  return out;
}

namespace {

struct Tally {
  std::array<std::int64_t, 6> signatures{};
  std::array<int, 6> leaders{};
  std::array<int, 6> minimal{};
  std::int64_t l0_mismatches = 0;

  void merge(const Tally& o) {
    for (int i = 0; i < 6; ++i) {
      signatures[i] += o.signatures[i];
      leaders[i] += o.leaders[i];
      minimal[i] += o.minimal[i];
    }
    l0_mismatches += o.l0_mismatches;
  }
};

// Petersen data as 15-bit masks: the cuts of the 512 switching sets that
// avoid vertex 0, and the edge masks of the 12 pentagons.
struct MaskTables {
  std::vector<std::uint32_t> cuts;
  std::vector<std::uint32_t> pentagons;
};

MaskTables make_tables() {
  const Graph& g = petersen_graph();
  MaskTables t;
  for (std::uint32_t i = 0; i < 512; ++i) {
    t.cuts.push_back(static_cast<std::uint32_t>(cut(g, i << 1).to_ulong()));
  }
  for (const Cycle& c : petersen_short_circles()) {
    if (c.length() == 5) t.pentagons.push_back(static_cast<std::uint32_t>(c.edges.to_ulong()));
  }
  return t;
}

Tally tally_range(const MaskTables& t, std::uint32_t begin, std::uint32_t end) {
  Tally out;
  for (std::uint32_t mask = begin; mask < end; ++mask) {
    int l = 15;
    bool leader = true;
    for (const std::uint32_t c : t.cuts) {
      const std::uint32_t switched = mask ^ c;
      l = std::min(l, std::popcount(switched));
      if (switched < mask) leader = false;
    }
    int c5 = 0;
    for (const std::uint32_t p : t.pentagons) c5 += std::popcount(mask & p) & 1;
    const int index = static_cast<int>(classify_fingerprint({l, c5}));
    ++out.signatures[index];
    if (leader) ++out.leaders[index];
    if (std::popcount(mask) == l) ++out.minimal[index];
    if (frustration_number(petersen_signature(mask)).value != l) ++out.l0_mismatches;
  }
  return out;
}

}  // namespace

CensusReport run_census(int workers) {
  if (workers <= 0) workers = census_workers();
  const MaskTables tables = make_tables();
  const std::uint32_t total = kPetersenMaskLimit;
  std::vector<Tally> partial(workers);
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    const std::uint32_t begin = total * w / workers;
    const std::uint32_t end = total * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] { partial[w] = tally_range(tables, begin, end); });
  }
  for (auto& th : threads) th.join();
  Tally sum;
  for (const Tally& p : partial) sum.merge(p);

  CensusReport report;
  for (int i = 0; i < 6; ++i) {
    CensusRow& row = report.rows[i];
    row.type = kSixTypes[i];
    row.signatures = sum.signatures[i];
    row.switching_classes = sum.leaders[i];
    row.minimal_signatures = sum.minimal[i];
    row.representative_mask = six_type_mask(row.type);
    row.invariants = class_invariants(six_type_signature(row.type));
    report.total_signatures += row.signatures;
    report.total_switching_classes += row.switching_classes;
  }
  report.l0_mismatches = sum.l0_mismatches;
  return report;
}

}  // namespace sigraph
