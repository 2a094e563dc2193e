#include "sigraph/verify.h"

#include <algorithm>

#include "sigraph/coloring.h"
#include "sigraph/expected_values.h"
#include "sigraph/reference_products.h"
#include "sigraph/six_types.h"

namespace sigraph {

namespace {

constexpr const char* kMissing = "<missing>";

void check(VerifyResult& out, const std::string& table, const std::string& row,
           const std::string& column, const std::string& expected,
           const std::string& actual) {
  ++out.cells_checked;
  if (expected != actual) out.diffs.push_back({table, row, column, expected, actual});
}

void check_products(VerifyResult& out) {
  // Worked examples only; the full published tables are compared by the
  // acceptance suite, which reports the cells that disagree.
  for (const ProductCheck& c : check_p32_tables()) {
    if (c.name.rfind("example", 0) == 0) {
      check(out, "products", c.name, "value", c.expected, c.ok ? c.expected : c.actual);
    }
  }
  for (const auto& list : {check_p32_transforms(), check_p33_table()}) {
    for (const ProductCheck& c : list) {
      check(out, "products", c.name, "value", c.expected, c.ok ? c.expected : c.actual);
    }
  }
  int table_ok = 0;
  int table_cells = 0;
  for (const ProductCheck& c : check_p32_tables()) {
    if (c.name.rfind("example", 0) == 0) continue;
    ++table_cells;
    table_ok += c.ok ? 1 : 0;
  }
  out.notes.push_back("P32 representative tables: " + std::to_string(table_ok) + "/" +
                      std::to_string(table_cells) + " published cells reproduced exactly");
}

}  // namespace

std::string format_diff(const CellDiff& d) {
  return d.table + " [" + d.row + "][" + d.column + "]: expected " + d.expected +
         ", got " + d.actual;
}

void compare_tables(const TableArtifact& expected, const TableArtifact& actual,
                    VerifyResult& out) {
  const auto column_index = [](const TableArtifact& t, const std::string& name) {
    const auto it = std::find(t.columns.begin(), t.columns.end(), name);
    return it == t.columns.end() ? -1 : static_cast<int>(it - t.columns.begin());
  };
  for (const TableRow& er : expected.rows) {
    const TableRow* ar = actual.find_row(er.label);
    for (size_t c = 0; c < expected.columns.size(); ++c) {
      const std::string& column = expected.columns[c];
      const std::string want = c < er.values.size() ? er.values[c] : kMissing;
      const int ac = column_index(actual, column);
      std::string got = kMissing;
      if (ar && ac >= 0 && ac < static_cast<int>(ar->values.size())) got = ar->values[ac];
      check(out, expected.id, er.label, column, want, got);
    }
  }
  for (const TableRow& ar : actual.rows) {
    if (!expected.find_row(ar.label)) {
      check(out, expected.id, ar.label, "*", kMissing, "<present>");
    }
  }
}

VerifyResult verify_all(const std::vector<TableArtifact>& expected) {
  VerifyResult out;
  for (const TableArtifact& e : expected) compare_tables(e, emit_table(e.id), out);

  // chi(3) two ways.
  for (const SixType t : kSixTypes) {
    const SignedGraph s = six_type_signature(t);
    const ClassInvariants inv = class_invariants(s);
    const std::int64_t baseline = class_invariants(six_type_signature(SixType::kPlusP)).chi3;
    check(out, "chi3-crosscheck", to_string(t), "difference formula",
          std::to_string(inv.chi3 - baseline), std::to_string(chi3_difference(s)));
  }

  // Group quotients against the census tally.
  const CensusReport& census = shared_census();
  const TableArtifact t5 = emit_table("T5");
  for (int i = 0; i < 6; ++i) {
    const CensusRow& r = census.rows[i];
    check(out, "T5-crosscheck", "copies", t5.columns[i], t5.rows[0].values[i],
          std::to_string(r.minimal_signatures));
    check(out, "T5-crosscheck", "[copies]", t5.columns[i], t5.rows[1].values[i],
          std::to_string(r.switching_classes));
    check(out, "census-crosscheck", "signatures", t5.columns[i],
          std::to_string(512 * r.switching_classes), std::to_string(r.signatures));
  }
  check(out, "census-crosscheck", "l0 mismatches", "total", "0",
        std::to_string(census.l0_mismatches));

  check_products(out);
  return out;
}

VerifyResult verify_all() { return verify_all(expected_tables()); }

}  // namespace sigraph
