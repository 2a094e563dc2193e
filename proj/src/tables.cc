#include "sigraph/tables.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "sigraph/clustering.h"
#include "sigraph/coloring.h"
#include "sigraph/frustration.h"
#include "sigraph/signed_groups.h"

namespace sigraph {

const TableRow* TableArtifact::find_row(const std::string& label) const {
  for (const TableRow& r : rows) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

TableFormat parse_table_format(const std::string& name) {
  if (name == "text") return TableFormat::kText;
  if (name == "csv") return TableFormat::kCsv;
  if (name == "json") return TableFormat::kJson;
  throw std::invalid_argument("unknown table format '" + name + "'");
}

namespace {

std::optional<long long> as_integer(const std::string& s) {
  long long v = 0;
  const char* end = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end || s.empty()) return std::nullopt;
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_text(const TableArtifact& t) {
  std::vector<size_t> width(t.columns.size() + 1, 0);
  width[0] = t.id.size();
  for (const TableRow& r : t.rows) width[0] = std::max(width[0], r.label.size());
  for (size_t c = 0; c < t.columns.size(); ++c) {
    width[c + 1] = t.columns[c].size();
    for (const TableRow& r : t.rows) {
      if (c < r.values.size()) width[c + 1] = std::max(width[c + 1], r.values[c].size());
    }
  }
  std::ostringstream out;
  const auto line = [&](const std::string& head, const std::vector<std::string>& cells) {
    out << head << std::string(width[0] - head.size(), ' ');
    for (size_t c = 0; c < cells.size(); ++c) {
      out << "  " << std::string(width[c + 1] - cells[c].size(), ' ') << cells[c];
    }
    out << '\n';
  };
  line(t.id, t.columns);
  for (const TableRow& r : t.rows) line(r.label, r.values);
  return out.str();
}

std::string render_csv(const TableArtifact& t) {
  std::ostringstream out;
  out << "label";
  for (const std::string& c : t.columns) out << ',' << csv_field(c);
  out << '\n';
  for (const TableRow& r : t.rows) {
    out << csv_field(r.label);
    for (const std::string& v : r.values) out << ',' << csv_field(v);
    out << '\n';
  }
  return out.str();
}

std::string render_json(const TableArtifact& t) {
  nlohmann::ordered_json j;
  j["table"] = t.id;
  j["columns"] = t.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const TableRow& r : t.rows) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const std::string& v : r.values) {
      if (const auto n = as_integer(v)) {
        values.push_back(*n);
      } else {
        values.push_back(v);
      }
    }
    j["rows"].push_back({{"label", r.label}, {"values", values}});
  }
  return j.dump(2) + "\n";
}

// Per-class values shared by several tables, computed once.
struct ClassData {
  ClassInvariants inv;
  std::array<int, 3> alpha{};
  int chi3_diff = 0;
  int aut_order = 0;
  std::string aut_name;
  int swaut_order = 0;
  std::string swaut_name;
  OrbitCounts orbits;
  ClusterReport plus;
  ClusterReport minus;
};

const std::array<ClassData, 6>& class_data() {
  static const std::array<ClassData, 6> data = [] {
    std::array<ClassData, 6> out;
    for (int i = 0; i < 6; ++i) {
      const SignedGraph s = six_type_signature(kSixTypes[i]);
      ClassData& d = out[i];
      d.inv = class_invariants(s);
      for (int k = 0; k < 3; ++k) d.alpha[k] = alpha_k(s, k);
      d.chi3_diff = static_cast<int>(d.inv.chi3 - out[0].inv.chi3);
      const PermutationGroup aut = aut_signed(s);
      d.aut_order = aut.order();
      d.aut_name = identify_group(aut).name();
      const SwitchingGroup sw = swaut(s);
      d.swaut_order = sw.order();
      d.swaut_name = identify_group(sw).name();
      d.orbits = orbit_counts(s);
      d.plus = cluster_report(s);
      d.minus = cluster_report(negate(s));
    }
    return out;
  }();
  return data;
}

template <typename F>
TableRow class_row(std::string label, F value) {
  TableRow r{std::move(label), {}};
  for (const ClassData& d : class_data()) r.values.push_back(value(d));
  return r;
}

std::string num(long long v) { return std::to_string(v); }

std::string clun_text(const ClusterReport& r) {
  return r.clun ? num(*r.clun) : std::string("-");
}

TableArtifact census_table() {
  const CensusReport& c = shared_census();
  TableArtifact t{"census", class_columns(), {}};
  t.columns.push_back("total");
  TableRow sig{"signatures", {}};
  TableRow cls{"switching classes", {}};
  TableRow min{"minimal signatures", {}};
  long long minimal_total = 0;
  for (const CensusRow& r : c.rows) {
    sig.values.push_back(num(r.signatures));
    cls.values.push_back(num(r.switching_classes));
    min.values.push_back(num(r.minimal_signatures));
    minimal_total += r.minimal_signatures;
  }
  sig.values.push_back(num(c.total_signatures));
  cls.values.push_back(num(c.total_switching_classes));
  min.values.push_back(num(minimal_total));
  t.rows = {sig, cls, min};
  return t;
}

}  // namespace

std::string render(const TableArtifact& t, TableFormat format) {
  switch (format) {
    case TableFormat::kText: return render_text(t);
    case TableFormat::kCsv: return render_csv(t);
    case TableFormat::kJson: return render_json(t);
  }
  return {};
}

std::vector<std::string> class_columns() {
  std::vector<std::string> out;
  for (const SixType t : kSixTypes) out.push_back(to_string(t));
  return out;
}

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids = {"T1", "T2", "T3",  "T4_orders", "T5",
                                               "T8", "T9", "T10", "census"};
  return ids;
}

const CensusReport& shared_census() {
  static const CensusReport report = run_census();
  return report;
}

TableArtifact emit_table(const std::string& id) {
  const auto cols = class_columns();
  if (id == "T1") {
    return {id, cols,
            {class_row("c5-", [](const ClassData& d) { return num(d.inv.c5); }),
             class_row("c6-", [](const ClassData& d) { return num(d.inv.c6); })}};
  }
  if (id == "T2") {
    return {id, cols, {class_row("l", [](const ClassData& d) { return num(d.inv.l); })}};
  }
  if (id == "T3") {
    return {id, cols, {class_row("l0", [](const ClassData& d) { return num(d.inv.l0); })}};
  }
  if (id == "T4_orders") {
    return {id, cols,
            {class_row("|Aut|", [](const ClassData& d) { return num(d.aut_order); }),
             class_row("Aut", [](const ClassData& d) { return d.aut_name; }),
             class_row("|SwAut|", [](const ClassData& d) { return num(d.swaut_order); }),
             class_row("SwAut", [](const ClassData& d) { return d.swaut_name; })}};
  }
  if (id == "T5") {
    return {id, cols,
            {class_row("copies", [](const ClassData& d) { return num(d.orbits.copies); }),
             class_row("[copies]",
                       [](const ClassData& d) { return num(d.orbits.switching_classes); })}};
  }
  if (id == "T8") {
    return {id, cols,
            {class_row("chi", [](const ClassData& d) { return num(d.inv.chi); }),
             class_row("chi*", [](const ClassData& d) { return num(d.inv.chi_star); })}};
  }
  if (id == "T9") {
    return {id, cols,
            {class_row("alpha0", [](const ClassData& d) { return num(d.alpha[0]); }),
             class_row("alpha1", [](const ClassData& d) { return num(d.alpha[1]); }),
             class_row("alpha2", [](const ClassData& d) { return num(d.alpha[2]); }),
             class_row("c6-", [](const ClassData& d) { return num(d.inv.c6); }),
             class_row("chi(3)-120", [](const ClassData& d) { return num(d.chi3_diff); }),
             class_row("chi(3)", [](const ClassData& d) { return num(d.inv.chi3); })}};
  }
  if (id == "T10") {
    TableArtifact t{id, {}, {{"clun", {}}, {"Q", {}}}};
    for (int i = 0; i < 6; ++i) {
      const ClassData& d = class_data()[i];
      t.columns.push_back(cols[i]);
      t.columns.push_back(i == 0 ? "-P" : "-" + cols[i]);
      t.rows[0].values.push_back(clun_text(d.plus));
      t.rows[0].values.push_back(clun_text(d.minus));
      t.rows[1].values.push_back(num(d.plus.q));
      t.rows[1].values.push_back(num(d.minus.q));
    }
    return t;
  }
  if (id == "census") return census_table();
  throw std::invalid_argument("unknown table id '" + id + "'");
}

}  // namespace sigraph
