#ifndef SIGRAPH_TABLES_H_
#define SIGRAPH_TABLES_H_

#include <string>
#include <vector>

#include "sigraph/census.h"

namespace sigraph {

struct TableRow {
  std::string label;
  std::vector<std::string> values;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

// A table of labeled rows over named columns. Cell values are strings; "-"
// marks an undefined entry.
struct TableArtifact {
  std::string id;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;

  const TableRow* find_row(const std::string& label) const;
  friend bool operator==(const TableArtifact&, const TableArtifact&) = default;
};

enum class TableFormat { kText, kCsv, kJson };

// "text", "csv" or "json"; throws std::invalid_argument otherwise.
TableFormat parse_table_format(const std::string& name);

// Deterministic rendering. JSON has the shape
// {"table": id, "columns": [...], "rows": [{"label": ..., "values": [...]}]}
// with integer cells emitted as numbers.
std::string render(const TableArtifact& t, TableFormat format);

// T1, T2, T3, T4_orders, T5, T8, T9, T10, census.
const std::vector<std::string>& table_ids();

// Computes a table. Throws std::invalid_argument for an unknown id.
TableArtifact emit_table(const std::string& id);

// The census, computed once per process.
const CensusReport& shared_census();

// Column headers in class order: "+P", "P1", "P22", "P23", "P32", "P33".
std::vector<std::string> class_columns();

}  // namespace sigraph

#endif  // SIGRAPH_TABLES_H_
