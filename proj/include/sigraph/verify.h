#ifndef SIGRAPH_VERIFY_H_
#define SIGRAPH_VERIFY_H_

#include <string>
#include <vector>

#include "sigraph/tables.h"

namespace sigraph {

struct CellDiff {
  std::string table;
  std::string row;
  std::string column;
  std::string expected;
  std::string actual;
};

struct VerifyResult {
  std::vector<CellDiff> diffs;
  int cells_checked = 0;
  // Informational lines; they never affect ok().
  std::vector<std::string> notes;

  bool ok() const { return diffs.empty(); }
};

// Cell-by-cell comparison. Missing rows, columns or cells show up as diffs
// with "<missing>" on the absent side.
void compare_tables(const TableArtifact& expected, const TableArtifact& actual,
                    VerifyResult& out);

// Recomputes every table and compares it with `expected`, then runs the
// consistency checks:
//  - chi(3) by direct enumeration against the difference formula,
//  - the group-quotient orbit counts against the census tally,
//  - census totals (32768 signatures, 64 switching classes, l0 = l),
//  - the worked products, conjugate table and product rules of the
//    switching automorphism groups of P32 and P33.
VerifyResult verify_all(const std::vector<TableArtifact>& expected);
VerifyResult verify_all();

std::string format_diff(const CellDiff& d);

}  // namespace sigraph

#endif  // SIGRAPH_VERIFY_H_
