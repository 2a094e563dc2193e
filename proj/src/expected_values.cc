#include "sigraph/expected_values.h"

#include <stdexcept>

namespace sigraph {

// Class order everywhere: +P, P1, P22, P23, P32, P33.
const std::vector<TableArtifact>& expected_tables() {
  static const std::vector<TableArtifact> tables = [] {
    const std::vector<std::string> cols = class_columns();
    std::vector<std::string> census_cols = cols;
    census_cols.push_back("total");
    const std::vector<std::string> signed_cols = {"+P",   "-P",   "P1",   "-P1",
                                                  "P22",  "-P22", "P23",  "-P23",
                                                  "P32",  "-P32", "P33",  "-P33"};
    return std::vector<TableArtifact>{
        // negative pentagons and hexagons
        {"T1", cols,
         {{"c5-", {"0", "4", "6", "8", "6", "12"}},
          {"c6-", {"0", "4", "6", "4", "10", "0"}}}},
        // frustration index
        {"T2", cols, {{"l", {"0", "1", "2", "2", "3", "3"}}}},
        // frustration number
        {"T3", cols, {{"l0", {"0", "1", "2", "2", "3", "3"}}}},
        // automorphism and switching automorphism groups
        {"T4_orders", cols,
         {{"|Aut|", {"120", "8", "2", "8", "6", "24"}},
          {"Aut", {"S5", "D4", "Z2", "D4", "S3", "S4"}},
          {"|SwAut|", {"120", "8", "4", "8", "60", "120"}},
          {"SwAut", {"S5", "D4", "V4", "D4", "A5", "S5"}}}},
        // isomorphic copies and switching classes
        {"T5", cols,
         {{"copies", {"1", "15", "60", "15", "20", "5"}},
          {"[copies]", {"1", "15", "30", "15", "2", "1"}}}},
        // chromatic numbers
        {"T8", cols,
         {{"chi", {"1", "1", "1", "1", "1", "1"}},
          {"chi*", {"2", "2", "2", "2", "2", "1"}}}},
        // three-colour counts
        {"T9", cols,
         {{"alpha0", {"1", "0", "0", "0", "0", "0"}},
          {"alpha1", {"10", "2", "0", "0", "0", "0"}},
          {"alpha2", {"30", "14", "6", "4", "0", "0"}},
          {"c6-", {"0", "4", "6", "4", "10", "0"}},
          {"chi(3)-120", {"0", "-8", "-12", "16", "-40", "82"}},
          {"chi(3)", {"120", "112", "108", "136", "80", "202"}}}},
        // clusterability; "-" means inclusterable
        {"T10", signed_cols,
         {{"clun", {"1", "3", "-", "3", "-", "3", "-", "3", "-", "4", "-", "2"}},
          {"Q", {"0", "0", "1", "0", "2", "0", "2", "0", "3", "0", "3", "0"}}}},
        // full census of the 2^15 signatures
        {"census", census_cols,
         {{"signatures", {"512", "7680", "15360", "7680", "1024", "512", "32768"}},
          {"switching classes", {"1", "15", "30", "15", "2", "1", "64"}},
          {"minimal signatures", {"1", "15", "60", "15", "20", "5", "116"}}}},
    };
  }();
  return tables;
}

const TableArtifact& expected_table(const std::string& id) {
  for (const TableArtifact& t : expected_tables()) {
    if (t.id == id) return t;
  }
  throw std::invalid_argument("unknown table id '" + id + "'");
}

}  // namespace sigraph
