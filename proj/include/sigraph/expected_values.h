#ifndef SIGRAPH_EXPECTED_VALUES_H_
#define SIGRAPH_EXPECTED_VALUES_H_

#include <string>
#include <vector>

#include "sigraph/tables.h"

namespace sigraph {

// Published values for every table id, in the layout emit_table produces.
const std::vector<TableArtifact>& expected_tables();

// Throws std::invalid_argument for an unknown id.
const TableArtifact& expected_table(const std::string& id);

}  // namespace sigraph

#endif  // SIGRAPH_EXPECTED_VALUES_H_
