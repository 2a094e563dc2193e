#ifndef SIGRAPH_CENSUS_H_
#define SIGRAPH_CENSUS_H_

#include <array>
#include <cstdint>

#include "sigraph/six_types.h"

namespace sigraph {

struct ClassInvariants {
  int l = 0;
  int l0 = 0;
  int c5 = 0;
  int c6 = 0;
  int chi = 0;
  int chi_star = 0;
  std::int64_t chi3 = 0;

  friend bool operator==(const ClassInvariants&, const ClassInvariants&) = default;
};

struct CensusRow {
  SixType type = SixType::kPlusP;
  std::int64_t signatures = 0;
  // Switching classes, counted by their numerically least member.
  int switching_classes = 0;
  // Signatures with |E^-| equal to the frustration index.
  int minimal_signatures = 0;
  std::uint32_t representative_mask = 0;
  ClassInvariants invariants;
};

struct CensusReport {
  std::array<CensusRow, 6> rows;
  std::int64_t total_signatures = 0;
  int total_switching_classes = 0;
  // Signatures whose frustration number differs from the frustration index.
  std::int64_t l0_mismatches = 0;
};

// Classifies all 2^15 Petersen signatures. workers <= 0 means
// census_workers().
CensusReport run_census(int workers = 0);

// PETERSEN_WORKERS if set to a positive integer, else the hardware
// concurrency (at least 1).
int census_workers();

// Invariants of one signature, computed directly.
ClassInvariants class_invariants(const SignedGraph& s);

}  // namespace sigraph

#endif  // SIGRAPH_CENSUS_H_
