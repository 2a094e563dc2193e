#include <map>

#include "sigraph/finite_group.h"

namespace sigraph {

namespace {

using Histogram = std::map<int, int>;

struct CatalogEntry {
  GroupKind kind;
  int order;
  bool abelian;
  Histogram histogram;
};

// Element-order histograms of the catalog groups. Within each order they
// are pairwise distinct, which is what makes the lookup sound.
const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {GroupKind::kTrivial, 1, true, {{1, 1}}},
      {GroupKind::kZ2, 2, true, {{1, 1}, {2, 1}}},
      {GroupKind::kZ4, 4, true, {{1, 1}, {2, 1}, {4, 2}}},
      {GroupKind::kV4, 4, true, {{1, 1}, {2, 3}}},
      {GroupKind::kS3, 6, false, {{1, 1}, {2, 3}, {3, 2}}},
      {GroupKind::kD4, 8, false, {{1, 1}, {2, 5}, {4, 2}}},
      {GroupKind::kQ8, 8, false, {{1, 1}, {2, 1}, {4, 6}}},
      {GroupKind::kS4, 24, false, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}},
      {GroupKind::kA5, 60, false, {{1, 1}, {2, 15}, {3, 20}, {5, 24}}},
      {GroupKind::kS5,
       120,
       false,
       {{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}}},
  };
  return entries;
}

}  // namespace

std::string GroupLabel::name() const {
  switch (kind) {
    case GroupKind::kTrivial: return "1";
    case GroupKind::kZ2: return "Z2";
    case GroupKind::kZ4: return "Z4";
    case GroupKind::kV4: return "V4";
    case GroupKind::kS3: return "S3";
    case GroupKind::kD4: return "D4";
    case GroupKind::kQ8: return "Q8";
    case GroupKind::kS4: return "S4";
    case GroupKind::kA5: return "A5";
    case GroupKind::kS5: return "S5";
    case GroupKind::kOther: break;
  }
  return "OTHER(" + std::to_string(order) + ")";
}

GroupLabel identify_group(int order, bool abelian,
                          const std::map<int, int>& order_histogram) {
  for (const CatalogEntry& entry : catalog()) {
    if (entry.order == order && entry.abelian == abelian &&
        entry.histogram == order_histogram) {
      return GroupLabel{entry.kind, order};
    }
  }
  return GroupLabel{GroupKind::kOther, order};
}

}  // namespace sigraph
