#include "sigraph/six_types.h"

#include <stdexcept>

#include "sigraph/frustration.h"
#include "sigraph/petersen.h"

namespace sigraph {

const char* to_string(SixType t) {
  switch (t) {
    case SixType::kPlusP: return "+P";
    case SixType::kP1: return "P1";
    case SixType::kP22: return "P22";
    case SixType::kP23: return "P23";
    case SixType::kP32: return "P32";
    case SixType::kP33: return "P33";
  }
  return "?";
}

SixType six_type_from_string(const std::string& name) {
  for (const SixType t : kSixTypes) {
    if (name == to_string(t)) return t;
  }
  throw std::invalid_argument("unknown class name: " + name);
}

SixFingerprint six_fingerprint(const SignedGraph& s) {
  const auto c5 =
      negative_circle_counts(petersen_short_circles(), s.negative_edges(), {5});
  return {frustration_index(s).value, c5.at(5)};
}

SixFingerprint expected_fingerprint(SixType t) {
  switch (t) {
    case SixType::kPlusP: return {0, 0};
    case SixType::kP1: return {1, 4};
    case SixType::kP22: return {2, 6};
    case SixType::kP23: return {2, 8};
    case SixType::kP32: return {3, 6};
    case SixType::kP33: return {3, 12};
  }
  throw std::invalid_argument("bad class");
}

SixType classify_fingerprint(const SixFingerprint& f) {
  for (const SixType t : kSixTypes) {
    if (expected_fingerprint(t) == f) return t;
  }
  throw std::logic_error("fingerprint (" + std::to_string(f.l) + ", " +
                         std::to_string(f.c5) + ") matches no class");
}

SixType classify_six(const SignedGraph& s) {
  if (!is_petersen(s.graph())) {
    throw std::invalid_argument("classify_six needs a Petersen signature");
  }
  return classify_fingerprint(six_fingerprint(s));
}

std::uint32_t six_type_mask(SixType t) {
  EdgeSet e;
  switch (t) {
    case SixType::kPlusP: break;
    case SixType::kP1: e = petersen_edges({{12, 34}}); break;
    case SixType::kP22: e = petersen_edges({{14, 25}, {15, 34}}); break;
    case SixType::kP23: e = petersen_edges({{12, 34}, {13, 24}}); break;
    case SixType::kP32: e = petersen_edges({{14, 25}, {15, 34}, {24, 35}}); break;
    case SixType::kP33: e = distance_three_matching(5); break;
  }
  return static_cast<std::uint32_t>(e.to_ulong());
}

SignedGraph six_type_signature(SixType t) {
  return petersen_signature(six_type_mask(t));
}

}  // namespace sigraph
