#ifndef SIGRAPH_SIX_TYPES_H_
#define SIGRAPH_SIX_TYPES_H_

#include <array>
#include <cstdint>
#include <string>

#include "sigraph/signed_graph.h"

namespace sigraph {

// Switching-isomorphism classes of Petersen signatures, in table order.
enum class SixType { kPlusP, kP1, kP22, kP23, kP32, kP33 };

inline constexpr std::array<SixType, 6> kSixTypes = {
    SixType::kPlusP, SixType::kP1,  SixType::kP22,
    SixType::kP23,   SixType::kP32, SixType::kP33};

// "+P", "P1", "P22", "P23", "P32", "P33".
const char* to_string(SixType t);
// Accepts the names above; throws std::invalid_argument otherwise.
SixType six_type_from_string(const std::string& name);

// Frustration index and negative pentagon count; distinct for every class.
struct SixFingerprint {
  int l = 0;
  int c5 = 0;
  friend bool operator==(const SixFingerprint&, const SixFingerprint&) = default;
};

SixFingerprint six_fingerprint(const SignedGraph& s);
SixFingerprint expected_fingerprint(SixType t);

// Throws std::invalid_argument unless s is a Petersen signature.
SixType classify_six(const SignedGraph& s);
SixType classify_fingerprint(const SixFingerprint& f);

// The standard minimal signature of each class:
//   +P  none negative
//   P1  12.34
//   P22 14.25, 15.34 (distance 2, inside H45)
//   P23 12.34, 13.24 (distance 3)
//   P32 14.25, 15.34, 24.35 (alternate edges of H45)
//   P33 12.34, 13.24, 14.23 (M_3(5))
std::uint32_t six_type_mask(SixType t);
SignedGraph six_type_signature(SixType t);

}  // namespace sigraph

#endif  // SIGRAPH_SIX_TYPES_H_
