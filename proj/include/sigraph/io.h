#ifndef SIGRAPH_IO_H_
#define SIGRAPH_IO_H_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "sigraph/signed_graph.h"

namespace sigraph {

// Malformed or out-of-range input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Signed edge list:
//
//   n <vertex_count>
//   u v +
//   u v -
//
// Vertex ids are 0-based. A missing sign means positive. Blank lines and
// text after '#' are ignored. Throws InputError on malformed lines, vertices
// out of range, loops and repeated edges.
SignedGraph parse_signed_graph(const std::string& text);
SignedGraph load_signed_graph(const std::string& path);

// Inverse of parse_signed_graph: header, then edges in canonical order.
std::string serialize_signed_graph(const SignedGraph& s);

// 15-bit Petersen sign mask written in hex, with or without 0x. Throws
// InputError for bad digits or values >= 0x8000.
std::uint32_t parse_mask(const std::string& text);
std::string format_mask(std::uint32_t mask);

}  // namespace sigraph

#endif  // SIGRAPH_IO_H_
