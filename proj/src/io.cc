#include "sigraph/io.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace sigraph {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& token, int line) {
  int v = 0;
  const char* end = token.data() + token.size();
  const auto [p, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || p != end) fail(line, "expected an integer, got '" + token + "'");
  return v;
}

}  // namespace

SignedGraph parse_signed_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> negative;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (n < 0) {
      if (tok.size() != 2 || tok[0] != "n") fail(line_no, "expected header 'n <count>'");
      n = parse_int(tok[1], line_no);
      if (n < 1 || n > kMaxVertices) {
        fail(line_no, "vertex count must be in 1.." + std::to_string(kMaxVertices));
      }
      continue;
    }
    if (tok.size() < 2 || tok.size() > 3) fail(line_no, "expected 'u v [+|-]'");
    const int u = parse_int(tok[0], line_no);
    const int v = parse_int(tok[1], line_no);
    if (u < 0 || u >= n || v < 0 || v >= n) fail(line_no, "vertex out of range");
    if (u == v) fail(line_no, "loop edge");
    bool minus = false;
    if (tok.size() == 3) {
      if (tok[2] == "-") {
        minus = true;
      } else if (tok[2] != "+") {
        fail(line_no, "sign must be + or -");
      }
    }
    const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) fail(line_no, "repeated edge");
    edges.push_back(key);
    if (minus) negative.push_back(key);
  }
  if (n < 0) throw InputError("missing header 'n <count>'");
  Graph g;
  try {
    g = Graph(n, edges);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  EdgeSet neg;
  for (const auto& [u, v] : negative) neg.set(*g.edge_index(u, v));
  return SignedGraph(std::move(g), neg);
}

SignedGraph load_signed_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_signed_graph(buf.str());
}

std::string serialize_signed_graph(const SignedGraph& s) {
  std::ostringstream out;
  out << "n " << s.graph().vertex_count() << '\n';
  for (int i = 0; i < s.graph().edge_count(); ++i) {
    const Edge& e = s.graph().edge(i);
    out << e.u << ' ' << e.v << ' ' << (s.sign(i) < 0 ? '-' : '+') << '\n';
  }
  return out.str();
}

std::uint32_t parse_mask(const std::string& text) {
  std::string digits = text;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    digits = digits.substr(2);
  }
  std::uint32_t v = 0;
  const char* end = digits.data() + digits.size();
  const auto [p, ec] = std::from_chars(digits.data(), end, v, 16);
  if (digits.empty() || ec != std::errc() || p != end) {
    throw InputError("bad hex mask '" + text + "'");
  }
  if (v >= kPetersenMaskLimit) {
    throw InputError("mask '" + text + "' exceeds 15 bits");
  }
  return v;
}

std::string format_mask(std::uint32_t mask) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%04X", mask);
  return buf;
}

}  // namespace sigraph
