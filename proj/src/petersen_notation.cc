#include "sigraph/petersen_notation.h"

#include <cctype>
#include <stdexcept>

#include "sigraph/petersen.h"

namespace sigraph {

Permutation parse_cycles(const std::string& text, int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  std::string s;
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s == "id" || s == "()" || s.empty()) return Permutation(images);

  std::vector<bool> used(degree, false);
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw std::invalid_argument("expected '(' in " + text);
    ++i;
    std::vector<int> cycle;
    while (i < s.size() && s[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw std::invalid_argument("bad character in cycle notation: " + text);
      }
      const int point = s[i] - '1';
      if (point < 0 || point >= degree || used[point]) {
        throw std::invalid_argument("bad point in cycle notation: " + text);
      }
      used[point] = true;
      cycle.push_back(point);
      ++i;
    }
    if (i == s.size()) throw std::invalid_argument("unclosed cycle: " + text);
    ++i;
    for (size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(images);
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (int x = 0; x < p.degree(); ++x) {
    if (seen[x] || p(x) == x) continue;
    out += '(';
    for (int y = x; !seen[y]; y = p(y)) {
      seen[y] = true;
      out += std::to_string(y + 1);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Permutation petersen_perm(const std::string& cycles) {
  return induced_permutation(parse_cycles(cycles, 5));
}

std::string format_petersen_perm(const Permutation& vertex_perm) {
  return format_cycles(base_permutation(vertex_perm));
}

std::string format_switching_set(VertexSet x) {
  std::string out = "{";
  bool first = true;
  for_each_vertex(x, [&](int v) {
    if (!first) out += ',';
    first = false;
    out += petersen_labeling().name(v);
  });
  return out + "}";
}

VertexSet parse_switching_set(const std::string& text) {
  VertexSet out = 0;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    if (digits.size() != 2) throw std::invalid_argument("bad vertex code " + digits);
    out |= vertex_bit(petersen_labeling().vertex_of_code(std::stoi(digits)));
    digits.clear();
  };
  for (const char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
    } else if (c == ',' || c == '}' || c == '{' || c == ' ') {
      flush();
    } else {
      throw std::invalid_argument("bad switching set: " + text);
    }
  }
  flush();
  return out;
}

std::string format_switching_permutation(const SwitchingPermutation& a) {
  const std::string perm = format_petersen_perm(a.alpha);
  if (a.x == 0) return perm;
  return "z" + format_switching_set(a.x) + (perm == "id" ? "" : perm);
}

}  // namespace sigraph
