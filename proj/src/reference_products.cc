#include "sigraph/reference_products.h"

#include <array>
#include <optional>

#include "sigraph/petersen.h"
#include "sigraph/petersen_notation.h"
#include "sigraph/signed_groups.h"
#include "sigraph/six_types.h"

namespace sigraph {

namespace {

// A representative written as kind^conj: kind 'e' (identity), 'u'
// (upsilon) or 'w' (omega).
struct RepName {
  char kind;
  const char* conj;
};

// [-] kind^conj nu.
struct Cell {
  bool negated;
  char kind;
  const char* conj;
  const char* nu;
};

struct Table {
  const char* name;
  std::vector<RepName> rows;
  std::vector<RepName> cols;
  std::vector<std::vector<Cell>> cells;
};

const std::vector<RepName> kUpsilons = {{'u', "id"}, {'u', "(123)"}, {'u', "(321)"}};
const std::vector<RepName> kOmegasA = {{'w', "id"}, {'w', "(123)"}, {'w', "(321)"}};
const std::vector<RepName> kOmegasB = {
    {'w', "(12)(45)"}, {'w', "(23)(45)"}, {'w', "(13)(45)"}};
const std::vector<RepName> kOmegas = {
    {'w', "id"},       {'w', "(123)"},    {'w', "(321)"},
    {'w', "(12)(45)"}, {'w', "(23)(45)"}, {'w', "(13)(45)"}};

constexpr Cell kE = {false, 'e', "id", "id"};

const std::vector<Table>& tables() {
  static const std::vector<Table> t = {
      {"upsilon*upsilon", kUpsilons, kUpsilons,
       {{kE, {false, 'w', "(321)", "(123)"}, {false, 'w', "(13)(45)", "(321)"}},
        {{false, 'w', "(12)(45)", "(321)"}, kE, {false, 'w', "id", "(123)"}},
        {{false, 'w', "(123)", "(123)"}, {false, 'w', "(23)(45)", "(321)"}, kE}}},
      {"upsilon*omega", kUpsilons, kOmegasA,
       {{{false, 'w', "(12)(45)", "id"},
         {false, 'w', "(123)", "(12)(45)"},
         {false, 'u', "(123)", "(321)"}},
        {{false, 'u', "(321)", "(321)"},
         {false, 'w', "(13)(45)", "id"},
         {false, 'w', "(321)", "(23)(45)"}},
        {{false, 'w', "id", "(13)(45)"},
         {false, 'u', "id", "(321)"},
         {false, 'w', "(13)(45)", "id"}}}},
      {"upsilon*omega'", kUpsilons, kOmegasB,
       {{{false, 'w', "id", "id"},
         {true, 'w', "(23)(45)", "(12)(45)"},
         {false, 'u', "(23)(45)", "(123)"}},
        {{true, 'w', "(12)(45)", "(23)(45)"},
         {false, 'u', "id", "(123)"},
         {false, 'w', "id", "id"}},
        {{false, 'u', "(13)(45)", "(123)"},
         {false, 'w', "(321)", "id"},
         {true, 'w', "(13)(45)", "(13)(45)"}}}},
      {"omega*upsilon", kOmegas, kUpsilons,
       {{{true, 'w', "(12)(45)", "(12)(45)"},
         {false, 'u', "(123)", "(321)"},
         {false, 'w', "(13)(45)", "id"}},
        {{false, 'w', "(23)(45)", "id"},
         {true, 'w', "(13)(45)", "(23)(45)"},
         {false, 'u', "(321)", "(321)"}},
        {{false, 'u', "id", "(321)"},
         {false, 'w', "(12)(45)", "id"},
         {true, 'w', "(23)(45)", "(13)(45)"}},
        {{true, 'w', "id", "(12)(45)"},
         {false, 'w', "(321)", "id"},
         {false, 'u', "(321)", "(123)"}},
        {{false, 'w', "(123)", "id"},
         {false, 'u', "(123)", "(123)"},
         {true, 'w', "(321)", "(13)(45)"}},
        {{false, 'u', "id", "(123)"},
         {true, 'w', "(123)", "(23)(45)"},
         {false, 'w', "id", "id"}}}},
      {"omega*omega", kOmegas, kOmegasA,
       {{{false, 'w', "(23)(45)", "id"},
         {false, 'u', "id", "id"},
         {true, 'u', "(321)", "(13)(45)"}},
        {{true, 'u', "id", "(12)(45)"},
         {false, 'w', "(12)(45)", "id"},
         {false, 'u', "(123)", "id"}},
        {{false, 'u', "(321)", "id"},
         {true, 'u', "(123)", "(23)(45)"},
         {false, 'w', "(13)(45)", "id"}},
        {{true, 'w', "(23)(45)", "(12)(45)"}, kE, {true, 'w', "(13)(45)", "(23)(45)"}},
        {kE, {false, 'w', "(12)(45)", "(12)(45)"}, {false, 'w', "(13)(45)", "(13)(45)"}},
        {{true, 'w', "(23)(45)", "(13)(45)"}, {true, 'w', "(12)(45)", "(23)(45)"}, kE}}},
      {"omega*omega'", kOmegas, kOmegasB,
       {{{true, 'w', "(123)", "(12)(45)"}, kE, {true, 'w', "(321)", "(13)(45)"}},
        {kE, {true, 'w', "id", "(12)(45)"}, {true, 'w', "(321)", "(23)(45)"}},
        {{true, 'w', "(123)", "(23)(45)"}, {true, 'w', "id", "(23)(45)"}, kE},
        {{false, 'w', "(123)", "id"},
         {false, 'u', "(12)(45)", "id"},
         {true, 'u', "(13)(45)", "(23)(45)"}},
        {{true, 'u', "(12)(45)", "(12)(45)"},
         {false, 'w', "id", "id"},
         {false, 'u', "(13)(45)", "id"}},
        {{false, 'u', "(12)(45)", "id"},
         {true, 'u', "(23)(45)", "(13)(45)"},
         {false, 'w', "(321)", "id"}}}},
  };
  return t;
}

SwitchingPermutation rep_of(const RepName& r) {
  SwitchingPermutation base = SwitchingPermutation::identity(10);
  if (r.kind == 'u') base = p32_upsilon();
  if (r.kind == 'w') base = p32_omega();
  return sp_conjugate(base, petersen_perm(r.conj));
}

std::string rep_text(char kind, const char* conj) {
  std::string out = kind == 'e' ? "e" : kind == 'u' ? "upsilon" : "omega";
  if (std::string(conj) != "id") out += "^" + std::string(conj);
  return out;
}

std::string cell_text(const Cell& c) {
  std::string out = (c.negated ? "-" : "") + rep_text(c.kind, c.conj);
  if (std::string(c.nu) != "id") out += " " + std::string(c.nu);
  return out;
}

SwitchingPermutation cell_value(const Cell& c) {
  SwitchingPermutation r = rep_of({c.kind, c.conj});
  if (c.negated) r = sp_negate(r);
  return sp_multiply(r, SwitchingPermutation::automorphism(petersen_perm(c.nu)));
}

ProductCheck compare(std::string name, const SwitchingPermutation& expected,
                     const SwitchingPermutation& actual, bool modulo_kernel) {
  const Graph& g = petersen_graph();
  const bool equivalent = sp_equivalent(g, expected, actual);
  const bool ok = modulo_kernel ? equivalent : expected == actual;
  return {std::move(name), format_switching_permutation(expected),
          format_switching_permutation(actual), ok, equivalent};
}

}  // namespace

SwitchingPermutation p32_upsilon() {
  return {parse_switching_set("{15,24}"), petersen_perm("(15)(24)")};
}

SwitchingPermutation p32_omega() {
  return {parse_switching_set("{34,25,13,24}"), petersen_perm("(145)")};
}

const std::vector<std::string>& p32_automorphism_names() {
  static const std::vector<std::string> names = {"id",       "(123)",    "(321)",
                                                 "(12)(45)", "(23)(45)", "(13)(45)"};
  return names;
}

std::vector<SwitchingPermutation> p32_representatives() {
  std::vector<SwitchingPermutation> out{SwitchingPermutation::identity(10)};
  for (const char* l : {"id", "(123)", "(321)"}) {
    out.push_back(sp_conjugate(p32_upsilon(), petersen_perm(l)));
  }
  for (const std::string& m : p32_automorphism_names()) {
    out.push_back(sp_conjugate(p32_omega(), petersen_perm(m)));
  }
  return out;
}

namespace {

// N[v_{j5}] with the transposition (j5).
SwitchingPermutation p33_generator(int j) {
  const Graph& g = petersen_graph();
  const int v = petersen_labeling().vertex_of(j, 5);
  const std::string cycle = "(" + std::to_string(j) + "5)";
  return {g.neighbors(v) | vertex_bit(v), petersen_perm(cycle)};
}

}  // namespace

std::vector<SwitchingPermutation> p33_representatives() {
  std::vector<SwitchingPermutation> out{SwitchingPermutation::identity(10)};
  for (int j = 1; j <= 4; ++j) out.push_back(p33_generator(j));
  return out;
}

SwitchingPermutation p33_lift(const Permutation& base_xi) {
  const Permutation xi = induced_permutation(base_xi);
  const int pre = base_xi.inverse()(4) + 1;  // 5^(xi^-1), 1-based
  if (pre == 5) return SwitchingPermutation::automorphism(xi);
  const SwitchingPermutation gen = p33_generator(pre);
  // (5^(xi^-1) 5) * ((5^(xi^-1) 5) xi) = xi.
  return {gen.x, xi};
}

SwitchingPermutation p32_lift(const Permutation& base_xi) {
  const Permutation xi = induced_permutation(base_xi);
  const Permutation inv = base_xi.inverse();
  int a = inv(3) + 1;  // images of 4 and 5 under xi^-1, 1-based
  int b = inv(4) + 1;
  if (a > b) std::swap(a, b);
  VertexSet x = 0;
  if (a == 4 && b == 5) {
    x = 0;
  } else if (b == 4 || b == 5) {
    // {i,4} or {i,5} with i in {1,2,3}; lambda = (123)^(i-1).
    const int i = a;
    const Permutation lambda =
        petersen_perm(i == 1 ? "id" : i == 2 ? "(123)" : "(132)");
    const VertexSet base = parse_switching_set(b == 4 ? "{34,25,13,24}" : "{25,34,12,35}");
    x = lambda.apply(base);
  } else {
    // {i,j} inside {1,2,3} with j = i^(123).
    int i = a;
    int j = b;
    if (j != i % 3 + 1) std::swap(i, j);
    const PetersenLabeling& p = petersen_labeling();
    x = vertex_bit(p.vertex_of(i, 5)) | vertex_bit(p.vertex_of(j, 4));
  }
  return {x, xi};
}

std::vector<ProductCheck> check_p32_tables() {
  std::vector<ProductCheck> out;
  for (const Table& t : tables()) {
    for (size_t r = 0; r < t.rows.size(); ++r) {
      for (size_t c = 0; c < t.cols.size(); ++c) {
        const Cell& cell = t.cells[r][c];
        const SwitchingPermutation actual =
            sp_multiply(rep_of(t.rows[r]), rep_of(t.cols[c]));
        const std::string name = std::string(t.name) + " " +
                                 rep_text(t.rows[r].kind, t.rows[r].conj) + " * " +
                                 rep_text(t.cols[c].kind, t.cols[c].conj) + " = " +
                                 cell_text(cell);
        out.push_back(compare(name, cell_value(cell), actual, cell.kind == 'e'));
      }
    }
  }

  // Worked examples, written out in full.
  const SwitchingPermutation w = p32_omega();
  const SwitchingPermutation u = p32_upsilon();
  const auto conj = [](const SwitchingPermutation& a, const char* m) {
    return sp_conjugate(a, petersen_perm(m));
  };
  out.push_back(compare("example omega*omega = z{34,25,35,12}(541)",
                        {parse_switching_set("{34,25,35,12}"), petersen_perm("(541)")},
                        sp_multiply(w, w), false));
  out.push_back(compare("example omega*omega^(321) = -upsilon^(321) (13)(45)",
                        sp_multiply(sp_negate(conj(u, "(321)")),
                                    SwitchingPermutation::automorphism(
                                        petersen_perm("(13)(45)"))),
                        sp_multiply(w, conj(w, "(321)")), false));
  out.push_back(compare("example omega^(321)*omega^(123) = -upsilon^(123) (32)(45)",
                        sp_multiply(sp_negate(conj(u, "(123)")),
                                    SwitchingPermutation::automorphism(
                                        petersen_perm("(32)(45)"))),
                        sp_multiply(conj(w, "(321)"), conj(w, "(123)")), false));
  out.push_back(compare("example upsilon*upsilon^(123) = omega^(321) (123)",
                        sp_multiply(conj(w, "(321)"), SwitchingPermutation::automorphism(
                                                          petersen_perm("(123)"))),
                        sp_multiply(u, conj(u, "(123)")), false));
  return out;
}

std::vector<ProductCheck> check_p33_table() {
  const Graph& g = petersen_graph();
  std::vector<Permutation> s4;
  for (const Permutation& a : petersen_automorphisms()) {
    if (base_permutation(a)(4) == 4) s4.push_back(a);
  }
  // Element: (j, beta) meaning beta if j == 0, else z_{N[j5]}(j5) beta.
  const auto element = [&](int j, const Permutation& beta) {
    if (j == 0) return SwitchingPermutation::automorphism(beta);
    return sp_multiply(p33_generator(j), SwitchingPermutation::automorphism(beta));
  };
  const auto transposition_image = [](int j, const Permutation& alpha_inv) {
    return base_permutation(alpha_inv)(j - 1) + 1;
  };

  std::array<ProductCheck, 4> checks = {{
      {"P33 alpha * beta = alpha beta", "", "", true, true},
      {"P33 alpha * z_{N[j5]}(j5) beta = z_{N[j'5]}(j'5) alpha beta", "", "", true, true},
      {"P33 z_{N[i5]}(i5) alpha * beta = z_{N[i5]}(i5) alpha beta", "", "", true, true},
      {"P33 z_{N[i5]}(i5) alpha * z_{N[j5]}(j5) beta", "", "", true, true},
  }};
  std::array<int, 4> pairs{};
  for (int i = 0; i <= 4; ++i) {
    for (const Permutation& alpha : s4) {
      for (int j = 0; j <= 4; ++j) {
        for (const Permutation& beta : s4) {
          const SwitchingPermutation actual =
              sp_multiply(element(i, alpha), element(j, beta));
          const Permutation ab = alpha * beta;
          SwitchingPermutation expected;
          int rule;
          if (i == 0 && j == 0) {
            rule = 0;
            expected = SwitchingPermutation::automorphism(ab);
          } else if (i == 0) {
            rule = 1;
            expected = element(transposition_image(j, alpha.inverse()), ab);
          } else if (j == 0) {
            rule = 2;
            expected = element(i, ab);
          } else {
            rule = 3;
            const int jp = transposition_image(j, alpha.inverse());
            if (jp == i) {
              expected = SwitchingPermutation::automorphism(ab);
            } else {
              const VertexSet x = p33_generator(jp).x;
              const std::string cycle =
                  "(" + std::to_string(i) + std::to_string(jp) + "5)";
              expected = {x, petersen_perm(cycle) * ab};
            }
          }
          ++pairs[rule];
          if (!sp_equivalent(g, expected, actual) && checks[rule].ok) {
            checks[rule].ok = false;
            checks[rule].ok_modulo_kernel = false;
            checks[rule].expected = format_switching_permutation(expected);
            checks[rule].actual = format_switching_permutation(actual);
          }
        }
      }
    }
  }
  std::vector<ProductCheck> out;
  for (int r = 0; r < 4; ++r) {
    if (checks[r].ok) {
      checks[r].expected = checks[r].actual = std::to_string(pairs[r]) + " pairs";
    }
    out.push_back(checks[r]);
  }
  return out;
}

std::vector<ProductCheck> check_p32_transforms() {
  struct Row {
    const char* mu;
    const char* w;
    const char* z;
    const char* omega_perm;
  };
  static const Row rows[] = {
      {"id", "{15,24}", "{34,25,13,24}", "(145)"},
      {"(123)", "{25,34}", "{14,35,12,34}", "(245)"},
      {"(321)", "{35,14}", "{24,15,23,14}", "(345)"},
      {"(12)(45)", "{15,24}", "{35,14,23,15}", "(542)"},
      {"(23)(45)", "{14,35}", "{25,34,12,35}", "(541)"},
      {"(13)(45)", "{34,25}", "{15,24,13,25}", "(543)"},
  };
  std::vector<ProductCheck> out;
  for (const Row& r : rows) {
    const Permutation mu = petersen_perm(r.mu);
    const SwitchingPermutation u = sp_conjugate(p32_upsilon(), mu);
    const SwitchingPermutation w = sp_conjugate(p32_omega(), mu);
    const bool same = u.x == parse_switching_set(r.w);
    out.push_back({std::string("W^") + r.mu, r.w, format_switching_set(u.x), same, same});
    const SwitchingPermutation expected{parse_switching_set(r.z),
                                        petersen_perm(r.omega_perm)};
    out.push_back(compare(std::string("omega^") + r.mu, expected, w, false));
  }
  return out;
}

}  // namespace sigraph
