#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <positroid/cell.hpp>
#include <positroid/cluster.hpp>

using namespace positroid;
using namespace positroid::cluster;
using cell::CellModel;
using cell::Labelling;
using exact::LaurentPoly;
using exact::RationalFn;
using plabic::Subset;

namespace {

std::string data_path(const std::string &name) {
  return std::string(LAB_DATA_DIR) + "/" + name;
}

Subset S(const std::string &digits) {
  Subset s;
  for (char c : digits) s.push_back(c - '0');
  std::sort(s.begin(), s.end());
  return s;
}

int face_with_src(const plabic::Analysis &a, const Subset &lab) {
  for (int f = 0; f < a.labels.face_count; ++f)
    if (a.labels.src_label[f] == lab) return f;
  return -1;
}

Seed toy(int nverts, std::vector<bool> frozen,
         std::vector<std::pair<int, int>> arrows) {
  Seed s;
  s.quiver.vertex_count = nverts;
  s.quiver.frozen = std::move(frozen);
  for (auto [u, v] : arrows) s.quiver.arrows.push_back({u, v, {}});
  s.reg = std::make_shared<exact::VarRegistry>();
  for (int v = 0; v < nverts; ++v) s.reg->intern("x" + std::to_string(v));
  for (int v = 0; v < nverts; ++v)
    s.vars.push_back(LaurentPoly::variable(s.reg, v));
  return s;
}

std::multiset<std::pair<int, int>> arrow_pairs(const IceQuiver &q) {
  std::multiset<std::pair<int, int>> m;
  for (const auto &a : q.arrows) m.insert({a.from, a.to});
  return m;
}

bool same_seed_data(const Seed &a, const Seed &b) {
  if (arrow_pairs(a.quiver) != arrow_pairs(b.quiver)) return false;
  if (a.vars.size() != b.vars.size()) return false;
  for (size_t v = 0; v < a.vars.size(); ++v)
    if (a.vars[v] != b.vars[v]) return false;
  return true;
}

bool valid_witness(const IceQuiver &a, const IceQuiver &b,
                   const std::vector<int> &m, bool rf) {
  std::vector<char> used(b.vertex_count, 0);
  for (int v : m) {
    if (v < 0 || v >= b.vertex_count || used[v]) return false;
    used[v] = 1;
  }
  if (rf)
    for (int u = 0; u < a.vertex_count; ++u)
      if (a.frozen[u] != b.frozen[m[u]]) return false;
  std::multiset<std::pair<int, int>> ma, mb;
  for (const auto &ar : a.arrows) ma.insert({m[ar.from], m[ar.to]});
  for (const auto &ar : b.arrows) mb.insert({ar.from, ar.to});
  return ma == mb;
}

RationalFn expand_var(const LaurentPoly &v, Labelling conv,
                      const CellModel &m) {
  return cell::expand(RationalFn(v), conv, m);
}

// every variable matches exactly one expected function on the cell
void match_expansions(const std::vector<LaurentPoly> &vars, Labelling conv,
                      const CellModel &m,
                      const std::vector<RationalFn> &expected) {
  REQUIRE(vars.size() == expected.size());
  std::vector<char> hit(expected.size(), 0);
  for (const auto &v : vars) {
    RationalFn ex = expand_var(v, conv, m);
    int found = -1;
    for (size_t i = 0; i < expected.size() && found < 0; ++i)
      if (!hit[i] && cell::equal_on_cell(ex, expected[i])) found = (int)i;
    CHECK(found >= 0);
    if (found >= 0) hit[found] = 1;
  }
  for (char h : hit) CHECK(h == 1);
}

// classical matrix mutation, acting on the full skew matrix read off a quiver
int mutated_b(const IceQuiver &q, int j, int i, int k) {
  int bik = b_entry(q, i, k);
  if (i == j || k == j) return -bik;
  int bij = b_entry(q, i, j), bjk = b_entry(q, j, k);
  int plus = bij * bjk > 0 ? bij * bjk : 0;
  return bik + (bij > 0 ? plus : -plus);
}

}  // namespace

TEST_CASE("initial seed carries the face quiver and face variables") {
  plabic::PlabicGraph g = plabic::parse_file(data_path("example_3_7.plabic"));
  plabic::Analysis a = plabic::analyze(g);
  Seed s = initial_seed(a);

  CHECK(s.quiver.vertex_count == 10);
  int mut = 0;
  for (int v = 0; v < s.quiver.vertex_count; ++v) {
    CHECK(s.quiver.frozen[v] == a.labels.is_boundary[v]);
    mut += !s.quiver.frozen[v];
    CHECK(s.vars[v] == LaurentPoly::variable(s.reg, v));
    CHECK(s.reg->name(v) == "x" + std::to_string(v));
  }
  CHECK(mut == 3);
  CHECK(s.provenance.empty());

  // trivalent interior, no parallel faces: nothing to cancel
  IceQuiver raw = plabic::dual_quiver(g);
  CHECK(reduce_two_cycles(raw) == 0);
  CHECK(arrow_pairs(raw) == arrow_pairs(s.quiver));
}

TEST_CASE("mutation is an involution") {
  Seed s = initial_seed(plabic::parse_file(data_path("example_3_7.plabic")));
  std::vector<int> mut;
  for (int v = 0; v < s.quiver.vertex_count; ++v)
    if (!s.quiver.frozen[v]) mut.push_back(v);
  REQUIRE(mut.size() == 3);

  for (int j : mut) {
    CAPTURE(j);
    Seed back = mutate(mutate(s, j), j);
    CHECK(same_seed_data(back, s));
    CHECK(back.provenance == std::vector<int>{j, j});
  }
  // and one generation deeper
  Seed s1 = mutate(s, mut[0]);
  for (int j : mut) {
    CAPTURE(j);
    CHECK(same_seed_data(mutate(mutate(s1, j), j), s1));
  }
}

TEST_CASE("exchange at the running example") {
  plabic::PlabicGraph g = plabic::parse_file(data_path("example_3_7.plabic"));
  CellModel m = cell::build_model(g);
  Seed s = initial_seed(m.analysis);
  auto pl = [&](const char *d) { return RationalFn(m.pl(S(d))); };

  // the initial mutable variables expand to the interior source labels
  match_expansions({s.vars[face_with_src(m.analysis, S("135"))],
                    s.vars[face_with_src(m.analysis, S("137"))],
                    s.vars[face_with_src(m.analysis, S("357"))]},
                   Labelling::src, m,
                   {pl("135"), pl("137"), pl("357")});

  // one step: trading the 357 face brings in the 136 coordinate through a
  // three-term exchange
  int v357 = face_with_src(m.analysis, S("357"));
  Seed s1 = mutate(s, v357);
  CHECK(cell::equal_on_cell(expand_var(s1.vars[v357], Labelling::src, m),
                            pl("136")));
  CHECK(cell::equal_on_cell(
      expand_var(s1.vars[v357] * s.vars[v357], Labelling::src, m),
      pl("137") * pl("356") + pl("367") * pl("135")));

  // in the other labelling the same trade happens at the 157 face
  int v135 = face_with_src(m.analysis, S("135"));
  Seed t1 = mutate(s, v135);
  CHECK(m.analysis.labels.tgt_label[v135] == S("157"));
  CHECK(cell::equal_on_cell(expand_var(t1.vars[v135], Labelling::tgt, m),
                            pl("136")));
  CHECK(cell::equal_on_cell(expand_var(t1.vars[v135], Labelling::src, m),
                            pl("347")));

  // find the cluster {136, 126, 135}; trading 136 there yields a product
  // of two coordinates, through the three-term exchange identity
  Closure cl = enumerate_variables(s, 20);
  const Seed *witness = nullptr;
  int v136 = -1;
  for (const Seed &seed : cl.seeds) {
    std::vector<int> match(3, -1);
    int idx = 0;
    for (int v = 0; v < seed.quiver.vertex_count; ++v) {
      if (seed.quiver.frozen[v]) continue;
      RationalFn ex = expand_var(seed.vars[v], Labelling::src, m);
      if (cell::equal_on_cell(ex, pl("136"))) match[0] = v;
      if (cell::equal_on_cell(ex, pl("126"))) match[1] = v;
      if (cell::equal_on_cell(ex, pl("135"))) match[2] = v;
      ++idx;
    }
    if (match[0] >= 0 && match[1] >= 0 && match[2] >= 0) {
      witness = &seed;
      v136 = match[0];
      break;
    }
  }
  REQUIRE(witness != nullptr);

  Seed traded = mutate(*witness, v136);
  RationalFn fresh = expand_var(traded.vars[v136], Labelling::src, m);
  CHECK(cell::equal_on_cell(fresh, pl("125") * pl("367")));

  // the exchange binomial itself, expanded on the cell
  RationalFn lhs = expand_var(traded.vars[v136] * witness->vars[v136],
                              Labelling::src, m);
  RationalFn rhs = pl("126") * pl("367") * pl("135") +
                   pl("167") * pl("123") * pl("356");
  CHECK(cell::equal_on_cell(lhs, rhs));
}

TEST_CASE("closure of the running example is the fourteen seed graph") {
  Seed s = initial_seed(plabic::parse_file(data_path("example_3_7.plabic")));
  Closure cl = enumerate_variables(s, 20);
  CHECK(cl.finite_type);
  CHECK(cl.seeds.size() == 14);
  CHECK(cl.variables.size() == 9);

  // the fourteen clusters are distinct as variable multisets
  std::set<std::vector<std::map<exact::Expo, exact::Rat>>> keys;
  for (const Seed &seed : cl.seeds) {
    std::vector<std::map<exact::Expo, exact::Rat>> key;
    for (int v = 0; v < seed.quiver.vertex_count; ++v)
      if (!seed.quiver.frozen[v]) key.push_back(seed.vars[v].terms());
    std::sort(key.begin(), key.end());
    keys.insert(key);
  }
  CHECK(keys.size() == 14);

  // every variable list entry is some seed's variable and vice versa
  for (const Seed &seed : cl.seeds)
    for (int v = 0; v < seed.quiver.vertex_count; ++v)
      if (!seed.quiver.frozen[v])
        CHECK(std::binary_search(
            cl.variables.begin(), cl.variables.end(), seed.vars[v],
            [](const LaurentPoly &a, const LaurentPoly &b) {
              return a.terms() < b.terms();
            }));

  // a bound below the closure size reports an unfinished enumeration
  Closure truncated = enumerate_variables(s, 5);
  CHECK(!truncated.finite_type);
  CHECK(truncated.seeds.size() == 5);
}

TEST_CASE("variable expansions match both labellings") {
  plabic::PlabicGraph g = plabic::parse_file(data_path("example_3_7.plabic"));
  CellModel m = cell::build_model(g);
  Seed s = initial_seed(m.analysis);
  Closure cl = enumerate_variables(s, 20);
  REQUIRE(cl.variables.size() == 9);
  auto pl = [&](const char *d) { return RationalFn(m.pl(S(d))); };

  match_expansions(cl.variables, Labelling::src, m,
                   {pl("357"), pl("347"), pl("137"), pl("346"), pl("136"),
                    pl("126"), pl("135"), pl("125") * pl("367"),
                    pl("124") * pl("367")});
  match_expansions(cl.variables, Labelling::tgt, m,
                   {pl("137"), pl("136"), pl("135"), pl("126"), pl("125"),
                    pl("245"), pl("157"), pl("147") * pl("235"),
                    pl("145") * pl("236")});
}

TEST_CASE("uniform cells close onto the missing coordinates") {
  struct Row {
    const char *file;
    size_t seeds;
  };
  for (const Row &row : {Row{"uniform_2_4.plabic", 2},
                         Row{"uniform_2_5.plabic", 5},
                         Row{"uniform_3_5.plabic", 5}}) {
    CAPTURE(row.file);
    CellModel m = cell::build_model(plabic::parse_file(data_path(row.file)));
    Seed s = initial_seed(m.analysis);
    Closure cl = enumerate_variables(s, 20);
    CHECK(cl.finite_type);
    CHECK(cl.seeds.size() == row.seeds);

    for (Labelling conv : {Labelling::src, Labelling::tgt}) {
      std::set<Subset> necklace;
      const auto &labels = m.analysis.labels;
      for (int f = 0; f < labels.face_count; ++f)
        if (labels.is_boundary[f])
          necklace.insert(conv == Labelling::src ? labels.src_label[f]
                                                 : labels.tgt_label[f]);
      std::vector<RationalFn> expected;
      for (const auto &[I, poly] : m.plucker)
        if (!necklace.count(I)) expected.push_back(RationalFn(poly));
      match_expansions(cl.variables, conv, m, expected);
    }
  }

  // no interior face, nothing to mutate
  Seed bare =
      initial_seed(plabic::parse_file(data_path("single_edge.plabic")));
  Closure cl = enumerate_variables(bare, 4);
  CHECK(cl.finite_type);
  CHECK(cl.seeds.size() == 1);
  CHECK(cl.variables.empty());
}

TEST_CASE("toy type A2 pentagon") {
  Seed s = toy(2, {false, false}, {{0, 1}});
  Closure cl = enumerate_variables(s, 10);
  CHECK(cl.finite_type);
  CHECK(cl.seeds.size() == 5);
  REQUIRE(cl.variables.size() == 5);

  auto X = [&](int v, int p) { return LaurentPoly::variable(s.reg, v, p); };
  LaurentPoly one = LaurentPoly::constant(s.reg, 1);
  std::vector<LaurentPoly> expected = {
      X(0, 1), X(1, 1),
      (one + X(1, 1)) * X(0, -1),
      (one + X(0, 1)) * X(1, -1),
      (one + X(0, 1) + X(1, 1)) * X(0, -1) * X(1, -1)};
  std::sort(expected.begin(), expected.end(),
            [](const LaurentPoly &a, const LaurentPoly &b) {
              return a.terms() < b.terms();
            });
  CHECK(expected == cl.variables);

  // first exchange by hand
  Seed s1 = mutate(s, 0);
  CHECK(s1.vars[0] == (one + X(1, 1)) * X(0, -1));
  CHECK(arrow_pairs(s1.quiver) ==
        std::multiset<std::pair<int, int>>{{1, 0}});
}

TEST_CASE("exchange matrices and y-hat follow the mutation rule") {
  Seed s37 = initial_seed(plabic::parse_file(data_path("example_3_7.plabic")));
  Seed a2 = toy(2, {false, false}, {{0, 1}});

  for (const Seed &s : {s37, a2}) {
    const IceQuiver &q = s.quiver;
    ExchangeMatrix em = exchange_matrix(q);
    size_t cols = 0;
    for (int v = 0; v < q.vertex_count; ++v) cols += !q.frozen[v];
    REQUIRE(em.col_vertex.size() == cols);
    REQUIRE(em.b.size() == (size_t)q.vertex_count);
    for (size_t c = 0; c < em.col_vertex.size(); ++c) {
      int j = em.col_vertex[c];
      CHECK(!q.frozen[j]);
      for (int i = 0; i < q.vertex_count; ++i) {
        CHECK(em.b[i][c] == b_entry(q, i, j));
        CHECK(b_entry(q, i, j) == -b_entry(q, j, i));
      }
    }

    for (int j : em.col_vertex) {
      Seed next = mutate(s, j);
      // quiver mutation agrees with the classical matrix rule
      for (int i = 0; i < q.vertex_count; ++i)
        for (int k : em.col_vertex)
          CHECK(b_entry(next.quiver, i, k) == mutated_b(q, j, i, k));
      // y-hat transformation: inverted at j, twisted elsewhere
      CHECK(exact::equal_rational(y_hat(next, j), y_hat(s, j).pow(-1)));
      RationalFn yj = y_hat(s, j);
      RationalFn onef = RationalFn::constant(s.reg, 1);
      for (int k : em.col_vertex) {
        if (k == j) continue;
        int b = b_entry(q, j, k);
        RationalFn rhs = y_hat(s, k);
        if (b > 0) rhs = rhs * yj.pow(b);
        rhs = rhs * (onef + yj).pow(-b);
        CHECK(exact::equal_rational(y_hat(next, k), rhs));
      }
    }
  }
}

TEST_CASE("frozen, isolated, and commuting exchanges") {
  // a mutable vertex squeezed between two frozen ones
  Seed pinch = toy(3, {false, true, true}, {{1, 0}, {0, 2}});
  Seed flipped = mutate(pinch, 0);
  auto X = [&](int v, int p) { return LaurentPoly::variable(pinch.reg, v, p); };
  CHECK(flipped.vars[0] == (X(1, 1) + X(2, 1)) * X(0, -1));
  CHECK(arrow_pairs(flipped.quiver) ==
        std::multiset<std::pair<int, int>>{{0, 1}, {2, 0}});
  CHECK(mutable_part(flipped.quiver).quiver.arrows.empty());
  CHECK(same_seed_data(mutate(flipped, 0), pinch));

  // no arrows at all: the exchange binomial degenerates to 2
  Seed lone = toy(1, {false}, {});
  Seed swapped = mutate(lone, 0);
  LaurentPoly two = LaurentPoly::constant(lone.reg, 2);
  CHECK(swapped.vars[0] == two * LaurentPoly::variable(lone.reg, 0, -1));
  CHECK(same_seed_data(mutate(swapped, 0), lone));
  CHECK(exact::equal_rational(y_hat(lone, 0),
                              RationalFn::constant(lone.reg, 1)));

  // mutations at non-adjacent vertices commute
  Seed wide = toy(3, {false, false, true}, {{0, 2}, {2, 1}});
  CHECK(same_seed_data(mutate(mutate(wide, 0), 1),
                       mutate(mutate(wide, 1), 0)));

  CHECK_THROWS_AS(mutate(pinch, 1), std::invalid_argument);
  CHECK_THROWS_AS(mutate(pinch, 7), std::invalid_argument);
  CHECK_THROWS_AS(y_hat(pinch, 1), std::invalid_argument);
}

TEST_CASE("quiver isomorphism search") {
  Seed s = initial_seed(plabic::parse_file(data_path("example_3_7.plabic")));
  auto self = quiver_isomorphic(s.quiver, s.quiver, true);
  REQUIRE(self.has_value());
  CHECK(valid_witness(s.quiver, s.quiver, *self, true));

  // opposite orientations of a triangle are isomorphic
  Seed cyc = toy(3, {false, false, false}, {{0, 1}, {1, 2}, {2, 0}});
  Seed opp = toy(3, {false, false, false}, {{1, 0}, {2, 1}, {0, 2}});
  auto m = quiver_isomorphic(cyc.quiver, opp.quiver, true);
  REQUIRE(m.has_value());
  CHECK(valid_witness(cyc.quiver, opp.quiver, *m, true));

  // same arrow count, different shape
  Seed path3 = toy(3, {false, false, false}, {{0, 1}, {1, 2}, {1, 2}});
  CHECK(!quiver_isomorphic(cyc.quiver, path3.quiver, true).has_value());
  Seed pair2 = toy(2, {false, false}, {{0, 1}, {0, 1}});
  Seed cycle2 = toy(2, {false, false}, {{0, 1}, {1, 0}});
  CHECK(!quiver_isomorphic(pair2.quiver, cycle2.quiver, false).has_value());

  // frozen flags only separate when respected
  Seed plain = toy(2, {false, false}, {{0, 1}});
  Seed iced = toy(2, {false, true}, {{0, 1}});
  CHECK(!quiver_isomorphic(plain.quiver, iced.quiver, true).has_value());
  auto loose = quiver_isomorphic(plain.quiver, iced.quiver, false);
  REQUIRE(loose.has_value());
  CHECK(valid_witness(plain.quiver, iced.quiver, *loose, false));

  CHECK(!quiver_isomorphic(plain.quiver, cyc.quiver, false).has_value());

  // mutable parts: triangle again, with ids compacted
  MutablePart part = mutable_part(s.quiver);
  CHECK(part.quiver.vertex_count == 3);
  CHECK(part.vertex_of.size() == 3);
  for (int v : part.vertex_of) CHECK(!s.quiver.frozen[v]);
  auto tri = quiver_isomorphic(part.quiver, cyc.quiver, true);
  CHECK(tri.has_value());
}

TEST_CASE("gradings balance on face label assignments") {
  plabic::PlabicGraph g = plabic::parse_file(data_path("example_3_7.plabic"));
  CellModel m = cell::build_model(g);
  Seed s = initial_seed(m.analysis);
  Closure cl = enumerate_variables(s, 20);
  const auto &labels = m.analysis.labels;

  for (Labelling conv : {Labelling::src, Labelling::tgt}) {
    std::vector<DegVec> assign;
    for (int f = 0; f < labels.face_count; ++f) {
      DegVec d(m.n, 0);
      const Subset &lab =
          conv == Labelling::src ? labels.src_label[f] : labels.tgt_label[f];
      for (int i : lab) d[i - 1] = 1;
      assign.push_back(d);
    }
    GradingReport r = grading(assign, s, cl.variables, m.k);
    CHECK(r.balanced);
    CHECK(r.homogeneous);
    REQUIRE(r.degvec.size() == cl.variables.size());

    std::multiset<exact::Rat> degs(r.deg.begin(), r.deg.end());
    std::multiset<exact::Rat> want = {1, 1, 1, 1, 1, 1, 1, 2, 2};
    CHECK(degs == want);

    Subset everything = S("1234567");
    for (size_t i = 0; i < r.degvec.size(); ++i) {
      exact::Rat total = deg_subset(r.degvec[i], everything);
      CHECK(total == r.deg[i] * m.k);
      for (int c : r.degvec[i]) CHECK(c >= 0);
    }

    // initial variables have their face vector as multidegree
    for (int f = 0; f < labels.face_count; ++f) {
      auto d = multidegree(LaurentPoly::variable(s.reg, f), assign);
      REQUIRE(d.has_value());
      CHECK(*d == assign[f]);
    }

    // y-hat is degree zero under a balanced assignment
    for (int v = 0; v < s.quiver.vertex_count; ++v) {
      if (s.quiver.frozen[v]) continue;
      RationalFn y = y_hat(s, v);
      auto dn = multidegree(y.num(), assign);
      auto dd = multidegree(y.den(), assign);
      REQUIRE(dn.has_value());
      REQUIRE(dd.has_value());
      CHECK(*dn == *dd);
    }

    // disturbing one interior face breaks balance at a mutable vertex
    std::vector<DegVec> bad = assign;
    bad[face_with_src(m.analysis, S("135"))][0] += 1;
    GradingReport rb = grading(bad, s, {}, m.k);
    CHECK(!rb.balanced);
    CHECK(rb.offending >= 0);
    CHECK(!s.quiver.frozen[rb.offending]);
  }

  // an inhomogeneous polynomial is reported as such
  std::vector<DegVec> assign(s.quiver.vertex_count, DegVec(m.n, 0));
  for (int f = 0; f < labels.face_count; ++f)
    for (int i : labels.src_label[f]) assign[f][i - 1] = 1;
  LaurentPoly mixed = LaurentPoly::variable(s.reg, 0) +
                      LaurentPoly::variable(s.reg, 0).pow(2);
  CHECK(!multidegree(mixed, assign).has_value());
  GradingReport rm = grading(assign, s, {mixed}, m.k);
  CHECK(rm.balanced);
  CHECK(!rm.homogeneous);
}

TEST_CASE("two cycle reduction and seed dump") {
  IceQuiver q;
  q.vertex_count = 3;
  q.frozen = {false, false, false};
  for (auto [u, v] : std::vector<std::pair<int, int>>{
           {0, 1}, {1, 0}, {0, 1}, {1, 2}})
    q.arrows.push_back({u, v, {}});
  CHECK(reduce_two_cycles(q) == 1);
  CHECK(arrow_pairs(q) ==
        std::multiset<std::pair<int, int>>{{0, 1}, {1, 2}});

  // opposite arrows between frozen vertices stay
  IceQuiver rim;
  rim.vertex_count = 2;
  rim.frozen = {true, true};
  rim.arrows.push_back({0, 1, {}});
  rim.arrows.push_back({1, 0, {}});
  CHECK(reduce_two_cycles(rim) == 0);
  CHECK(rim.arrows.size() == 2);

  // mixed frozen-mutable pairs cancel
  IceQuiver mixed;
  mixed.vertex_count = 2;
  mixed.frozen = {true, false};
  mixed.arrows.push_back({0, 1, {}});
  mixed.arrows.push_back({1, 0, {}});
  CHECK(reduce_two_cycles(mixed) == 1);
  CHECK(mixed.arrows.empty());

  Seed s = initial_seed(plabic::parse_file(data_path("example_3_7.plabic")));
  std::string text = dump(s);
  CHECK(text.find("arrow ") != std::string::npos);
  CHECK(text.find("var 0 frozen x0") != std::string::npos);
  int v135 = -1;
  for (int v = 0; v < s.quiver.vertex_count; ++v)
    if (!s.quiver.frozen[v]) v135 = v;
  CHECK(text.find("var " + std::to_string(v135) + " mutable x" +
                  std::to_string(v135)) != std::string::npos);
  size_t lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == s.quiver.arrows.size() + 10);
}
