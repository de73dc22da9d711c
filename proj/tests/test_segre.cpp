#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <positroid/matching.hpp>
#include <positroid/segre.hpp>

using namespace positroid;
using namespace positroid::segre;
using cell::CellModel;
using cell::Labelling;
using exact::LaurentPoly;
using exact::Rat;
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

int face_with(const CellModel &m, Labelling conv, const Subset &lab) {
  const auto &labels = m.analysis.labels;
  for (int f = 0; f < labels.face_count; ++f)
    if ((conv == Labelling::src ? labels.src_label[f] : labels.tgt_label[f]) ==
        lab)
      return f;
  return -1;
}

std::vector<int> expo(const CellModel &m,
                      std::vector<std::pair<int, int>> entries) {
  std::vector<int> v(m.analysis.labels.face_count, 0);
  for (auto [f, e] : entries) v[f] = e;
  return v;
}

const LaurentPoly *find_by_expansion(const std::vector<LaurentPoly> &vars,
                                     Labelling conv, const CellModel &m,
                                     const RationalFn &want) {
  for (const LaurentPoly &v : vars)
    if (cell::equal_on_cell(cell::expand(RationalFn(v), conv, m), want))
      return &v;
  return nullptr;
}

cluster::Seed replay(cluster::Seed s, const std::vector<int> &word) {
  for (int j : word) s = cluster::mutate(s, j);
  return s;
}

std::vector<Subset> all_subsets(int n, int k) {
  std::vector<Subset> out;
  Subset cur;
  std::function<void(int)> rec = [&](int start) {
    if ((int)cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n && (int)cur.size() + n - v + 1 >= k; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// rows of the part matrices at their ambient column positions, part 0 on top
exact::RatMatrix stack_parts(const SplitData &split,
                             const exact::RatMatrix &m1,
                             const exact::RatMatrix &m2, int n) {
  exact::RatMatrix u(m1.rows + m2.rows, n);
  for (int r = 0; r < m1.rows; ++r)
    for (int c = 0; c < m1.cols; ++c)
      u.at(r, split.components[0].labels[c] - 1) = m1.at(r, c);
  for (int r = 0; r < m2.rows; ++r)
    for (int c = 0; c < m2.cols; ++c)
      u.at(m1.rows + r, split.components[1].labels[c] - 1) = m2.at(r, c);
  return u;
}

// every maximal minor of the stacked matrix factors as the predicted sign
// times the product of the part minors, or vanishes on a size mismatch
void check_block_minors(int n, int k, const SplitData &split,
                        unsigned long long seed1, unsigned long long seed2) {
  CellModel pm1 = cell::build_model(split.components[0].graph);
  CellModel pm2 = cell::build_model(split.components[1].graph);
  exact::RatMatrix u1 = cell::matrix_from_point(cell::sample_point(pm1, seed1));
  exact::RatMatrix u2 = cell::matrix_from_point(cell::sample_point(pm2, seed2));
  exact::RatMatrix u = stack_parts(split, u1, u2, n);
  auto local_cols = [](const plabic::Component &part, const Subset &ambient) {
    std::vector<int> cols;
    for (int v : to_part(part, ambient)) cols.push_back(v - 1);
    return cols;
  };
  for (const Subset &I : all_subsets(n, k)) {
    CAPTURE(plabic::subset_str(I));
    Decomposition d = segre_decompose(I, split);
    std::vector<int> cols;
    for (int v : I) cols.push_back(v - 1);
    Rat big = u.minor_det(cols);
    if (d.sign == 0) {
      CHECK(big == Rat(0));
      continue;
    }
    Rat small = u1.minor_det(local_cols(split.components[0], d.part1)) *
                u2.minor_det(local_cols(split.components[1], d.part2));
    CHECK(big == Rat(d.sign) * small);
  }
}

std::map<std::pair<int, int>, int> arrow_counts(const plabic::IceQuiver &q) {
  std::map<std::pair<int, int>, int> c;
  for (const auto &a : q.arrows) c[{a.from, a.to}]++;
  return c;
}

// two black-white edges per boundary pair: three components, and the part
// holding label 1 is itself disconnected
const char *kTripleEdge =
    "plabic n=6\n"
    "node 1 black\n"
    "node 2 white\n"
    "node 3 black\n"
    "node 4 white\n"
    "node 5 black\n"
    "node 6 white\n"
    "edge 1 2\n"
    "edge 3 4\n"
    "edge 5 6\n"
    "half 1 1\n"
    "half 2 2\n"
    "half 3 3\n"
    "half 4 4\n"
    "half 5 5\n"
    "half 6 6\n"
    "embed 1: b1 2\n"
    "embed 2: b2 1\n"
    "embed 3: b3 4\n"
    "embed 4: b4 3\n"
    "embed 5: b5 6\n"
    "embed 6: b6 5\n";

}  // namespace

TEST_CASE("a disconnected graph splits along its empty boundary region") {
  plabic::PlabicGraph g =
      plabic::parse_file(data_path("disconnected_5_9.plabic"));
  CellModel m = cell::build_model(g);
  SplitData sp = make_split(m.analysis);

  REQUIRE(sp.components.size() == 2);
  CHECK(sp.components[0].labels == S("1239"));
  CHECK(sp.components[1].labels == S("45678"));
  CHECK(sp.s1_plus == S("9"));
  CHECK(sp.k_parts == std::pair<int, int>(2, 3));
  CHECK(plabic::graph_type(sp.components[0].graph) ==
        std::pair<int, int>(2, 4));
  CHECK(plabic::graph_type(sp.components[1].graph) ==
        std::pair<int, int>(3, 5));
  CHECK(plabic::validate(sp.components[0].graph).empty());
  CHECK(plabic::validate(sp.components[1].graph).empty());

  // the shared face sits in the gaps bracketing the interval part
  CHECK(sp.star_face == face_with(m, Labelling::src, S("23678")));
  CHECK(m.analysis.labels.tgt_label[sp.star_face] == S("14569"));
  CHECK(m.analysis.labels.gap_face[3] == sp.star_face);
  CHECK(m.analysis.labels.gap_face[8] == sp.star_face);

  // label translation round-trips, and rejects labels of the other part
  const plabic::Component &c0 = sp.components[0];
  CHECK(to_part_label(c0, 9) == 4);
  CHECK(to_ambient_label(c0, 4) == 9);
  CHECK(to_part(c0, S("19")) == S("14"));
  CHECK(to_ambient(sp.components[1], S("134")) == S("467"));
  for (int amb = 1; amb <= 9; ++amb)
    for (const plabic::Component &part : sp.components) {
      bool member = std::binary_search(part.labels.begin(), part.labels.end(),
                                       amb);
      if (member)
        CHECK(to_ambient_label(part, to_part_label(part, amb)) == amb);
      else
        CHECK_THROWS_AS(to_part_label(part, amb), std::invalid_argument);
    }
  CHECK_THROWS_AS(to_ambient_label(c0, 5), std::invalid_argument);
}

TEST_CASE("plucker coordinates factor through the split with a block sign") {
  plabic::PlabicGraph g =
      plabic::parse_file(data_path("disconnected_5_9.plabic"));
  CellModel m = cell::build_model(g);
  SplitData sp = make_split(m.analysis);

  // one column (9) lies above the interval, three rows below it
  Decomposition d = segre_decompose(S("14679"), sp);
  CHECK(d.sign == -1);
  CHECK(d.part1 == S("19"));
  CHECK(d.part2 == S("467"));
  CHECK(segre_sign(S("14679"), sp) == -1);
  CHECK(segre_sign(S("12468"), sp) == 1);  // no label above the interval

  // size mismatch kills the coordinate outright
  Decomposition zero = segre_decompose(S("12349"), sp);
  CHECK(zero.sign == 0);
  CHECK(m.pl(S("12349")).is_zero());
  for (const Subset &I : all_subsets(9, 5))
    if (segre_decompose(I, sp).sign == 0) CHECK(m.pl(I).is_zero());

  CHECK_THROWS_AS(segre_decompose(Subset{1, 2, 10}, sp),
                  std::invalid_argument);

  // independent oracle: stack sampled part matrices and expand all minors
  check_block_minors(9, 5, sp, 11, 22);
  check_block_minors(9, 5, sp, 7, 5);
}

TEST_CASE("face labels and the dual quiver decompose across the split") {
  plabic::PlabicGraph g =
      plabic::parse_file(data_path("disconnected_5_9.plabic"));
  CellModel m = cell::build_model(g);
  const plabic::FaceLabels &labels = m.analysis.labels;
  SplitData sp = make_split(m.analysis);
  std::vector<int> side = face_side(m.analysis, sp);

  REQUIRE((int)side.size() == labels.face_count);
  std::map<Subset, int> expect = {
      {S("16789"), 0}, {S("12678"), 0}, {S("36789"), 0}, {S("13678"), 0},
      {S("23478"), 1}, {S("23458"), 1}, {S("23456"), 1}, {S("23567"), 1},
      {S("23468"), 1}, {S("23568"), 1}, {S("23678"), -1}};
  for (int f = 0; f < labels.face_count; ++f)
    CHECK(side[f] == expect.at(labels.src_label[f]));

  // every face label agrees with the star away from its own part
  auto restrict_to = [](const Subset &I, const Subset &universe) {
    Subset out;
    for (int v : I)
      if (std::binary_search(universe.begin(), universe.end(), v))
        out.push_back(v);
    return out;
  };
  const Subset &s1 = sp.components[0].labels;
  const Subset &s2 = sp.components[1].labels;
  for (int f = 0; f < labels.face_count; ++f) {
    if (side[f] == -1) continue;
    const Subset &other = side[f] == 0 ? s2 : s1;
    CHECK(restrict_to(labels.src_label[f], other) ==
          restrict_to(labels.src_label[sp.star_face], other));
    CHECK(restrict_to(labels.tgt_label[f], other) ==
          restrict_to(labels.tgt_label[sp.star_face], other));
  }

  // part faces map onto their side plus the shared face, matching labels
  plabic::IceQuiver ambient_q = plabic::dual_quiver(g);
  auto ambient_counts = arrow_counts(ambient_q);
  for (int part = 0; part < 2; ++part) {
    CellModel pm = cell::build_model(sp.components[part].graph);
    std::vector<int> fm = face_map(m.analysis, pm.analysis, sp, part);
    REQUIRE((int)fm.size() == pm.analysis.labels.face_count);

    std::set<int> image(fm.begin(), fm.end());
    CHECK((int)image.size() == pm.analysis.labels.face_count);
    std::set<int> want;
    want.insert(sp.star_face);
    for (int f = 0; f < labels.face_count; ++f)
      if (side[f] == part) want.insert(f);
    CHECK(image == want);

    const Subset &own = sp.components[part].labels;
    for (int pf = 0; pf < pm.analysis.labels.face_count; ++pf) {
      CHECK(to_ambient(sp.components[part],
                       pm.analysis.labels.src_label[pf]) ==
            restrict_to(labels.src_label[fm[pf]], own));
      CHECK(pm.analysis.labels.is_boundary[pf] ==
            labels.is_boundary[fm[pf]]);
    }

    // the full subquiver on this side is the part quiver, arrow for arrow
    auto part_counts = arrow_counts(plabic::dual_quiver(sp.components[part].graph));
    int mapped = 0;
    for (const auto &[uv, cnt] : part_counts) {
      auto it = ambient_counts.find({fm[uv.first], fm[uv.second]});
      REQUIRE(it != ambient_counts.end());
      CHECK(it->second == cnt);
      mapped += cnt;
    }
    int in_image = 0;
    for (const auto &[uv, cnt] : ambient_counts)
      if (image.count(uv.first) && image.count(uv.second)) in_image += cnt;
    CHECK(mapped == in_image);
  }

  // no arrow crosses between the two sides
  for (const auto &a : ambient_q.arrows)
    CHECK((side[a.from] == -1 || side[a.to] == -1 ||
           side[a.from] == side[a.to]));
}

TEST_CASE("the boundary cell is the product of the part cells") {
  plabic::PlabicGraph g =
      plabic::parse_file(data_path("disconnected_5_9.plabic"));
  CellModel m = cell::build_model(g);
  SplitData sp = make_split(m.analysis);

  std::set<Subset> whole = matching::positroid(g);
  std::set<Subset> p1 = matching::positroid(sp.components[0].graph);
  std::set<Subset> p2 = matching::positroid(sp.components[1].graph);
  CHECK(p1.size() == 6);
  CHECK(p2.size() == 10);
  CHECK(whole.size() == p1.size() * p2.size());

  std::set<std::pair<Subset, Subset>> seen;
  for (const Subset &I : whole) {
    Decomposition d = segre_decompose(I, sp);
    REQUIRE(d.sign != 0);
    Subset a = to_part(sp.components[0], d.part1);
    Subset b = to_part(sp.components[1], d.part2);
    CHECK(p1.count(a) == 1);
    CHECK(p2.count(b) == 1);
    seen.insert({a, b});
  }
  CHECK(seen.size() == whole.size());  // the decomposition is a bijection
}

TEST_CASE("composition assembles the dictionary entry of a variable") {
  plabic::PlabicGraph g =
      plabic::parse_file(data_path("disconnected_5_9.plabic"));
  SplitContext ctx = make_context(g, 64);
  const CellModel &m = ctx.model;
  auto pl = [&](const char *d) { return RationalFn(m.pl(S(d))); };
  auto fs = [&](const char *d) { return face_with(m, Labelling::src, S(d)); };

  REQUIRE(ctx.parts.size() == 2);
  CHECK(ctx.closure.variables.size() == 7);
  CHECK(ctx.parts[0].closure.variables.size() == 2);
  CHECK(ctx.parts[1].closure.variables.size() == 5);
  CHECK(ctx.parts[0].report.pass);
  CHECK(ctx.parts[1].report.pass);

  // the 14679 coordinate of the target structure matches 23467 of the
  // source, twisted by 16789/23678
  const LaurentPoly *x =
      find_by_expansion(ctx.closure.variables, Labelling::tgt, m, pl("14679"));
  REQUIRE(x != nullptr);
  quasi::MatchEntry e = compose_identity(*x, ctx);
  CHECK(cell::equal_on_cell(
      cell::expand(RationalFn(e.source), Labelling::src, m), pl("23467")));
  CHECK(e.monomial.exponents ==
        expo(m, {{fs("16789"), 1}, {fs("23678"), -1}}));
  CHECK(cell::equal_on_cell(
      cell::expand(RationalFn(e.target), Labelling::tgt, m),
      cell::expand(RationalFn(e.source), Labelling::src, m) *
          e.monomial.value(Labelling::src, m)));

  // that source variable is the one mutation away from the initial seed,
  // at the face the interval part sees as 568
  cluster::Seed s1 = cluster::mutate(ctx.seed, fs("23568"));
  CHECK((e.source - s1.vars[fs("23568")]).is_zero());
  const PartContext &pc = ctx.parts[1];
  Subset loc568 = to_part(ctx.split.components[1], S("568"));
  int pf = face_with(pc.model, Labelling::src, loc568);
  REQUIRE(pf >= 0);
  cluster::Seed ps = cluster::mutate(pc.seed, pf);
  Subset loc467 = to_part(ctx.split.components[1], S("467"));
  CHECK(cell::equal_on_cell(
      cell::expand(RationalFn(ps.vars[pf]), Labelling::src, pc.model),
      RationalFn(pc.model.pl(loc467))));

  // every closure variable composes, certified on the ambient model
  for (const LaurentPoly &v : ctx.closure.variables) {
    quasi::MatchEntry ent = compose_identity(v, ctx);
    CHECK(cell::equal_on_cell(
        cell::expand(RationalFn(ent.target), Labelling::tgt, m),
        cell::expand(RationalFn(ent.source), Labelling::src, m) *
            ent.monomial.value(Labelling::src, m)));
  }

  // only closure variables compose
  CHECK_THROWS_AS(compose_identity((*x) * (*x), ctx), std::invalid_argument);
  CHECK_THROWS_AS(compose_identity(ctx.seed.vars[fs("16789")], ctx),
                  std::invalid_argument);
}

TEST_CASE("composed verification agrees with the direct dictionary") {
  plabic::PlabicGraph g =
      plabic::parse_file(data_path("disconnected_5_9.plabic"));
  CellModel m = cell::build_model(g);
  quasi::QuasiReport direct = quasi::verify_quasi_coincidence(g, 64);
  quasi::QuasiReport byparts = verify_by_parts(g, 64);

  for (const quasi::QuasiReport *r : {&direct, &byparts}) {
    CHECK(r->pass);
    CHECK(r->complete);
    CHECK(r->failures.empty());
    CHECK(r->variable_map.size() == 7);
    CHECK(r->frozen_table.size() == 8);
    CHECK(r->frozen_table_back.size() == 8);
  }

  // identical frozen tables: same keys, same exponents
  CHECK(direct.frozen_table.size() == byparts.frozen_table.size());
  for (const auto &[J, mono] : direct.frozen_table)
    CHECK(byparts.frozen_table.at(J).exponents == mono.exponents);
  for (const auto &[J, mono] : direct.frozen_table_back)
    CHECK(byparts.frozen_table_back.at(J).exponents == mono.exponents);

  // entry for entry: same source and same monomial for each target
  for (const quasi::MatchEntry &ce : byparts.variable_map) {
    bool found = false;
    for (const quasi::MatchEntry &de : direct.variable_map) {
      if (!(ce.target - de.target).is_zero()) continue;
      found = true;
      CHECK((ce.source - de.source).is_zero());
      CHECK(ce.monomial.exponents == de.monomial.exponents);
    }
    CHECK(found);
  }

  // pinned rows of the forward table
  auto fs = [&](const char *d) { return face_with(m, Labelling::src, S(d)); };
  CHECK(byparts.frozen_table.at(S("14569")).exponents ==
        expo(m, {{fs("16789"), 1}, {fs("23456"), 1}, {fs("23678"), -1}}));
  CHECK(byparts.frozen_table.at(S("12456")).exponents ==
        expo(m, {{fs("12678"), 1}, {fs("23456"), 1}, {fs("23678"), -1}}));
  CHECK(byparts.frozen_table.at(S("34569")).exponents ==
        expo(m, {{fs("23456"), 1}, {fs("36789"), 1}, {fs("23678"), -1}}));
  CHECK(byparts.frozen_table.at(S("16789")).exponents ==
        expo(m, {{fs("16789"), 1}}));
  CHECK(byparts.frozen_table.at(S("23456")).exponents ==
        expo(m, {{fs("23456"), 1}}));
  for (const auto &[J, mono] : byparts.frozen_table)
    CHECK(cell::equal_on_cell(RationalFn(m.pl(J)),
                              mono.value(Labelling::src, m)));

  // targets and sources land on the predicted coordinates
  std::set<Subset> want_tgt = {S("13456"), S("14579"), S("14679"), S("14689"),
                               S("15689"), S("15789"), S("24569")};
  std::set<Subset> want_src = {S("13678"), S("23457"), S("23467"), S("23468"),
                               S("23568"), S("23578"), S("26789")};
  std::set<Subset> got_tgt, got_src;
  for (const quasi::MatchEntry &ent : byparts.variable_map) {
    RationalFn t = cell::expand(RationalFn(ent.target), Labelling::tgt, m);
    RationalFn s = cell::expand(RationalFn(ent.source), Labelling::src, m);
    for (const Subset &J : want_tgt)
      if (cell::equal_on_cell(t, RationalFn(m.pl(J)))) got_tgt.insert(J);
    for (const Subset &J : want_src)
      if (cell::equal_on_cell(s, RationalFn(m.pl(J)))) got_src.insert(J);
  }
  CHECK(got_tgt == want_tgt);
  CHECK(got_src == want_src);

  // the witness mutates once, at the face the parts share their work on
  REQUIRE(byparts.yhat_witness.word == std::vector<int>{fs("23568")});
  std::vector<int> want_map = {fs("13678"), fs("23568"), fs("23468")};
  CHECK(byparts.yhat_witness.vertex_map == want_map);
  CHECK(byparts.stable_iso == want_map);
  CHECK(direct.yhat_witness.word == byparts.yhat_witness.word);
  CHECK(direct.yhat_witness.vertex_map == byparts.yhat_witness.vertex_map);

  // replay it and recheck the y-hat identities from scratch
  cluster::Seed s0 = cluster::initial_seed(m.analysis);
  cluster::Seed sw = replay(s0, byparts.yhat_witness.word);
  std::vector<int> mut;
  for (int v = 0; v < s0.quiver.vertex_count; ++v)
    if (!s0.quiver.frozen[v]) mut.push_back(v);
  REQUIRE(mut.size() == byparts.yhat_witness.vertex_map.size());
  for (size_t i = 0; i < mut.size(); ++i) {
    RationalFn yt =
        cell::expand(cluster::y_hat(s0, mut[i]), Labelling::tgt, m);
    RationalFn ys = cell::expand(
        cluster::y_hat(sw, byparts.yhat_witness.vertex_map[i]),
        Labelling::src, m);
    CHECK(cell::equal_on_cell(yt, ys));
  }
}

TEST_CASE("three components recurse through the merged part") {
  plabic::PlabicGraph g = plabic::parse(kTripleEdge);
  REQUIRE(plabic::validate(g).empty());
  CHECK(plabic::graph_type(g) == std::pair<int, int>(3, 6));
  CellModel m = cell::build_model(g);
  SplitData sp = make_split(m.analysis);

  CHECK(sp.components[0].labels == S("1256"));
  CHECK(sp.components[1].labels == S("34"));
  CHECK(sp.s1_plus == S("56"));
  CHECK(sp.k_parts == std::pair<int, int>(2, 1));
  CHECK(sp.star_face == face_with(m, Labelling::src, S("246")));
  // the part holding label 1 still has two components of its own
  CHECK(plabic::components(sp.components[0].graph).parts.size() == 2);

  // sign flips with each chosen label above the interval (k2 is odd)...
  for (const Subset &I : all_subsets(6, 3)) {
    int cnt = 0;
    for (int v : I) cnt += (v == 5 || v == 6);
    CHECK(segre_sign(I, sp) == (cnt % 2 ? -1 : 1));
  }
  // ...and is constant when the interval rows come in pairs
  SplitData even = sp;
  even.k_parts = {1, 2};
  for (const Subset &I : all_subsets(6, 3)) CHECK(segre_sign(I, even) == 1);

  check_block_minors(6, 3, sp, 3, 19);

  // the cell is the triple product of the single-edge cells
  std::set<Subset> expect_cell;
  for (int a : {1, 2})
    for (int b : {3, 4})
      for (int c : {5, 6}) expect_cell.insert(Subset{a, b, c});
  CHECK(matching::positroid(g) == expect_cell);

  Decomposition zero = segre_decompose(S("125"), sp);
  CHECK(zero.sign == 0);
  CHECK(m.pl(S("125")).is_zero());

  quasi::QuasiReport r = verify_by_parts(g, 16);
  CHECK(r.pass);
  CHECK(r.complete);
  CHECK(r.failures.empty());
  CHECK(r.variable_map.empty());
  CHECK(r.yhat_witness.word.empty());
  CHECK(r.yhat_witness.vertex_map.empty());
  REQUIRE(r.frozen_table.size() == 4);
  REQUIRE(r.frozen_table_back.size() == 4);

  // one pinned row with an honest exponent two, then certify them all
  auto fs = [&](const char *d) { return face_with(m, Labelling::src, S(d)); };
  CHECK(r.frozen_table.at(S("135")).exponents ==
        expo(m, {{fs("146"), 1}, {fs("246"), -2}, {fs("236"), 1},
                 {fs("245"), 1}}));
  for (const auto &[J, mono] : r.frozen_table)
    CHECK(cell::equal_on_cell(RationalFn(m.pl(J)),
                              mono.value(Labelling::src, m)));
  for (const auto &[J, mono] : r.frozen_table_back)
    CHECK(cell::equal_on_cell(RationalFn(m.pl(J)),
                              mono.value(Labelling::tgt, m)));
}

TEST_CASE("connected graphs pass straight through") {
  plabic::PlabicGraph g = plabic::parse_file(data_path("uniform_2_5.plabic"));
  CellModel m = cell::build_model(g);
  CHECK_THROWS_AS(make_split(m.analysis), std::invalid_argument);

  quasi::QuasiReport direct = quasi::verify_quasi_coincidence(g, 20);
  quasi::QuasiReport byparts = verify_by_parts(g, 20);
  CHECK(byparts.pass);
  CHECK(byparts.variable_map.size() == direct.variable_map.size());
  CHECK(byparts.frozen_table.size() == direct.frozen_table.size());
  for (const auto &[J, mono] : direct.frozen_table)
    CHECK(byparts.frozen_table.at(J).exponents == mono.exponents);
  CHECK(byparts.yhat_witness.word == direct.yhat_witness.word);
  CHECK(byparts.yhat_witness.vertex_map == direct.yhat_witness.vertex_map);
}
