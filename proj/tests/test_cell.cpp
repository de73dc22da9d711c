#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include <positroid/cell.hpp>

using namespace positroid;
using namespace positroid::cell;
using exact::RationalFn;
using plabic::PlabicGraph;
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

CellModel model_of(const std::string &name) {
  return build_model(plabic::parse_file(data_path(name)));
}

RationalFn fn(const CellModel &m, const std::string &digits) {
  return RationalFn(m.pl(S(digits)));
}

}  // namespace

TEST_CASE("models build with clean certificates") {
  std::map<std::string, int> relations = {
      {"example_3_7.plabic", 105},    // C(7,1) * C(6,4)
      {"disconnected_5_9.plabic", 1260},  // C(9,3) * C(6,4)
      {"uniform_2_4.plabic", 1},      {"uniform_2_5.plabic", 5},
      {"uniform_3_5.plabic", 5},      {"single_edge.plabic", 0}};
  for (const auto &[name, checked] : relations) {
    CAPTURE(name);
    CellModel m = model_of(name);
    CHECK(m.certificate.ok());
    CHECK(m.certificate.checked == checked);
    // vanishing exactly off the positroid
    std::set<Subset> pos = matching::positroid(m.graph());
    int zero = 0, total = 0;
    for (const auto &[I, poly] : m.plucker) {
      ++total;
      CHECK(poly.is_zero() == (pos.count(I) == 0));
      zero += poly.is_zero();
    }
    CHECK(total == (int)pos.size() + zero);
  }
}

TEST_CASE("running example coordinates") {
  CellModel m = model_of("example_3_7.plabic");
  CHECK(m.plucker.size() == 35);
  CHECK(m.pl(S("234")).is_zero());
  for (int f = 0; f < m.analysis.labels.face_count; ++f)
    CHECK(!m.pl(m.analysis.labels.src_label[f]).is_zero());

  // the displayed exchange relation, two terms killed by the vanishing list
  CHECK(m.pl(S("467")).is_zero());
  CHECK(m.pl(S("567")).is_zero());
  auto rel = m.pl(S("167")) * m.pl(S("345")) - m.pl(S("367")) * m.pl(S("145")) +
             m.pl(S("467")) * m.pl(S("135")) - m.pl(S("567")) * m.pl(S("134"));
  CHECK(rel.is_zero());
}

TEST_CASE("uniform 2x4 satisfies the classical relation") {
  CellModel m = model_of("uniform_2_4.plabic");
  for (const auto &[I, poly] : m.plucker) CHECK(!poly.is_zero());
  CHECK(m.pl(S("13")) * m.pl(S("24")) ==
        m.pl(S("12")) * m.pl(S("34")) + m.pl(S("14")) * m.pl(S("23")));
}

TEST_CASE("rational identities hold on the cell") {
  CellModel m = model_of("example_3_7.plabic");
  // frozen-variable identity
  CHECK(equal_on_cell(fn(m, "145"), fn(m, "167") * fn(m, "345") / fn(m, "367")));
  // the quasi-coincidence witness for the 157 coordinate
  CHECK(equal_on_cell(fn(m, "157"), fn(m, "357") * fn(m, "167") / fn(m, "367")));
  CHECK(!equal_on_cell(fn(m, "135"), fn(m, "137")));
}

TEST_CASE("expansion substitutes face labels") {
  CellModel m = model_of("example_3_7.plabic");
  int F = m.analysis.labels.face_count;
  auto reg = std::make_shared<exact::VarRegistry>();
  for (int f = 0; f < F; ++f) reg->intern("x" + std::to_string(f));

  for (int f = 0; f < F; ++f) {
    RationalFn xf = RationalFn::variable(reg, f);
    CHECK(equal_on_cell(expand(xf, Labelling::src, m),
                        RationalFn(m.pl(m.analysis.labels.src_label[f]))));
    CHECK(equal_on_cell(expand(xf, Labelling::tgt, m),
                        RationalFn(m.pl(m.analysis.labels.tgt_label[f]))));
  }

  // ring homomorphism
  RationalFn f0 = RationalFn::variable(reg, 0), f1 = RationalFn::variable(reg, 1);
  RationalFn f2 = RationalFn::variable(reg, 2);
  RationalFn a = (f0 + f1 * f1) / f2, b = f1 - f2 / f0;
  for (auto conv : {Labelling::src, Labelling::tgt}) {
    CHECK(equal_on_cell(expand(a * b, conv, m),
                        expand(a, conv, m) * expand(b, conv, m)));
    CHECK(equal_on_cell(expand(a + b, conv, m),
                        expand(a, conv, m) + expand(b, conv, m)));
  }

  // constants pass through
  RationalFn c = RationalFn::constant(reg, exact::Rat(7, 3));
  CHECK(equal_on_cell(expand(c, Labelling::src, m),
                      RationalFn::constant(m.reg, exact::Rat(7, 3))));

  // only face variables are allowed
  auto bad = std::make_shared<exact::VarRegistry>();
  bad->intern("y0");
  CHECK_THROWS_AS(expand(RationalFn::variable(bad, 0), Labelling::src, m),
                  std::invalid_argument);
}

TEST_CASE("sampled points lie on the cell") {
  CellModel m = model_of("example_3_7.plabic");
  CellPoint p = sample_point(m, 17);
  CHECK(sample_point(m, 17).pluckers == p.pluckers);
  CHECK(sample_point(m, 18).pluckers != p.pluckers);
  CHECK(p.pluckers.at(S("234")) == 0);
  for (int gap = 1; gap <= m.n; ++gap) {
    CHECK(p.pluckers.at(m.necklaces.src[gap]) > 0);
    CHECK(p.pluckers.at(m.necklaces.tgt[gap]) > 0);
  }
  // the displayed relation holds at the point
  auto v = [&](const char *d) { return p.pluckers.at(S(d)); };
  CHECK(v("167") * v("345") - v("367") * v("145") + v("467") * v("135") -
            v("567") * v("134") ==
        0);
}

TEST_CASE("matrices rebuilt from points reproduce all minors") {
  for (const char *name : {"example_3_7.plabic", "uniform_2_4.plabic",
                           "uniform_3_5.plabic", "single_edge.plabic"}) {
    CAPTURE(name);
    CellModel m = model_of(name);
    for (unsigned long long seed : {1ULL, 99ULL}) {
      CellPoint p = sample_point(m, seed);
      exact::RatMatrix M = matrix_from_point(p);
      CHECK(M.rows == m.k);
      CHECK(M.cols == m.n);
      CHECK(M.rank() == m.k);
      const Subset *base = nullptr;
      for (const auto &[I, v] : p.pluckers)
        if (v != 0) {
          base = &I;
          break;
        }
      REQUIRE(base);
      exact::Rat scale = p.pluckers.at(*base);
      for (const auto &[I, v] : p.pluckers) {
        std::vector<int> cols;
        for (int i : I) cols.push_back(i - 1);
        CHECK(M.minor_det(cols) == v / scale);
      }
    }
  }
}

TEST_CASE("model dump is sorted and canonical") {
  CellModel m = model_of("uniform_2_4.plabic");
  std::string text = dump(m);
  CHECK(text.find("12 : ") == 0);
  CHECK(text.find("\n34 : ") != std::string::npos);
  int lines = (int)std::count(text.begin(), text.end(), '\n');
  CHECK(lines == 6);
  // a vanishing coordinate prints as 0
  std::string eg = dump(model_of("example_3_7.plabic"));
  CHECK(eg.find("234 : 0\n") != std::string::npos);
}
