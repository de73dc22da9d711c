#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "positroid/exact.hpp"
#include "positroid/matching.hpp"
#include "positroid/plabic.hpp"

namespace positroid {
namespace cell {

using plabic::Analysis;
using plabic::PlabicGraph;
using plabic::Subset;

// Result of verifying the three-term relations
//   pl(S+ab)*pl(S+cd) - pl(S+ac)*pl(S+bd) + pl(S+ad)*pl(S+bc) = 0
// over all (k-2)-subsets S and a<b<c<d disjoint from S.
struct PluckerCertificate {
  int checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Coordinate functions of the cell cut out by a graph: every k-subset's
// partition function in the edge-weight variables (w<edge> for edges,
// h<point> for boundary half-edges).
struct CellModel {
  Analysis analysis;
  plabic::Necklaces necklaces;
  int n = 0, k = 0;
  exact::RegistryPtr reg;                        // weight variables
  std::map<plabic::Item, int> weight_var;        // item -> variable id
  std::map<Subset, exact::LaurentPoly> plucker;  // all k-subsets
  PluckerCertificate certificate;

  const PlabicGraph &graph() const { return analysis.graph; }
  const exact::LaurentPoly &pl(const Subset &I) const {
    return plucker.at(I);
  }
};

// Builds the full model; throws if the relation certificate fails or a
// necklace coordinate vanishes (either would mean a convention bug).
CellModel build_model(const PlabicGraph &g);

PluckerCertificate check_plucker_relations(const CellModel &m);

enum class Labelling { src, tgt };

// Substitute x<face> |-> pl(label(face)) into a rational function over face
// variables, producing a rational function in the edge weights.
exact::RationalFn expand(const exact::RationalFn &var, Labelling conv,
                         const CellModel &m);

// Exact equality as functions on the cell: cross-multiplied identity of the
// edge-weight representatives.
bool equal_on_cell(const exact::RationalFn &f, const exact::RationalFn &g);

// A rational point of the cell, recorded through its Plucker coordinates.
struct CellPoint {
  int n = 0, k = 0;
  std::map<Subset, exact::Rat> pluckers;
};

// Evaluate the model at positive rational edge weights drawn from rng_seed.
CellPoint sample_point(const CellModel &m, unsigned long long rng_seed);

// k x n matrix in row echelon form on the first nonvanishing subset I0,
// whose minors equal the point's coordinates scaled by 1/pl(I0).
exact::RatMatrix matrix_from_point(const CellPoint &p);

// `I : polynomial` lines, sorted by subset
std::string dump(const CellModel &m);

}  // namespace cell
}  // namespace positroid
