#pragma once

#include <map>
#include <set>
#include <vector>

#include "positroid/exact.hpp"
#include "positroid/plabic.hpp"

namespace positroid {
namespace matching {

using plabic::Analysis;
using plabic::Item;
using plabic::PlabicGraph;
using plabic::Subset;

// Sorted list of items covering each internal node exactly once. Half-edges
// may be left out of a matching; edges cover both endpoints.
using PerfectMatching = std::vector<Item>;

// All perfect matchings, lexicographically ordered as sorted item lists.
// Exhaustive backtracking; intended for desk-scale graphs only.
std::vector<PerfectMatching> enumerate_matchings(const PlabicGraph &g);

// Boundary points i with the half at i matched-at-white or unmatched-at-black.
Subset boundary_value(const PlabicGraph &g, const PerfectMatching &mu);

// All boundary values over all matchings.
std::set<Subset> positroid(const PlabicGraph &g);

enum class Direction { downstream, upstream };

// The matching of items whose downstream (resp. upstream) wedge contains the
// given face: the wedge of an item is the region cut out by following its two
// strands forwards (resp. backwards) from their crossing. The result is
// certified to be a perfect matching with boundary value equal to the face's
// source (resp. target) label; failure throws std::runtime_error.
PerfectMatching ms_matching(const Analysis &a, int face, Direction dir);
PerfectMatching ms_matching(const PlabicGraph &g, int face, Direction dir);

// Class in the stable projective K-group: integer coefficients indexed by
// face id, supported on the interior (mutable) faces.
struct StableKClass {
  std::vector<int> coeffs;

  friend bool operator==(const StableKClass &a, const StableKClass &b) {
    return a.coeffs == b.coeffs;
  }
};

// e_face (the zero class for a boundary face).
StableKClass stable_unit(const Analysis &a, int face);

// Sum of e_j over interior faces minus the matching weight: each member
// contributes the interior faces at the corners around its black endpoint
// other than the two corners flanking the member itself. The white-endpoint
// variant is computed as well and must agree; a mismatch throws.
StableKClass stable_class(const Analysis &a, const PerfectMatching &mu);
StableKClass stable_class(const PlabicGraph &g, const PerfectMatching &mu);

// Sum over matchings with boundary value I of the product of member weights.
// weight_var maps every item of g to a variable in reg.
exact::LaurentPoly partition_function(const PlabicGraph &g, const Subset &I,
                                      const exact::RegistryPtr &reg,
                                      const std::map<Item, int> &weight_var);

}  // namespace matching
}  // namespace positroid
