#pragma once

#include <map>
#include <string>
#include <vector>

#include "positroid/cell.hpp"
#include "positroid/cluster.hpp"

namespace positroid {
namespace quasi {

using cell::CellModel;
using cell::Labelling;
using plabic::Subset;

// Laurent monomial in the frozen coordinates of one labelling, stored as an
// exponent per face id with support on the frozen faces.
struct FrozenMonomial {
  std::vector<int> exponents;

  bool trivial() const;
  // product of plucker(label(face))^exponent under the given labelling
  exact::RationalFn value(Labelling basis, const CellModel &m) const;
};

// one entry of the variable dictionary: target variable = source variable
// times a monomial in the source frozens, as functions on the cell
struct MatchEntry {
  exact::LaurentPoly target;  // variables in face coordinates
  exact::LaurentPoly source;
  FrozenMonomial monomial;
  bool degenerate_lattice = false;  // frozen degrees were not independent
};

struct YhatWitness {
  std::vector<int> word;        // mutation word from the initial seed
  std::vector<int> vertex_map;  // initial mutable vertex -> witness vertex
};

struct QuasiReport {
  bool pass = false;
  bool complete = false;  // the mutation closure finished within the bound
  std::map<Subset, FrozenMonomial> frozen_table;       // tgt label over src
  std::map<Subset, FrozenMonomial> frozen_table_back;  // src label over tgt
  std::vector<MatchEntry> variable_map;
  YhatWitness yhat_witness;
  std::vector<int> stable_iso;  // quiver bijection of the mutable parts
  std::vector<std::string> failures;
};

// Express every frozen coordinate of the `expressed` labelling as a monomial
// in the frozen coordinates of the `basis` labelling. Exponents are found by
// an integer multidegree solve and certified exactly; failure throws.
std::map<Subset, FrozenMonomial> frozen_transition(
    const CellModel &m, Labelling expressed = Labelling::tgt,
    Labelling basis = Labelling::src);

// Match one target-structure variable against the source variables: the
// unique source variable equal to it up to a monomial in the source frozens.
// Throws when no candidate certifies or when two do.
MatchEntry match_variable(const exact::LaurentPoly &x_tgt,
                          const std::vector<exact::LaurentPoly> &src_vars,
                          const CellModel &m);

// All small integral exponent vectors over the frozen faces of `basis`
// whose labels' indicator sum equals d, ordered by L1 norm then
// lexicographically. Sets `degenerate` when the solve had free columns.
std::vector<std::vector<int>> monomial_candidates(const CellModel &m,
                                                  Labelling basis,
                                                  const cluster::DegVec &d,
                                                  bool &degenerate);

// exponents over the frozen faces (in frozen-face order) -> face-indexed
FrozenMonomial monomial_from(const CellModel &m, const std::vector<int> &v);

// Render a homogeneous cluster variable as a product of Plucker
// coordinates of the given labelling, guided by its weight grading and
// certified by expansion on the cell; throws when no product represents it.
std::vector<Subset> plucker_factorization(const exact::LaurentPoly &x,
                                          Labelling conv, const CellModel &m);

// Check that the two frozen tables compose back to the identity: every
// target frozen coordinate, pushed through fwd and then back, must return
// to itself on the cell. Returns failure lines, empty when clean.
std::vector<std::string> transition_checks(
    const CellModel &m, const std::map<Subset, FrozenMonomial> &fwd,
    const std::map<Subset, FrozenMonomial> &back);

// Check that a complete dictionary is a bijection on the closure variables
// and maps clusters to clusters. Skipped (returns empty) when the entry
// count does not match the closure; the caller has recorded those failures.
std::vector<std::string> dictionary_checks(
    const cluster::Closure &cl, const std::vector<MatchEntry> &entries);

// Run every leg on one graph: frozen transitions both ways (and their
// composition back to the identity), the full variable bijection with
// cluster compatibility, and the stable-quiver/y-hat witness search.
QuasiReport verify_quasi_coincidence(const plabic::PlabicGraph &g,
                                     int seed_bound);

// sorted human-readable table of the report
std::string render(const QuasiReport &r, const CellModel &m);

}  // namespace quasi
}  // namespace positroid
