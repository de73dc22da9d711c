#pragma once

#include <optional>
#include <string>
#include <vector>

#include "positroid/exact.hpp"
#include "positroid/plabic.hpp"

namespace positroid {
namespace cluster {

using plabic::IceQuiver;

// A seed: ice quiver plus one Laurent polynomial per vertex in the initial
// variables x<vertex>. Frozen vertices keep their initial variables forever;
// mutable variables stay Laurent because each exchange divides exactly (a
// failed division would falsify the Laurent phenomenon and throws).
struct Seed {
  IceQuiver quiver;
  exact::RegistryPtr reg;
  std::vector<exact::LaurentPoly> vars;
  std::vector<int> provenance;  // mutation word from the initial seed
};

// Initial seed on the dual quiver of a graph, with 2-cycles between
// non-frozen pairs cancelled away first.
Seed initial_seed(const plabic::Analysis &a);
Seed initial_seed(const plabic::PlabicGraph &g);

// Cancel opposite arrow pairs not joining two frozen vertices; returns the
// number of pairs removed.
int reduce_two_cycles(IceQuiver &q);

// Fomin-Zelevinsky mutation at a mutable vertex j: compose through j,
// reverse at j, cancel 2-cycles maximally; arrows between frozen vertices
// ride along untouched and composites landing on frozen pairs are dropped.
// Exchange: x_j' = (prod over arrows into j + prod over arrows out of j)/x_j.
Seed mutate(const Seed &s, int j);

// b[i][c] = #(j->i) - #(i->j) for column c's mutable vertex j.
struct ExchangeMatrix {
  std::vector<int> col_vertex;
  std::vector<std::vector<int>> b;  // indexed [vertex][column]
};
ExchangeMatrix exchange_matrix(const IceQuiver &q);
int b_entry(const IceQuiver &q, int i, int j);

// y_hat_j = prod_i x_i^{b_ij} over all vertices i.
exact::RationalFn y_hat(const Seed &s, int j);

// Breadth-first mutation closure up to seed equivalence (frozen-respecting
// quiver isomorphism + equal variable multisets).
struct Closure {
  std::vector<Seed> seeds;                     // discovery order
  std::vector<exact::LaurentPoly> variables;   // mutable vars, sorted, unique
  bool finite_type = false;                    // closure completed in bound
};
Closure enumerate_variables(const Seed &s, int bound);

// Exact multigraph isomorphism by backtracking; returns the vertex bijection
// a->b or nothing. respect_frozen restricts to bijections preserving flags.
std::optional<std::vector<int>> quiver_isomorphic(const IceQuiver &a,
                                                  const IceQuiver &b,
                                                  bool respect_frozen);

// The quiver spanned by mutable vertices; keeps their relative order and
// reports the chosen vertices.
struct MutablePart {
  IceQuiver quiver;
  std::vector<int> vertex_of;  // new id -> old id
};
MutablePart mutable_part(const IceQuiver &q);

// Integer multidegrees in Z^n.
using DegVec = std::vector<int>;

struct GradingReport {
  bool balanced = false;
  int offending = -1;           // vertex violating the balance condition
  bool homogeneous = false;     // every given variable is homogeneous
  std::vector<DegVec> degvec;   // per given variable
  std::vector<exact::Rat> deg;  // (1/k) * coordinate sum
};

// Checks the balance condition at every mutable vertex of the seed's quiver
// and reports multidegrees of the given variables under the assignment.
GradingReport grading(const std::vector<DegVec> &assign, const Seed &seed,
                      const std::vector<exact::LaurentPoly> &variables, int k);

int deg_subset(const DegVec &d, const plabic::Subset &S);

// multidegree of a single homogeneous Laurent polynomial (nullopt if the
// terms disagree or the polynomial is zero)
std::optional<DegVec> multidegree(const exact::LaurentPoly &p,
                                  const std::vector<DegVec> &assign);

// arrow list plus per-vertex polynomial text
std::string dump(const Seed &s);

}  // namespace cluster
}  // namespace positroid
