#pragma once

#include <utility>
#include <vector>

#include "positroid/cell.hpp"
#include "positroid/cluster.hpp"
#include "positroid/quasi.hpp"

namespace positroid {
namespace segre {

using plabic::Subset;

// A disconnected graph splits along an empty boundary region into two
// sub-diagrams: component 0 carries boundary label 1, component 1 occupies a
// cyclic interval of labels avoiding it. Each part is a standalone graph on
// labels 1..|S_i|, relabelled in ascending order of the ambient labels (the
// `labels` field of the part); with >= 2 internal components, part 0 keeps
// all of them except the chosen interval and may itself be disconnected.
struct SplitData {
  std::vector<plabic::Component> components;  // exactly two
  int star_face = -1;     // ambient face id of the shared boundary region
  std::vector<int> s1_plus;          // part-0 labels above all of part 1
  std::pair<int, int> k_parts{0, 0};
};

// Top split of a disconnected graph; throws std::invalid_argument when the
// graph is connected.
SplitData make_split(const plabic::Analysis &a);

// ambient label <-> standalone part label; throws on labels not in the part
int to_part_label(const plabic::Component &part, int ambient);
int to_ambient_label(const plabic::Component &part, int local);
Subset to_part(const plabic::Component &part, const Subset &ambient);
Subset to_ambient(const plabic::Component &part, const Subset &local);

// (-1)^(k2 * |I cap S1+|): the sign picked up when the columns of I above
// the interval move past the k2 rows of the second block
int segre_sign(const Subset &I, const SplitData &split);

// Plucker splitting: D_I factors as sign * D_{I cap S1} x D_{I cap S2} when
// the parts have sizes (k1, k2); sign == 0 marks the vanishing case.
struct Decomposition {
  int sign = 0;
  Subset part1, part2;  // ambient labels
};
Decomposition segre_decompose(const Subset &I, const SplitData &split);

// which side of the split each ambient face lies on (0 or 1), with -1 at
// the shared star face; throws if some face label fits neither side
std::vector<int> face_side(const plabic::Analysis &a, const SplitData &split);

// part face id -> ambient face id, matching source labels through the
// split; a bijection onto the faces of that side plus the star
std::vector<int> face_map(const plabic::Analysis &ambient,
                          const plabic::Analysis &part_analysis,
                          const SplitData &split, int part);

// Everything compose_identity needs, built once per graph: the ambient
// model, seed and mutation closure, the split, and per part its model,
// seed, closure, verification report (recursive when the part is itself
// disconnected) and face map.
struct PartContext {
  cell::CellModel model;
  cluster::Seed seed;
  cluster::Closure closure;
  quasi::QuasiReport report;
  std::vector<int> face_to_full;
};

struct SplitContext {
  cell::CellModel model;
  cluster::Seed seed;
  cluster::Closure closure;
  SplitData split;
  std::vector<int> side;  // ambient face -> part, -1 at the star
  std::vector<PartContext> parts;
};

SplitContext make_context(const plabic::PlabicGraph &g, int seed_bound);

// Assemble the source-side identity for one target-structure cluster
// variable of the ambient closure: locate its part, translate it to the
// part's dictionary entry (x', p), pick up the other part's frozen monomial
// q for the star's target label, and return x' with monomial p * q^d / s^d
// (d the variable's degree, s the star variable). The result is certified
// on the ambient model; failure throws with the offending identity.
quasi::MatchEntry compose_identity(const exact::LaurentPoly &x_tgt,
                                   const SplitContext &ctx);

// Full verification for a possibly-disconnected graph: connected graphs go
// to quasi::verify_quasi_coincidence; otherwise the report is assembled
// from recursively verified parts via compose_identity, with frozen tables
// computed on the ambient model and the witness word concatenated from the
// part witnesses and re-certified on the ambient model.
quasi::QuasiReport verify_by_parts(const plabic::PlabicGraph &g,
                                   int seed_bound);

}  // namespace segre
}  // namespace positroid
