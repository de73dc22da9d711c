#pragma once

#include <string>
#include <vector>

#include "positroid/quasi.hpp"

namespace positroid {
namespace twist {

using plabic::Subset;

// Scan direction for the greedy bases below. The backward scan is the left
// twist; the forward scan gives its inverse (the right twist). The pinned
// convention is recorded in tests/golden/twist_scan.txt and must satisfy
// every identity in twist_check_variables.
enum class Scan { backward, forward };
inline constexpr Scan kScan = Scan::backward;
inline const char *scan_name(Scan s) {
  return s == Scan::backward ? "backward" : "forward";
}

// Labels of the greedy basis at column i: scan i, i-1, i-2, ... (backward)
// or i, i+1, i+2, ... (forward) cyclically, keeping each column independent
// of the kept set, until k are kept. Throws on rank deficiency or when
// column i itself vanishes (the dual condition below is then unsatisfiable).
std::vector<int> greedy_basis(const exact::RatMatrix &M, int i, Scan scan);

// Column i of the result is the unique vector with <tau(M)_i, M_j> = d_ij
// for the k columns j of the greedy basis at i.
exact::RatMatrix twist_matrix(const exact::RatMatrix &M, Scan scan);

// the pinned convention
exact::RatMatrix left_twist_matrix(const exact::RatMatrix &M);

// One verified identity: the twist pulls the target-structure variable with
// the given Plucker factors back to the matched source variable times a
// monomial in the source frozen coordinates, up to a sample-independent
// constant, at every sampled cell point.
struct TwistEntry {
  std::vector<Subset> target;      // tgt factors of the closure variable
  std::vector<Subset> source;      // src factors of the matched variable
  quasi::FrozenMonomial monomial;  // exponents over faces (frozen support)
  exact::Rat constant;             // expected 1; recorded, never assumed
  bool degenerate_lattice = false;
};

struct TwistReport {
  bool pass = false;
  int samples = 0;
  int necklace_checks = 0;  // inverted necklace coordinates, all samples
  int relation_checks = 0;  // three-term relations verified on twisted points
  std::vector<TwistEntry> entries;
  std::vector<std::string> failures;
};

// Sample `samples` exact cell points, twist each, and verify: necklace
// coordinates invert (product with the untwisted value is 1), the twisted
// point stays inside the open cell, three-term relations survive, and every
// closure variable pulls back to a source variable times a frozen monomial.
TwistReport twist_check_variables(const plabic::PlabicGraph &g, int samples,
                                  unsigned long long rng_seed = 1,
                                  int seed_bound = 64);

// per-identity table of the report
std::string render(const TwistReport &r, const cell::CellModel &m);

}  // namespace twist
}  // namespace positroid
