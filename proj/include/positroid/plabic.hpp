#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace positroid {
namespace plabic {

enum class Color { black, white };

// Incidence of a node: a boundary half-edge or an internal edge instance.
struct Item {
  enum Kind { half = 0, edge = 1 };
  Kind kind = edge;
  int id = -1;  // boundary point for half, edge index for edge

  friend bool operator==(const Item &a, const Item &b) {
    return a.kind == b.kind && a.id == b.id;
  }
  friend bool operator<(const Item &a, const Item &b) {
    return a.kind != b.kind ? a.kind < b.kind : a.id < b.id;
  }
};

// Plabic graph in a disc: n boundary marked points labelled 1..n clockwise,
// one half-edge each; rotation lists are clockwise around every node.
struct PlabicGraph {
  int n = 0;
  std::map<int, Color> nodes;               // node id -> color
  std::vector<std::pair<int, int>> edges;   // (a,b) with a<=b, sorted
  std::map<int, int> half;                  // boundary point -> node id
  std::map<int, std::vector<Item>> embed;   // node -> clockwise incidences

  int edge_end(const Item &it, int from_node) const;  // other endpoint
  int half_node(int p) const { return half.at(p); }
};

// Parse/print the one-graph-per-file text format. parse throws
// std::runtime_error on malformed input; print emits the canonical form
// (sorted lines, embed lists rotated to their lexicographically least form)
// so that parse(print(g)) == print-identical.
PlabicGraph parse(const std::string &text);
PlabicGraph parse_file(const std::string &path);
std::string print(const PlabicGraph &g);

struct Violation {
  enum Kind { structural, strand_self_cross, strand_double_cross, degenerate };
  Kind kind;
  std::string detail;
};

// Empty iff g is a valid plabic graph: well-formed embedding, bicolored
// edges, disc-planar rotation system, every component reaching the boundary,
// no strand self-crossing (P3), no forward double-crossing (P4), and
// non-degenerate type (0 < k < n).
std::vector<Violation> validate(const PlabicGraph &g);

struct Strand {
  int source = 0, target = 0;
  std::vector<Item> trace;       // items traversed, half-edges included
  std::vector<int> nodes;        // internal nodes visited, |nodes|+1 == |trace|
};

using Subset = std::vector<int>;  // sorted k-subset of 1..n

struct FaceLabels {
  // face ids 0..face_count-1: boundary faces first (ordered by their least
  // gap), then interior faces ordered by source label
  int face_count = 0;
  int k = 0;
  std::vector<bool> is_boundary;
  std::vector<Subset> src_label, tgt_label;
  std::vector<int> gap_face;  // gap p (between p and p+1, 1-based) -> face id
};

struct IceQuiver {
  int vertex_count = 0;              // face ids of the underlying graph
  std::vector<bool> frozen;          // boundary faces
  struct Arrow {
    int from, to;
    Item dual;  // the (half-)edge the arrow is dual to
  };
  std::vector<Arrow> arrows;         // one per item, item order

  bool arrow_frozen(const Arrow &a) const {
    return frozen[a.from] && frozen[a.to];
  }
};

// Full combinatorial analysis of a structurally sound graph; throws
// std::runtime_error when the embedding is malformed or the strands are
// invalid. All other plabic operations are thin views over this.
//
// Dart encoding: item i has darts 2*i and 2*i+1. Dart 2*i points into the
// node for a half-edge and from the lower to the higher endpoint for an
// edge; 2*i+1 is the reverse. d^1 is the twin of dart d.
struct Analysis {
  PlabicGraph graph;
  int n = 0;
  int item_count = 0;                     // n halves then #edges edges
  std::vector<Item> items;                // item index -> item
  std::vector<int> perm;                  // perm[i] = pi(i), 1-based (size n+1)
  std::vector<Strand> strands;            // indexed by source-1
  std::vector<int> strand_of_dart;        // dart -> source label of its strand
  std::vector<int> pos_on_strand;         // dart -> index in the strand trace
  FaceLabels labels;
  std::vector<int> face_of_dart;          // dart -> face id on its left

  int item_index(const Item &it) const;
};

Analysis analyze(const PlabicGraph &g);

// pi where the strand entering at i exits at pi(i); 1-based vector of size
// n+1 with slot 0 unused.
std::vector<int> trip_permutation(const PlabicGraph &g);

FaceLabels face_labels(const PlabicGraph &g);

// boundary-face labels per gap 1..n (index 0 unused), in each convention
struct Necklaces {
  std::vector<Subset> src, tgt;
};
Necklaces necklaces(const PlabicGraph &g);

// (k, n); throws if the label cardinality and the node-count formula
// (#white - #black + #half-edges at black nodes) disagree
std::pair<int, int> graph_type(const PlabicGraph &g);

// one arrow per (half-)edge, from the face left of its white->black dart to
// the face left of its black->white dart; throws on non-bicolored edges
IceQuiver dual_quiver(const PlabicGraph &g);

// same graph with all node colors flipped
PlabicGraph opposite(const PlabicGraph &g);

struct Component {
  PlabicGraph graph;             // relabelled to 1..|labels| in sorted order
  std::vector<int> labels;       // ambient boundary labels, ascending
  std::vector<int> node_of;      // component node id -> ambient node id
};

struct ComponentsResult {
  std::vector<Component> parts;  // component of label 1 first, then by min
  int star_gap = -1;             // gap of the shared boundary face of the
                                 // top split (-1 when connected)
};

ComponentsResult components(const PlabicGraph &g);

// helpers shared by other modules
Subset permute_subset(const std::vector<int> &perm, const Subset &s);
Subset complement_subset(int n, const Subset &s);
std::string subset_str(const Subset &s);

}  // namespace plabic
}  // namespace positroid
