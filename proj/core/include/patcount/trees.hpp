#pragma once

#include <array>
#include <string>
#include <vector>

#include "patcount/perm.hpp"

namespace patcount {

// Rooted unlabeled tree with left/right child slots. Vertices carry stable
// ids (indices into nodes), so colored vertices survive structural surgery.
struct BinaryPlaneTree {
  struct Node {
    int left = -1;
    int right = -1;
    int parent = -1;

    bool operator==(const Node&) const = default;
  };
  std::vector<Node> nodes;
  int root = -1;

  int size() const { return static_cast<int>(nodes.size()); }
  bool is_left_descendant(int v, int anc) const;
  bool is_right_descendant(int v, int anc) const;
  bool is_descendant(int v, int anc) const;  // strict
  std::vector<int> subtree(int v) const;     // v and everything below

  // Every vertex has at most one child (encodes S_n(132,231)).
  bool is_chain_tree() const;
  // No right descendant has a left descendant (encodes S_n(132,312)).
  bool is_right_bare() const;

  bool operator==(const BinaryPlaneTree&) const = default;
};

// Decomposition tree of a 132-avoiding permutation: the root is the position
// of the maximum, prefix to the left, suffix to the right. Vertex id i-1
// corresponds to position i of sigma. Rejects sigma containing 132.
BinaryPlaneTree tree_of(const Permutation& sigma);

// Inverse read-off: positions by in-order traversal, values by the range
// split at the maximum. perm_of(tree_of(sigma)) == sigma.
Permutation perm_of(const BinaryPlaneTree& t);

// 1-based position of each vertex id in perm_of(t).
std::vector<int> tree_positions(const BinaryPlaneTree& t);

// Vertex ids of an occurrence, in position (left to right) order.
std::array<int, 3> occurrence_vertices(const BinaryPlaneTree& t,
                                       const Occurrence& occ,
                                       const Pattern& q);

// A tree with three colored vertices (stored in position order of the
// underlying permutation at the time of coloring; colors follow vertex ids
// through surgery).
struct ColoredTree {
  BinaryPlaneTree tree;
  std::array<int, 3> colored;  // vertex ids

  bool operator==(const ColoredTree&) const = default;
};

// rho: chain trees with a colored 213 triple -> chain trees with a colored
// 123 triple, by flipping the right subtree of the middle-valued vertex to
// the left.
ColoredTree rho(const ColoredTree& t);
ColoredTree rho_inv(const ColoredTree& t);

// varrho: right-bare trees with a colored 231 triple -> right-bare trees
// with a colored 123 triple, by the subtree re-hang at the lowest ascendant.
ColoredTree varrho(const ColoredTree& t);
ColoredTree varrho_inv(const ColoredTree& t);

// GraphViz text for debugging; colored vertices are filled.
std::string to_dot(const ColoredTree& t);

}  // namespace patcount
