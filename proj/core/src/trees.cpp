#include "patcount/trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace patcount {

bool BinaryPlaneTree::is_descendant(int v, int anc) const {
  for (int p = nodes[v].parent; p != -1; p = nodes[p].parent)
    if (p == anc) return true;
  return false;
}

bool BinaryPlaneTree::is_left_descendant(int v, int anc) const {
  return nodes[anc].left != -1 &&
         (nodes[anc].left == v || is_descendant(v, nodes[anc].left));
}

bool BinaryPlaneTree::is_right_descendant(int v, int anc) const {
  return nodes[anc].right != -1 &&
         (nodes[anc].right == v || is_descendant(v, nodes[anc].right));
}

std::vector<int> BinaryPlaneTree::subtree(int v) const {
  std::vector<int> out, stack{v};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    if (nodes[x].left != -1) stack.push_back(nodes[x].left);
    if (nodes[x].right != -1) stack.push_back(nodes[x].right);
  }
  return out;
}

bool BinaryPlaneTree::is_chain_tree() const {
  for (const Node& nd : nodes)
    if (nd.left != -1 && nd.right != -1) return false;
  return true;
}

bool BinaryPlaneTree::is_right_bare() const {
  for (int v = 0; v < size(); ++v) {
    const int p = nodes[v].parent;
    const bool is_right_child = p != -1 && nodes[p].right == v;
    if (is_right_child && nodes[v].left != -1) return false;
  }
  return true;
}

BinaryPlaneTree tree_of(const Permutation& sigma) {
  if (contains(sigma, Pattern::from_code(132)))
    throw std::invalid_argument("tree_of: sigma contains 132");
  const int n = sigma.size();
  BinaryPlaneTree t;
  t.nodes.resize(n);
  // build [lo, hi] of 0-based positions, returns root id (= position).
  auto build = [&](auto&& self, int lo, int hi, int parent) -> int {
    if (lo > hi) return -1;
    int mx = lo;
    for (int i = lo + 1; i <= hi; ++i)
      if (sigma.values()[i] > sigma.values()[mx]) mx = i;
    t.nodes[mx].parent = parent;
    t.nodes[mx].left = self(self, lo, mx - 1, mx);
    t.nodes[mx].right = self(self, mx + 1, hi, mx);
    return mx;
  };
  t.root = build(build, 0, n - 1, -1);
  return t;
}

std::vector<int> tree_positions(const BinaryPlaneTree& t) {
  std::vector<int> pos(t.size());
  int next = 1;
  auto walk = [&](auto&& self, int v) -> void {
    if (v == -1) return;
    self(self, t.nodes[v].left);
    pos[v] = next++;
    self(self, t.nodes[v].right);
  };
  walk(walk, t.root);
  return pos;
}

Permutation perm_of(const BinaryPlaneTree& t) {
  const int n = t.size();
  if (n == 0) return Permutation();
  const std::vector<int> pos = tree_positions(t);
  std::vector<int> values(n);
  // Left of the maximum sits above everything to its right, so the left
  // subtree takes the top values below hi.
  auto assign = [&](auto&& self, int v, int lo, int hi) -> void {
    if (v == -1) return;
    values[pos[v] - 1] = hi;
    int left_size = t.nodes[v].left == -1
                        ? 0
                        : static_cast<int>(t.subtree(t.nodes[v].left).size());
    self(self, t.nodes[v].left, hi - left_size, hi - 1);
    self(self, t.nodes[v].right, lo, hi - left_size - 1);
  };
  assign(assign, t.root, 1, n);
  return Permutation(std::move(values));
}

std::array<int, 3> occurrence_vertices(const BinaryPlaneTree& t,
                                       const Occurrence& occ,
                                       const Pattern& q) {
  const Permutation sigma = perm_of(t);
  if (!is_occurrence(sigma, occ, q))
    throw std::invalid_argument("occurrence_vertices: not a q occurrence");
  const std::vector<int> pos = tree_positions(t);
  std::array<int, 3> out{};
  for (int i = 0; i < 3; ++i) {
    auto it = std::find(pos.begin(), pos.end(), occ[i]);
    out[i] = static_cast<int>(it - pos.begin());
  }
  return out;
}

namespace {

// Colored vertices as a position-ordered occurrence in perm_of(tree).
Occurrence colored_occurrence(const ColoredTree& ct) {
  const std::vector<int> pos = tree_positions(ct.tree);
  Occurrence occ = {pos[ct.colored[0]], pos[ct.colored[1]],
                    pos[ct.colored[2]]};
  if (!std::is_sorted(occ.begin(), occ.end()))
    throw std::invalid_argument("colored triple not in position order");
  return occ;
}

// Re-sorts the colored ids by their positions after surgery.
std::array<int, 3> reorder_by_position(const BinaryPlaneTree& t,
                                       std::array<int, 3> colored) {
  const std::vector<int> pos = tree_positions(t);
  std::sort(colored.begin(), colored.end(),
            [&](int a, int b) { return pos[a] < pos[b]; });
  return colored;
}

void require_colored_pattern(const ColoredTree& ct, int code,
                             const char* who) {
  const Permutation sigma = perm_of(ct.tree);
  if (!is_occurrence(sigma, colored_occurrence(ct), Pattern::from_code(code)))
    throw std::invalid_argument(std::string(who) +
                                ": colored triple is not the required pattern");
}

}  // namespace

ColoredTree rho(const ColoredTree& t) {
  if (!t.tree.is_chain_tree())
    throw std::invalid_argument("rho: not a chain tree");
  require_colored_pattern(t, 213, "rho");
  // Position order is Q2, Q1, Q3; the flip happens at Q2.
  const int q2 = t.colored[0];
  ColoredTree out = t;
  auto& nd = out.tree.nodes[q2];
  if (nd.right == -1) throw std::invalid_argument("rho: Q2 has no right subtree");
  nd.left = nd.right;
  nd.right = -1;
  out.colored = reorder_by_position(out.tree, out.colored);
  require_colored_pattern(out, 123, "rho");
  return out;
}

ColoredTree rho_inv(const ColoredTree& t) {
  if (!t.tree.is_chain_tree())
    throw std::invalid_argument("rho_inv: not a chain tree");
  require_colored_pattern(t, 123, "rho_inv");
  // Position order is Q1, Q2, Q3; flip back at the middle vertex.
  const int q2 = t.colored[1];
  ColoredTree out = t;
  auto& nd = out.tree.nodes[q2];
  if (nd.left == -1) throw std::invalid_argument("rho_inv: Q2 has no left subtree");
  nd.right = nd.left;
  nd.left = -1;
  out.colored = reorder_by_position(out.tree, out.colored);
  require_colored_pattern(out, 213, "rho_inv");
  return out;
}

namespace {

void detach_from_parent(BinaryPlaneTree& t, int v) {
  const int p = t.nodes[v].parent;
  if (p == -1) return;
  if (t.nodes[p].left == v) t.nodes[p].left = -1;
  if (t.nodes[p].right == v) t.nodes[p].right = -1;
  t.nodes[v].parent = -1;
}

}  // namespace

ColoredTree varrho(const ColoredTree& t) {
  if (!t.tree.is_right_bare())
    throw std::invalid_argument("varrho: not a right-bare tree");
  require_colored_pattern(t, 231, "varrho");
  // Position order is Q2, Q3, Q1 (values b < c, then the small a).
  const int q3 = t.colored[1];
  const int q1 = t.colored[2];
  ColoredTree out = t;
  BinaryPlaneTree& tr = out.tree;

  // x: lowest ascendant of Q3 (or Q3 itself) having Q1 as right descendant.
  int x = q3;
  while (x != -1 && !tr.is_right_descendant(q1, x)) x = tr.nodes[x].parent;
  if (x == -1)
    throw std::invalid_argument("varrho: no ascendant carries Q1 on the right");
  const int y = tr.nodes[x].parent;
  if (y != -1 && tr.nodes[y].left != x)
    throw std::invalid_argument("varrho: x is not the left child of y");

  // T^d = T_x - T_{Q1}; re-hang Q1 above it.
  detach_from_parent(tr, q1);
  detach_from_parent(tr, x);
  if (tr.nodes[q1].left != -1)
    throw std::logic_error("varrho: Q1 unexpectedly has a left subtree");
  tr.nodes[q1].left = x;
  tr.nodes[x].parent = q1;
  if (y != -1) {
    tr.nodes[y].left = q1;
    tr.nodes[q1].parent = y;
  } else {
    tr.root = q1;
  }

  if (!tr.is_right_bare())
    throw std::logic_error("varrho: image left the right-bare family");
  out.colored = reorder_by_position(tr, out.colored);
  require_colored_pattern(out, 123, "varrho");
  return out;
}

ColoredTree varrho_inv(const ColoredTree& t) {
  if (!t.tree.is_right_bare())
    throw std::invalid_argument("varrho_inv: not a right-bare tree");
  require_colored_pattern(t, 123, "varrho_inv");
  // Position order is Q2, Q3, Q1 with increasing values; Q1 is last.
  const int q1 = t.colored[2];
  ColoredTree out = t;
  BinaryPlaneTree& tr = out.tree;

  const int x = tr.nodes[q1].left;
  if (x == -1)
    throw std::invalid_argument("varrho_inv: Q1 has no left subtree");
  const int y = tr.nodes[q1].parent;
  if (y != -1 && tr.nodes[y].left != q1)
    throw std::invalid_argument("varrho_inv: Q1 is not the left child of y");

  // Reattach Q1 at the cut end of x's right chain.
  detach_from_parent(tr, x);  // clears q1.left
  int z = x;
  while (tr.nodes[z].right != -1) z = tr.nodes[z].right;
  if (y != -1) {
    detach_from_parent(tr, q1);
    tr.nodes[y].left = x;
    tr.nodes[x].parent = y;
  } else {
    tr.root = x;
    tr.nodes[x].parent = -1;
  }
  tr.nodes[z].right = q1;
  tr.nodes[q1].parent = z;

  if (!tr.is_right_bare())
    throw std::invalid_argument("varrho_inv: preimage left the right-bare family");
  out.colored = reorder_by_position(tr, out.colored);
  require_colored_pattern(out, 231, "varrho_inv");
  return out;
}

std::string to_dot(const ColoredTree& t) {
  std::string s = "digraph tree {\n  node [shape=circle];\n";
  for (int v = 0; v < t.tree.size(); ++v) {
    s += "  v" + std::to_string(v);
    const bool black = std::find(t.colored.begin(), t.colored.end(), v) !=
                       t.colored.end();
    s += black ? " [style=filled, fillcolor=black, fontcolor=white];\n"
               : ";\n";
  }
  for (int v = 0; v < t.tree.size(); ++v) {
    if (t.tree.nodes[v].left != -1)
      s += "  v" + std::to_string(v) + " -> v" +
           std::to_string(t.tree.nodes[v].left) + " [label=\"L\"];\n";
    if (t.tree.nodes[v].right != -1)
      s += "  v" + std::to_string(v) + " -> v" +
           std::to_string(t.tree.nodes[v].right) + " [label=\"R\"];\n";
  }
  s += "}\n";
  return s;
}

}  // namespace patcount
