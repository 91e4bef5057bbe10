#pragma once

// Planted trees in bijection with area sequences, crucial vertices, the
// (returns, rises) count table with its polynomial rendering, and the
// Speyer step that trades a diagonal return for an initial rise.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catalan_zeta/dyck.hpp"
#include "catalan_zeta/errors.hpp"
#include "catalan_zeta/words.hpp"
#include "catalan_zeta/zeta.hpp"

namespace catalan_zeta {

class PlantedTree;
PlantedTree tree_from_children(std::vector<std::vector<int>> children);

/// Rooted tree on vertices 0..n whose labels list the vertices in preorder
/// (root 0 first, children visited in increasing label order). Vertex v
/// lives in generation depth(v) - 1, so the root occupies generation -1.
class PlantedTree {
 public:
  PlantedTree() : children_(1), parent_{-1}, depth_{0} {}

  int vertex_count() const noexcept { return static_cast<int>(children_.size()); }
  int n() const noexcept { return vertex_count() - 1; }

  const std::vector<int>& children(int v) const { return children_[static_cast<std::size_t>(v)]; }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  int generation(int v) const { return depth_[static_cast<std::size_t>(v)] - 1; }
  int root_degree() const { return static_cast<int>(children_.front().size()); }

  /// Balanced parentheses of the clockwise traversal; '(' walks away from
  /// the root, ')' walks back. Identical to the Dyck path of the area
  /// sequence with N = '(' and E = ')'.
  std::string parenthesis_str() const {
    std::string s;
    s.reserve(2 * static_cast<std::size_t>(n()));
    emit_parens(0, s);
    return s;
  }

  std::string parent_array_str() const {
    std::string s = "[";
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (v) s.push_back(',');
      s += std::to_string(parent_[v]);
    }
    s.push_back(']');
    return s;
  }

  friend bool operator==(const PlantedTree& a, const PlantedTree& b) {
    return a.children_ == b.children_;
  }

 private:
  friend PlantedTree tree_from_children(std::vector<std::vector<int>> children);
  explicit PlantedTree(std::vector<std::vector<int>> children,
                       std::vector<int> parent, std::vector<int> depth)
      : children_(std::move(children)), parent_(std::move(parent)), depth_(std::move(depth)) {}

  void emit_parens(int v, std::string& out) const {
    for (int c : children(v)) {
      out.push_back('(');
      emit_parens(c, out);
      out.push_back(')');
    }
  }

  std::vector<std::vector<int>> children_;
  std::vector<int> parent_;
  std::vector<int> depth_;
};

/// Validates that the child lists describe a tree rooted at 0 whose labels
/// coincide with the preorder numbering, and precomputes parents and depths.
inline PlantedTree tree_from_children(std::vector<std::vector<int>> children) {
  const int count = static_cast<int>(children.size());
  if (count < 1) throw NotPlantedTree("a planted tree needs at least the root");
  for (const auto& list : children)
    for (int c : list)
      if (c < 1 || c >= count)
        throw NotPlantedTree("child label " + std::to_string(c) + " out of range");

  std::vector<int> parent(static_cast<std::size_t>(count), -1);
  std::vector<int> depth(static_cast<std::size_t>(count), 0);
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};  // vertex, next child slot
  int visited = 0;
  while (!stack.empty()) {
    auto& [v, slot] = stack.back();
    if (slot == 0 && visited != v)
      throw NotPlantedTree("vertex " + std::to_string(v) +
                           " visited out of preorder position " + std::to_string(visited));
    if (slot == 0) ++visited;
    if (slot < children[static_cast<std::size_t>(v)].size()) {
      const int c = children[static_cast<std::size_t>(v)][slot++];
      if (parent[static_cast<std::size_t>(c)] != -1)
        throw NotPlantedTree("vertex " + std::to_string(c) + " has two parents");
      parent[static_cast<std::size_t>(c)] = v;
      depth[static_cast<std::size_t>(c)] = depth[static_cast<std::size_t>(v)] + 1;
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
    }
  }
  if (visited != count)
    throw NotPlantedTree("tree is disconnected: visited " + std::to_string(visited) +
                         " of " + std::to_string(count) + " vertices");
  return PlantedTree(std::move(children), std::move(parent), std::move(depth));
}

inline PlantedTree tree_from_parents(const std::vector<int>& parents) {
  if (parents.empty() || parents.front() != -1)
    throw NotPlantedTree("parent array must start with -1 for the root");
  std::vector<std::vector<int>> children(parents.size());
  for (std::size_t v = 1; v < parents.size(); ++v) {
    const int p = parents[v];
    if (p < 0 || static_cast<std::size_t>(p) >= v)
      throw NotPlantedTree("parent of vertex " + std::to_string(v) +
                           " must be an earlier vertex, got " + std::to_string(p));
    children[static_cast<std::size_t>(p)].push_back(static_cast<int>(v));
  }
  return tree_from_children(std::move(children));
}

/// Vertex i > 0 goes to generation a_i; its parent is the largest j < i
/// with a_j = a_i - 1, or the root when a_i = 0.
inline PlantedTree tree_from_area_sequence(const AreaSequence& a) {
  const int n = a.length();
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n) + 1);
  std::vector<int> newest;  // newest vertex per generation
  for (int i = 1; i <= n; ++i) {
    const int g = a.entries()[static_cast<std::size_t>(i - 1)];
    const int parent = g == 0 ? 0 : newest[static_cast<std::size_t>(g - 1)];
    children[static_cast<std::size_t>(parent)].push_back(i);
    if (static_cast<std::size_t>(g) >= newest.size())
      newest.push_back(i);
    else
      newest[static_cast<std::size_t>(g)] = i;
  }
  return tree_from_children(std::move(children));
}

/// Reads the generations back off in label order, which is preorder.
inline AreaSequence area_sequence_from_tree(const PlantedTree& t) {
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(t.n()));
  for (int v = 1; v <= t.n(); ++v) entries.push_back(t.generation(v));
  return area_sequence_from_entries(std::move(entries));
}

/// Accepts balanced parentheses or a parent array "[-1,p1,...]". The empty
/// string is the single-vertex tree.
inline PlantedTree parse_tree(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  text = text.substr(b, e - b);
  if (text.empty()) return PlantedTree();
  if (text.front() == '(' || text.front() == ')') {
    std::string path_text;
    path_text.reserve(text.size());
    for (char c : text) {
      if (c == '(')
        path_text.push_back('N');
      else if (c == ')')
        path_text.push_back('E');
      else
        throw InvalidFormat(std::string("unexpected character '") + c +
                            "' in parenthesis tree");
    }
    return tree_from_area_sequence(area_sequence_of(parse_path(path_text)));
  }
  if (text.front() == '[') {
    if (text.back() != ']') throw InvalidFormat("parent array must end with ']'");
    const auto body = text.substr(1, text.size() - 2);
    std::vector<int> parents;
    std::size_t start = 0;
    while (start <= body.size() && !body.empty()) {
      const std::size_t comma = body.find(',', start);
      const auto token = body.substr(start, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - start);
      parents.push_back(detail::parse_int_token(token));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return tree_from_parents(parents);
  }
  throw InvalidFormat("tree input must be parentheses or a parent array");
}

/// A vertex is crucial when it has children, it is the youngest member of
/// its generation (largest label, since labels record order of birth), and
/// every other member of its generation is childless. The root is the sole
/// member of generation -1, so it is crucial whenever it has children.
inline std::vector<int> crucial_vertices(const PlantedTree& t) {
  std::vector<std::vector<int>> generations;
  for (int v = 1; v <= t.n(); ++v) {
    const auto g = static_cast<std::size_t>(t.generation(v));
    if (g >= generations.size()) generations.resize(g + 1);
    generations[g].push_back(v);
  }
  std::vector<int> crucial;
  if (t.root_degree() > 0) crucial.push_back(0);
  for (const auto& members : generations) {
    const int youngest = members.back();
    if (t.children(youngest).empty()) continue;
    bool others_childless = true;
    for (int v : members)
      if (v != youngest && !t.children(v).empty()) {
        others_childless = false;
        break;
      }
    if (others_childless) crucial.push_back(youngest);
  }
  std::sort(crucial.begin(), crucial.end());
  return crucial;
}

/// Counts over all objects of one size, keyed by the pair (p, q):
/// (returns, rises) on the path side, (crucial vertices, root children) on
/// the tree side. Total is the Catalan number.
class StatTable {
 public:
  StatTable(int n, std::map<std::pair<int, int>, std::uint64_t> counts)
      : n_(n), counts_(std::move(counts)) {}

  int n() const noexcept { return n_; }
  const std::map<std::pair<int, int>, std::uint64_t>& counts() const noexcept { return counts_; }

  std::uint64_t at(int p, int q) const {
    const auto it = counts_.find({p, q});
    return it == counts_.end() ? 0 : it->second;
  }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [key, c] : counts_) t += c;
    return t;
  }

  /// Terms ordered by descending x power, then descending y power, e.g.
  /// "x^3y + x^2y^2 + x^2y + xy^3 + xy^2" for n = 3.
  std::string polynomial_str() const {
    if (counts_.empty()) return "0";
    std::string out;
    for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) {
      const auto [p, q] = it->first;
      const std::uint64_t c = it->second;
      if (!out.empty()) out += " + ";
      std::string term;
      if (c != 1 || (p == 0 && q == 0)) term += std::to_string(c);
      const auto power = [](char var, int exp) -> std::string {
        if (exp == 0) return {};
        if (exp == 1) return std::string(1, var);
        return std::string(1, var) + "^" + std::to_string(exp);
      };
      term += power('x', p);
      term += power('y', q);
      out += term;
    }
    return out;
  }

  friend bool operator==(const StatTable& a, const StatTable& b) {
    return a.n_ == b.n_ && a.counts_ == b.counts_;
  }

 private:
  int n_;
  std::map<std::pair<int, int>, std::uint64_t> counts_;
};

inline StatTable stat_table_from_paths(int n) {
  std::map<std::pair<int, int>, std::uint64_t> counts;
  DyckPathEnumerator e(n);
  while (auto p = e.next()) ++counts[{returns(*p), rises(*p)}];
  return StatTable(n, std::move(counts));
}

inline StatTable stat_table_from_trees(int n) {
  std::map<std::pair<int, int>, std::uint64_t> counts;
  DyckPathEnumerator e(n);
  while (auto p = e.next()) {
    const PlantedTree t = tree_from_area_sequence(area_sequence_of(*p));
    ++counts[{static_cast<int>(crucial_vertices(t).size()), t.root_degree()}];
  }
  return StatTable(n, std::move(counts));
}

/// Computes the table over paths and over trees and insists they agree.
inline StatTable stat_table(int n) {
  StatTable paths = stat_table_from_paths(n);
  const StatTable trees = stat_table_from_trees(n);
  if (!(paths == trees))
    throw std::logic_error("path and tree count tables disagree for n = " + std::to_string(n));
  return paths;
}

inline StatTable tutte_polynomial(int n) { return stat_table(n); }

namespace detail {

// End index (exclusive) of the k-th return to height 0, scanning from begin.
template <typename It>
std::size_t nth_return_end(It begin, It end, int k) {
  int height = 0;
  std::size_t i = 0;
  for (It it = begin; it != end; ++it, ++i) {
    height += *it == Step::North ? 1 : -1;
    if (height == 0 && --k == 0) return i + 1;
  }
  return i;
}

}  // namespace detail

/// Merges the first two arches: N D1 E N D2 E (rest) becomes
/// N N D1 E D2 E (rest). Sends a path with p returns and q rises to one
/// with p-1 returns and q+1 rises.
inline DyckPath speyer_step(const DyckPath& path) {
  if (returns(path) < 2)
    throw TooFewReturns("need at least two returns, got " + std::to_string(returns(path)));
  const auto& s = path.steps();
  const std::size_t e1 = detail::nth_return_end(s.begin(), s.end(), 1);
  const std::size_t e2 = detail::nth_return_end(s.begin(), s.end(), 2);
  std::vector<Step> out;
  out.reserve(s.size());
  out.push_back(Step::North);
  out.push_back(Step::North);
  out.insert(out.end(), s.begin() + 1, s.begin() + static_cast<std::ptrdiff_t>(e1 - 1));  // D1
  out.push_back(Step::East);
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(e1 + 1),
             s.begin() + static_cast<std::ptrdiff_t>(e2 - 1));  // D2
  out.push_back(Step::East);
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(e2), s.end());
  return validate_path(std::move(out));
}

/// Splits the first arch N (N D1 E D2) E back into two arches.
inline DyckPath speyer_step_inverse(const DyckPath& path) {
  if (rises(path) < 2)
    throw TooFewRises("need at least two initial north steps, got " +
                      std::to_string(rises(path)));
  const auto& s = path.steps();
  const std::size_t e1 = detail::nth_return_end(s.begin(), s.end(), 1);
  // interior of the first arch starts with North because the path begins NN
  const std::vector<Step> inner(s.begin() + 1, s.begin() + static_cast<std::ptrdiff_t>(e1 - 1));
  const std::size_t split = detail::nth_return_end(inner.begin(), inner.end(), 1);
  std::vector<Step> out;
  out.reserve(s.size());
  out.insert(out.end(), inner.begin(), inner.begin() + static_cast<std::ptrdiff_t>(split));  // N D1 E
  out.push_back(Step::North);
  out.insert(out.end(), inner.begin() + static_cast<std::ptrdiff_t>(split), inner.end());  // D2
  out.push_back(Step::East);
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(e1), s.end());
  return validate_path(std::move(out));
}

/// The Speyer step conjugated through zeta and the tree bijection: one
/// crucial vertex is traded for one extra root child.
inline PlantedTree tree_operator(const PlantedTree& t) {
  const auto crucial = crucial_vertices(t);
  if (crucial.size() < 2)
    throw TooFewCrucial("need at least two crucial vertices, got " +
                        std::to_string(crucial.size()));
  const DyckPath image = zeta(path_from_area_sequence(area_sequence_from_tree(t)));
  const DyckPath stepped = speyer_step(image);
  return tree_from_area_sequence(area_sequence_of(zeta_inverse(stepped)));
}

}  // namespace catalan_zeta
