#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hoq {

/// Simple undirected graph plus a palette size. Edges are stored normalized
/// (u < v), duplicate-free, with no self-loops.
struct ColoringProblem {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  int colors = 1;

  ColoringProblem() = default;
  ColoringProblem(int n, std::vector<std::pair<int, int>> edges, int colors);

  int edge_count() const { return static_cast<int>(edges.size()); }

  std::string to_json_string(int indent = -1) const;
  static ColoringProblem from_json_string(const std::string& text);
};

struct Coloring {
  std::vector<int> colors;

  Coloring() = default;
  explicit Coloring(std::vector<int> c) : colors(std::move(c)) {}
};

/// The four corners map as a graph: Utah=0, then clockwise; diagonal regions
/// are not adjacent, so the border structure is the 4-cycle. Four colors.
ColoringProblem four_corners();

/// A cycle on m >= 3 vertices with palette size c.
ColoringProblem cycle_problem(int m, int c);

bool is_proper(const ColoringProblem& prob, const Coloring& col);

/// Exhaustive count of proper colorings. Guarded by c^n <= cap.
std::uint64_t count_proper(const ColoringProblem& prob,
                           std::uint64_t cap = std::uint64_t{1} << 24);

}  // namespace hoq
