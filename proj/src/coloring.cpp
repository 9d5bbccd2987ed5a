#include "hoq/coloring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hoq {

ColoringProblem::ColoringProblem(int n_, std::vector<std::pair<int, int>> edges_, int colors_)
    : n(n_), colors(colors_) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (colors < 1) throw std::invalid_argument("palette size must be >= 1");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw std::invalid_argument("duplicate edge rejected");
  }
  edges.assign(seen.begin(), seen.end());
}

std::string ColoringProblem::to_json_string(int indent) const {
  nlohmann::json e = nlohmann::json::array();
  for (const auto& [u, v] : edges) e.push_back({u, v});
  nlohmann::json j{{"n", n}, {"edges", e}, {"colors", colors}};
  return j.dump(indent);
}

ColoringProblem ColoringProblem::from_json_string(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return ColoringProblem(j.at("n").get<int>(), std::move(edges), j.at("colors").get<int>());
}

ColoringProblem four_corners() {
  return ColoringProblem(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 4);
}

ColoringProblem cycle_problem(int m, int c) {
  if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  return ColoringProblem(m, std::move(edges), c);
}

bool is_proper(const ColoringProblem& prob, const Coloring& col) {
  if (static_cast<int>(col.colors.size()) != prob.n) {
    throw std::invalid_argument("coloring length does not match vertex count");
  }
  for (int c : col.colors) {
    if (c < 0 || c >= prob.colors) throw std::invalid_argument("color index out of range");
  }
  for (const auto& [u, v] : prob.edges) {
    if (col.colors[u] == col.colors[v]) return false;
  }
  return true;
}

std::uint64_t count_proper(const ColoringProblem& prob, std::uint64_t cap) {
  std::uint64_t space = 1;
  for (int i = 0; i < prob.n; ++i) {
    if (space > cap / std::max(prob.colors, 1)) {
      throw std::invalid_argument("search space exceeds enumeration cap");
    }
    space *= static_cast<std::uint64_t>(prob.colors);
  }
  Coloring col(std::vector<int>(prob.n, 0));
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    std::uint64_t rest = idx;
    for (int i = 0; i < prob.n; ++i) {
      col.colors[i] = static_cast<int>(rest % prob.colors);
      rest /= prob.colors;
    }
    if (is_proper(prob, col)) ++count;
  }
  return count;
}

}  // namespace hoq
