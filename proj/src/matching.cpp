#include "coopinf/matching.hpp"

#include <algorithm>
#include <functional>

namespace coopinf {

namespace {

// Kuhn's algorithm, one augmenting DFS per row.
struct Kuhn {
  const Pattern& p;
  std::vector<std::size_t> col_to_row;
  std::vector<char> visited;

  explicit Kuhn(const Pattern& pat)
      : p(pat), col_to_row(pat.cols(), kUnmatched), visited(pat.cols(), 0) {}

  bool try_row(std::size_t i) {
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (!p.at(i, j) || visited[j]) continue;
      visited[j] = 1;
      if (col_to_row[j] == kUnmatched || try_row(col_to_row[j])) {
        col_to_row[j] = i;
        return true;
      }
    }
    return false;
  }

  std::vector<std::size_t> run() {
    for (std::size_t i = 0; i < p.rows(); ++i) {
      std::fill(visited.begin(), visited.end(), 0);
      try_row(i);
    }
    std::vector<std::size_t> match(p.rows(), kUnmatched);
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (col_to_row[j] != kUnmatched) match[col_to_row[j]] = j;
    return match;
  }
};

}  // namespace

std::vector<std::size_t> max_bipartite_matching(const Pattern& p) {
  return Kuhn(p).run();
}

bool has_perfect_matching(const Pattern& p) {
  if (p.rows() != p.cols()) return false;
  auto match = max_bipartite_matching(p);
  return std::none_of(match.begin(), match.end(),
                      [](std::size_t j) { return j == kUnmatched; });
}

std::vector<std::size_t> matching_component_ids(const Pattern& p,
                                                const std::vector<std::size_t>& match) {
  const std::size_t n = p.rows();
  // col_of[k] = match[k]; adjacency i -> k iff p(i, match[k]).
  std::vector<std::vector<std::size_t>> adj(n), radj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (p.at(i, match[k])) {
        adj[i].push_back(k);
        radj[k].push_back(i);
      }

  // Kosaraju, iterative.
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < adj[v].size()) {
        std::size_t w = adj[v][idx++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<std::size_t> comp(n, kUnmatched);
  std::size_t ncomp = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != kUnmatched) continue;
    std::vector<std::size_t> stack{*it};
    comp[*it] = ncomp;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : radj[v])
        if (comp[w] == kUnmatched) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  return comp;
}

std::vector<std::size_t> bottleneck_perfect_matching(const Matrix& m) {
  if (!m.square()) return {};
  const std::size_t n = m.rows();
  std::vector<double> values;
  values.reserve(n * n);
  for (double v : m.data())
    if (v > 0.0) values.push_back(v);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  auto feasible = [&](double threshold) {
    Pattern p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p.set(i, j, m(i, j) >= threshold);
    return has_perfect_matching(p);
  };

  if (values.empty() || !feasible(values.front())) return {};
  // Largest threshold that still admits a perfect matching.
  std::size_t lo = 0, hi = values.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (feasible(values[mid]))
      lo = mid;
    else
      hi = mid - 1;
  }
  Pattern p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.set(i, j, m(i, j) >= values[lo]);
  return max_bipartite_matching(p);
}

}  // namespace coopinf
