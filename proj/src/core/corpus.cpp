#include "zerofree/corpus.hpp"

#include "zerofree/error.hpp"

namespace zerofree {

namespace {

RootedGraph tree_from_levels(const std::vector<size_t>& level) {
  RootedGraph g(level.size(), 0);
  std::vector<size_t> last_at_level(level.size(), 0);
  for (size_t i = 1; i < level.size(); ++i) {
    g.add_edge(last_at_level[level[i] - 1], i);
    last_at_level[level[i]] = i;
  }
  return g;
}

}  // namespace

std::vector<RootedGraph> rooted_trees(size_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "trees need at least one vertex");
  std::vector<size_t> level(n);
  for (size_t i = 0; i < n; ++i) level[i] = i;
  std::vector<RootedGraph> out;
  while (true) {
    out.push_back(tree_from_levels(level));
    size_t p = n;
    for (size_t i = n; i-- > 1;) {
      if (level[i] > 1) {
        p = i;
        break;
      }
    }
    if (p == n) break;
    size_t q = p;
    while (level[q] != level[p] - 1) --q;
    const size_t shift = p - q;
    for (size_t i = p; i < n; ++i) level[i] = level[i - shift];
  }
  return out;
}

std::vector<RootedGraph> rooted_trees_up_to(size_t max_n) {
  std::vector<RootedGraph> out;
  for (size_t n = 1; n <= max_n; ++n) {
    auto trees = rooted_trees(n);
    out.insert(out.end(), std::make_move_iterator(trees.begin()), std::make_move_iterator(trees.end()));
  }
  return out;
}

RootedGraph random_tree(size_t n, size_t max_degree, std::mt19937_64& rng) {
  require(n >= 1, ErrorCode::InvalidArgument, "trees need at least one vertex");
  require(max_degree >= 2 || n <= 2, ErrorCode::InvalidArgument, "max_degree too small for a tree this size");
  RootedGraph g(n, 0);
  std::vector<size_t> open{0};
  for (size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<size_t> pick(0, open.size() - 1);
    const size_t slot = pick(rng);
    const size_t parent = open[slot];
    g.add_edge(parent, v);
    if (g.neighbors(parent).size() >= max_degree) {
      open[slot] = open.back();
      open.pop_back();
    }
    if (max_degree > 1) open.push_back(v);
  }
  return g;
}

RootedGraph random_bounded_graph(size_t n, size_t max_degree, size_t extra_edges, std::mt19937_64& rng) {
  RootedGraph g = random_tree(n, max_degree, rng);
  std::uniform_int_distribution<size_t> vertex(0, n - 1);
  for (size_t k = 0; k < extra_edges && n > 2; ++k) {
    const size_t a = vertex(rng);
    const size_t b = vertex(rng);
    if (a == b || g.has_edge(a, b)) continue;
    if (g.neighbors(a).size() >= max_degree || g.neighbors(b).size() >= max_degree) continue;
    g.add_edge(a, b);
  }
  return g.with_root(vertex(rng));
}

}  // namespace zerofree
