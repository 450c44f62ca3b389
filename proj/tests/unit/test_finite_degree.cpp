#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "zerofree/corpus.hpp"
#include "zerofree/error.hpp"
#include "zerofree/finite_degree.hpp"
#include "zerofree/gspec_json.hpp"

using namespace zerofree;

namespace {

RootedGraph path(size_t n, size_t root = 0) {
  RootedGraph g(n, root);
  for (size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

RootedGraph cycle(size_t n) {
  RootedGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

RootedGraph star(size_t leaves) {
  RootedGraph g(leaves + 1, 0);
  for (size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

IndPolynomial poly(std::initializer_list<int> c) {
  std::vector<BigInt> v;
  for (const int x : c) v.emplace_back(x);
  return IndPolynomial(v);
}

}  // namespace

TEST_SUITE("finite_degree") {

TEST_CASE("graph validation and parsing") {
  CHECK_THROWS_AS(RootedGraph::from_adjacency({{1}, {}}, 0), Error);
  CHECK_THROWS_AS(RootedGraph::from_adjacency({{0}}, 0), Error);
  CHECK_THROWS_AS(RootedGraph::from_adjacency({{1, 1}, {0, 0}}, 0), Error);
  CHECK_THROWS_AS(RootedGraph(2, 5), Error);
  const auto g = parse_adjacency_list("3 1\n1\n0 2\n1\n");
  CHECK(g.size() == 3);
  CHECK(g.root() == 1);
  CHECK(g.root_degree() == 2);
  CHECK(g.max_degree() == 2);
  CHECK(g.is_tree());
  CHECK_THROWS_AS(parse_adjacency_list("2 0\n1\n"), Error);
  CHECK_THROWS_AS(parse_adjacency_list("x"), Error);
  CHECK_THROWS_AS(load_adjacency_list("/nonexistent/graph.txt"), Error);
}

TEST_CASE("independence polynomials") {
  CHECK(ind_poly(RootedGraph(1, 0)) == poly({1, 1}));
  CHECK(ind_poly(path(2)) == poly({1, 2}));
  CHECK(ind_poly(cycle(4)) == poly({1, 4, 2}));
  CHECK(oracle::as_u64(ind_poly(cycle(4))) == oracle::brute_force_counts(cycle(4)));
  CHECK(ind_poly(path(2)).to_string() == "1 + 2*x");
  const auto pair = ratio_pair(cycle(5));
  CHECK(pair.z_in.coefficient(0) == 0);
  CHECK(pair.total() == ind_poly(cycle(5)));
}

TEST_CASE("coefficients grow past 64 bits without loss") {
  // a path on n vertices has Fibonacci(n + 2) independent sets
  const auto p = ind_poly(path(120));
  BigInt total = 0;
  for (const auto& c : p.coefficients()) total += c;
  BigInt a = 1;
  BigInt b = 1;
  for (int i = 0; i < 121; ++i) {
    const BigInt c = a + b;
    a = b;
    b = c;
  }
  CHECK(total == a);
  CHECK(total > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("ratios") {
  const Complex l(0.7, 0.2);
  CHECK(std::abs(ratio(RootedGraph(1, 0), l).value - l) < 1e-15);
  CHECK(std::abs(ratio(path(2), l).value - l / (1.0 + l)) < 1e-15);
  CHECK(std::abs(ratio(star(3), l).value - Complex(0.14476962626298728, -0.010590863225720134)) < 1e-14);
  // Z_out = 1 + lambda for the edge: infinite ratio at lambda = -1
  CHECK(ratio(path(2), -1.0).kind == ExtendedKind::Infinity);
  CHECK(std::abs(ratio(cycle(4), l).value - oracle::brute_force_ratio(cycle(4), l)) < 1e-14);
}

TEST_CASE("indeterminate ratios") {
  // an edge plus a disjoint edge: both sides carry the factor 1 + 2x
  RootedGraph g(4, 0);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK(ratio(g, -0.5).kind == ExtendedKind::Indeterminate);
}

TEST_CASE("F recursion") {
  const auto leaf = FSpec::node({1}, {FSpec::identity()});
  CHECK(f_eval(leaf, 3, Complex(0.4, 0.1), 0.0) == Complex(0.4, 0.1));
  const auto two = FSpec::node({2}, {FSpec::identity()});
  CHECK(f_eval(two, 2, 1.0, 1.0) == Complex(0.25));
  const auto nested = FSpec::node({1}, {leaf});
  const Complex l(0.3, -0.8);
  CHECK(std::abs(f_eval(nested, 2, l, 0.0) - ratio(path(2), l).value) < 1e-15);
  CHECK_THROWS_AS(f_eval(leaf, 1, 1.0, -1.0), Error);
  CHECK_THROWS_AS(f_eval(FSpec::node({3}, {FSpec::identity()}), 2, 1.0, 0.0), Error);
  CHECK_THROWS_AS(FSpec::node({1, 1}, {FSpec::identity()}), Error);
}

TEST_CASE("property: F recursion agrees with the ratio of its tree") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const int d = static_cast<int>(oracle::pick(rng, 2, 4));
    const auto spec = oracle::random_fspec(rng, d, 3);
    const auto tree = fspec_to_tree(spec);
    CHECK(tree.is_tree());
    const Complex l = oracle::in_disk(rng, 0.3);
    CHECK(std::abs(f_eval(spec, d, l, 0.0) - ratio(tree, l).value) < 1e-12);
  }
}

TEST_CASE("trees for semigroup elements") {
  const auto star5 = gspec_to_tree(GSpec::exponential(), 5);
  CHECK(star5.size() == 6);
  CHECK(star5.root_degree() == 5);
  CHECK(gspec_to_tree(GSpec::identity(), 4).size() == 1);

  const auto g = GSpec::compose(WeightTuple({0.5}), {GSpec::exponential()});
  const auto t = gspec_to_tree(g, 10);
  CHECK(t.root_degree() == 5);
  CHECK(t.size() == 1 + 5 * 11);
  CHECK(t.max_degree() == 11);
  for (const size_t c : t.neighbors(t.root())) CHECK(t.neighbors(c).size() == 11);
  CHECK(t.is_tree());
}

TEST_CASE("rescaled ratios") {
  const Complex l(1.0, 1.0);
  CHECK(std::abs(rescaled_ratio(RootedGraph(1, 0), 7, l).value - l) < 1e-15);
  for (const int d : {3, 10, 50}) {
    const Complex expected = l * std::pow(1.0 + l / static_cast<double>(d), -d);
    CHECK(std::abs(rescaled_ratio(star(static_cast<size_t>(d)), d, l).value - expected) < 1e-12);
  }
  // errors against g(Lambda) shrink with d
  const auto g = GSpec::compose(WeightTuple({0.5, 0.5}), {GSpec::exponential(), GSpec::identity()});
  const Complex target = eval_gspec(g, l, l);
  double previous = INFINITY;
  for (const int d : {10, 100, 1000}) {
    const double err = std::abs(rescaled_ratio(gspec_to_tree(g, d), d, l).value - target);
    CHECK(err < previous);
    previous = err;
  }
}

TEST_CASE("property: rescaled error halves when d doubles") {
  const GSpec specs[] = {
      GSpec::exponential(),
      GSpec::compose(WeightTuple({0.5}), {GSpec::exponential()}),
      GSpec::compose(WeightTuple({0.25, 0.75}), {GSpec::exponential(), GSpec::identity()}),
  };
  for (const auto& g : specs) {
    const Complex l(0.8, 0.3);
    const Complex target = eval_gspec(g, l, l);
    const double e1 = std::abs(rescaled_ratio(gspec_to_tree(g, 64), 64, l).value - target);
    const double e2 = std::abs(rescaled_ratio(gspec_to_tree(g, 128), 128, l).value - target);
    CHECK(e1 / e2 >= 1.6);
    CHECK(e1 / e2 <= 2.4);
  }
}

TEST_CASE("composition and substitution") {
  const RootedGraph v(1, 0);
  const Complex l(0.6, 0.2);
  CHECK(std::abs(compose_ratio(v, path(3), l).value - ratio(path(3), l).value) < 1e-15);
  CHECK(std::abs(compose_ratio(path(3), v, l).value - ratio(path(3), l).value) < 1e-15);
  CHECK(std::abs(compose_ratio(path(2), path(2), 1.0).value - 1.0 / 3.0) < 1e-15);
  const auto sub = substitute(path(2), path(2));
  CHECK(sub.size() == 4);
  CHECK(sub.edge_count() == 3);
  CHECK(std::abs(oracle::brute_force_ratio(sub, 1.0) - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("property: compose_ratio equals the ratio of the substituted graph") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 50; ++i) {
    const auto h = oracle::pick(rng, 0, 1) ? random_tree(oracle::pick(rng, 1, 4), 3, rng)
                                           : random_bounded_graph(oracle::pick(rng, 2, 4), 3, 2, rng);
    const auto g = random_bounded_graph(oracle::pick(rng, 1, 4), 3, 1, rng);
    const auto sub = substitute(h, g);
    const Complex l = oracle::in_disk(rng, 0.5);
    const auto composed = compose_ratio(h, g, l);
    REQUIRE(composed.finite());
    CHECK(std::abs(composed.value - oracle::brute_force_ratio(sub, l)) < 1e-10);
  }
}

TEST_CASE("roots") {
  const auto half = poly_roots(poly({1, 2}));
  REQUIRE(half.size() == 1);
  CHECK(std::abs(half[0] + 0.5) < 1e-12);
  CHECK(std::abs(poly_roots(poly({1, 1}))[0] + 1.0) < 1e-12);
  const auto c4 = poly_roots(poly({1, 4, 2}));
  REQUIRE(c4.size() == 2);
  CHECK(std::abs(c4[0] - (-1.7071067811865475)) < 1e-10);
  CHECK(std::abs(c4[1] - (-0.2928932188134524)) < 1e-10);
  CHECK_THROWS_AS(poly_roots(poly({1})), Error);
}

TEST_CASE("property: roots annihilate the polynomial") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 40; ++i) {
    const auto g = random_bounded_graph(oracle::pick(rng, 2, 12), 4, 3, rng);
    const auto p = ind_poly(g);
    const auto rs = poly_roots(p);
    CHECK(rs.size() == static_cast<size_t>(p.degree()));
    for (const auto r : rs) CHECK(std::abs(p.evaluate(r)) < 1e-8 * p.evaluate_abs(std::abs(r)));
  }
}

TEST_CASE("rooted tree counts") {
  const size_t expected[] = {1, 1, 2, 4, 9, 20, 48, 115, 286};
  for (size_t n = 1; n <= 9; ++n) {
    const auto trees = rooted_trees(n);
    CHECK(trees.size() == expected[n - 1]);
    for (const auto& t : trees) {
      CHECK(t.size() == n);
      CHECK(t.is_tree());
    }
  }
}

TEST_CASE("property: tree recursion agrees with enumeration") {
  for (const auto& t : rooted_trees_up_to(9)) {
    const auto pair = ratio_pair(t);
    CHECK(oracle::as_u64(pair.total()) == oracle::brute_force_counts(t));
    CHECK(oracle::as_u64(pair.z_in) == oracle::brute_force_counts(t, true, false));
  }
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    const auto t = random_tree(oracle::pick(rng, 10, 14), 4, rng).with_root(0);
    CHECK(oracle::as_u64(ind_poly(t)) == oracle::brute_force_counts(t));
  }
}

TEST_CASE("property: every zero makes some ratio equal -1") {
  // repeated zeros only come back to about sqrt(eps), so they are checked through the cluster mean
  size_t simple = 0;
  for (const auto& t : rooted_trees_up_to(9)) {
    if (t.size() < 2) continue;
    const auto roots = poly_roots(ind_poly(t));
    for (const auto z : roots) {
      std::complex<double> mean = 0.0;
      int cluster = 0;
      for (const auto w : roots) {
        if (std::abs(w - z) < 2e-2) {
          mean += w;
          ++cluster;
        }
      }
      mean /= static_cast<double>(cluster);
      if (cluster == 1) ++simple;
      const double tol = cluster == 1 ? 1e-6 : 1e-3;
      bool found = false;
      for (size_t v = 0; v < t.size() && !found; ++v) {
        const auto r = ratio(t.with_root(v), mean);
        found = r.finite() && std::abs(r.value + 1.0) < tol;
      }
      CHECK(found);
    }
  }
  CHECK(simple > 1000);
}

TEST_CASE("property: in + out is the whole polynomial") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 500; ++i) {
    const bool tree = i % 2 == 0;
    const auto g = tree ? random_tree(oracle::pick(rng, 1, 200), 5, rng)
                        : random_bounded_graph(oracle::pick(rng, 1, 14), 4, 4, rng);
    const auto pair = ratio_pair(g);
    CHECK(pair.z_in.coefficient(0) == 0);
    CHECK(pair.total().coefficient(0) == 1);
    CHECK(pair.total().coefficient(1) == static_cast<int>(g.size()));
    CHECK(pair.total().degree() <= static_cast<int>(g.size()));
    if (!tree) CHECK(oracle::as_u64(pair.total()) == oracle::brute_force_counts(g));
  }
}

TEST_CASE("non-trees beyond the enumeration cap are refused") {
  CHECK_THROWS_AS(ind_poly(cycle(kEnumerationCap + 1)), Error);
  CHECK(ind_poly(path(1000)).degree() == 500);
}

TEST_CASE("GSpec JSON") {
  const auto g = parse_gspec(R"({"weights":[0.5,0.25],"children":["id",{"weights":[1],"children":["id"]}]})");
  CHECK(g.weights().size() == 2);
  CHECK(g.depth() == 2);
  CHECK(parse_gspec(gspec_to_json(g)).depth() == 2);
  CHECK(parse_gspec("\"id\"").is_identity());
  CHECK_THROWS_AS(parse_gspec("{"), Error);
  CHECK_THROWS_AS(parse_gspec(R"({"weights":[0.5],"children":[]})"), Error);
  CHECK_THROWS_AS(parse_gspec(R"({"weights":[0.9,0.9],"children":["id","id"]})"), Error);
}

}
