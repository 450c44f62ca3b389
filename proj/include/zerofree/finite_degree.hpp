#pragma once

// Finite-degree side: independence polynomials with exact coefficients, the
// in/out split at a root, occupation ratios, the tree recursion
// F_lambda(z_1..z_k) = lambda / prod (1 + z_j), and graph constructions that
// realize elements of the exponential semigroup at degree d.

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "zerofree/semigroup.hpp"

namespace zerofree {

using Complex = std::complex<double>;
using BigInt = boost::multiprecision::cpp_int;

/// Simple undirected graph with a distinguished root vertex.
class RootedGraph {
 public:
  RootedGraph(size_t n, size_t root);
  /// Validates symmetry, loops and parallel edges.
  static RootedGraph from_adjacency(std::vector<std::vector<size_t>> adjacency, size_t root);

  void add_edge(size_t a, size_t b);
  bool has_edge(size_t a, size_t b) const;

  size_t size() const { return adjacency_.size(); }
  size_t root() const { return root_; }
  const std::vector<size_t>& neighbors(size_t v) const { return adjacency_.at(v); }
  const std::vector<std::vector<size_t>>& adjacency() const { return adjacency_; }
  size_t edge_count() const;
  size_t max_degree() const;
  size_t root_degree() const { return adjacency_[root_].size(); }
  bool is_connected() const;
  bool is_tree() const { return is_connected() && edge_count() + 1 == size(); }

  RootedGraph with_root(size_t root) const;

 private:
  std::vector<std::vector<size_t>> adjacency_;
  size_t root_;
};

/// Parses `n root` on the first line, then one line of neighbors per vertex.
RootedGraph parse_adjacency_list(std::string_view text);
RootedGraph load_adjacency_list(const std::string& path);

/// Integer polynomial, coefficient k multiplies lambda^k.
class IndPolynomial {
 public:
  IndPolynomial() = default;
  explicit IndPolynomial(std::vector<BigInt> coefficients);

  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  BigInt coefficient(size_t k) const { return k < coefficients_.size() ? coefficients_[k] : BigInt(0); }

  Complex evaluate(Complex lambda) const;
  /// Sum of |c_k| r^k, the scale against which a value counts as vanishing.
  double evaluate_abs(double r) const;

  IndPolynomial operator+(const IndPolynomial& other) const;
  IndPolynomial operator*(const IndPolynomial& other) const;
  IndPolynomial shifted() const;  // multiply by lambda
  bool operator==(const IndPolynomial& other) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coefficients_;
};

struct RatioPair {
  IndPolynomial z_in;
  IndPolynomial z_out;
  IndPolynomial total() const { return z_in + z_out; }
};

/// Graphs that are not trees are limited to this many vertices.
inline constexpr size_t kEnumerationCap = 30;

/// (Z^in, Z^out) at the root: tree recursion for trees, memoized deletion
/// recursion otherwise. Throws TooLarge for non-trees above kEnumerationCap.
RatioPair ratio_pair(const RootedGraph& g);
IndPolynomial ind_poly(const RootedGraph& g);

enum class ExtendedKind { Finite, Infinity, Indeterminate };

/// A value on the Riemann sphere, or an indeterminate 0/0.
struct ExtendedValue {
  ExtendedKind kind = ExtendedKind::Finite;
  Complex value;

  bool finite() const { return kind == ExtendedKind::Finite; }
};

const char* to_string(ExtendedKind kind);

/// Z^in/Z^out at lambda. Trees use a normalized in/out recursion and run in
/// linear time; a side counts as vanishing below 1e-13 of its absolute scale.
ExtendedValue ratio(const RootedGraph& g, Complex lambda);

/// Recursive F_lambda expression; each node applies F_lambda to p_i copies of
/// child i.
class FSpec {
 public:
  static FSpec identity() { return FSpec{}; }
  static FSpec node(std::vector<int> multiplicities, std::vector<FSpec> children);

  bool is_identity() const { return !is_node_; }
  const std::vector<int>& multiplicities() const { return multiplicities_; }
  const std::vector<FSpec>& children() const { return children_; }
  /// Largest total multiplicity at a node.
  int max_fanout() const;

 private:
  bool is_node_ = false;
  std::vector<int> multiplicities_;
  std::vector<FSpec> children_;
};

/// Throws Pole when some 1 + z_j vanishes, InvalidArgument when a node
/// exceeds fanout d.
Complex f_eval(const FSpec& spec, int d, Complex lambda, Complex z);

/// Rooted tree with ratio lambda -> f_lambda(0); identity leaves contribute
/// no vertex. Requires a non-identity spec.
RootedGraph fspec_to_tree(const FSpec& spec);

/// Tree realizing g o E_Lambda at degree d: every COMPOSE node with weights
/// (s_1..s_j) becomes a vertex with floor(s_i d) copies of child i, and an
/// identity becomes a single vertex.
RootedGraph gspec_to_tree(const GSpec& g, int d);

/// d * R(Lambda / d).
ExtendedValue rescaled_ratio(const RootedGraph& g, int d, Complex lambda);

/// Each vertex of H replaced by a copy of (G, v), root copies joined along the
/// edges of H; rooted at the copy of v inside the root of H.
RootedGraph substitute(const RootedGraph& h, const RootedGraph& g);

/// R_H(R_G(lambda)).
ExtendedValue compose_ratio(const RootedGraph& h, const RootedGraph& g, Complex lambda);

/// All complex roots by Durand-Kerner, sorted by (re, im).
std::vector<Complex> poly_roots(const IndPolynomial& p);

}  // namespace zerofree
