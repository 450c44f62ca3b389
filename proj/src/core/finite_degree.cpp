#include "zerofree/finite_degree.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "zerofree/error.hpp"

namespace zerofree {

// ---------------------------------------------------------------- graphs

RootedGraph::RootedGraph(size_t n, size_t root) : adjacency_(n), root_(root) {
  require(n > 0, ErrorCode::InvalidArgument, "graph needs at least one vertex");
  require(root < n, ErrorCode::InvalidArgument, "root out of range");
}

RootedGraph RootedGraph::from_adjacency(std::vector<std::vector<size_t>> adjacency, size_t root) {
  RootedGraph g(adjacency.size(), root);
  for (size_t v = 0; v < adjacency.size(); ++v) {
    for (const size_t w : adjacency[v]) {
      require(w < adjacency.size(), ErrorCode::InvalidArgument, "neighbor index out of range");
      require(w != v, ErrorCode::InvalidArgument, "self-loops are not allowed");
    }
    std::vector<size_t> sorted = adjacency[v];
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorCode::InvalidArgument,
            "parallel edges are not allowed");
  }
  for (size_t v = 0; v < adjacency.size(); ++v) {
    for (const size_t w : adjacency[v]) {
      const auto& back = adjacency[w];
      require(std::find(back.begin(), back.end(), v) != back.end(), ErrorCode::InvalidArgument,
              "adjacency lists must be symmetric");
    }
  }
  g.adjacency_ = std::move(adjacency);
  return g;
}

void RootedGraph::add_edge(size_t a, size_t b) {
  require(a < size() && b < size(), ErrorCode::InvalidArgument, "edge endpoint out of range");
  require(a != b, ErrorCode::InvalidArgument, "self-loops are not allowed");
  require(!has_edge(a, b), ErrorCode::InvalidArgument, "parallel edges are not allowed");
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
}

bool RootedGraph::has_edge(size_t a, size_t b) const {
  const auto& n = adjacency_.at(a);
  return std::find(n.begin(), n.end(), b) != n.end();
}

size_t RootedGraph::edge_count() const {
  size_t twice = 0;
  for (const auto& n : adjacency_) twice += n.size();
  return twice / 2;
}

size_t RootedGraph::max_degree() const {
  size_t best = 0;
  for (const auto& n : adjacency_) best = std::max(best, n.size());
  return best;
}

bool RootedGraph::is_connected() const {
  std::vector<char> seen(size(), 0);
  std::vector<size_t> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    const size_t v = stack.back();
    stack.pop_back();
    for (const size_t w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == size();
}

RootedGraph RootedGraph::with_root(size_t root) const {
  require(root < size(), ErrorCode::InvalidArgument, "root out of range");
  RootedGraph g = *this;
  g.root_ = root;
  return g;
}

RootedGraph parse_adjacency_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::Parse, "adjacency list is empty");
  std::istringstream header(line);
  long long n = -1;
  long long root = -1;
  if (!(header >> n >> root) || n <= 0 || root < 0 || root >= n) fail(ErrorCode::Parse, "bad header, expected `n root`");
  std::vector<std::vector<size_t>> adjacency(static_cast<size_t>(n));
  for (long long v = 0; v < n; ++v) {
    if (!std::getline(in, line)) line.clear();
    std::istringstream row(line);
    std::string token;
    while (row >> token) {
      size_t used = 0;
      long long w = -1;
      try {
        w = std::stoll(token, &used);
      } catch (const std::exception&) {
        fail(ErrorCode::Parse, "non-numeric neighbor `" + token + "`");
      }
      if (used != token.size() || w < 0 || w >= n) fail(ErrorCode::Parse, "bad neighbor `" + token + "`");
      adjacency[static_cast<size_t>(v)].push_back(static_cast<size_t>(w));
    }
  }
  try {
    return RootedGraph::from_adjacency(std::move(adjacency), static_cast<size_t>(root));
  } catch (const Error& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

RootedGraph load_adjacency_list(const std::string& path) {
  std::ifstream file(path);
  if (!file) fail(ErrorCode::Io, "cannot open " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_adjacency_list(buffer.str());
}

// ---------------------------------------------------------------- polynomials

IndPolynomial::IndPolynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

void IndPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Complex IndPolynomial::evaluate(Complex lambda) const {
  Complex acc(0.0, 0.0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * lambda + it->convert_to<double>();
  return acc;
}

double IndPolynomial::evaluate_abs(double r) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * r + std::abs(it->convert_to<double>());
  return acc;
}

IndPolynomial IndPolynomial::operator+(const IndPolynomial& other) const {
  std::vector<BigInt> out(std::max(coefficients_.size(), other.coefficients_.size()));
  for (size_t k = 0; k < out.size(); ++k) out[k] = coefficient(k) + other.coefficient(k);
  return IndPolynomial(std::move(out));
}

IndPolynomial IndPolynomial::operator*(const IndPolynomial& other) const {
  if (coefficients_.empty() || other.coefficients_.empty()) return {};
  std::vector<BigInt> out(coefficients_.size() + other.coefficients_.size() - 1);
  for (size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    for (size_t j = 0; j < other.coefficients_.size(); ++j) out[i + j] += coefficients_[i] * other.coefficients_[j];
  }
  return IndPolynomial(std::move(out));
}

IndPolynomial IndPolynomial::shifted() const {
  if (coefficients_.empty()) return {};
  std::vector<BigInt> out(coefficients_.size() + 1);
  std::copy(coefficients_.begin(), coefficients_.end(), out.begin() + 1);
  return IndPolynomial(std::move(out));
}

std::string IndPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += coefficients_[k].str();
    if (k == 1) out += "*x";
    if (k > 1) out += "*x^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------- in/out pairs

namespace {

const IndPolynomial& one() {
  static const IndPolynomial p(std::vector<BigInt>{1});
  return p;
}

// Vertices ordered so that every child precedes its parent.
struct TreeOrder {
  std::vector<size_t> parent;
  std::vector<size_t> bottom_up;
};

TreeOrder tree_order(const RootedGraph& g) {
  constexpr size_t kNone = std::numeric_limits<size_t>::max();
  TreeOrder t;
  t.parent.assign(g.size(), kNone);
  std::vector<size_t> bfs{g.root()};
  bfs.reserve(g.size());
  t.parent[g.root()] = g.root();
  for (size_t i = 0; i < bfs.size(); ++i) {
    for (const size_t w : g.neighbors(bfs[i])) {
      if (t.parent[w] == kNone) {
        t.parent[w] = bfs[i];
        bfs.push_back(w);
      }
    }
  }
  t.bottom_up.assign(bfs.rbegin(), bfs.rend());
  return t;
}

RatioPair tree_ratio_pair(const RootedGraph& g) {
  const TreeOrder order = tree_order(g);
  std::vector<RatioPair> pair(g.size(), RatioPair{IndPolynomial(), one()});
  std::vector<IndPolynomial> in_product(g.size(), one());
  for (const size_t v : order.bottom_up) {
    RatioPair& p = pair[v];
    p.z_in = in_product[v].shifted();
    if (v == g.root()) break;
    const size_t up = order.parent[v];
    in_product[up] = in_product[up] * p.z_out;
    pair[up].z_out = pair[up].z_out * p.total();
    p = RatioPair{};  // release memory early
  }
  return pair[g.root()];
}

// Independence polynomial of the subgraph induced by a vertex mask.
class MaskedCounter {
 public:
  explicit MaskedCounter(const RootedGraph& g) : closed_(g.size()) {
    for (size_t v = 0; v < g.size(); ++v) {
      closed_[v] = std::uint32_t{1} << v;
      for (const size_t w : g.neighbors(v)) closed_[v] |= std::uint32_t{1} << w;
    }
  }

  IndPolynomial count(std::uint32_t mask) {
    if (mask == 0) return one();
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int v = __builtin_ctz(mask);
    const std::uint32_t bit = std::uint32_t{1} << v;
    IndPolynomial result = count(mask & ~bit) + count(mask & ~closed_[v]).shifted();
    memo_.emplace(mask, result);
    return result;
  }

 private:
  std::vector<std::uint32_t> closed_;
  std::unordered_map<std::uint32_t, IndPolynomial> memo_;
};

RatioPair enumerated_ratio_pair(const RootedGraph& g) {
  MaskedCounter counter(g);
  const std::uint32_t all = g.size() == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << g.size()) - 1;
  std::uint32_t closed_root = std::uint32_t{1} << g.root();
  for (const size_t w : g.neighbors(g.root())) closed_root |= std::uint32_t{1} << w;
  RatioPair out;
  out.z_out = counter.count(all & ~(std::uint32_t{1} << g.root()));
  out.z_in = counter.count(all & ~closed_root).shifted();
  return out;
}

}  // namespace

RatioPair ratio_pair(const RootedGraph& g) {
  if (g.is_tree()) return tree_ratio_pair(g);
  require(g.size() <= kEnumerationCap, ErrorCode::TooLarge, "graph too large for exact enumeration");
  return enumerated_ratio_pair(g);
}

IndPolynomial ind_poly(const RootedGraph& g) { return ratio_pair(g).total(); }

// ---------------------------------------------------------------- ratios

const char* to_string(ExtendedKind kind) {
  switch (kind) {
    case ExtendedKind::Finite: return "finite";
    case ExtendedKind::Infinity: return "infinity";
    case ExtendedKind::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

namespace {

constexpr double kVanishing = 1e-13;

ExtendedValue divide(Complex in, double in_scale, Complex out, double out_scale) {
  const bool in_zero = std::abs(in) <= kVanishing * in_scale;
  const bool out_zero = std::abs(out) <= kVanishing * out_scale;
  if (out_zero && in_zero) return {ExtendedKind::Indeterminate, Complex(0.0)};
  if (out_zero) return {ExtendedKind::Infinity, Complex(0.0)};
  return {ExtendedKind::Finite, in / out};
}

// Z^in and Z^out carried up the tree together with a running bound on their
// absolute rounding error. Products lose no relative accuracy, so only the
// sums in + out can cancel; a side vanishes when it is within a few error
// bounds of 0.
struct Tracked {
  Complex v;
  double err;
};

constexpr double kUnitRoundoff = 0x1p-53;
constexpr double kVanishingBounds = 16.0;

Tracked times(Tracked a, Tracked b) {
  const Complex v = a.v * b.v;
  return {v, std::abs(a.v) * b.err + std::abs(b.v) * a.err + a.err * b.err + 4.0 * kUnitRoundoff * std::abs(v)};
}

Tracked plus(Tracked a, Tracked b) {
  const Complex v = a.v + b.v;
  return {v, a.err + b.err + 2.0 * kUnitRoundoff * std::abs(v)};
}

ExtendedValue tree_ratio(const RootedGraph& g, Complex lambda) {
  struct Side {
    Tracked in, out;
  };
  const TreeOrder order = tree_order(g);
  const Tracked x{lambda, 0.0};
  // each vertex starts as the empty products; in/out are Z^in, Z^out up to a
  // common positive factor
  std::vector<Side> acc(g.size(), Side{{Complex(1.0), 0.0}, {Complex(1.0), 0.0}});
  for (const size_t v : order.bottom_up) {
    Side s = acc[v];
    s.in = times(s.in, x);
    const double scale = std::max(std::abs(s.in.v), std::abs(s.out.v));
    if (scale > 0.0 && std::isfinite(scale)) {
      s.in = {s.in.v / scale, s.in.err / scale};
      s.out = {s.out.v / scale, s.out.err / scale};
    }
    if (v == g.root()) {
      const bool in_zero = std::abs(s.in.v) <= kVanishingBounds * s.in.err;
      const bool out_zero = std::abs(s.out.v) <= kVanishingBounds * s.out.err;
      if (in_zero && out_zero) return {ExtendedKind::Indeterminate, Complex(0.0)};
      if (out_zero) return {ExtendedKind::Infinity, Complex(0.0)};
      return {ExtendedKind::Finite, s.in.v / s.out.v};
    }
    Side& up = acc[order.parent[v]];
    up.in = times(up.in, s.out);
    up.out = times(up.out, plus(s.in, s.out));
  }
  return {ExtendedKind::Indeterminate, Complex(0.0)};
}

// Limit of Z^in / Z^out as lambda -> infinity.
ExtendedValue ratio_at_infinity(const RootedGraph& g) {
  const RatioPair p = ratio_pair(g);
  const int din = p.z_in.degree();
  const int dout = p.z_out.degree();
  if (din > dout) return {ExtendedKind::Infinity, Complex(0.0)};
  if (din < dout) return {ExtendedKind::Finite, Complex(0.0)};
  const double lead_in = p.z_in.coefficients().back().convert_to<double>();
  const double lead_out = p.z_out.coefficients().back().convert_to<double>();
  return {ExtendedKind::Finite, Complex(lead_in / lead_out, 0.0)};
}

}  // namespace

ExtendedValue ratio(const RootedGraph& g, Complex lambda) {
  if (g.is_tree()) return tree_ratio(g, lambda);
  const RatioPair p = ratio_pair(g);
  const double r = std::abs(lambda);
  return divide(p.z_in.evaluate(lambda), p.z_in.evaluate_abs(r), p.z_out.evaluate(lambda), p.z_out.evaluate_abs(r));
}

ExtendedValue rescaled_ratio(const RootedGraph& g, int d, Complex lambda) {
  require(d >= 1, ErrorCode::InvalidArgument, "degree must be positive");
  ExtendedValue v = ratio(g, lambda / static_cast<double>(d));
  if (v.finite()) v.value *= static_cast<double>(d);
  return v;
}

RootedGraph substitute(const RootedGraph& h, const RootedGraph& g) {
  const size_t block = g.size();
  RootedGraph out(h.size() * block, h.root() * block + g.root());
  for (size_t copy = 0; copy < h.size(); ++copy) {
    for (size_t a = 0; a < block; ++a) {
      for (const size_t b : g.neighbors(a)) {
        if (a < b) out.add_edge(copy * block + a, copy * block + b);
      }
    }
  }
  for (size_t a = 0; a < h.size(); ++a) {
    for (const size_t b : h.neighbors(a)) {
      if (a < b) out.add_edge(a * block + g.root(), b * block + g.root());
    }
  }
  return out;
}

ExtendedValue compose_ratio(const RootedGraph& h, const RootedGraph& g, Complex lambda) {
  const ExtendedValue inner = ratio(g, lambda);
  switch (inner.kind) {
    case ExtendedKind::Indeterminate: return inner;
    case ExtendedKind::Infinity: return ratio_at_infinity(h);
    case ExtendedKind::Finite: break;
  }
  return ratio(h, inner.value);
}

// ---------------------------------------------------------------- F recursion

FSpec FSpec::node(std::vector<int> multiplicities, std::vector<FSpec> children) {
  require(multiplicities.size() == children.size(), ErrorCode::ArityMismatch,
          "FSpec multiplicity count differs from child count");
  for (const int p : multiplicities) require(p >= 0, ErrorCode::InvalidArgument, "multiplicities must be nonnegative");
  FSpec f;
  f.is_node_ = true;
  f.multiplicities_ = std::move(multiplicities);
  f.children_ = std::move(children);
  return f;
}

int FSpec::max_fanout() const {
  if (!is_node_) return 0;
  int total = 0;
  int deepest = 0;
  for (size_t i = 0; i < children_.size(); ++i) {
    total += multiplicities_[i];
    deepest = std::max(deepest, children_[i].max_fanout());
  }
  return std::max(total, deepest);
}

namespace {

Complex f_eval_node(const FSpec& spec, Complex lambda, Complex z) {
  if (spec.is_identity()) return z;
  Complex denominator(1.0, 0.0);
  for (size_t i = 0; i < spec.children().size(); ++i) {
    const Complex shifted = 1.0 + f_eval_node(spec.children()[i], lambda, z);
    if (spec.multiplicities()[i] == 0) continue;
    if (std::abs(shifted) <= 1e-300) fail(ErrorCode::Pole, "F recursion hit 1 + z = 0");
    denominator *= std::pow(shifted, spec.multiplicities()[i]);
  }
  return lambda / denominator;
}

size_t fspec_build(const FSpec& spec, RootedGraph& g, size_t& next) {
  const size_t self = next++;
  for (size_t i = 0; i < spec.children().size(); ++i) {
    if (spec.children()[i].is_identity()) continue;
    for (int copy = 0; copy < spec.multiplicities()[i]; ++copy) {
      const size_t child = fspec_build(spec.children()[i], g, next);
      g.add_edge(self, child);
    }
  }
  return self;
}

size_t fspec_vertices(const FSpec& spec) {
  if (spec.is_identity()) return 0;
  size_t total = 1;
  for (size_t i = 0; i < spec.children().size(); ++i)
    total += static_cast<size_t>(spec.multiplicities()[i]) * fspec_vertices(spec.children()[i]);
  return total;
}

}  // namespace

Complex f_eval(const FSpec& spec, int d, Complex lambda, Complex z) {
  require(spec.max_fanout() <= d, ErrorCode::InvalidArgument, "FSpec node exceeds fanout d");
  return f_eval_node(spec, lambda, z);
}

RootedGraph fspec_to_tree(const FSpec& spec) {
  require(!spec.is_identity(), ErrorCode::InvalidArgument, "identity spec has no tree");
  RootedGraph g(fspec_vertices(spec), 0);
  size_t next = 0;
  fspec_build(spec, g, next);
  return g;
}

namespace {

constexpr size_t kTreeVertexCap = 20'000'000;

size_t copies(double weight, int d) { return static_cast<size_t>(std::floor(weight * d + 1e-9)); }

size_t gspec_vertices(const GSpec& g, int d) {
  if (g.is_identity()) return 1;
  size_t total = 1;
  for (size_t i = 0; i < g.children().size(); ++i) {
    total += copies(g.weights().weights()[i], d) * gspec_vertices(g.children()[i], d);
    require(total <= kTreeVertexCap, ErrorCode::TooLarge, "realizing tree is too large");
  }
  return total;
}

size_t gspec_build(const GSpec& g, int d, RootedGraph& tree, size_t& next) {
  const size_t self = next++;
  if (g.is_identity()) return self;
  size_t children = 0;
  for (size_t i = 0; i < g.children().size(); ++i) children += copies(g.weights().weights()[i], d);
  // children plus the parent edge
  require(children + 1 <= static_cast<size_t>(d) + 1, ErrorCode::DegreeOverflow, "vertex degree exceeds d + 1");
  for (size_t i = 0; i < g.children().size(); ++i) {
    const size_t count = copies(g.weights().weights()[i], d);
    for (size_t c = 0; c < count; ++c) tree.add_edge(self, gspec_build(g.children()[i], d, tree, next));
  }
  return self;
}

}  // namespace

RootedGraph gspec_to_tree(const GSpec& g, int d) {
  require(d >= 2, ErrorCode::InvalidArgument, "degree must be at least 2");
  RootedGraph tree(gspec_vertices(g, d), 0);
  size_t next = 0;
  gspec_build(g, d, tree, next);
  return tree;
}

// ---------------------------------------------------------------- roots

std::vector<Complex> poly_roots(const IndPolynomial& p) {
  const int n = p.degree();
  require(n >= 1, ErrorCode::InvalidArgument, "root finding needs degree at least 1");
  const double lead = p.coefficients().back().convert_to<double>();
  std::vector<double> monic(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) monic[static_cast<size_t>(k)] = p.coefficients()[static_cast<size_t>(k)].convert_to<double>() / lead;

  auto eval = [&](Complex z) {
    Complex acc(0.0);
    for (int k = n; k >= 0; --k) acc = acc * z + monic[static_cast<size_t>(k)];
    return acc;
  };
  auto scale_at = [&](double r) {
    double acc = 0.0;
    for (int k = n; k >= 0; --k) acc = acc * r + std::abs(monic[static_cast<size_t>(k)]);
    return acc;
  };

  std::vector<Complex> roots(static_cast<size_t>(n));
  // geometric mean of the root moduli sets the scale of the start configuration
  const double radius = std::max(std::pow(std::abs(monic[0]), 1.0 / n), 1e-3);
  const Complex seed(0.4, 0.9);
  Complex power(1.0, 0.0);
  for (auto& z : roots) {
    z = radius * power;
    power *= seed;
  }
  constexpr int kMaxSweeps = 1000;
  constexpr double kResidual = 1e-10;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool done = true;
    for (size_t i = 0; i < roots.size(); ++i) {
      const Complex value = eval(roots[i]);
      if (std::abs(value) > kResidual * scale_at(std::abs(roots[i]))) done = false;
      Complex denom(1.0, 0.0);
      for (size_t j = 0; j < roots.size(); ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      if (std::abs(denom) == 0.0) denom = Complex(1e-12, 0.0);
      roots[i] -= value / denom;
    }
    if (done) {
      std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
      });
      return roots;
    }
  }
  fail(ErrorCode::NoConvergence, "Durand-Kerner did not converge");
}

}  // namespace zerofree
