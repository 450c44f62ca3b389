#include "zerofree/gspec_json.hpp"

#include <json.hpp>

#include "zerofree/error.hpp"

namespace zerofree {

namespace {

using nlohmann::json;

constexpr int kMaxDepth = 256;

GSpec from_json(const json& j, int depth) {
  require(depth <= kMaxDepth, ErrorCode::Parse, "GSpec nesting too deep");
  if (j.is_string()) {
    require(j.get<std::string>() == "id", ErrorCode::Parse, "the only string GSpec is \"id\"");
    return GSpec::identity();
  }
  require(j.is_object(), ErrorCode::Parse, "GSpec must be \"id\" or an object");
  require(j.contains("weights") && j["weights"].is_array(), ErrorCode::Parse, "GSpec object needs a weights array");
  require(j.contains("children") && j["children"].is_array(), ErrorCode::Parse, "GSpec object needs a children array");
  std::vector<double> weights;
  for (const auto& w : j["weights"]) {
    require(w.is_number(), ErrorCode::Parse, "weights must be numbers");
    weights.push_back(w.get<double>());
  }
  std::vector<GSpec> children;
  for (const auto& c : j["children"]) children.push_back(from_json(c, depth + 1));
  return GSpec::compose(WeightTuple(std::move(weights)), std::move(children));
}

json to_json(const GSpec& g) {
  if (g.is_identity()) return "id";
  json children = json::array();
  for (const auto& c : g.children()) children.push_back(to_json(c));
  return {{"weights", g.weights().weights()}, {"children", std::move(children)}};
}

}  // namespace

GSpec parse_gspec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("invalid GSpec JSON: ") + e.what());
  }
  return from_json(j, 0);
}

std::string gspec_to_json(const GSpec& g) { return to_json(g).dump(); }

}  // namespace zerofree
