#include "measalg/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "measalg/errors.hpp"

namespace measalg::io {
namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& reason) {
  throw Error(ErrorKind::ParseError, "field '" + field + "': " + reason);
}

const Json& require(const Json& doc, const char* field) {
  if (!doc.is_object()) bad_field(field, "document is not an object");
  const auto it = doc.find(field);
  if (it == doc.end()) bad_field(field, "missing");
  return *it;
}

std::vector<std::string> string_list(const Json& node, const std::string& field) {
  if (!node.is_array()) bad_field(field, "expected an array");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) bad_field(field, "expected strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

LoadedSpace resolve_space(const Json& node, const std::filesystem::path& base_dir,
                          const char* field) {
  if (node.is_string()) return load_space_file(base_dir / node.get<std::string>());
  if (node.is_object()) return space_from_json(node);
  bad_field(field, "expected a space document or a path");
}

}  // namespace

Json space_to_json(const FiniteMeasureSpace& space) {
  Json doc;
  doc["points"] = space.points();
  Json atoms = Json::array();
  for (const auto& atom : space.atoms()) {
    Json labels = Json::array();
    for (auto p : atom) labels.push_back(space.points()[p]);
    atoms.push_back(std::move(labels));
  }
  doc["atoms"] = std::move(atoms);
  Json weights = Json::array();
  for (const auto& w : space.weights()) weights.push_back(w.to_string());
  doc["weights"] = std::move(weights);
  return doc;
}

Json space_to_json(const FiniteMetricMeasureSpace& space) {
  Json doc = space_to_json(*space.base());
  Json dist = Json::array();
  for (const auto& d : space.upper_triangular()) dist.push_back(rational_to_string(d));
  doc["dist"] = std::move(dist);
  return doc;
}

LoadedSpace space_from_json(const Json& doc) {
  auto points = string_list(require(doc, "points"), "points");
  const auto& atoms_node = require(doc, "atoms");
  if (!atoms_node.is_array()) bad_field("atoms", "expected an array of arrays");
  std::vector<std::vector<std::string>> atoms;
  for (const auto& block : atoms_node) atoms.push_back(string_list(block, "atoms"));
  std::vector<ExtRational> weights;
  for (const auto& w : string_list(require(doc, "weights"), "weights")) {
    weights.push_back(ExtRational::parse(w));
  }
  LoadedSpace out{make_space(std::move(points), atoms, std::move(weights)), nullptr};
  if (const auto it = doc.find("dist"); it != doc.end()) {
    std::vector<Rational> upper;
    for (const auto& d : string_list(*it, "dist")) upper.push_back(parse_rational(d));
    out.metric = FiniteMetricMeasureSpace::make(out.space, std::move(upper));
  }
  return out;
}

LoadedMap map_from_json(const Json& doc, const std::filesystem::path& base_dir) {
  const LoadedSpace source = resolve_space(require(doc, "source"), base_dir, "source");
  const LoadedSpace target = resolve_space(require(doc, "target"), base_dir, "target");
  const auto& fn_node = require(doc, "fn");
  if (!fn_node.is_object()) bad_field("fn", "expected an object of point labels");
  std::unordered_map<std::string, std::string> fn;
  for (const auto& [from, to] : fn_node.items()) {
    if (!to.is_string()) bad_field("fn", "image of " + from + " is not a label");
    fn.emplace(from, to.get<std::string>());
  }
  return {MeasurableMap::make(source.space, target.space, fn), source.metric, target.metric};
}

Json map_to_json(const MeasurableMap& map, const FiniteMetricMeasureSpace* source_metric,
                 const FiniteMetricMeasureSpace* target_metric) {
  Json doc;
  const bool metric = source_metric && target_metric;
  doc["source"] = metric ? space_to_json(*source_metric) : space_to_json(*map.source());
  doc["target"] = metric ? space_to_json(*target_metric) : space_to_json(*map.target());
  Json fn = Json::object();
  for (std::size_t p = 0; p < map.point_fn().size(); ++p) {
    fn[map.source()->points()[p]] = map.target()->points()[map.point_fn()[p]];
  }
  doc["fn"] = std::move(fn);
  return doc;
}

Json element_to_json(const AlgebraElement& elem) {
  Json out = Json::array();
  for_each_atom(elem.atoms(), [&](std::size_t a) { out.push_back(a); });
  return out;
}

Json compression_to_json(const CompressionResult& result) { return result.to_string(); }

Json classification_to_json(const MorphismClassification& c) {
  Json doc;
  doc["measurable"] = c.measurable;
  doc["inp"] = c.inverse_nil_preserving;
  doc["compression"] = c.compression.to_string();
  doc["degenerate"] = c.compression.degenerate();
  if (c.lipschitz_point) {
    doc["lipschitz"] = c.lipschitz_point->to_string();
    doc["short"] = *c.short_map;
    doc["bounded_deformation"] = *c.bounded_deformation;
    if (c.rescale_to_short) {
      doc["rescale_to_short"] = {
          {"source_factor", rational_to_string(c.rescale_to_short->source_factor)},
          {"target_factor", rational_to_string(c.rescale_to_short->target_factor)}};
    }
  }
  return doc;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Json load_json_file(const std::filesystem::path& path) { return parse_json(read_file(path)); }

LoadedSpace load_space_file(const std::filesystem::path& path) {
  return space_from_json(load_json_file(path));
}

LoadedMap load_map_file(const std::filesystem::path& path) {
  return map_from_json(load_json_file(path), path.parent_path());
}

}  // namespace measalg::io
