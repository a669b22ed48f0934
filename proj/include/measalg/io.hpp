#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "measalg/category.hpp"
#include "measalg/morphism.hpp"

namespace measalg::io {

using Json = nlohmann::ordered_json;

struct LoadedSpace {
  SpacePtr space;
  MetricSpacePtr metric;  // null when the document has no "dist"
};

struct LoadedMap {
  MeasurableMap map;
  MetricSpacePtr source_metric;
  MetricSpacePtr target_metric;

  bool has_metrics() const noexcept { return source_metric && target_metric; }
};

/// {"points": [...], "atoms": [[...], ...], "weights": ["p/q" | "inf", ...]}
Json space_to_json(const FiniteMeasureSpace& space);
/// As above plus "dist": upper-triangular distances in point order.
Json space_to_json(const FiniteMetricMeasureSpace& space);
LoadedSpace space_from_json(const Json& doc);

/// "source"/"target" may be inline documents or paths relative to `base_dir`.
LoadedMap map_from_json(const Json& doc, const std::filesystem::path& base_dir);
/// Inline form; metrics are embedded when both are given.
Json map_to_json(const MeasurableMap& map, const FiniteMetricMeasureSpace* source_metric = nullptr,
                 const FiniteMetricMeasureSpace* target_metric = nullptr);

/// Sorted atom-index array.
Json element_to_json(const AlgebraElement& elem);
Json compression_to_json(const CompressionResult& result);
Json classification_to_json(const MorphismClassification& c);

std::string read_file(const std::filesystem::path& path);
/// ParseError on malformed JSON, IoError on unreadable files.
Json parse_json(const std::string& text);
Json load_json_file(const std::filesystem::path& path);
LoadedSpace load_space_file(const std::filesystem::path& path);
LoadedMap load_map_file(const std::filesystem::path& path);

}  // namespace measalg::io
