#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace score {

struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;
};

struct OsmWay {
  std::int64_t id = 0;
  std::vector<std::int64_t> node_refs;
  std::map<std::string, std::string> tags;
};

/// Geographic SD map: raw nodes and tagged ways, referential integrity
/// already enforced.
struct GeoSDMap {
  std::map<std::int64_t, GeoPoint> nodes;
  std::vector<OsmWay> ways;
};

struct OsmParseError : std::runtime_error {
  OsmParseError(const std::string& msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Parses the OSM XML subset (`node`, `way`, `nd`, `tag`; other elements are
/// skipped). Throws OsmParseError with line/column on malformed XML and
/// std::runtime_error naming the way on dangling node references.
GeoSDMap parse_osm(std::string_view document);

}  // namespace score
