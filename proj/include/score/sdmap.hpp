#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "score/geometry.hpp"
#include "score/lane_model.hpp"
#include "score/osm.hpp"

namespace score {

/// `highway` values that classify a way as a drivable road.
struct HighwayWhitelist {
  std::vector<std::string> values = {
      "motorway",      "trunk",         "primary",       "secondary",
      "tertiary",      "unclassified",  "residential",   "service",
      "living_street", "motorway_link", "trunk_link",    "primary_link",
      "secondary_link", "tertiary_link", "road"};

  bool contains(const std::string& v) const;
};

SdClass classify_way(const std::map<std::string, std::string>& tags,
                     const HighwayWhitelist& whitelist = {});

struct GeoPose {
  double lat = 0.0;
  double lon = 0.0;
  double yaw = 0.0;  // radians, CCW from east
};

/// Local equirectangular projection about the ego position, rotated into the
/// ego heading (x forward, y left), clipped to the extent. Ways fully outside
/// the extent are dropped; z is 0.
SDMap project_clip(const GeoSDMap& m, const GeoPose& ego, const BEVExtent& extent = {},
                   const HighwayWhitelist& whitelist = {});

/// SD-derived reference points, normalized to [0,1]^3.
struct SDRefPoints {
  std::vector<Vec3> points;
  std::vector<int> source_edge;  // per-point index into the SDMap elements
};

/// Draws exactly n_sd reference points from the map: first the arclength
/// midpoint of each element (the n_sd longest win when elements outnumber
/// n_sd), then the remaining quota spread across elements proportionally to
/// length by largest remainder. Within an element, q extra points sit at
/// arclength fractions k/(q+1); a candidate colliding with the midpoint is
/// nudged to the nearest unused fraction of the half-step refinement.
/// Throws on an empty map ("no prior available").
SDRefPoints sample_sd_refpoints(const SDMap& m, int n_sd, const BEVExtent& extent = {},
                                const ZRange& z = {});

/// Sinusoidal positional encoding: per axis, sin/cos pairs at C/6 geometric
/// frequencies (pi * 2^j), concatenated x-block, y-block, z-block.
/// C must be divisible by 6.
std::vector<double> positional_encoding(const Vec3& p, int C);

/// Opaque deterministic embedding: a fixed-parameter map from a real vector
/// to a real vector of length out_dim.
struct EmbedFn {
  int out_dim = 0;
  std::function<std::vector<double>(std::span<const double>)> fn;

  std::vector<double> operator()(std::span<const double> in) const;

  /// Embedding that maps everything to the zero vector of length C.
  static EmbedFn zero(int C);
};

/// Projection from an embedding vector to a 3D offset.
using OffsetProj = std::function<Vec3(std::span<const double>)>;

/// First three embedding coordinates taken as the offset.
OffsetProj head3_offset();

/// Enhanced reference points: the learned offset added to each sampled point
/// in normalized space, clamped back to [0,1]^3.
std::vector<Vec3> enhance_sd_refpoints(const SDRefPoints& r, const EmbedFn& f,
                                       const OffsetProj& proj);

}  // namespace score
