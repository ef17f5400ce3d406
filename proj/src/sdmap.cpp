#include "score/sdmap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace score {

namespace {
constexpr double kEarthRadius = 6378137.0;  // WGS84 equatorial, meters
constexpr double kDegToRad = M_PI / 180.0;
}  // namespace

bool HighwayWhitelist::contains(const std::string& v) const {
  return std::find(values.begin(), values.end(), v) != values.end();
}

SdClass classify_way(const std::map<std::string, std::string>& tags,
                     const HighwayWhitelist& whitelist) {
  auto it = tags.find("highway");
  if (it == tags.end()) return SdClass::other;
  if (it->second == "footway" || it->second == "sidewalk") return SdClass::sidewalk;
  if (whitelist.contains(it->second)) return SdClass::road;
  return SdClass::other;
}

SDMap project_clip(const GeoSDMap& m, const GeoPose& ego, const BEVExtent& extent,
                   const HighwayWhitelist& whitelist) {
  if (std::abs(ego.lat) > 90.0) throw std::invalid_argument("project_clip: |lat| must be <= 90");
  const double lat0 = ego.lat * kDegToRad;
  const double cos_lat0 = std::cos(lat0);
  const double cy = std::cos(ego.yaw), sy = std::sin(ego.yaw);

  SDMap out;
  for (const OsmWay& way : m.ways) {
    Polyline local;
    local.reserve(way.node_refs.size());
    for (std::int64_t ref : way.node_refs) {
      const GeoPoint& g = m.nodes.at(ref);
      const double east = (g.lon - ego.lon) * kDegToRad * cos_lat0 * kEarthRadius;
      const double north = (g.lat - ego.lat) * kDegToRad * kEarthRadius;
      // Rotate east-north into the ego heading: x forward, y left.
      local.push_back({cy * east + sy * north, -sy * east + cy * north, 0.0});
    }
    const SdClass cls = classify_way(way.tags, whitelist);
    for (Polyline& piece : clip_polyline(local, extent)) {
      out.elements.push_back({std::move(piece), cls});
    }
  }
  return out;
}

namespace {

// Extra-point fractions for an element holding its midpoint plus q points:
// k/(q+1) for k = 1..q, with a candidate equal to 1/2 nudged to the nearest
// unused fraction of the half-step grid (rightward, deterministic).
std::vector<double> extra_fractions(int q) {
  std::vector<double> f;
  f.reserve(static_cast<std::size_t>(q));
  for (int k = 1; k <= q; ++k) {
    double frac = static_cast<double>(k) / (q + 1);
    if (frac == 0.5) frac = 0.5 + 0.5 / (q + 1);
    f.push_back(frac);
  }
  return f;
}

}  // namespace

SDRefPoints sample_sd_refpoints(const SDMap& m, int n_sd, const BEVExtent& extent,
                                const ZRange& z) {
  if (n_sd < 1) throw std::invalid_argument("sample_sd_refpoints: n_sd must be >= 1");
  if (m.elements.empty()) throw std::runtime_error("no prior available");

  const int n_elems = static_cast<int>(m.elements.size());
  std::vector<double> lengths(n_elems);
  for (int i = 0; i < n_elems; ++i) lengths[i] = polyline_length(m.elements[i].points);

  // Phase 1: pick the elements that receive a midpoint.
  std::vector<int> picked(n_elems);
  std::iota(picked.begin(), picked.end(), 0);
  if (n_elems > n_sd) {
    std::stable_sort(picked.begin(), picked.end(),
                     [&](int a, int b) { return lengths[a] > lengths[b]; });
    picked.resize(static_cast<std::size_t>(n_sd));
    std::sort(picked.begin(), picked.end());
  }

  // Phase 2: largest-remainder allocation of the remaining quota by length.
  std::vector<int> extra(picked.size(), 0);
  const int remaining = n_sd - static_cast<int>(picked.size());
  if (remaining > 0) {
    double total_len = 0.0;
    for (int idx : picked) total_len += lengths[idx];
    std::vector<double> remainder(picked.size(), 0.0);
    int assigned = 0;
    for (std::size_t i = 0; i < picked.size(); ++i) {
      const double quota =
          total_len > 0.0 ? remaining * lengths[picked[i]] / total_len
                          : static_cast<double>(remaining) / static_cast<double>(picked.size());
      extra[i] = static_cast<int>(std::floor(quota));
      remainder[i] = quota - extra[i];
      assigned += extra[i];
    }
    std::vector<std::size_t> order(picked.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (remainder[a] != remainder[b]) return remainder[a] > remainder[b];
      if (lengths[picked[a]] != lengths[picked[b]])
        return lengths[picked[a]] > lengths[picked[b]];
      return a < b;
    });
    for (int k = 0; k < remaining - assigned; ++k) ++extra[order[k % order.size()]];
  }

  SDRefPoints out;
  out.points.reserve(static_cast<std::size_t>(n_sd));
  out.source_edge.reserve(static_cast<std::size_t>(n_sd));
  for (std::size_t i = 0; i < picked.size(); ++i) {
    const Polyline& pts = m.elements[picked[i]].points;
    std::vector<double> fractions = {0.5};
    const std::vector<double> extras = extra_fractions(extra[i]);
    fractions.insert(fractions.end(), extras.begin(), extras.end());
    for (const Vec3& p : points_at_fractions(pts, fractions)) {
      out.points.push_back(normalize_point(p, extent, z));
      out.source_edge.push_back(picked[i]);
    }
  }
  return out;
}

std::vector<double> positional_encoding(const Vec3& p, int C) {
  if (C <= 0 || C % 6 != 0)
    throw std::invalid_argument("positional_encoding: C must be a positive multiple of 6");
  const int n_freq = C / 6;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(C));
  for (double v : {p.x, p.y, p.z}) {
    double omega = M_PI;
    for (int j = 0; j < n_freq; ++j, omega *= 2.0) {
      out.push_back(std::sin(omega * v));
      out.push_back(std::cos(omega * v));
    }
  }
  return out;
}

std::vector<double> EmbedFn::operator()(std::span<const double> in) const {
  std::vector<double> out = fn(in);
  if (static_cast<int>(out.size()) != out_dim)
    throw std::logic_error("EmbedFn produced wrong output length");
  return out;
}

EmbedFn EmbedFn::zero(int C) {
  return {C, [C](std::span<const double>) { return std::vector<double>(C, 0.0); }};
}

OffsetProj head3_offset() {
  return [](std::span<const double> v) -> Vec3 {
    return {v.size() > 0 ? v[0] : 0.0, v.size() > 1 ? v[1] : 0.0, v.size() > 2 ? v[2] : 0.0};
  };
}

std::vector<Vec3> enhance_sd_refpoints(const SDRefPoints& r, const EmbedFn& f,
                                       const OffsetProj& proj) {
  std::vector<Vec3> out;
  out.reserve(r.points.size());
  for (const Vec3& p : r.points) {
    const std::vector<double> enc = positional_encoding(p, f.out_dim);
    const Vec3 offset = proj(f(enc));
    out.push_back({std::clamp(offset.x + p.x, 0.0, 1.0), std::clamp(offset.y + p.y, 0.0, 1.0),
                   std::clamp(offset.z + p.z, 0.0, 1.0)});
  }
  return out;
}

}  // namespace score
