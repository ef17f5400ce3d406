#include "score/lane_model.hpp"

#include <stdexcept>

namespace score {

std::string to_string(SegClass c) {
  return c == SegClass::lane ? "lane" : "pedestrian_crossing";
}

std::string to_string(BoundaryType t) {
  switch (t) {
    case BoundaryType::solid: return "solid";
    case BoundaryType::dashed: return "dashed";
    case BoundaryType::invisible: return "invisible";
  }
  return "invisible";
}

std::string to_string(SdClass c) {
  switch (c) {
    case SdClass::road: return "road";
    case SdClass::sidewalk: return "sidewalk";
    case SdClass::other: return "other";
  }
  return "other";
}

std::string to_string(TEClass c) {
  switch (c) {
    case TEClass::unknown: return "unknown";
    case TEClass::red: return "red";
    case TEClass::green: return "green";
    case TEClass::yellow: return "yellow";
    case TEClass::go_straight: return "go_straight";
    case TEClass::turn_left: return "turn_left";
    case TEClass::turn_right: return "turn_right";
    case TEClass::no_left_turn: return "no_left_turn";
    case TEClass::no_right_turn: return "no_right_turn";
    case TEClass::u_turn: return "u_turn";
    case TEClass::no_u_turn: return "no_u_turn";
    case TEClass::slight_left: return "slight_left";
    case TEClass::slight_right: return "slight_right";
  }
  return "unknown";
}

SegClass seg_class_from_string(const std::string& s) {
  if (s == "lane") return SegClass::lane;
  if (s == "pedestrian_crossing") return SegClass::pedestrian_crossing;
  throw std::invalid_argument("unknown seg_class: " + s);
}

BoundaryType boundary_type_from_string(const std::string& s) {
  if (s == "solid") return BoundaryType::solid;
  if (s == "dashed") return BoundaryType::dashed;
  if (s == "invisible") return BoundaryType::invisible;
  throw std::invalid_argument("unknown boundary type: " + s);
}

SdClass sd_class_from_string(const std::string& s) {
  if (s == "road") return SdClass::road;
  if (s == "sidewalk") return SdClass::sidewalk;
  if (s == "other") return SdClass::other;
  throw std::invalid_argument("unknown sd_class: " + s);
}

TEClass te_class_from_string(const std::string& s) {
  static const std::vector<TEClass> all = {
      TEClass::unknown,      TEClass::red,          TEClass::green,
      TEClass::yellow,       TEClass::go_straight,  TEClass::turn_left,
      TEClass::turn_right,   TEClass::no_left_turn, TEClass::no_right_turn,
      TEClass::u_turn,       TEClass::no_u_turn,    TEClass::slight_left,
      TEClass::slight_right};
  for (TEClass c : all)
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown te_class: " + s);
}

double lane_segment_distance(const LaneSegment& a, const LaneSegment& b) {
  return (chamfer(a.centerline, b.centerline) + chamfer(a.left, b.left) +
          chamfer(a.right, b.right)) /
         3.0;
}

std::vector<Vec3> lane_attention_refpoints(const LaneSegment& ls, int m) {
  if (m < 1) throw std::invalid_argument("lane_attention_refpoints: m must be >= 1");
  std::vector<double> fractions;
  if (m == 1) {
    fractions = {0.5};
  } else {
    for (int k = 0; k < m; ++k) fractions.push_back(static_cast<double>(k) / (m - 1));
  }
  std::vector<Vec3> out = points_at_fractions(ls.left, fractions);
  std::vector<Vec3> right = points_at_fractions(ls.right, fractions);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

namespace {

void check_polyline(std::vector<Violation>& out, int frame, const std::string& object,
                    const Polyline& p, int required_pts = -1) {
  if (p.size() < 2) {
    out.push_back({frame, object, "polyline must have >= 2 points, found " +
                                      std::to_string(p.size())});
    return;
  }
  if (required_pts >= 0 && static_cast<int>(p.size()) != required_pts) {
    out.push_back({frame, object,
                   "n_pts: expected " + std::to_string(required_pts) + " points, found " +
                       std::to_string(p.size())});
  }
  for (const Vec3& v : p) {
    if (!is_finite(v)) {
      out.push_back({frame, object, "non-finite coordinate"});
      break;
    }
  }
}

void check_unit_interval(std::vector<Violation>& out, int frame, const std::string& object,
                         double v, const std::string& what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    out.push_back({frame, object, what + " must lie in range [0,1], found " + std::to_string(v)});
  }
}

}  // namespace

std::vector<Violation> validate_scene(const Scene& s, const ValidateOptions& opts) {
  std::vector<Violation> out;
  for (std::size_t f = 1; f < s.frames.size(); ++f) {
    if (!(s.frames[f].timestamp > s.frames[f - 1].timestamp)) {
      out.push_back({static_cast<int>(f), "timestamp", "timestamps must be strictly increasing"});
    }
  }
  for (std::size_t f = 0; f < s.frames.size(); ++f) {
    const Frame& fr = s.frames[f];
    const int fi = static_cast<int>(f);

    const std::size_t n_ls = fr.gt.segments.size();
    for (std::size_t i = 0; i < n_ls; ++i) {
      const LaneSegment& seg = fr.gt.segments[i];
      const std::string base = "lane_segments[" + std::to_string(i) + "]";
      check_polyline(out, fi, base + ".centerline", seg.centerline, opts.n_pts);
      check_polyline(out, fi, base + ".left", seg.left, opts.n_pts);
      check_polyline(out, fi, base + ".right", seg.right, opts.n_pts);
      check_unit_interval(out, fi, base, seg.confidence, "confidence");
    }
    if (fr.gt.adjacency.rows() != n_ls || fr.gt.adjacency.cols() != n_ls) {
      out.push_back({fi, "adjacency",
                     "must be square with N = " + std::to_string(n_ls) + ", found " +
                         std::to_string(fr.gt.adjacency.rows()) + "x" +
                         std::to_string(fr.gt.adjacency.cols())});
    } else {
      for (std::size_t r = 0; r < n_ls; ++r)
        for (std::size_t c = 0; c < n_ls; ++c)
          check_unit_interval(out, fi,
                              "adjacency[" + std::to_string(r) + "][" + std::to_string(c) + "]",
                              fr.gt.adjacency(r, c), "entry");
    }

    for (std::size_t i = 0; i < fr.gt_boundaries.size(); ++i) {
      check_polyline(out, fi, "boundaries[" + std::to_string(i) + "]", fr.gt_boundaries[i],
                     opts.n_rb);
    }
    for (std::size_t i = 0; i < fr.sd_map.elements.size(); ++i) {
      check_polyline(out, fi, "sd_map[" + std::to_string(i) + "]", fr.sd_map.elements[i].points);
    }

    const std::size_t n_te = fr.traffic_elements.size();
    for (std::size_t i = 0; i < n_te; ++i) {
      const TrafficElement& te = fr.traffic_elements[i];
      const std::string base = "traffic_elements[" + std::to_string(i) + "]";
      if (!(te.bbox[0] < te.bbox[2] && te.bbox[1] < te.bbox[3])) {
        out.push_back({fi, base + ".bbox", "requires u_min < u_max and v_min < v_max"});
      }
      check_unit_interval(out, fi, base, te.confidence, "confidence");
    }
    if (fr.te_assoc.rows() != n_ls || fr.te_assoc.cols() != n_te) {
      // An empty association matrix is fine when there is nothing to associate.
      if (!(fr.te_assoc.empty() && (n_ls == 0 || n_te == 0))) {
        out.push_back({fi, "te_assoc",
                       "shape must be " + std::to_string(n_ls) + "x" + std::to_string(n_te) +
                           ", found " + std::to_string(fr.te_assoc.rows()) + "x" +
                           std::to_string(fr.te_assoc.cols())});
      }
    } else {
      for (std::size_t r = 0; r < fr.te_assoc.rows(); ++r)
        for (std::size_t c = 0; c < fr.te_assoc.cols(); ++c)
          check_unit_interval(out, fi,
                              "te_assoc[" + std::to_string(r) + "][" + std::to_string(c) + "]",
                              fr.te_assoc(r, c), "entry");
    }
    if (!fr.boundary_confidences.empty() &&
        fr.boundary_confidences.size() != fr.gt_boundaries.size()) {
      out.push_back({fi, "boundary_confidences", "length must match boundaries"});
    }
    for (std::size_t i = 0; i < fr.boundary_confidences.size(); ++i)
      check_unit_interval(out, fi, "boundary_confidences[" + std::to_string(i) + "]",
                          fr.boundary_confidences[i], "confidence");
  }
  return out;
}

}  // namespace score
