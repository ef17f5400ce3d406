#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "score/geometry.hpp"
#include "score/matrix.hpp"

namespace score {

enum class SegClass { lane, pedestrian_crossing };
enum class BoundaryType { solid, dashed, invisible };
enum class SdClass { road, sidewalk, other };

/// Traffic element categories: light states plus directional signs.
enum class TEClass {
  unknown,
  red,
  green,
  yellow,
  go_straight,
  turn_left,
  turn_right,
  no_left_turn,
  no_right_turn,
  u_turn,
  no_u_turn,
  slight_left,
  slight_right,
};

std::string to_string(SegClass c);
std::string to_string(BoundaryType t);
std::string to_string(SdClass c);
std::string to_string(TEClass c);
SegClass seg_class_from_string(const std::string& s);
BoundaryType boundary_type_from_string(const std::string& s);
SdClass sd_class_from_string(const std::string& s);
TEClass te_class_from_string(const std::string& s);

/// The atomic map element: centerline plus left/right boundary polylines,
/// each with the same point count, a class label, and boundary-type labels.
/// Ground-truth records carry confidence 1.0 so one type serves both
/// predictions and labels.
struct LaneSegment {
  Polyline centerline;
  Polyline left;
  Polyline right;
  SegClass seg_class = SegClass::lane;
  BoundaryType left_type = BoundaryType::solid;
  BoundaryType right_type = BoundaryType::solid;
  double confidence = 1.0;
};

/// Lane segments as vertices plus a real-valued successor adjacency.
struct LaneGraph {
  std::vector<LaneSegment> segments;
  Matrix adjacency;  // N x N, entries in [0,1]
};

struct TrafficElement {
  std::array<double, 4> bbox{};  // u_min, v_min, u_max, v_max in pixels
  TEClass te_class = TEClass::unknown;
  double confidence = 1.0;
  std::vector<double> embedding;  // optional, length C when present
};

struct SDElement {
  Polyline points;
  SdClass sd_class = SdClass::road;
};

/// Classed polylines in the ego frame; the prior knowledge source.
struct SDMap {
  std::vector<SDElement> elements;
};

struct Frame {
  double timestamp = 0.0;
  Pose2 ego_pose;  // world frame
  double wheel_angle_deg = 0.0;
  LaneGraph gt;
  std::vector<Polyline> gt_boundaries;       // n_rb points each
  std::vector<double> boundary_confidences;  // optional; defaults to 1.0 per boundary
  SDMap sd_map;
  std::vector<TrafficElement> traffic_elements;
  Matrix te_assoc;  // N_ls x N_te, entries in [0,1]
};

struct Scene {
  std::vector<Frame> frames;
};

/// Mean symmetric Chamfer distance over the three polylines. The benchmark's
/// exact matching distance is not public; this Chamfer stand-in is the
/// documented compatibility caveat for all detection matching here.
double lane_segment_distance(const LaneSegment& a, const LaneSegment& b);

/// m equidistant-arclength points on the left boundary followed by m on the
/// right; m = 1 yields the arclength midpoints.
std::vector<Vec3> lane_attention_refpoints(const LaneSegment& ls, int m);

struct Violation {
  int frame = -1;  // -1 for scene-level violations
  std::string object;
  std::string rule;
};

struct ValidateOptions {
  int n_pts = 10;
  int n_rb = 20;
};

/// Checks every type invariant and returns all violations found; an empty
/// result means the scene is well-formed. Violations are data, not errors.
std::vector<Violation> validate_scene(const Scene& s, const ValidateOptions& opts = {});

}  // namespace score
