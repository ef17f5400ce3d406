#include "score/scene_io.hpp"

#include <fstream>
#include <stdexcept>

namespace score {

using nlohmann::json;

namespace {

json point_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 point_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw std::runtime_error(where + ": point must be a [x,y,z] array");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json polyline_to_json(const Polyline& p) {
  json arr = json::array();
  for (const Vec3& v : p) arr.push_back(point_to_json(v));
  return arr;
}

Polyline polyline_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw std::runtime_error(where + ": polyline must be an array");
  Polyline p;
  p.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    p.push_back(point_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return p;
}

json flat_matrix(const Matrix& m) {
  json arr = json::array();
  for (double v : m.data()) arr.push_back(v);
  return arr;
}

Matrix shaped_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows * cols)
    throw std::runtime_error(where + ": expected " + std::to_string(rows * cols) +
                             " row-major entries, found " + std::to_string(j.size()));
  std::vector<double> data;
  data.reserve(j.size());
  for (const auto& v : j) data.push_back(v.get<double>());
  return Matrix::from_data(rows, cols, std::move(data));
}

}  // namespace

json scene_to_json(const Scene& s) {
  json frames = json::array();
  for (const Frame& fr : s.frames) {
    json f;
    f["timestamp"] = fr.timestamp;
    f["ego_pose"] = {{"x", fr.ego_pose.x}, {"y", fr.ego_pose.y}, {"yaw", fr.ego_pose.yaw}};
    f["wheel_angle_deg"] = fr.wheel_angle_deg;

    json segs = json::array();
    for (const LaneSegment& seg : fr.gt.segments) {
      segs.push_back({{"centerline", polyline_to_json(seg.centerline)},
                      {"left", polyline_to_json(seg.left)},
                      {"right", polyline_to_json(seg.right)},
                      {"seg_class", to_string(seg.seg_class)},
                      {"left_type", to_string(seg.left_type)},
                      {"right_type", to_string(seg.right_type)},
                      {"confidence", seg.confidence}});
    }
    f["lane_segments"] = std::move(segs);
    f["adjacency"] = flat_matrix(fr.gt.adjacency);

    json bounds = json::array();
    for (const Polyline& b : fr.gt_boundaries) bounds.push_back(polyline_to_json(b));
    f["boundaries"] = std::move(bounds);
    if (!fr.boundary_confidences.empty()) f["boundary_confidences"] = fr.boundary_confidences;

    f["sd_map"] = sdmap_to_json(fr.sd_map);

    json tes = json::array();
    for (const TrafficElement& te : fr.traffic_elements) {
      json t = {{"bbox", te.bbox},
                {"te_class", to_string(te.te_class)},
                {"confidence", te.confidence}};
      if (!te.embedding.empty()) t["embedding"] = te.embedding;
      tes.push_back(std::move(t));
    }
    f["traffic_elements"] = std::move(tes);
    f["te_assoc"] = flat_matrix(fr.te_assoc);

    frames.push_back(std::move(f));
  }
  return json{{"frames", std::move(frames)}};
}

Scene scene_from_json(const json& j) {
  if (!j.contains("frames") || !j["frames"].is_array())
    throw std::runtime_error("scene: missing frames[]");
  Scene s;
  int fi = 0;
  for (const auto& f : j["frames"]) {
    const std::string where = "frames[" + std::to_string(fi++) + "]";
    Frame fr;
    fr.timestamp = f.at("timestamp").get<double>();
    const auto& pose = f.at("ego_pose");
    fr.ego_pose = {pose.at("x").get<double>(), pose.at("y").get<double>(),
                   pose.at("yaw").get<double>()};
    fr.wheel_angle_deg = f.at("wheel_angle_deg").get<double>();

    for (const auto& seg : f.at("lane_segments")) {
      LaneSegment ls;
      ls.centerline = polyline_from_json(seg.at("centerline"), where + ".centerline");
      ls.left = polyline_from_json(seg.at("left"), where + ".left");
      ls.right = polyline_from_json(seg.at("right"), where + ".right");
      ls.seg_class = seg_class_from_string(seg.at("seg_class").get<std::string>());
      ls.left_type = boundary_type_from_string(seg.at("left_type").get<std::string>());
      ls.right_type = boundary_type_from_string(seg.at("right_type").get<std::string>());
      ls.confidence = seg.at("confidence").get<double>();
      fr.gt.segments.push_back(std::move(ls));
    }
    const std::size_t n_ls = fr.gt.segments.size();
    fr.gt.adjacency = shaped_matrix(f.at("adjacency"), n_ls, n_ls, where + ".adjacency");

    for (const auto& b : f.at("boundaries"))
      fr.gt_boundaries.push_back(polyline_from_json(b, where + ".boundaries"));
    if (f.contains("boundary_confidences")) {
      fr.boundary_confidences = f["boundary_confidences"].get<std::vector<double>>();
      if (fr.boundary_confidences.size() != fr.gt_boundaries.size())
        throw std::runtime_error(where + ": boundary_confidences length mismatch");
    }

    fr.sd_map = sdmap_from_json(f.at("sd_map"));

    for (const auto& t : f.at("traffic_elements")) {
      TrafficElement te;
      const auto& bb = t.at("bbox");
      if (!bb.is_array() || bb.size() != 4)
        throw std::runtime_error(where + ": bbox must have 4 entries");
      for (int k = 0; k < 4; ++k) te.bbox[k] = bb[k].get<double>();
      te.te_class = te_class_from_string(t.at("te_class").get<std::string>());
      te.confidence = t.at("confidence").get<double>();
      if (t.contains("embedding")) te.embedding = t["embedding"].get<std::vector<double>>();
      fr.traffic_elements.push_back(std::move(te));
    }
    fr.te_assoc = shaped_matrix(f.at("te_assoc"), n_ls, fr.traffic_elements.size(),
                                where + ".te_assoc");
    s.frames.push_back(std::move(fr));
  }
  return s;
}

void save_scene(const Scene& s, const std::string& path) {
  save_json_file(scene_to_json(s), path);
}

Scene load_scene(const std::string& path) { return scene_from_json(load_json_file(path)); }

json sdmap_to_json(const SDMap& m) {
  json arr = json::array();
  for (const SDElement& e : m.elements)
    arr.push_back({{"points", polyline_to_json(e.points)}, {"sd_class", to_string(e.sd_class)}});
  return arr;
}

SDMap sdmap_from_json(const json& j) {
  if (!j.is_array()) throw std::runtime_error("sd_map: must be an array");
  SDMap m;
  for (const auto& e : j) {
    SDElement el;
    el.points = polyline_from_json(e.at("points"), "sd_map.points");
    el.sd_class = sd_class_from_string(e.at("sd_class").get<std::string>());
    m.elements.push_back(std::move(el));
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", flat_matrix(m)}};
}

Matrix matrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  return shaped_matrix(j.at("data"), rows, cols, "matrix.data");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace score
