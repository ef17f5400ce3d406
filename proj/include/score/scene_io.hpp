#pragma once

#include <string>

#include <json.hpp>

#include "score/lane_model.hpp"

namespace score {

/// Scene serialization. Schema: top-level `frames[]`, each frame carrying
/// `timestamp`, `ego_pose: {x,y,yaw}`, `wheel_angle_deg`, `lane_segments[]`
/// (three point arrays plus labels), `boundaries[]`, optional
/// `boundary_confidences[]`, `adjacency` (row-major), `sd_map[]`,
/// `traffic_elements[]`, and `te_assoc` (row-major). All array lengths are
/// validated on load.
nlohmann::json scene_to_json(const Scene& s);
Scene scene_from_json(const nlohmann::json& j);

void save_scene(const Scene& s, const std::string& path);
Scene load_scene(const std::string& path);

nlohmann::json sdmap_to_json(const SDMap& m);
SDMap sdmap_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const nlohmann::json& j, const std::string& path);

}  // namespace score
