#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "score/lane_model.hpp"
#include "score/sdmap.hpp"

namespace score {

enum class QueryKind { sd, base, dn };

struct QueryTag {
  QueryKind kind = QueryKind::base;
  int group = -1;  // denoising group index, -1 otherwise
};

/// Ordered hybrid query set: SD block, then base block, then denoising block.
/// Reference points are one point per SD/base query and the full noisy
/// three-polyline point set per denoising query.
struct QueryBundle {
  std::vector<std::vector<Vec3>> refpoints;
  std::vector<QueryTag> group;
  std::vector<std::vector<double>> embeddings;  // optional, length C per query
  int n_sd = 0;
  int n_base = 0;
  int n_dn = 0;

  int total() const { return n_sd + n_base + n_dn; }
};

/// Boolean query-to-query attention mask; allow(i, j) means query i may
/// attend to query j.
struct AttentionMask {
  std::size_t n = 0;
  std::vector<std::uint8_t> allow;  // row-major n*n

  bool at(std::size_t i, std::size_t j) const { return allow[i * n + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { allow[i * n + j] = v ? 1 : 0; }
};

struct DenoiseConfig {
  int n_dn = 60;
  double lambda_dn = 0.5;   // rescaling factor in (0,1)
  std::uint64_t seed = 0;
  bool per_point_noise = true;  // false draws one offset per segment
};

struct DenoiseOutput {
  std::vector<std::vector<Vec3>> refpoints;     // per query: 3*n_pts noisy points
  std::vector<int> group_of;                    // per query: group index
  std::vector<std::vector<Vec3>> noise_record;  // per query: the drawn offsets
  int groups = 0;
};

/// Builds floor(n_dn / N_GT) denoising groups, each a noisy copy of every
/// ground-truth segment: offsets drawn i.i.d. uniform(-1,1) per coordinate,
/// then rescaled and clamped, p_hat = clamp(lambda * (p + delta)).
/// N_GT = 0 yields an empty output.
DenoiseOutput make_denoising_groups(const LaneGraph& gt, const DenoiseConfig& cfg,
                                    const BEVExtent& extent = {}, const ZRange& z = {});

/// Denoising query embeddings: the shared base embedding plus the embedding
/// of the flattened noisy reference points.
std::vector<std::vector<double>> embed_denoising_queries(
    const std::vector<std::vector<Vec3>>& refpoints, std::span<const double> base_dn_embedding,
    const EmbedFn& f);

/// Concatenates SD, base, and denoising blocks; base reference points are
/// drawn uniform(0,1) from the given rng.
QueryBundle assemble_bundle(const SDRefPoints* sd, int n_base, const DenoiseOutput& dn,
                            std::mt19937_64& rng);

/// Leakage-prevention mask: SD queries are isolated from base and denoising
/// queries in both directions, denoising groups may attend the base block but
/// not vice versa, and distinct denoising groups never interact.
AttentionMask build_attention_mask(const QueryBundle& b);

}  // namespace score
