#include "score/denoise.hpp"

#include <algorithm>
#include <stdexcept>

namespace score {

DenoiseOutput make_denoising_groups(const LaneGraph& gt, const DenoiseConfig& cfg,
                                    const BEVExtent& extent, const ZRange& z) {
  if (!(cfg.lambda_dn > 0.0 && cfg.lambda_dn < 1.0))
    throw std::invalid_argument("make_denoising_groups: lambda_dn must lie in (0,1)");
  DenoiseOutput out;
  const int n_gt = static_cast<int>(gt.segments.size());
  if (n_gt == 0 || cfg.n_dn <= 0) return out;
  out.groups = cfg.n_dn / n_gt;
  if (out.groups == 0) return out;

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> noise(-1.0, 1.0);

  for (int g = 0; g < out.groups; ++g) {
    for (int i = 0; i < n_gt; ++i) {
      const LaneSegment& seg = gt.segments[i];
      std::vector<Vec3> normalized;
      normalized.reserve(seg.centerline.size() + seg.left.size() + seg.right.size());
      for (const Polyline* poly : {&seg.centerline, &seg.left, &seg.right})
        for (const Vec3& p : *poly) normalized.push_back(normalize_point(p, extent, z));

      std::vector<Vec3> deltas;
      deltas.reserve(normalized.size());
      if (cfg.per_point_noise) {
        for (std::size_t k = 0; k < normalized.size(); ++k)
          deltas.push_back({noise(rng), noise(rng), noise(rng)});
      } else {
        const Vec3 shared{noise(rng), noise(rng), noise(rng)};
        deltas.assign(normalized.size(), shared);
      }

      std::vector<Vec3> noisy(normalized.size());
      for (std::size_t k = 0; k < normalized.size(); ++k) {
        const Vec3 scaled = cfg.lambda_dn * (normalized[k] + deltas[k]);
        noisy[k] = {std::clamp(scaled.x, 0.0, 1.0), std::clamp(scaled.y, 0.0, 1.0),
                    std::clamp(scaled.z, 0.0, 1.0)};
      }
      out.refpoints.push_back(std::move(noisy));
      out.group_of.push_back(g);
      out.noise_record.push_back(std::move(deltas));
    }
  }
  return out;
}

std::vector<std::vector<double>> embed_denoising_queries(
    const std::vector<std::vector<Vec3>>& refpoints, std::span<const double> base_dn_embedding,
    const EmbedFn& f) {
  if (static_cast<int>(base_dn_embedding.size()) != f.out_dim)
    throw std::invalid_argument("embed_denoising_queries: base embedding length mismatch");
  std::vector<std::vector<double>> out;
  out.reserve(refpoints.size());
  for (const std::vector<Vec3>& pts : refpoints) {
    std::vector<double> flat;
    flat.reserve(pts.size() * 3);
    for (const Vec3& p : pts) {
      flat.push_back(p.x);
      flat.push_back(p.y);
      flat.push_back(p.z);
    }
    std::vector<double> q = f(flat);
    for (int c = 0; c < f.out_dim; ++c) q[c] += base_dn_embedding[c];
    out.push_back(std::move(q));
  }
  return out;
}

QueryBundle assemble_bundle(const SDRefPoints* sd, int n_base, const DenoiseOutput& dn,
                            std::mt19937_64& rng) {
  if (n_base < 1) throw std::invalid_argument("assemble_bundle: n_base must be >= 1");
  QueryBundle b;
  if (sd != nullptr) {
    b.n_sd = static_cast<int>(sd->points.size());
    for (const Vec3& p : sd->points) {
      b.refpoints.push_back({p});
      b.group.push_back({QueryKind::sd, -1});
    }
  }
  b.n_base = n_base;
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < n_base; ++i) {
    b.refpoints.push_back({Vec3{uni(rng), uni(rng), uni(rng)}});
    b.group.push_back({QueryKind::base, -1});
  }
  b.n_dn = static_cast<int>(dn.refpoints.size());
  for (int i = 0; i < b.n_dn; ++i) {
    b.refpoints.push_back(dn.refpoints[i]);
    b.group.push_back({QueryKind::dn, dn.group_of[i]});
  }
  return b;
}

AttentionMask build_attention_mask(const QueryBundle& b) {
  const std::size_t n = static_cast<std::size_t>(b.total());
  if (b.group.size() != n) throw std::invalid_argument("build_attention_mask: malformed bundle");
  AttentionMask m;
  m.n = n;
  m.allow.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const QueryTag& qi = b.group[i];
    for (std::size_t j = 0; j < n; ++j) {
      const QueryTag& qj = b.group[j];
      bool allowed = false;
      if (qi.kind == QueryKind::sd) {
        allowed = qj.kind == QueryKind::sd;
      } else if (qi.kind == QueryKind::base) {
        allowed = qj.kind == QueryKind::base;
      } else {
        // Denoising queries see their own group and the base block.
        allowed = (qj.kind == QueryKind::dn && qj.group == qi.group) ||
                  qj.kind == QueryKind::base;
      }
      m.set(i, j, allowed);
    }
    m.set(i, i, true);
  }
  return m;
}

}  // namespace score
