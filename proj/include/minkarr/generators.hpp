// Concrete configurations: the tight pentagon and hypercube instances, the
// counterexample family for homothets not centered at the red points, and
// seeded random instances that satisfy the local hypothesis.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "minkarr/density.hpp"

namespace minkarr {

/// Radius inflation applied by the tight generators so boundary blue points
/// are robustly inside.
inline constexpr double kTightInflation = 1.0 + 1e-6;

/// Five unit disks on the vertices of a regular pentagon, one blue at the center.
Instance gen_pentagon_tight();

/// The 2^d unit cubes centered at the sign vectors, one blue at the origin.
/// Throws std::invalid_argument unless 1 <= d <= 10.
Instance gen_hypercube_tight(std::size_t d);

struct Segment {
  Point a;
  Point b;
};

struct Counterexample {
  Instance instance;
  /// witnesses[i] is a translate of the body containing red point i and every
  /// blue point, and no other red point.
  std::vector<Homothet> witnesses;
  /// The chord piece I holding the blue points.
  Segment blue_segment;
  /// J, the locus of the tangency point over translates containing I.
  Segment red_segment;
  Point tangency;
};

// Planar construction with |B| = ceil(lambda) < eps * n_red while every red
// point has a translate of the body holding it, all blue points, and no other
// red point.
//
// A line l touches the body only at t (the top of a disk, or a vertex of a
// polygon with l strictly between the adjacent edge directions). I is the
// middle half of the chord parallel to l at half the support depth. Sliding
// the body parallel to l while it still contains I moves t along J; red
// points sit at evenly spaced interior points of J.
//
// Accepts Euclidean, polygon and planar Linf bodies. Throws
// std::invalid_argument if d != 2, if n_red <= ceil(lambda) / eps, or if the
// red points are too close to be separated under `tol`.
Counterexample gen_counterexample(const NormBody& body, double lambda, double eps, std::size_t n_red,
                                  const TolerancePolicy& tol = {});

struct RandomSpec {
  std::uint64_t seed = 0;
  std::size_t n_red = 1;
  std::size_t dim = 2;
  NormKind kind = NormKind::Euclidean;
  /// Only read for NormKind::Polygon.
  std::vector<Point> polygon_vertices;
  double radius_lo = 0.5;
  double radius_hi = 2.0;
  double box_side = 10.0;
  double lambda = 1.0;

  /// Throws std::invalid_argument for an inconsistent spec.
  void validate() const;
  NormBody body() const;
};

// Red centers uniform in [0, box_side]^d with uniform radii; blue points are
// then added at red centers until every member meets the hypothesis. One pass
// suffices since adding blue points never lowers any member's count.
// Deterministic in the seed on every platform.
Instance gen_random(const RandomSpec& spec);

}  // namespace minkarr
