#include "minkarr/generators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "minkarr/random.hpp"

namespace minkarr {

Instance gen_pentagon_tight() {
  std::vector<Homothet> red;
  for (int k = 0; k < 5; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / 5.0;
    red.emplace_back(Point{std::cos(angle), std::sin(angle)}, kTightInflation);
  }
  return Instance(NormBody::euclidean(2), std::move(red), {Point::zero(2)}, 1.0);
}

Instance gen_hypercube_tight(std::size_t d) {
  if (d < 1 || d > 10) throw std::invalid_argument("gen_hypercube_tight: dimension must be in [1, 10]");
  std::vector<Homothet> red;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<double> corner(d);
    for (std::size_t i = 0; i < d; ++i) corner[i] = (mask >> i) & 1 ? 1.0 : -1.0;
    red.emplace_back(Point(std::move(corner)), kTightInflation);
  }
  return Instance(NormBody::linf(d), std::move(red), {Point::zero(d)}, 1.0);
}

namespace {

double dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1]; }

Point unit(const Point& v) { return (1.0 / std::hypot(v[0], v[1])) * v; }

// Tangency data for the counterexample: t is the unique contact point of the
// supporting line with outward unit normal u.
struct Tangency {
  Point t;
  Point u;
};

Tangency polygon_tangency(const std::vector<Point>& vs) {
  std::size_t top = 0;
  for (std::size_t k = 1; k < vs.size(); ++k) {
    if (vs[k][1] > vs[top][1]) top = k;
  }
  const std::size_t m = vs.size();
  const Point& prev = vs[(top + m - 1) % m];
  const Point& t = vs[top];
  const Point& next = vs[(top + 1) % m];
  // Outward normals of the counterclockwise edges prev->t and t->next.
  const Point n1 = unit(Point{t[1] - prev[1], prev[0] - t[0]});
  const Point n2 = unit(Point{next[1] - t[1], t[0] - next[0]});
  return {t, unit(n1 + n2)};
}

// Parameter range [lo, hi] of s for which base + s*w lies in the polygon.
std::pair<double, double> polygon_chord(const std::vector<Point>& vs, const Point& base, const Point& w) {
  double lo = -INFINITY;
  double hi = INFINITY;
  const std::size_t m = vs.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Point& a = vs[k];
    const Point& b = vs[(k + 1) % m];
    const Point n{b[1] - a[1], a[0] - b[0]};
    const double slack = dot(n, a) - dot(n, base);
    const double rate = dot(n, w);
    if (rate > 0) hi = std::min(hi, slack / rate);
    else if (rate < 0) lo = std::max(lo, slack / rate);
  }
  return {lo, hi};
}

std::vector<Point> square_vertices() { return {{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}; }

}  // namespace

Counterexample gen_counterexample(const NormBody& body, double lambda, double eps, std::size_t n_red,
                                  const TolerancePolicy& tol) {
  if (body.dim() != 2) throw std::invalid_argument("gen_counterexample: the construction is planar");
  if (!std::isfinite(lambda) || !(lambda > 0.0) || !std::isfinite(eps) || !(eps > 0.0)) {
    throw std::invalid_argument("gen_counterexample: lambda and eps must be finite and positive");
  }
  const auto m = static_cast<std::size_t>(std::ceil(lambda - kHypothesisSlack));
  if (!(static_cast<double>(m) < eps * static_cast<double>(n_red))) {
    throw std::invalid_argument("gen_counterexample: n_red must exceed ceil(lambda) / eps");
  }

  Tangency tan{Point{0, 1}, Point{0, 1}};
  double chord_lo = 0;
  double chord_hi = 0;
  Point base;
  Point w;
  if (body.kind() == NormKind::Euclidean) {
    // Disk: touch the top, chord at height 1/2.
    w = Point{1, 0};
    base = 0.5 * tan.u;
    chord_hi = std::sqrt(1.0 - 0.25);
    chord_lo = -chord_hi;
  } else {
    const std::vector<Point> vs = body.kind() == NormKind::Polygon ? body.vertices() : square_vertices();
    tan = polygon_tangency(vs);
    w = Point{tan.u[1], -tan.u[0]};
    base = (0.5 * dot(tan.u, tan.t)) * tan.u;
    std::tie(chord_lo, chord_hi) = polygon_chord(vs, base, w);
  }
  const double length = chord_hi - chord_lo;
  if (!(length > 0.0)) throw std::invalid_argument("gen_counterexample: body has a degenerate chord");
  const double mid = 0.5 * (chord_lo + chord_hi);
  const double quarter = 0.25 * length;

  std::vector<Point> blue;
  for (std::size_t j = 0; j < m; ++j) {
    const double s = mid - quarter + (j + 1) * (2.0 * quarter) / static_cast<double>(m + 1);
    blue.push_back(base + s * w);
  }

  std::vector<Homothet> red;
  std::vector<Homothet> witnesses;
  for (std::size_t k = 0; k < n_red; ++k) {
    const double s = -quarter + (k + 1) * (2.0 * quarter) / static_cast<double>(n_red + 1);
    red.emplace_back(tan.t + s * w, 1.0);
    witnesses.emplace_back(s * w, 1.0);
  }

  // The closest red to a witness's own red is a neighbour along J.
  for (std::size_t k = 0; k < n_red; ++k) {
    for (std::size_t other : {k - 1, k + 1}) {
      if (other < n_red && contains(body, witnesses[k], red[other].center(), tol)) {
        throw std::invalid_argument("gen_counterexample: red points too dense to separate at this tolerance");
      }
    }
  }

  Segment blue_segment{base + (mid - quarter) * w, base + (mid + quarter) * w};
  Segment red_segment{tan.t + (-quarter) * w, tan.t + quarter * w};
  return Counterexample{Instance(body, std::move(red), std::move(blue), lambda), std::move(witnesses),
                        std::move(blue_segment), std::move(red_segment), tan.t};
}

void RandomSpec::validate() const {
  if (n_red < 1) throw std::invalid_argument("RandomSpec: n_red must be at least 1");
  if (dim < 1) throw std::invalid_argument("RandomSpec: dim must be at least 1");
  if (!(radius_lo > 0.0) || !(radius_lo <= radius_hi) || !std::isfinite(radius_hi)) {
    throw std::invalid_argument("RandomSpec: radius range must satisfy 0 < lo <= hi");
  }
  if (!(box_side > 0.0) || !std::isfinite(box_side)) throw std::invalid_argument("RandomSpec: box_side must be positive");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("RandomSpec: lambda must be positive");
  if (kind == NormKind::Polygon && dim != 2) throw std::invalid_argument("RandomSpec: polygon bodies are planar");
}

NormBody RandomSpec::body() const {
  switch (kind) {
    case NormKind::Euclidean: return NormBody::euclidean(dim);
    case NormKind::Linf: return NormBody::linf(dim);
    case NormKind::Polygon: return NormBody::polygon(polygon_vertices);
  }
  throw std::invalid_argument("RandomSpec: unknown body kind");
}

Instance gen_random(const RandomSpec& spec) {
  spec.validate();
  const NormBody body = spec.body();
  Rng rng(spec.seed);

  std::vector<Homothet> red;
  red.reserve(spec.n_red);
  for (std::size_t i = 0; i < spec.n_red; ++i) {
    std::vector<double> c(spec.dim);
    for (double& x : c) x = rng.uniform(0.0, spec.box_side);
    red.emplace_back(Point(std::move(c)), rng.uniform(spec.radius_lo, spec.radius_hi));
  }

  const std::size_t n = red.size();
  // inside[i][j]: member i contains center j.
  std::vector<std::vector<bool>> inside(n, std::vector<bool>(n));
  std::vector<std::size_t> red_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      inside[i][j] = contains(body, red[i], red[j].center());
      red_count[i] += inside[i][j] ? 1 : 0;
    }
  }

  std::vector<Point> blue;
  std::vector<std::size_t> blue_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const double needed = spec.lambda * static_cast<double>(red_count[i]) - static_cast<double>(blue_count[i]);
    const double deficit = std::ceil(needed - kHypothesisSlack);
    if (deficit <= 0) continue;
    const auto add = static_cast<std::size_t>(deficit);
    blue.insert(blue.end(), add, red[i].center());
    for (std::size_t j = 0; j < n; ++j) {
      if (inside[j][i]) blue_count[j] += add;
    }
  }
  return Instance(body, std::move(red), std::move(blue), spec.lambda);
}

}  // namespace minkarr
