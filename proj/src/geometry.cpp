#include "minkarr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace minkarr {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

double cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double polar_angle(double x, double y) {
  double t = std::atan2(y, x);
  return t < 0.0 ? t + 2.0 * std::numbers::pi : t;
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("Point: dimension must be at least 1");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw std::invalid_argument("Point: non-finite coordinate");
  }
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

Point Point::zero(std::size_t dim) { return Point(std::vector<double>(dim, 0.0)); }

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim(), "Point +");
  std::vector<double> r(a.dim());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return Point(std::move(r));
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim(), "Point -");
  std::vector<double> r(a.dim());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
  return Point(std::move(r));
}

Point operator-(const Point& a) { return -1.0 * a; }

Point operator*(double s, const Point& a) {
  std::vector<double> r(a.dim());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * a[i];
  return Point(std::move(r));
}

std::string to_string(NormKind kind) {
  switch (kind) {
    case NormKind::Euclidean: return "euclidean";
    case NormKind::Linf: return "linf";
    case NormKind::Polygon: return "polygon";
  }
  return "unknown";
}

NormBody NormBody::euclidean(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("NormBody: dimension must be at least 1");
  return NormBody(NormKind::Euclidean, dim);
}

NormBody NormBody::linf(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("NormBody: dimension must be at least 1");
  return NormBody(NormKind::Linf, dim);
}

NormBody NormBody::polygon(std::vector<Point> vertices) {
  const std::size_t m = vertices.size();
  if (m < 4 || m % 2 != 0) {
    throw std::invalid_argument("NormBody: a symmetric polygon needs an even number (>= 4) of vertices");
  }
  double scale = 0.0;
  for (const Point& v : vertices) {
    require_same_dim(v.dim(), 2, "NormBody::polygon");
    scale = std::max({scale, std::abs(v[0]), std::abs(v[1])});
  }
  if (scale == 0.0) throw std::invalid_argument("NormBody: degenerate polygon");

  for (std::size_t k = 0; k < m; ++k) {
    const Point& v = vertices[k];
    const Point& w = vertices[(k + m / 2) % m];
    if (std::abs(v[0] + w[0]) > 1e-9 * scale || std::abs(v[1] + w[1]) > 1e-9 * scale) {
      throw std::invalid_argument("NormBody: polygon is not origin-symmetric");
    }
    if (cross(vertices[k], vertices[(k + 1) % m], vertices[(k + 2) % m]) <= 1e-12 * scale * scale) {
      throw std::invalid_argument("NormBody: polygon is not strictly convex and counterclockwise");
    }
  }

  NormBody body(NormKind::Polygon, 2);

  // Angles must wrap exactly once, otherwise the boundary winds more than once
  // around the origin.
  std::vector<double> angles(m);
  for (std::size_t k = 0; k < m; ++k) angles[k] = polar_angle(vertices[k][0], vertices[k][1]);
  std::size_t descents = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < m; ++k) {
    if (angles[(k + 1) % m] <= angles[k]) {
      ++descents;
      start = (k + 1) % m;
    }
  }
  if (descents != 1) throw std::invalid_argument("NormBody: polygon must wind once around the origin");

  for (std::size_t k = 0; k < m; ++k) {
    const Point& a = vertices[(start + k) % m];
    const Point& b = vertices[(start + k + 1) % m];
    Edge e{b[1] - a[1], -(b[0] - a[0]), 0.0};
    e.offset = e.nx * a[0] + e.ny * a[1];
    if (!(e.offset > 0.0)) throw std::invalid_argument("NormBody: origin is not interior to the polygon");
    body.angles_.push_back(angles[(start + k) % m]);
    body.edges_.push_back(e);
  }
  body.vertices_ = std::move(vertices);
  return body;
}

double NormBody::polygon_gauge(double x, double y) const {
  if (x == 0.0 && y == 0.0) return 0.0;
  const double theta = polar_angle(x, y);
  auto it = std::upper_bound(angles_.begin(), angles_.end(), theta);
  const std::size_t k = it == angles_.begin() ? edges_.size() - 1
                                              : static_cast<std::size_t>(it - angles_.begin()) - 1;
  const Edge& e = edges_[k];
  return std::max(0.0, (e.nx * x + e.ny * y) / e.offset);
}

Homothet::Homothet(Point center, double ratio) : center_(std::move(center)), ratio_(ratio) {
  if (!std::isfinite(ratio) || !(ratio > 0.0)) {
    throw std::invalid_argument("Homothet: ratio must be finite and positive");
  }
}

void TolerancePolicy::validate() const {
  if (!std::isfinite(abs_eps) || !std::isfinite(rel_eps) || abs_eps < 0.0 || rel_eps < 0.0) {
    throw std::invalid_argument("TolerancePolicy: tolerances must be finite and non-negative");
  }
}

double gauge(const NormBody& body, std::span<const double> v) {
  require_same_dim(v.size(), body.dim(), "gauge");
  switch (body.kind()) {
    case NormKind::Euclidean: {
      if (v.size() == 2) return std::hypot(v[0], v[1]);
      double sum = 0.0;
      for (double c : v) sum += c * c;
      return std::sqrt(sum);
    }
    case NormKind::Linf: {
      double m = 0.0;
      for (double c : v) m = std::max(m, std::abs(c));
      return m;
    }
    case NormKind::Polygon:
      return body.polygon_gauge(v[0], v[1]);
  }
  return 0.0;
}

bool contains(const NormBody& body, const Homothet& h, const Point& q, const TolerancePolicy& tol) {
  return gauge(body, q - h.center()) <= tol.inflate(h.ratio());
}

bool contains_with_margin(const NormBody& body, const Homothet& h, const Point& q,
                          const TolerancePolicy& tol) {
  return gauge(body, q - h.center()) <= tol.deflate(h.ratio());
}

}  // namespace minkarr
