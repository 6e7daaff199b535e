// Points, norm bodies and the containment predicates everything else is
// built on.
//
// A NormBody K is an origin-symmetric convex unit ball. A Homothet is the set
// p + rho*K. Containment is decided through the gauge (Minkowski functional)
// of K with an explicit TolerancePolicy: `contains` inflates the threshold,
// `contains_with_margin` deflates it. Keeping the two apart means no pair of
// sets can be reported both as "containing" and "strictly not containing".

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace minkarr {

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  /// The origin of R^dim.
  static Point zero(std::size_t dim);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator-(const Point& a);
Point operator*(double s, const Point& a);

enum class NormKind { Euclidean, Linf, Polygon };

std::string to_string(NormKind kind);

class NormBody {
 public:
  static NormBody euclidean(std::size_t dim);
  static NormBody linf(std::size_t dim);

  // Vertices must be a strictly convex, counterclockwise, origin-symmetric
  // polygon around the origin. Throws std::invalid_argument otherwise.
  static NormBody polygon(std::vector<Point> vertices);

  NormKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }

  friend bool operator==(const NormBody& a, const NormBody& b) {
    return a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  // Edge line n . x = offset with offset > 0; gauge(v) = n . v / offset for
  // every v whose ray crosses this edge.
  struct Edge {
    double nx;
    double ny;
    double offset;
  };

  NormBody(NormKind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

  double polygon_gauge(double x, double y) const;

  NormKind kind_;
  std::size_t dim_;
  std::vector<Point> vertices_;
  // Polar angles of the vertices in [0, 2pi), ascending, and edges_[k] joins
  // the vertices at angles_[k] and angles_[k + 1] (cyclically).
  std::vector<double> angles_;
  std::vector<Edge> edges_;

  friend double gauge(const NormBody& body, std::span<const double> v);
};

class Homothet {
 public:
  /// Throws std::invalid_argument unless ratio is finite and positive.
  Homothet(Point center, double ratio);

  const Point& center() const { return center_; }
  double ratio() const { return ratio_; }

  friend bool operator==(const Homothet&, const Homothet&) = default;

 private:
  Point center_;
  double ratio_;
};

struct TolerancePolicy {
  double abs_eps = 1e-9;
  double rel_eps = 1e-9;

  /// Throws std::invalid_argument for negative or non-finite values.
  void validate() const;

  double inflate(double ratio) const { return ratio * (1.0 + rel_eps) + abs_eps; }
  double deflate(double ratio) const { return ratio * (1.0 - rel_eps) - abs_eps; }
};

/// ||v||_K = min{t >= 0 : v in tK}. Throws on dimension mismatch.
double gauge(const NormBody& body, std::span<const double> v);
inline double gauge(const NormBody& body, const Point& v) {
  return gauge(body, v.coords());
}

/// Closed membership q in h, with the threshold inflated by `tol`.
bool contains(const NormBody& body, const Homothet& h, const Point& q,
              const TolerancePolicy& tol = {});

/// Membership with the threshold deflated by `tol`; a point within tolerance
/// of the boundary is treated as outside.
bool contains_with_margin(const NormBody& body, const Homothet& h, const Point& q,
                          const TolerancePolicy& tol = {});

}  // namespace minkarr
