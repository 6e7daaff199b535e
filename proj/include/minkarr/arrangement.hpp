// Strict Minkowski arrangements: families of homothets of one body in which
// no member contains the center of another.

#pragma once

#include <cstddef>
#include <vector>

#include "minkarr/geometry.hpp"

namespace minkarr {

class Family {
 public:
  /// Throws std::invalid_argument if a member's dimension differs from the body's.
  Family(NormBody body, std::vector<Homothet> members);

  const NormBody& body() const { return body_; }
  const std::vector<Homothet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Homothet& operator[](std::size_t i) const { return members_[i]; }

  /// The subfamily formed by `indices`, in the given order.
  Family restrict_to(const std::vector<std::size_t>& indices) const;

 private:
  NormBody body_;
  std::vector<Homothet> members_;
};

/// Member `container_index` contains the center of member `center_index`.
struct Violation {
  std::size_t container_index;
  std::size_t center_index;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct DepthReport {
  Point probe;
  std::size_t depth = 0;
  std::vector<std::size_t> containing_indices;
};

struct StrictSubfamily {
  std::size_t size = 0;
  std::vector<std::size_t> indices;
  Point probe;
};

// Every ordered pair (i, j), i != j, where member i contains the center of
// member j with margin (deflated predicate). Empty iff the family is a strict
// arrangement. Throws std::invalid_argument on an empty family.
std::vector<Violation> strictness_violations(const Family& family, const TolerancePolicy& tol = {});

/// Members containing `probe` under the inflated predicate.
DepthReport depth(const Family& family, const Point& probe, const TolerancePolicy& tol = {});

inline constexpr std::size_t kMaxExhaustiveMembers = 25;

// Exhaustive oracle: over every probe, the largest subfamily of members
// containing that probe with no strictness violation among themselves.
// Ties go to the lexicographically smallest index list, then to the earliest
// probe. The result is exact only with respect to the supplied probes.
// Throws std::invalid_argument for more than kMaxExhaustiveMembers members or
// an empty probe list.
StrictSubfamily max_intersecting_strict_subfamily(const Family& family, const TolerancePolicy& tol,
                                                  const std::vector<Point>& candidate_probes);

// Centers plus, for each pair of members whose bodies meet, the point on the
// segment between their centers splitting it in the ratio of their radii (it
// lies in both members for any norm).
std::vector<Point> witness_probes(const Family& family, const TolerancePolicy& tol = {});

}  // namespace minkarr
