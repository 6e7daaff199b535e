// Local-to-global density: if every red-centered homothet K_i sees at least
// lambda times as many blue points as red points, then |B|/|R| >= lambda/M,
// where M bounds the depth of a strict arrangement of the body. A Certificate
// records the greedy subfamily and the counts realizing
//
//   |R| <= sum |R cap K| <= sum |B cap K| / lambda <= M |B| / lambda
//
// and can be re-checked from scratch with verify_certificate.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "minkarr/arrangement.hpp"

namespace minkarr {

class Instance {
 public:
  // Throws std::invalid_argument if red is empty, lambda is not finite and
  // positive, or any point's dimension differs from the body's.
  Instance(NormBody body, std::vector<Homothet> red, std::vector<Point> blue, double lambda);

  const NormBody& body() const { return body_; }
  const std::vector<Homothet>& red() const { return red_; }
  const std::vector<Point>& blue() const { return blue_; }
  double lambda() const { return lambda_; }

  Family red_family() const { return Family(body_, red_); }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  NormBody body_;
  std::vector<Homothet> red_;
  std::vector<Point> blue_;
  double lambda_;
};

/// Absolute slack in blue_count >= lambda * red_count.
inline constexpr double kHypothesisSlack = 1e-12;

struct MemberCounts {
  std::size_t red_count = 0;
  std::size_t blue_count = 0;

  friend bool operator==(const MemberCounts&, const MemberCounts&) = default;
};

struct MemberHypothesis {
  std::size_t red_count = 0;
  std::size_t blue_count = 0;
  bool satisfied = false;
};

struct HypothesisReport {
  std::vector<MemberHypothesis> per_member;
  bool all_satisfied = false;
};

struct InequalityChain {
  double red_sum = 0;              // sum over the subfamily of |R cap K|
  double blue_sum_over_lambda = 0; // sum over the subfamily of |B cap K| / lambda
  double depth_bound_total = 0;    // M |B| / lambda

  friend bool operator==(const InequalityChain&, const InequalityChain&) = default;
};

struct Certificate {
  std::vector<std::size_t> selected_indices;
  std::vector<MemberCounts> per_selected;
  std::size_t depth_bound = 0;
  InequalityChain chain;
  /// Largest number of selected members containing a single blue point.
  std::size_t max_blue_depth = 0;
};

enum class CertificateFailure { HypothesisNotSatisfied, DepthBoundExceeded };

class CertificateError : public std::runtime_error {
 public:
  CertificateError(CertificateFailure failure, const std::string& what)
      : std::runtime_error(what), failure_(failure) {}
  CertificateFailure failure() const { return failure_; }

 private:
  CertificateFailure failure_;
};

struct VerificationResult {
  bool ok = false;
  std::vector<std::string> reasons;

  explicit operator bool() const { return ok; }
};

/// Counts red and blue points (with multiplicity) in a homothet.
MemberCounts count_points(const Instance& inst, const Homothet& h, const TolerancePolicy& tol = {});

HypothesisReport check_hypothesis(const Instance& inst, const TolerancePolicy& tol = {});

/// |B| / |R|.
double global_ratio(const Instance& inst);

/// 5 for the Euclidean plane, 2^d for the cube, 3^d otherwise.
std::size_t default_depth_bound(const NormBody& body);

// Builds the certificate from the greedy cover of the red family. Throws
// CertificateError when the hypothesis fails or when some blue point lies in
// more than depth_bound selected members. The bound is never clamped.
Certificate make_certificate(const Instance& inst, std::size_t depth_bound, const TolerancePolicy& tol = {});

// Recomputes everything from the instance: counts, strictness and coverage of
// the subfamily, the hypothesis on selected members, the chain and the final
// ratio bound. Never throws on a malformed certificate; reasons explain each
// failed check.
VerificationResult verify_certificate(const Instance& inst, const Certificate& cert,
                                      const TolerancePolicy& tol = {});

}  // namespace minkarr
