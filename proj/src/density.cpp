#include "minkarr/density.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "minkarr/cover.hpp"

namespace minkarr {

namespace {

bool satisfies(std::size_t blue, std::size_t red, double lambda) {
  return static_cast<double>(blue) >= lambda * static_cast<double>(red) - kHypothesisSlack;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); }

bool leq(double a, double b) { return a <= b + 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); }

InequalityChain chain_of(const std::vector<MemberCounts>& counts, std::size_t depth_bound, const Instance& inst) {
  InequalityChain c;
  double blue_sum = 0;
  for (const MemberCounts& m : counts) {
    c.red_sum += static_cast<double>(m.red_count);
    blue_sum += static_cast<double>(m.blue_count);
  }
  c.blue_sum_over_lambda = blue_sum / inst.lambda();
  c.depth_bound_total = static_cast<double>(depth_bound) * static_cast<double>(inst.blue().size()) / inst.lambda();
  return c;
}

std::size_t max_depth_over_blue(const Instance& inst, const Family& sub, const TolerancePolicy& tol) {
  std::size_t deepest = 0;
  for (const Point& b : inst.blue()) deepest = std::max(deepest, depth(sub, b, tol).depth);
  return deepest;
}

}  // namespace

Instance::Instance(NormBody body, std::vector<Homothet> red, std::vector<Point> blue, double lambda)
    : body_(std::move(body)), red_(std::move(red)), blue_(std::move(blue)), lambda_(lambda) {
  if (red_.empty()) throw std::invalid_argument("Instance: at least one red point is required");
  if (!std::isfinite(lambda_) || !(lambda_ > 0.0)) {
    throw std::invalid_argument("Instance: lambda must be finite and positive");
  }
  for (const Homothet& h : red_) {
    if (h.center().dim() != body_.dim()) throw std::invalid_argument("Instance: red point dimension mismatch");
  }
  for (const Point& p : blue_) {
    if (p.dim() != body_.dim()) throw std::invalid_argument("Instance: blue point dimension mismatch");
  }
}

MemberCounts count_points(const Instance& inst, const Homothet& h, const TolerancePolicy& tol) {
  MemberCounts c;
  for (const Homothet& r : inst.red()) c.red_count += contains(inst.body(), h, r.center(), tol) ? 1 : 0;
  for (const Point& b : inst.blue()) c.blue_count += contains(inst.body(), h, b, tol) ? 1 : 0;
  return c;
}

HypothesisReport check_hypothesis(const Instance& inst, const TolerancePolicy& tol) {
  HypothesisReport report;
  report.all_satisfied = true;
  for (const Homothet& h : inst.red()) {
    const MemberCounts c = count_points(inst, h, tol);
    const bool ok = satisfies(c.blue_count, c.red_count, inst.lambda());
    report.per_member.push_back({c.red_count, c.blue_count, ok});
    report.all_satisfied = report.all_satisfied && ok;
  }
  return report;
}

double global_ratio(const Instance& inst) {
  return static_cast<double>(inst.blue().size()) / static_cast<double>(inst.red().size());
}

std::size_t default_depth_bound(const NormBody& body) {
  const std::size_t d = body.dim();
  if (body.kind() == NormKind::Euclidean && d == 2) return 5;
  std::size_t bound = 1;
  for (std::size_t i = 0; i < d; ++i) bound *= body.kind() == NormKind::Linf ? 2 : 3;
  return bound;
}

Certificate make_certificate(const Instance& inst, std::size_t depth_bound, const TolerancePolicy& tol) {
  if (depth_bound == 0) throw std::invalid_argument("make_certificate: depth bound must be positive");
  const HypothesisReport hyp = check_hypothesis(inst, tol);
  if (!hyp.all_satisfied) {
    throw CertificateError(CertificateFailure::HypothesisNotSatisfied, "local hypothesis is not satisfied");
  }

  const Family family = inst.red_family();
  Certificate cert;
  cert.selected_indices = greedy_cover(family, tol).selected_indices;
  cert.depth_bound = depth_bound;
  for (std::size_t i : cert.selected_indices) {
    cert.per_selected.push_back({hyp.per_member[i].red_count, hyp.per_member[i].blue_count});
  }
  cert.chain = chain_of(cert.per_selected, depth_bound, inst);
  cert.max_blue_depth = max_depth_over_blue(inst, family.restrict_to(cert.selected_indices), tol);
  if (cert.max_blue_depth > depth_bound) {
    throw CertificateError(CertificateFailure::DepthBoundExceeded,
                           "a blue point lies in " + std::to_string(cert.max_blue_depth) +
                               " selected members, above the depth bound " + std::to_string(depth_bound));
  }
  return cert;
}

VerificationResult verify_certificate(const Instance& inst, const Certificate& cert, const TolerancePolicy& tol) {
  VerificationResult out;
  auto fail = [&](std::string reason) { out.reasons.push_back(std::move(reason)); };

  const Family family = inst.red_family();
  const std::size_t n = family.size();

  if (cert.selected_indices.empty()) fail("no members selected");
  std::set<std::size_t> seen;
  for (std::size_t i : cert.selected_indices) {
    if (i >= n) fail("selected index " + std::to_string(i) + " out of range");
    else if (!seen.insert(i).second) fail("selected index " + std::to_string(i) + " repeated");
  }
  if (cert.depth_bound == 0) fail("depth bound is zero");
  if (cert.per_selected.size() != cert.selected_indices.size()) fail("count table length differs from selection");
  if (!out.reasons.empty()) return out;

  const Family sub = family.restrict_to(cert.selected_indices);

  std::vector<MemberCounts> counts;
  for (std::size_t k = 0; k < sub.size(); ++k) {
    counts.push_back(count_points(inst, sub[k], tol));
    if (!(counts[k] == cert.per_selected[k])) {
      fail("counts for member " + std::to_string(cert.selected_indices[k]) + " do not match");
    }
    if (!satisfies(counts[k].blue_count, counts[k].red_count, inst.lambda())) {
      fail("member " + std::to_string(cert.selected_indices[k]) + " violates the local hypothesis");
    }
  }

  if (!strictness_violations(sub, tol).empty()) fail("selected subfamily is not a strict arrangement");

  for (std::size_t j = 0; j < n; ++j) {
    if (depth(sub, family[j].center(), tol).depth == 0) {
      fail("red point " + std::to_string(j) + " is not covered");
    }
  }

  const std::size_t deepest = max_depth_over_blue(inst, sub, tol);
  if (deepest != cert.max_blue_depth) fail("recorded maximum blue depth is wrong");
  if (deepest > cert.depth_bound) fail("a blue point exceeds the depth bound");

  const InequalityChain expected = chain_of(counts, cert.depth_bound, inst);
  const InequalityChain& c = cert.chain;
  if (!close(c.red_sum, expected.red_sum) || !close(c.blue_sum_over_lambda, expected.blue_sum_over_lambda) ||
      !close(c.depth_bound_total, expected.depth_bound_total)) {
    fail("chain values do not match recomputed counts");
  }
  const double red_total = static_cast<double>(inst.red().size());
  if (!leq(red_total, c.red_sum) || !leq(c.red_sum, c.blue_sum_over_lambda) ||
      !leq(c.blue_sum_over_lambda, c.depth_bound_total)) {
    fail("chain is not non-decreasing from |R|");
  }

  if (global_ratio(inst) < inst.lambda() / static_cast<double>(cert.depth_bound) - 1e-12) {
    fail("global ratio is below lambda / depth bound");
  }

  out.ok = out.reasons.empty();
  return out;
}

}  // namespace minkarr
