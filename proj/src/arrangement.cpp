#include "minkarr/arrangement.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace minkarr {

Family::Family(NormBody body, std::vector<Homothet> members)
    : body_(std::move(body)), members_(std::move(members)) {
  for (const Homothet& h : members_) {
    if (h.center().dim() != body_.dim()) {
      throw std::invalid_argument("Family: member dimension differs from body dimension");
    }
  }
}

Family Family::restrict_to(const std::vector<std::size_t>& indices) const {
  std::vector<Homothet> sub;
  sub.reserve(indices.size());
  for (std::size_t i : indices) sub.push_back(members_.at(i));
  return Family(body_, std::move(sub));
}

std::vector<Violation> strictness_violations(const Family& family, const TolerancePolicy& tol) {
  if (family.size() == 0) throw std::invalid_argument("strictness_violations: empty family");
  std::vector<Violation> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i != j && contains_with_margin(family.body(), family[i], family[j].center(), tol)) {
        out.push_back({i, j});
      }
    }
  }
  return out;
}

DepthReport depth(const Family& family, const Point& probe, const TolerancePolicy& tol) {
  if (probe.dim() != family.body().dim()) throw std::invalid_argument("depth: probe dimension mismatch");
  DepthReport r{probe, 0, {}};
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (contains(family.body(), family[i], probe, tol)) r.containing_indices.push_back(i);
  }
  r.depth = r.containing_indices.size();
  return r;
}

namespace {

// Maximum independent set in a conflict graph of at most 25 vertices.
// Include-first DFS over increasing vertex order meets equal-size sets in
// lexicographic order, so keeping only strict improvements yields the
// lexicographically smallest maximum set.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(std::vector<std::uint32_t> conflicts)
      : conflicts_(std::move(conflicts)), n_(conflicts_.size()) {}

  std::uint32_t run() {
    search(0, 0, 0);
    return best_;
  }

 private:
  void search(std::size_t next, std::uint32_t chosen, std::uint32_t blocked) {
    const int size = std::popcount(chosen);
    if (size > best_size_) {
      best_size_ = size;
      best_ = chosen;
    }
    if (next == n_) return;
    const std::uint32_t all = (std::uint32_t{1} << n_) - 1;
    const std::uint32_t rest = all & ~((std::uint32_t{1} << next) - 1);
    if (size + std::popcount(rest & ~blocked) <= best_size_) return;

    const std::uint32_t bit = std::uint32_t{1} << next;
    if (!(blocked & bit)) search(next + 1, chosen | bit, blocked | conflicts_[next]);
    search(next + 1, chosen, blocked);
  }

  std::vector<std::uint32_t> conflicts_;
  std::size_t n_;
  std::uint32_t best_ = 0;
  int best_size_ = -1;
};

}  // namespace

StrictSubfamily max_intersecting_strict_subfamily(const Family& family, const TolerancePolicy& tol,
                                                  const std::vector<Point>& candidate_probes) {
  if (family.size() > kMaxExhaustiveMembers) {
    throw std::invalid_argument("max_intersecting_strict_subfamily: family too large for exhaustive search");
  }
  if (candidate_probes.empty()) {
    throw std::invalid_argument("max_intersecting_strict_subfamily: no candidate probes");
  }

  const std::size_t n = family.size();
  std::vector<std::vector<bool>> conflict(n, std::vector<bool>(n, false));
  if (n > 0) {
    for (const Violation& v : strictness_violations(family, tol)) {
      conflict[v.container_index][v.center_index] = true;
      conflict[v.center_index][v.container_index] = true;
    }
  }

  StrictSubfamily best{0, {}, candidate_probes.front()};
  bool have_best = false;
  for (const Point& probe : candidate_probes) {
    const std::vector<std::size_t> local = depth(family, probe, tol).containing_indices;
    std::vector<std::uint32_t> masks(local.size(), 0);
    for (std::size_t a = 0; a < local.size(); ++a) {
      for (std::size_t b = 0; b < local.size(); ++b) {
        if (conflict[local[a]][local[b]]) masks[a] |= std::uint32_t{1} << b;
      }
    }
    const std::uint32_t chosen = IndependentSetSearch(std::move(masks)).run();
    std::vector<std::size_t> indices;
    for (std::size_t a = 0; a < local.size(); ++a) {
      if (chosen & (std::uint32_t{1} << a)) indices.push_back(local[a]);
    }
    if (!have_best || indices.size() > best.size ||
        (indices.size() == best.size && indices < best.indices)) {
      best = {indices.size(), std::move(indices), probe};
      have_best = true;
    }
  }
  return best;
}

std::vector<Point> witness_probes(const Family& family, const TolerancePolicy& tol) {
  std::vector<Point> probes;
  for (const Homothet& h : family.members()) probes.push_back(h.center());
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const Homothet& a = family[i];
      const Homothet& b = family[j];
      const Point delta = b.center() - a.center();
      if (gauge(family.body(), delta) <= tol.inflate(a.ratio() + b.ratio())) {
        probes.push_back(a.center() + (a.ratio() / (a.ratio() + b.ratio())) * delta);
      }
    }
  }
  return probes;
}

}  // namespace minkarr
