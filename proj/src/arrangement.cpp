#include "orthocircles/arrangement.hpp"

#include <algorithm>
#include <numeric>

namespace orthocircles {

Arrangement::Arrangement(std::vector<Circle> circles, Tolerance tol, Strictness strictness)
    : circles_(std::move(circles)), tol_(tol) {
  index_.reserve(circles_.size());
  for (std::size_t i = 0; i < circles_.size(); ++i) {
    if (!index_.emplace(circles_[i].id, i).second)
      throw InvalidArrangementError("duplicate circle id '" + circles_[i].id + "'");
  }
  for (std::size_t i = 0; i < circles_.size(); ++i) {
    for (std::size_t j = i + 1; j < circles_.size(); ++j) {
      const Circle& a = circles_[i];
      const Circle& b = circles_[j];
      const double scale = std::max(a.radius, b.radius);
      if ((a.center - b.center).norm() <= tol_.rel_eps * scale &&
          std::abs(a.radius - b.radius) <= tol_.rel_eps * scale)
        throw InvalidArrangementError("circles '" + a.id + "' and '" + b.id + "' are identical");
      if (strictness == Strictness::Strict && relation(a, b, tol_).kind == RelationKind::Tangent)
        throw TangencyError("circles '" + a.id + "' and '" + b.id + "' are tangent");
    }
  }
}

std::optional<std::size_t> Arrangement::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RelationTable::RelationTable(const Arrangement& arr) : n_(arr.size()), table_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      PairRelation r = relation(arr[i], arr[j], arr.tolerance());
      table_[i * n_ + j] = r;
      if (r.kind == RelationKind::NestedFirstInSecond)
        r.kind = RelationKind::NestedSecondInFirst;
      else if (r.kind == RelationKind::NestedSecondInFirst)
        r.kind = RelationKind::NestedFirstInSecond;
      table_[j * n_ + i] = r;
    }
  }
}

ValidationReport validate(const Arrangement& arr, ValidationMode mode) {
  ValidationReport report;
  report.mode = mode;
  const auto& tol = arr.tolerance();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    for (std::size_t j = i + 1; j < arr.size(); ++j) {
      const Circle& a = arr[i];
      const Circle& b = arr[j];
      const PairRelation rel = relation(a, b, tol);
      if (rel.kind == RelationKind::Tangent) {
        report.violations.push_back({a.id, b.id, rel.kind, std::nullopt, "no tangency"});
        continue;
      }
      if (!rel.crossing()) continue;
      const bool ok = mode == ValidationMode::Orthogonal ? orthogonal(a, b, tol) : acute_or_right(a, b, tol);
      if (!ok) {
        report.violations.push_back({a.id, b.id, rel.kind, rel.angle,
                                     mode == ValidationMode::Orthogonal ? "angle = pi/2" : "angle <= pi/2"});
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

int DepthLabeling::at(const std::string& id) const {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw std::out_of_range("unknown circle id '" + id + "'");
  return depth[std::size_t(it - ids.begin())];
}

int DepthLabeling::max_depth() const {
  return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

DepthLabeling depth_labeling(const Arrangement& arr) {
  const std::size_t n = arr.size();
  DepthLabeling labels;
  labels.depth.assign(n, 0);
  for (const auto& c : arr.circles()) labels.ids.push_back(c.id);

  // Proper containment forces a strictly larger radius, so ascending radius
  // is a topological order of the containment relation.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return arr[a].radius < arr[b].radius; });

  const RelationTable rel(arr);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t outer = order[k];
    for (std::size_t l = 0; l < k; ++l) {
      const std::size_t inner = order[l];
      if (rel.inside(inner, outer))
        labels.depth[outer] = std::max(labels.depth[outer], labels.depth[inner] + 1);
    }
  }
  return labels;
}

bool is_nonnested(const Arrangement& arr) {
  for (std::size_t i = 0; i < arr.size(); ++i)
    for (std::size_t j = i + 1; j < arr.size(); ++j)
      if (relation(arr[i], arr[j], arr.tolerance()).nested()) return false;
  return true;
}

}  // namespace orthocircles
