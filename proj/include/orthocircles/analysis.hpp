#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthocircles/arrangement.hpp"

namespace orthocircles {

/// Red circle of depth 1, the black circles properly inside it and the green
/// circles crossing both the red circle and some black circle. Index vectors
/// refer to arrangement order and are sorted.
struct Classification {
  std::string red;
  int red_index = -1;
  std::vector<int> black;
  std::vector<int> green;
  /// Black circles whose center lies on the outer face of the black-only drawing.
  std::vector<int> boundary_black;
  std::vector<int> inner_black;

  std::size_t n_black() const { return black.size(); }
};

/// Deletes the shallow circles and picks, among circles of depth 1, the one
/// with the smallest id that is orthogonal to at most seven deep circles.
/// Empty for nonnested arrangements; MissingRedError if no such circle exists.
std::optional<Classification> select_red(const Arrangement& arr);

enum class AuditStatus { Pass, Fail, NotApplicable };

inline const char* to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::Pass: return "Pass";
    case AuditStatus::Fail: return "Fail";
    case AuditStatus::NotApplicable: return "NotApplicable";
  }
  return "?";
}

struct AuditEntry {
  std::string tag;
  AuditStatus status = AuditStatus::NotApplicable;
  /// Human-readable reason for NotApplicable / Fail.
  std::string detail;
  /// Circles and points reproducing a failure.
  std::vector<std::string> witness_ids;
  std::vector<Point> witness_points;
  /// Number of instances checked plus check-specific tallies.
  std::vector<std::pair<std::string, long>> counts;
  /// The check samples points instead of deciding the claim exactly.
  bool sampled = false;

  long count(const std::string& key) const;
};

struct AuditReport {
  std::optional<ValidationMode> mode;
  bool nonnested = false;
  std::optional<Classification> classification;
  /// Sorted by tag.
  std::vector<AuditEntry> entries;

  bool passed() const;
  const AuditEntry& entry(const std::string& tag) const;
};

/// Runs every applicable lemma check. Checks that need a valid arrangement
/// report NotApplicable when the arrangement validates in neither mode.
AuditReport audit(const Arrangement& arr);

}  // namespace orthocircles
