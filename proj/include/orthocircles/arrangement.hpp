#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "orthocircles/geom.hpp"

namespace orthocircles {

enum class ValidationMode { Orthogonal, Acute };

inline const char* to_string(ValidationMode m) {
  return m == ValidationMode::Orthogonal ? "Orthogonal" : "Acute";
}

/// Finite set of circles sharing one tolerance policy. Immutable.
///
/// Construction rejects duplicate ids and duplicate circles. In strict mode
/// (the default) tangent pairs are rejected as well; lenient mode keeps them so
/// that validate() can name them.
class Arrangement {
 public:
  enum class Strictness { Strict, Lenient };

  Arrangement() = default;
  explicit Arrangement(std::vector<Circle> circles, Tolerance tol = {},
                       Strictness strictness = Strictness::Strict);

  const std::vector<Circle>& circles() const { return circles_; }
  const Circle& operator[](std::size_t i) const { return circles_[i]; }
  std::size_t size() const { return circles_.size(); }
  bool empty() const { return circles_.empty(); }
  const Tolerance& tolerance() const { return tol_; }

  std::optional<std::size_t> index_of(const std::string& id) const;

 private:
  std::vector<Circle> circles_;
  Tolerance tol_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Dense table of pairwise relations; entry (i, j) describes circle i versus j.
class RelationTable {
 public:
  explicit RelationTable(const Arrangement& arr);

  const PairRelation& operator()(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  std::size_t size() const { return n_; }

  bool crossing(std::size_t i, std::size_t j) const { return (*this)(i, j).crossing(); }
  /// Circle i is properly contained in circle j.
  bool inside(std::size_t i, std::size_t j) const {
    return (*this)(i, j).kind == RelationKind::NestedFirstInSecond;
  }

 private:
  std::size_t n_ = 0;
  std::vector<PairRelation> table_;
};

struct Violation {
  std::string first;
  std::string second;
  RelationKind relation = RelationKind::Crossing;
  std::optional<double> angle;
  std::string expected;
};

struct ValidationReport {
  ValidationMode mode = ValidationMode::Orthogonal;
  bool ok = true;
  std::vector<Violation> violations;
};

ValidationReport validate(const Arrangement& arr, ValidationMode mode);

/// depth[i] is the longest chain of pairwise nested circles properly inside circle i.
struct DepthLabeling {
  std::vector<std::string> ids;
  std::vector<int> depth;

  int at(const std::string& id) const;
  bool deep(std::size_t i) const { return depth[i] > 0; }
  int max_depth() const;
};

DepthLabeling depth_labeling(const Arrangement& arr);

bool is_nonnested(const Arrangement& arr);

}  // namespace orthocircles
