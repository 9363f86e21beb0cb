#include <cmath>
#include <functional>

#include "doctest.h"
#include "orthocircles/arrangement.hpp"
#include "orthocircles/generators.hpp"

using namespace orthocircles;

namespace {

// Longest chain of nested circles strictly inside circle i, by exhaustive
// search over chains (fine for small arrangements).
int brute_depth(const Arrangement& arr, std::size_t i) {
  const RelationTable rel(arr);
  std::function<int(std::size_t)> longest = [&](std::size_t top) {
    int best = 0;
    for (std::size_t j = 0; j < arr.size(); ++j)
      if (rel.inside(j, top)) best = std::max(best, 1 + longest(j));
    return best;
  };
  return longest(i);
}

}  // namespace

TEST_CASE("construction rejects duplicates and tangency") {
  CHECK_THROWS_AS(Arrangement({Circle("a", Point(0, 0), 1), Circle("a", Point(5, 0), 1)}), InvalidArrangementError);
  CHECK_THROWS_AS(Arrangement({Circle("a", Point(0, 0), 1), Circle("b", Point(0, 0), 1)}), InvalidArrangementError);
  CHECK_THROWS_AS(Arrangement({Circle("a", Point(0, 0), 1), Circle("b", Point(2, 0), 1)}), TangencyError);
  const Arrangement lenient({Circle("a", Point(0, 0), 1), Circle("b", Point(2, 0), 1)}, Tolerance{},
                            Arrangement::Strictness::Lenient);
  CHECK(lenient.size() == 2);
  CHECK(*lenient.index_of("b") == 1);
  CHECK_FALSE(lenient.index_of("z"));
}

TEST_CASE("validate names offending pairs") {
  const Arrangement good({Circle("a", Point(0, 0), 1), Circle("b", Point(std::sqrt(2.0), 0), 1)});
  CHECK(validate(good, ValidationMode::Orthogonal).ok);
  CHECK(validate(good, ValidationMode::Acute).ok);

  const Arrangement obtuse({Circle("a", Point(0, 0), 1), Circle("b", Point(1, 0), 1)});
  const auto r = validate(obtuse, ValidationMode::Acute);
  CHECK_FALSE(r.ok);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].first == "a");
  CHECK(r.violations[0].second == "b");
  REQUIRE(r.violations[0].angle);

  const Arrangement acute({Circle("a", Point(0, 0), 1), Circle("b", Point(1.8, 0), 1)});
  CHECK(validate(acute, ValidationMode::Acute).ok);
  CHECK_FALSE(validate(acute, ValidationMode::Orthogonal).ok);

  const Arrangement touching({Circle("a", Point(0, 0), 1), Circle("b", Point(2, 0), 1)}, Tolerance{},
                             Arrangement::Strictness::Lenient);
  const auto t = validate(touching, ValidationMode::Orthogonal);
  CHECK_FALSE(t.ok);
  REQUIRE(t.violations.size() == 1);
  CHECK(t.violations[0].relation == RelationKind::Tangent);
}

TEST_CASE("B arrangements validate at the default tolerance") {
  CHECK(validate(make_B(3, 15), ValidationMode::Orthogonal).ok);
  CHECK(validate(make_B(6, 20), ValidationMode::Orthogonal).ok);
}

TEST_CASE("depth labeling matches a brute-force chain search") {
  for (const Arrangement& arr : {make_B(1, 5), make_B(2, 6), make_B(3, 5), make_nonnested_B(3)}) {
    const DepthLabeling d = depth_labeling(arr);
    for (std::size_t i = 0; i < arr.size(); ++i) CHECK(d.depth[i] == brute_depth(arr, i));
  }
  const DepthLabeling d = depth_labeling(make_B(3, 5));
  CHECK(d.at("H1") == 0);
  CHECK(d.at("H2") == 1);
  CHECK(d.at("H3") == 2);
  CHECK(d.at("S3.1") == 0);
  CHECK(d.max_depth() == 2);
  CHECK(is_nonnested(make_nonnested_B(4)));
  CHECK_FALSE(is_nonnested(make_B(2, 5)));
}
