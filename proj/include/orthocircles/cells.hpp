#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "orthocircles/arrangement.hpp"

namespace orthocircles {

/// Planar subdivision induced by an arrangement: vertices are intersection
/// points, edges are circular arcs, faces are the cells.
class ArcSubdivision {
 public:
  struct Vertex {
    Point point;
    int first_circle = -1;
    int second_circle = -1;
  };

  /// Directed arc. A circle without intersection points carries a single
  /// closed arc per orientation with origin == target == -1.
  struct HalfEdge {
    int circle = -1;
    int origin = -1;
    int target = -1;
    bool counterclockwise = true;
    double start_angle = 0.0;
    /// Signed angular sweep; positive for counterclockwise arcs.
    double sweep = 0.0;
    int twin = -1;
    int next = -1;
    int cycle = -1;
  };

  /// Closed walk of half-edges with the incident face on its left.
  struct Cycle {
    std::vector<int> half_edges;
    double signed_area = 0.0;
    int component = -1;
    int face = -1;
  };

  struct Face {
    /// Positive cycle bounding the face from outside; -1 for the unbounded face.
    int outer_cycle = -1;
    std::vector<int> hole_cycles;
    int arc_count = 0;
    bool unbounded() const { return outer_cycle < 0; }
  };

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  const std::vector<Face>& faces() const { return faces_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arc_count() const { return half_edges_.size() / 2; }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t bounded_face_count() const { return faces_.size() - 1; }
  std::size_t component_count() const { return components_; }
  std::size_t isolated_loop_count() const { return isolated_loops_; }

  /// V - E + F = 1 + components, counting the unbounded face once and giving
  /// every intersection-free circle one virtual vertex.
  bool euler_holds() const;

 private:
  friend ArcSubdivision build_subdivision(const Arrangement& arr);

  std::vector<Vertex> vertices_;
  std::vector<HalfEdge> half_edges_;
  std::vector<Cycle> cycles_;
  std::vector<Face> faces_;
  std::size_t components_ = 0;
  std::size_t isolated_loops_ = 0;
};

/// Throws NonGenericError when two intersection points coincide within
/// 10 * rel_eps, TangencyError on touching circles.
ArcSubdivision build_subdivision(const Arrangement& arr);

struct FaceCensus {
  /// side count -> number of bounded faces
  std::map<int, std::size_t> by_sides;
  std::size_t bounded_faces = 0;
  std::size_t digon_count = 0;
  std::size_t triangle_count = 0;
};

FaceCensus face_census(const ArcSubdivision& sub);

}  // namespace orthocircles
