#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace lenstight {

// A connected plane graph stored as a rotation system: for every vertex the
// anticlockwise cyclic order of its neighbours.
class PlaneMap {
 public:
  using Vertex = std::size_t;
  using Dart = std::pair<Vertex, Vertex>;

  Vertex add_vertex(std::string label);
  // Sets the complete anticlockwise rotation of v. Every neighbour must list v.
  void set_rotation(Vertex v, std::vector<Vertex> neighbours);

  std::size_t vertex_count() const { return rotation_.size(); }
  std::size_t edge_count() const;
  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[v]; }

  // Dart following (u,v) around the face on its left.
  Dart next_in_face(Dart d) const;
  std::vector<Dart> face_of(Dart d) const;
  std::size_t face_count() const;
  bool satisfies_euler() const { return euler_characteristic() == 2; }
  long euler_characteristic() const;

  // Subdivides the edge a-b with a new vertex placed between them.
  Vertex subdivide(Vertex a, Vertex b, std::string label);

  // Joins u to target through the face on the left of dart (u, w), where w is
  // a neighbour of u. Returns false (and leaves the map untouched) if target
  // is not on that face.
  bool connect_in_face(Vertex u, Vertex w, Vertex target);

  // Consistency of the rotation system: symmetric adjacency, no loops or
  // repeated neighbours.
  bool well_formed() const;

 private:
  std::size_t position(Vertex v, Vertex neighbour) const;

  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> rotation_;
};

}  // namespace lenstight
