#include "lenstight/plane_map.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lenstight {

PlaneMap::Vertex PlaneMap::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  rotation_.emplace_back();
  return rotation_.size() - 1;
}

void PlaneMap::set_rotation(Vertex v, std::vector<Vertex> neighbours) {
  rotation_.at(v) = std::move(neighbours);
}

std::size_t PlaneMap::edge_count() const {
  std::size_t degree_sum = 0;
  for (const auto& r : rotation_) degree_sum += r.size();
  return degree_sum / 2;
}

std::size_t PlaneMap::position(Vertex v, Vertex neighbour) const {
  const auto& r = rotation_[v];
  const auto it = std::find(r.begin(), r.end(), neighbour);
  if (it == r.end()) throw std::logic_error("not adjacent: " + labels_[v] + ", " + labels_[neighbour]);
  return static_cast<std::size_t>(it - r.begin());
}

PlaneMap::Dart PlaneMap::next_in_face(Dart d) const {
  const auto [u, v] = d;
  const auto& r = rotation_[v];
  const std::size_t i = position(v, u);
  return {v, r[(i + r.size() - 1) % r.size()]};
}

std::vector<PlaneMap::Dart> PlaneMap::face_of(Dart d) const {
  std::vector<Dart> face{d};
  for (Dart cur = next_in_face(d); cur != d; cur = next_in_face(cur)) face.push_back(cur);
  return face;
}

std::size_t PlaneMap::face_count() const {
  std::set<Dart> seen;
  std::size_t faces = 0;
  for (Vertex v = 0; v < rotation_.size(); ++v) {
    for (Vertex w : rotation_[v]) {
      if (seen.contains({v, w})) continue;
      ++faces;
      for (const Dart& d : face_of({v, w})) seen.insert(d);
    }
  }
  // an isolated vertex bounds one face of its own
  for (const auto& r : rotation_) {
    if (r.empty()) ++faces;
  }
  return faces;
}

long PlaneMap::euler_characteristic() const {
  return static_cast<long>(vertex_count()) - static_cast<long>(edge_count()) +
         static_cast<long>(face_count());
}

PlaneMap::Vertex PlaneMap::subdivide(Vertex a, Vertex b, std::string label) {
  const Vertex m = add_vertex(std::move(label));
  rotation_[a][position(a, b)] = m;
  rotation_[b][position(b, a)] = m;
  rotation_[m] = {b, a};
  return m;
}

bool PlaneMap::connect_in_face(Vertex u, Vertex w, Vertex target) {
  const auto face = face_of({u, w});
  // corner at target: just before the vertex the face arrived from
  for (std::size_t k = 0; k < face.size(); ++k) {
    const Dart& in = face[k];
    if (in.second != target) continue;
    const Vertex x = in.first;
    // the face leaves u along w, so the new edge goes just after w around u
    auto& ru = rotation_[u];
    ru.insert(ru.begin() + static_cast<std::ptrdiff_t>(position(u, w) + 1), target);
    auto& rt = rotation_[target];
    if (rt.size() == 1) {
      rt.push_back(u);
    } else {
      rt.insert(rt.begin() + static_cast<std::ptrdiff_t>(position(target, x)), u);
    }
    return true;
  }
  return false;
}

bool PlaneMap::well_formed() const {
  for (Vertex v = 0; v < rotation_.size(); ++v) {
    std::set<Vertex> distinct(rotation_[v].begin(), rotation_[v].end());
    if (distinct.size() != rotation_[v].size() || distinct.contains(v)) return false;
    for (Vertex w : rotation_[v]) {
      const auto& r = rotation_[w];
      if (std::find(r.begin(), r.end(), v) == r.end()) return false;
    }
  }
  return true;
}

}  // namespace lenstight
