#include "mobius/complex.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace mobius {

namespace {

bool face_order(Face a, Face b) {
  const int ca = std::popcount(a), cb = std::popcount(b);
  return ca != cb ? ca < cb : a < b;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> vertices,
                                                const std::vector<Face>& faces, bool strict) {
  if (vertices.size() > kMaxVertices) throw Error(Errc::TooManyVertices, "at most 64 vertices");
  const Face universe = vertices.size() == 64 ? ~Face{0} : (Face{1} << vertices.size()) - 1;
  for (Face f : faces)
    if (f & ~universe) throw Error(Errc::InvalidArgument, "face uses an undeclared vertex");

  SimplicialComplex c;
  c.vertices_ = std::move(vertices);
  if (c.vertices_.empty() && faces.empty()) return c;

  std::unordered_set<Face> set(faces.begin(), faces.end());
  if (strict) {
    if (!set.count(0)) throw Error(Errc::NotDownwardClosed, "empty face missing");
    for (std::size_t v = 0; v < c.vertices_.size(); ++v)
      if (!set.count(Face{1} << v))
        throw Error(Errc::NotDownwardClosed, "vertex " + c.vertices_[v] + " is not a face");
    for (Face f : set) {
      for (Face rest = f; rest; rest &= rest - 1) {
        const Face drop = rest & (~rest + 1);
        if (!set.count(f & ~drop)) throw Error(Errc::NotDownwardClosed, "a facet of a face is missing");
      }
    }
  } else {
    set.insert(0);
    for (std::size_t v = 0; v < c.vertices_.size(); ++v) set.insert(Face{1} << v);
    std::vector<Face> stack(set.begin(), set.end());
    while (!stack.empty()) {
      const Face f = stack.back();
      stack.pop_back();
      for (Face rest = f; rest; rest &= rest - 1) {
        const Face sub = f & ~(rest & (~rest + 1));
        if (set.insert(sub).second) stack.push_back(sub);
      }
    }
  }
  c.faces_.assign(set.begin(), set.end());
  std::sort(c.faces_.begin(), c.faces_.end(), face_order);
  return c;
}

bool SimplicialComplex::contains(Face f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f, face_order);
}

std::string SimplicialComplex::dump() const {
  std::ostringstream out;
  if (faces_.empty()) {
    out << "empty\n";
    return out.str();
  }
  int current = -2;
  for (Face f : faces_) {
    const int dim = std::popcount(f) - 1;
    if (dim != current) {
      if (current != -2) out << "\n";
      out << "dim " << dim << ":";
      current = dim;
    }
    std::vector<std::string> names;
    for (Face rest = f; rest; rest &= rest - 1) names.push_back(vertices_[std::countr_zero(rest)]);
    std::sort(names.begin(), names.end());
    out << " {";
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
    out << "}";
  }
  out << "\n";
  return out.str();
}

EulerReport euler(const SimplicialComplex& c) {
  EulerReport r;
  for (Face f : c.faces()) {
    const int k = std::popcount(f);
    if (k == 0) continue;
    if (r.face_counts.size() < static_cast<std::size_t>(k)) r.face_counts.resize(k, 0);
    ++r.face_counts[k - 1];
  }
  for (std::size_t i = 0; i < r.face_counts.size(); ++i)
    r.chi += (i % 2 == 0 ? 1 : -1) * r.face_counts[i];
  r.chi_reduced = c.is_empty() ? 0 : r.chi - 1;
  return r;
}

long long face_alternating_sum(const SimplicialComplex& c) {
  long long total = 0;
  for (Face f : c.faces()) total += (std::popcount(f) % 2 == 0) ? 1 : -1;
  return total;
}

SimplicialComplex order_complex(const FinitePoset& poset) {
  if (poset.size() > kMaxVertices) throw Error(Errc::TooManyVertices, "at most 64 poset elements");
  std::vector<Face> faces{0};
  // Chains grown upward: each new element strictly above the last one.
  std::function<void(std::size_t, Face)> grow = [&](std::size_t last, Face chain) {
    poset.up(last).for_each([&](std::size_t next) {
      if (next == last) return;
      const Face extended = chain | (Face{1} << next);
      faces.push_back(extended);
      grow(next, extended);
    });
  };
  for (std::size_t x = 0; x < poset.size(); ++x) {
    faces.push_back(Face{1} << x);
    grow(x, Face{1} << x);
  }
  return SimplicialComplex::from_faces(poset.labels(), faces, true);
}

}  // namespace mobius
