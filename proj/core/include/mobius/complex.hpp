#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mobius/error.hpp"
#include "mobius/poset.hpp"

namespace mobius {

/// A face as a bitmask over vertex indices (at most 64 vertices).
using Face = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

/// Abstract simplicial complex with an explicit face list.
///
/// The empty complex (no faces at all) and the complex {∅} (only the empty
/// face) are different objects: the first has reduced Euler characteristic 0,
/// the second -1.
class SimplicialComplex {
 public:
  /// The complex with no faces.
  SimplicialComplex() = default;

  /// Downward closure of `faces` together with the empty face and every
  /// vertex singleton. In strict mode nothing is added; input that is not
  /// already a complex on `vertices` raises NotDownwardClosed. With no
  /// vertices and no faces the result is the empty complex.
  static SimplicialComplex from_faces(std::vector<std::string> vertices, const std::vector<Face>& faces,
                                      bool strict = false);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  /// Sorted by size, then by mask.
  const std::vector<Face>& faces() const noexcept { return faces_; }
  bool is_empty() const noexcept { return faces_.empty(); }
  bool contains(Face f) const;

  /// One line per dimension: "dim d: {a,b} {a,c} ...", labels sorted.
  std::string dump() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Face> faces_;
};

struct EulerReport {
  /// face_counts[i] is the number of i-faces (i + 1 vertices).
  std::vector<long long> face_counts;
  long long chi = 0;
  long long chi_reduced = 0;
};

EulerReport euler(const SimplicialComplex& c);

/// Sum over all faces, the empty face included, of (-1)^|F|.
long long face_alternating_sum(const SimplicialComplex& c);

/// Faces are the chains of `poset`; the empty chain is always a face.
SimplicialComplex order_complex(const FinitePoset& poset);

}  // namespace mobius
