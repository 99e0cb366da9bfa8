#ifndef SPBOREL_SIMPLICIAL_HPP
#define SPBOREL_SIMPLICIAL_HPP

#include <set>
#include <vector>

#include "spborel/linalg.hpp"

namespace spborel {

// An abstract simplicial complex on integer vertex ids. The void complex
// (no faces at all) is distinct from the irrelevant complex {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Insert a face together with all of its subsets.
  void add_face_with_closure(std::vector<int> face);
  // Insert a single face; the caller is responsible for closure.
  void add_face(std::vector<int> face);

  bool is_void() const { return faces_.empty(); }
  // -2 for the void complex, -1 for {∅}.
  int dim() const;
  size_t face_count() const { return faces_.size(); }
  const std::set<std::vector<int>>& faces() const { return faces_; }

  bool is_downward_closed() const;

 private:
  std::set<std::vector<int>> faces_;  // each face sorted ascending
};

// Dimensions of reduced simplicial homology over the field.
// dims[k] is dim H~_{k-1}, for k = 0 .. dim+1 (so dims[0] covers H~_{-1});
// empty for the void complex.
std::vector<std::int64_t> reduced_homology(const SimplicialComplex& C, FieldChar F);

}  // namespace spborel

#endif
