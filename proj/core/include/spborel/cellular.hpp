#ifndef SPBOREL_CELLULAR_HPP
#define SPBOREL_CELLULAR_HPP

#include <optional>
#include <string>

#include "spborel/betti_table.hpp"
#include "spborel/monomial_ideal.hpp"
#include "spborel/simplicial.hpp"
#include "spborel/special.hpp"

namespace spborel {

// A polyhedral cell complex with monomial-labeled vertices; each face is
// labeled by the lcm of its vertex labels. Faces carry their geometric
// dimension (a hexagon's top cell has 6 vertices and dimension 2).
class LabeledComplex {
 public:
  struct Face {
    int dim;
    std::vector<int> verts;     // sorted vertex ids
    Monomial label;
    std::vector<int> subfaces;  // ids of codimension-1 faces
  };

  // `cells`: every face of the complex as (vertex ids, dimension),
  // vertices themselves included. Labels and incidence are derived.
  LabeledComplex(int n, std::vector<Monomial> vertex_labels,
                 std::vector<std::pair<std::vector<int>, int>> cells);

  int vars() const { return n_; }
  size_t vertex_count() const { return vertex_labels_.size(); }
  const std::vector<Monomial>& vertex_labels() const { return vertex_labels_; }
  const std::vector<Face>& faces() const { return faces_; }
  int dim() const;

  // Ideal generated by the vertex labels.
  MonomialIdeal vertex_ideal() const;

  // Componentwise lcm of all labels.
  Monomial label_lcm() const;

 private:
  int n_;
  std::vector<Monomial> vertex_labels_;
  std::vector<Face> faces_;
};

// Face complex of the generalized permutohedron with vertex coordinates
// the n(n-1) permutations of (d*p1, p2, 0, ..., 0); requires d*p1 < p2.
// Vertices are labeled by their coordinate monomials x_i^(d*p1) x_j^(p2).
LabeledComplex permutohedron_complex(int n, const BigInt& d, const BigInt& p1,
                                     const BigInt& p2);

// The permutohedron for a two-factor spec with a_1 = 1 and l_1 = l_2 = n,
// with a full (n-1)-simplex on {x_j^(p2) x_i^(p1) : all i} attached along
// each facet {v_j = p2}. Its vertices are labeled by the n^2 generators of
// the spec's ideal.
LabeledComplex glued_complex(const SpecialIdealParams& params);

// First multidegree b (lexicographic) at which the label-truncated
// subcomplex has nonzero reduced homology over the field; nullopt when the
// complex supports a free resolution of its vertex ideal (every truncation
// void or acyclic).
std::optional<std::vector<std::int64_t>> resolution_witness(const LabeledComplex& C,
                                                            FieldChar F);
bool supports_resolution(const LabeledComplex& C, FieldChar F);

// No face shares its label with a codimension-1 subface.
bool is_minimal_cellular(const LabeledComplex& C);

// Betti table read off the cells: each i-dimensional face contributes one
// generator in homological degree i+1 at its label's total degree.
// Requires both certificates (minimality, and support over char 0).
GradedBettiTable cellular_betti(const LabeledComplex& C);

// One face per line: dim TAB sorted-vertex-ids TAB label.
std::string render_dump(const LabeledComplex& C);

}  // namespace spborel

#endif
