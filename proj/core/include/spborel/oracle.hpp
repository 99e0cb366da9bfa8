#ifndef SPBOREL_ORACLE_HPP
#define SPBOREL_ORACLE_HPP

#include "spborel/betti_table.hpp"
#include "spborel/monomial_ideal.hpp"
#include "spborel/simplicial.hpp"

namespace spborel {

// The upper Koszul complex K^b(I): squarefree sets σ ⊆ support(b) with
// x^(b-σ) in I. Vertex ids are 1-based variable indices.
SimplicialComplex upper_koszul(const MonomialIdeal& I, const std::vector<std::int64_t>& b);

// Multigraded Betti numbers of R/I over the field, by simplicial homology:
// beta_{i,b}(R/I) = dim H~_{i-2}(K^b(I)) for i >= 1, plus beta_{0,0} = 1.
// Candidate multidegrees run over the box 0 <= b <= lcm(G(I)).
MultigradedBettiTable multigraded_betti(const MonomialIdeal& I, FieldChar F);

// Coarse (total-degree) Betti table of R/I over the field.
GradedBettiTable betti_table(const MonomialIdeal& I, FieldChar F);

}  // namespace spborel

#endif
