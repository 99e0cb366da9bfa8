#ifndef SPBOREL_HORSESHOE_HPP
#define SPBOREL_HORSESHOE_HPP

#include <optional>
#include <string>
#include <utility>

#include "spborel/betti_table.hpp"
#include "spborel/monomial_ideal.hpp"

namespace spborel {

// Raw (min d, max d) over the entries of T at homological degree i.
// Tables describe quotients R/A; callers fix any ideal-vs-quotient offset.
std::pair<BigInt, BigInt> min_max_shifts(const GradedBettiTable& T, int i);

// Generator-count condition for a conjoined pair: |G(IJ)| = |G(I)||G(J)|.
bool conjoined_condition_i(const MonomialIdeal& I, const MonomialIdeal& J);

// Sufficient hypotheses certifying that (Ibase^[k], J) is a conjoined pair:
// G(Ibase) and G(J) equigenerated, and x_i^(k-1) in J for every variable
// x_i up to the largest one dividing a generator of Ibase. Returns nullopt
// when certified; otherwise the name of the failed hypothesis.
std::optional<std::string> certify_conjoined_bracket(const MonomialIdeal& Ibase,
                                                     const BigInt& k,
                                                     const MonomialIdeal& J);

// Shift criterion for minimality of the reduced horseshoe resolution of
// R/IJ: m_{k+1}(I) > M_1(I) + M_k(J) for 1 <= k <= pdim_quotient - 1, read
// off the quotient tables. Vacuously true when one side has no entries.
bool reduced_horseshoe_minimal(const GradedBettiTable& TI, const GradedBettiTable& TJ,
                               int pdim_quotient);
bool reduced_horseshoe_minimal(const GradedBettiTable& TI, const GradedBettiTable& TJ);

// Betti table of R/IJ from the reduced horseshoe resolution, for a
// conjoined pair (I, J) with G(I) equigenerated: g copies of TJ shifted by
// the generator degree e, plus the entries of TI at degrees >= 2.
GradedBettiTable reduced_horseshoe_table(const GradedBettiTable& TI,
                                         const GradedBettiTable& TJ,
                                         const BigInt& g, const BigInt& e);

}  // namespace spborel

#endif
