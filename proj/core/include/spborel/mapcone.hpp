#ifndef SPBOREL_MAPCONE_HPP
#define SPBOREL_MAPCONE_HPP

#include <map>
#include <mutex>
#include <optional>

#include "spborel/betti_table.hpp"
#include "spborel/monomial_ideal.hpp"
#include "spborel/oracle.hpp"

namespace spborel {

// Memoized oracle tables keyed by (ideal, characteristic); thread-safe.
class OracleCache {
 public:
  const GradedBettiTable& table(const MonomialIdeal& I, FieldChar F);

 private:
  std::map<std::pair<MonomialIdeal, std::uint64_t>, GradedBettiTable> cache_;
  std::mutex mutex_;
};

// Betti table of the mapping cone of multiplication by a degree-degm
// monomial m, from the tables of R/I' and R/(I' : m):
// predicted(i, d) = Tprev(i, d) + Tcolon(i-1, d - degm).
GradedBettiTable mapping_cone_table(const GradedBettiTable& Tprev,
                                    const GradedBettiTable& Tcolon, const BigInt& degm);

struct MapconeStep {
  int step;          // 1-based position of the added generator
  Monomial added;
  GradedBettiTable predicted;
  GradedBettiTable actual;
  bool minimal;      // predicted == actual
  std::optional<std::pair<int, BigInt>> first_discrepancy;  // smallest (i, d)
};

// Adds the generators one at a time in the given order; at each step the
// cone prediction is compared with the oracle table of the new ideal.
// Generators must be an antichain (a minimal generating set).
std::vector<MapconeStep> iterated_mapcone(const std::vector<Monomial>& gens, FieldChar F,
                                          OracleCache* cache = nullptr);

struct OrderingRow {
  std::vector<int> perm;              // 1-based indices into G(I)
  std::optional<int> first_bad_step;  // nullopt = all steps minimal
};

struct AllOrdersReport {
  size_t total = 0;
  size_t minimal_orderings = 0;
  std::vector<OrderingRow> rows;
};

// Runs the iterated mapping cone over every permutation of G(I).
// Guarded to |G(I)| <= 9.
AllOrdersReport all_orders_check(const MonomialIdeal& I, FieldChar F,
                                 OracleCache* cache = nullptr);

// One line per ordering: `perm TAB first_bad_step|ok`, then a summary.
std::string render_report(const AllOrdersReport& report);

// Candidate consecutive-cancellation positions of the cone: all (i, b)
// with M1(i, b) > 0 and M2(i, b-offset) > 0. The twisted colon copy enters
// the cone one homological degree above the matching copy of M1.
std::vector<std::pair<int, MultigradedBettiTable::Multidegree>> common_multidegree_shifts(
    const MultigradedBettiTable& M1, const MultigradedBettiTable& M2,
    const MultigradedBettiTable::Multidegree& offset);

}  // namespace spborel

#endif
