#ifndef SPBOREL_BETTI_TABLE_HPP
#define SPBOREL_BETTI_TABLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spborel/bigint.hpp"

namespace spborel {

// Graded Betti numbers of a quotient R/I: (homological degree i, internal
// degree d) -> multiplicity. Every table carries the fixed entry
// (0,0) -> 1; entries at i >= 1 are strictly positive.
class GradedBettiTable {
 public:
  using Key = std::pair<int, BigInt>;

  GradedBettiTable();

  void add(int i, const BigInt& d, const BigInt& count);
  BigInt get(int i, const BigInt& d) const;
  const std::map<Key, BigInt>& entries() const { return entries_; }

  int pdim() const;                       // max homological degree
  bool has_entries_at(int i) const;
  BigInt min_shift(int i) const;          // min d with (i,d) present
  BigInt max_shift(int i) const;
  BigInt total(int i) const;              // sum of multiplicities at i
  std::vector<BigInt> totals() const;     // indices 0..pdim

  // max(d - i) over nonzero entries: the regularity of R/I.
  BigInt regularity_quotient() const;

  bool operator==(const GradedBettiTable& o) const { return entries_ == o.entries_; }
  bool operator!=(const GradedBettiTable& o) const { return entries_ != o.entries_; }

 private:
  std::map<Key, BigInt> entries_;
};

struct TableStats {
  BigInt reg_quotient;  // reg(R/I)
  BigInt reg_ideal;     // reg(I) = reg(R/I) + 1
  int pdim;             // pdim(R/I)
};
TableStats regularity_and_pdim(const GradedBettiTable& T);

// Multigraded Betti numbers: (i, multidegree) -> multiplicity.
// Multidegrees are small by construction (they divide the generator lcm).
class MultigradedBettiTable {
 public:
  using Multidegree = std::vector<std::int64_t>;
  using Key = std::pair<int, Multidegree>;

  explicit MultigradedBettiTable(int n) : n_(n) {}

  int vars() const { return n_; }
  void add(int i, const Multidegree& b, std::int64_t count);
  std::int64_t get(int i, const Multidegree& b) const;
  const std::map<Key, std::int64_t>& entries() const { return entries_; }

 private:
  int n_;
  std::map<Key, std::int64_t> entries_;
};

// Sum multiplicities over multidegrees of equal total degree.
GradedBettiTable coarse_table(const MultigradedBettiTable& M);

// Betti diagram in the conventional printed layout: column i, row d-i,
// preceded by a `total:` line.
std::string render_diagram(const GradedBettiTable& T);

// One entry per line: i TAB d TAB multiplicity.
std::string render_tsv(const GradedBettiTable& T);
std::string render_tsv(const MultigradedBettiTable& M);
GradedBettiTable parse_tsv(const std::string& text);

}  // namespace spborel

#endif
