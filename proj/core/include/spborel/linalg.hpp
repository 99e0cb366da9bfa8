#ifndef SPBOREL_LINALG_HPP
#define SPBOREL_LINALG_HPP

#include <cstdint>
#include <vector>

#include "spborel/bigint.hpp"

namespace spborel {

// Coefficient field: the rationals (value 0) or Z/p for a prime p.
struct FieldChar {
  std::uint64_t value;

  explicit FieldChar(std::uint64_t v) : value(v) {
    if (v != 0 && !is_prime(v))
      throw std::invalid_argument("FieldChar: characteristic must be 0 or prime");
  }
  static FieldChar rationals() { return FieldChar(0); }

  bool operator==(const FieldChar& o) const { return value == o.value; }
  bool operator<(const FieldChar& o) const { return value < o.value; }
};

// Exact rank of an integer matrix over the chosen field.
// char 0: fraction-free (Bareiss) elimination; char p: Gauss mod p.
int exact_rank(const std::vector<std::vector<std::int64_t>>& M, FieldChar F);
int rank_rational(std::vector<std::vector<BigInt>> M);
int rank_mod_p(std::vector<std::vector<std::int64_t>> M, std::uint64_t p);

}  // namespace spborel

#endif
