#ifndef SPBOREL_BIGINT_HPP
#define SPBOREL_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>

namespace spborel {

// Exponents, internal degrees and Betti multiplicities are unbounded in
// principle (the per-factor scales grow geometrically), so everything
// arithmetic runs on arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

// C(n, k) for small k; exact.
BigInt binomial(const BigInt& n, std::uint64_t k);

bool is_prime(std::uint64_t p);

// Checked narrowing for the enumerative code paths (box iteration,
// generator expansion), which are only feasible for small values anyway.
std::int64_t to_int64(const BigInt& v, const char* what);

}  // namespace spborel

#endif
