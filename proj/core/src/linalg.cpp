#include "spborel/linalg.hpp"

#include <stdexcept>

namespace spborel {

int rank_rational(std::vector<std::vector<BigInt>> M) {
  if (M.empty() || M[0].empty()) return 0;
  const size_t rows = M.size(), cols = M[0].size();
  size_t rank = 0;
  BigInt prev = 1;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && M[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[rank]);
    for (size_t r = rank + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c)
        M[r][c] = (M[rank][col] * M[r][c] - M[r][col] * M[rank][c]) / prev;
      M[r][col] = 0;
    }
    prev = M[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  unsigned __int128 acc = 1, b = base % p;
  while (exp) {
    if (exp & 1) acc = acc * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

}  // namespace

int rank_mod_p(std::vector<std::vector<std::int64_t>> M, std::uint64_t p) {
  if (p < 2 || p >= (1ULL << 62))
    throw std::invalid_argument("rank_mod_p: characteristic out of range");
  if (M.empty() || M[0].empty()) return 0;
  const size_t rows = M.size(), cols = M[0].size();

  std::vector<std::vector<std::uint64_t>> A(rows, std::vector<std::uint64_t>(cols));
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) {
      std::int64_t v = M[r][c] % static_cast<std::int64_t>(p);
      if (v < 0) v += static_cast<std::int64_t>(p);
      A[r][c] = static_cast<std::uint64_t>(v);
    }

  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && A[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[rank]);
    std::uint64_t inv = mod_inv(A[rank][col], p);
    for (size_t r = rank + 1; r < rows; ++r) {
      if (A[r][col] == 0) continue;
      std::uint64_t f = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(A[r][col]) * inv % p);
      for (size_t c = col; c < cols; ++c) {
        unsigned __int128 sub = static_cast<unsigned __int128>(f) * A[rank][c] % p;
        A[r][c] = static_cast<std::uint64_t>((A[r][c] + p - static_cast<std::uint64_t>(sub)) % p);
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int exact_rank(const std::vector<std::vector<std::int64_t>>& M, FieldChar F) {
  if (F.value == 0) {
    std::vector<std::vector<BigInt>> B(M.size());
    for (size_t r = 0; r < M.size(); ++r) B[r].assign(M[r].begin(), M[r].end());
    return rank_rational(std::move(B));
  }
  return rank_mod_p(M, F.value);
}

}  // namespace spborel
