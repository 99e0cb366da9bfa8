#include "spborel/oracle.hpp"

#include <cassert>
#include <stdexcept>

namespace spborel {

namespace {

constexpr std::int64_t kBoxLimit = 50'000'000;

std::vector<std::vector<std::int64_t>> narrow_gens(const MonomialIdeal& I) {
  std::vector<std::vector<std::int64_t>> gens;
  gens.reserve(I.gen_count());
  for (const auto& g : I.gens()) {
    std::vector<std::int64_t> e(static_cast<size_t>(I.vars()));
    for (int i = 0; i < I.vars(); ++i) e[static_cast<size_t>(i)] = to_int64(g.exponent(i), "oracle exponent");
    gens.push_back(std::move(e));
  }
  return gens;
}

bool in_ideal(const std::vector<std::vector<std::int64_t>>& gens,
              const std::vector<std::int64_t>& m) {
  for (const auto& g : gens) {
    bool div = true;
    for (size_t i = 0; i < m.size(); ++i)
      if (g[i] > m[i]) { div = false; break; }
    if (div) return true;
  }
  return false;
}

SimplicialComplex koszul_of(const std::vector<std::vector<std::int64_t>>& gens,
                            const std::vector<std::int64_t>& b) {
  SimplicialComplex K;
  if (!in_ideal(gens, b)) return K;  // x^b itself not in I => void

  std::vector<int> support;
  for (size_t i = 0; i < b.size(); ++i)
    if (b[i] > 0) support.push_back(static_cast<int>(i));
  const size_t s = support.size();
  if (s > 62) throw std::invalid_argument("upper_koszul: too many variables");

  std::vector<std::int64_t> reduced(b);
  for (std::uint64_t mask = 0; mask < (1ULL << s); ++mask) {
    for (size_t t = 0; t < s; ++t)
      reduced[static_cast<size_t>(support[t])] = b[static_cast<size_t>(support[t])] - ((mask >> t) & 1);
    if (in_ideal(gens, reduced)) {
      std::vector<int> face;
      for (size_t t = 0; t < s; ++t)
        if (mask & (1ULL << t)) face.push_back(support[t] + 1);
      K.add_face(std::move(face));
    }
  }
  return K;
}

}  // namespace

SimplicialComplex upper_koszul(const MonomialIdeal& I, const std::vector<std::int64_t>& b) {
  if (static_cast<int>(b.size()) != I.vars())
    throw std::invalid_argument("upper_koszul: wrong multidegree length");
  for (auto e : b)
    if (e < 0) throw std::invalid_argument("upper_koszul: negative multidegree");
  SimplicialComplex K = koszul_of(narrow_gens(I), b);
  assert(K.is_downward_closed());
  return K;
}

MultigradedBettiTable multigraded_betti(const MonomialIdeal& I, FieldChar F) {
  const int n = I.vars();
  auto gens = narrow_gens(I);

  std::vector<std::int64_t> box(static_cast<size_t>(n));
  std::int64_t box_size = 1;
  {
    Monomial top = I.generator_lcm();
    for (int i = 0; i < n; ++i) {
      box[static_cast<size_t>(i)] = to_int64(top.exponent(i), "oracle lcm");
      if (box_size > kBoxLimit / (box[static_cast<size_t>(i)] + 1))
        throw std::invalid_argument("multigraded_betti: multidegree box too large");
      box_size *= box[static_cast<size_t>(i)] + 1;
    }
  }

  MultigradedBettiTable M(n);
  M.add(0, std::vector<std::int64_t>(static_cast<size_t>(n), 0), 1);

  std::vector<std::int64_t> b(static_cast<size_t>(n), 0);
  while (true) {
    SimplicialComplex K = koszul_of(gens, b);
    if (!K.is_void()) {
      auto dims = reduced_homology(K, F);
      for (size_t k = 0; k < dims.size(); ++k) {
        if (dims[k] <= 0) continue;
        int i = static_cast<int>(k) + 1;  // homology index k-1 => beta_{k+1,b}
        if (i > n) throw std::logic_error("multigraded_betti: homological degree exceeds n");
        M.add(i, b, dims[k]);
      }
    }
    // odometer over the box
    int pos = 0;
    while (pos < n && b[static_cast<size_t>(pos)] == box[static_cast<size_t>(pos)]) {
      b[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++b[static_cast<size_t>(pos)];
  }
  return M;
}

GradedBettiTable betti_table(const MonomialIdeal& I, FieldChar F) {
  return coarse_table(multigraded_betti(I, F));
}

}  // namespace spborel
