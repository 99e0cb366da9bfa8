#include "spborel/simplicial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spborel {

void SimplicialComplex::add_face(std::vector<int> face) {
  std::sort(face.begin(), face.end());
  face.erase(std::unique(face.begin(), face.end()), face.end());
  faces_.insert(std::move(face));
}

void SimplicialComplex::add_face_with_closure(std::vector<int> face) {
  std::sort(face.begin(), face.end());
  face.erase(std::unique(face.begin(), face.end()), face.end());
  const size_t k = face.size();
  if (k > 62) throw std::invalid_argument("SimplicialComplex: face too large");
  for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
    std::vector<int> sub;
    for (size_t t = 0; t < k; ++t)
      if (mask & (1ULL << t)) sub.push_back(face[t]);
    faces_.insert(std::move(sub));
  }
}

int SimplicialComplex::dim() const {
  if (faces_.empty()) return -2;
  size_t best = 0;
  for (const auto& f : faces_) best = std::max(best, f.size());
  return static_cast<int>(best) - 1;
}

bool SimplicialComplex::is_downward_closed() const {
  for (const auto& f : faces_) {
    if (f.empty()) continue;
    for (size_t skip = 0; skip < f.size(); ++skip) {
      std::vector<int> sub;
      for (size_t t = 0; t < f.size(); ++t)
        if (t != skip) sub.push_back(f[t]);
      if (!faces_.count(sub)) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> reduced_homology(const SimplicialComplex& C, FieldChar F) {
  if (C.is_void()) return {};
  if (!C.faces().count({}))
    throw std::invalid_argument("reduced_homology: nonempty complex missing the empty face");

  const int d = C.dim();
  // faces grouped by dimension; level k holds the (k-1)-faces, level 0 = {∅}
  std::vector<std::vector<const std::vector<int>*>> level(static_cast<size_t>(d) + 2);
  std::vector<std::map<std::vector<int>, int>> index(static_cast<size_t>(d) + 2);
  for (const auto& f : C.faces()) {
    auto& lv = level[f.size()];
    index[f.size()][f] = static_cast<int>(lv.size());
    lv.push_back(&f);
  }

  // boundary[k]: C_{k-1} -> C_{k-2} in face-size indexing (level k -> k-1)
  std::vector<int> rank_of(static_cast<size_t>(d) + 3, 0);
  for (size_t k = 1; k <= static_cast<size_t>(d) + 1; ++k) {
    std::vector<std::vector<std::int64_t>> B(
        level[k - 1].size(), std::vector<std::int64_t>(level[k].size(), 0));
    for (size_t col = 0; col < level[k].size(); ++col) {
      const auto& f = *level[k][col];
      for (size_t skip = 0; skip < f.size(); ++skip) {
        std::vector<int> sub;
        for (size_t t = 0; t < f.size(); ++t)
          if (t != skip) sub.push_back(f[t]);
        int row = index[k - 1].at(sub);
        B[static_cast<size_t>(row)][col] = (skip % 2 == 0) ? 1 : -1;
      }
    }
    rank_of[k] = exact_rank(B, F);
  }

  // dim H~_{k-1} = dim C_{k-1} - rank ∂_{k-1} - rank ∂_k  (level indexing)
  std::vector<std::int64_t> dims(static_cast<size_t>(d) + 2, 0);
  for (size_t k = 0; k <= static_cast<size_t>(d) + 1; ++k)
    dims[k] = static_cast<std::int64_t>(level[k].size()) - rank_of[k] - rank_of[k + 1];
  return dims;
}

}  // namespace spborel
