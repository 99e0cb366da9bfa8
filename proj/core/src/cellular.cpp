#include "spborel/cellular.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spborel {

LabeledComplex::LabeledComplex(int n, std::vector<Monomial> vertex_labels,
                               std::vector<std::pair<std::vector<int>, int>> cells)
    : n_(n), vertex_labels_(std::move(vertex_labels)) {
  if (vertex_labels_.empty()) throw std::invalid_argument("LabeledComplex: no vertices");
  for (const auto& l : vertex_labels_)
    if (l.vars() != n) throw std::invalid_argument("LabeledComplex: label dimension mismatch");

  std::map<std::vector<int>, int> seen;
  for (auto& [verts, dim] : cells) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.empty()) throw std::invalid_argument("LabeledComplex: empty face");
    for (int v : verts)
      if (v < 0 || v >= static_cast<int>(vertex_labels_.size()))
        throw std::invalid_argument("LabeledComplex: vertex id out of range");
    if (dim < 0 || static_cast<size_t>(dim) + 1 > verts.size())
      throw std::invalid_argument("LabeledComplex: implausible face dimension");
    auto it = seen.find(verts);
    if (it != seen.end()) {
      if (faces_[static_cast<size_t>(it->second)].dim != dim)
        throw std::invalid_argument("LabeledComplex: duplicate face with conflicting dimension");
      continue;
    }
    Monomial label = vertex_labels_[static_cast<size_t>(verts[0])];
    for (size_t t = 1; t < verts.size(); ++t)
      label = lcm(label, vertex_labels_[static_cast<size_t>(verts[t])]);
    seen[verts] = static_cast<int>(faces_.size());
    faces_.push_back(Face{dim, verts, std::move(label), {}});
  }

  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.verts < b.verts;
  });

  // every vertex of a face must itself be a 0-cell
  std::map<std::vector<int>, int> by_verts;
  for (size_t f = 0; f < faces_.size(); ++f)
    by_verts[faces_[f].verts] = static_cast<int>(f);
  for (const auto& face : faces_)
    for (int v : face.verts)
      if (!by_verts.count({v}))
        throw std::invalid_argument("LabeledComplex: face references a missing vertex cell");

  // codimension-1 incidence by vertex-set containment
  for (size_t f = 0; f < faces_.size(); ++f) {
    for (size_t g = 0; g < faces_.size(); ++g) {
      if (faces_[g].dim != faces_[f].dim - 1) continue;
      if (std::includes(faces_[f].verts.begin(), faces_[f].verts.end(),
                        faces_[g].verts.begin(), faces_[g].verts.end()))
        faces_[f].subfaces.push_back(static_cast<int>(g));
    }
    if (faces_[f].dim >= 1 && faces_[f].subfaces.size() < 2)
      throw std::invalid_argument("LabeledComplex: face with fewer than two boundary cells");
  }
}

int LabeledComplex::dim() const {
  int d = 0;
  for (const auto& f : faces_) d = std::max(d, f.dim);
  return d;
}

MonomialIdeal LabeledComplex::vertex_ideal() const {
  return MonomialIdeal(n_, vertex_labels_);
}

Monomial LabeledComplex::label_lcm() const {
  Monomial acc = vertex_labels_.front();
  for (const auto& f : faces_) acc = lcm(acc, f.label);
  return acc;
}

LabeledComplex permutohedron_complex(int n, const BigInt& d, const BigInt& p1,
                                     const BigInt& p2) {
  if (n < 2) throw std::invalid_argument("permutohedron_complex: n must be >= 2");
  if (n > 6) throw std::invalid_argument("permutohedron_complex: n > 6 not supported");
  if (d < 1 || p1 < 1 || p2 < 1)
    throw std::invalid_argument("permutohedron_complex: parameters must be >= 1");
  if (!(d * p1 < p2))
    throw std::invalid_argument("permutohedron_complex: need d*p1 < p2");

  // vertices: coordinate permutations of (d*p1, p2, 0, ..., 0)
  std::vector<std::vector<BigInt>> coords;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<BigInt> v(static_cast<size_t>(n), BigInt(0));
      v[static_cast<size_t>(i)] = d * p1;
      v[static_cast<size_t>(j)] = p2;
      coords.push_back(std::move(v));
    }
  const size_t V = coords.size();
  std::vector<Monomial> labels;
  labels.reserve(V);
  for (const auto& v : coords) labels.emplace_back(v);

  // facet vertex sets: {v_i = 0} and {v_i = p2}
  std::vector<std::vector<int>> facet_sets;
  for (int i = 0; i < n; ++i) {
    std::vector<int> zero, high;
    for (size_t k = 0; k < V; ++k) {
      if (coords[k][static_cast<size_t>(i)] == 0) zero.push_back(static_cast<int>(k));
      if (coords[k][static_cast<size_t>(i)] == p2) high.push_back(static_cast<int>(k));
    }
    if (!zero.empty()) facet_sets.push_back(std::move(zero));
    if (!high.empty()) facet_sets.push_back(std::move(high));
  }

  // faces are the nonempty intersections of facet sets; close under
  // pairwise intersection starting from the whole vertex set
  std::set<std::vector<int>> face_sets;
  std::vector<int> all(V);
  for (size_t k = 0; k < V; ++k) all[k] = static_cast<int>(k);
  face_sets.insert(all);
  std::vector<std::vector<int>> queue{all};
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& fs : facet_sets) {
      std::vector<int> next;
      std::set_intersection(cur.begin(), cur.end(), fs.begin(), fs.end(),
                            std::back_inserter(next));
      if (next.empty()) continue;
      if (face_sets.insert(next).second) queue.push_back(next);
    }
  }

  std::vector<std::pair<std::vector<int>, int>> cells;
  for (const auto& fs : face_sets) {
    // only one coordinate can be pinned at p2 on a face (d*p1 < p2)
    int pinned_high = 0;
    for (int i = 0; i < n; ++i) {
      bool all_high = true;
      for (int k : fs)
        if (coords[static_cast<size_t>(k)][static_cast<size_t>(i)] != p2) { all_high = false; break; }
      if (all_high) ++pinned_high;
    }
    if (pinned_high > 1)
      throw std::logic_error("permutohedron_complex: face pins two coordinates at p2");

    int fdim = 0;
    if (fs.size() > 1) {
      std::vector<std::vector<BigInt>> diff;
      for (size_t t = 1; t < fs.size(); ++t) {
        std::vector<BigInt> row(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
          row[static_cast<size_t>(i)] =
              coords[static_cast<size_t>(fs[t])][static_cast<size_t>(i)] -
              coords[static_cast<size_t>(fs[0])][static_cast<size_t>(i)];
        diff.push_back(std::move(row));
      }
      fdim = rank_rational(std::move(diff));
    }
    cells.emplace_back(fs, fdim);
  }
  return LabeledComplex(n, std::move(labels), std::move(cells));
}

LabeledComplex glued_complex(const SpecialIdealParams& params) {
  const int n = params.vars();
  if (params.factors() != 2 || params.a(1) != 1 || params.a(2) != 1 ||
      params.ell(1) != n || params.ell(2) != n)
    throw std::invalid_argument(
        "glued_complex: supported only for two full-support factors with a = (1, 1)");
  const BigInt& p1 = params.p(1);
  const BigInt& p2 = params.p(2);

  LabeledComplex pi = permutohedron_complex(n, 1, p1, p2);

  std::vector<Monomial> labels = pi.vertex_labels();
  std::vector<std::pair<std::vector<int>, int>> cells;
  for (const auto& f : pi.faces()) cells.emplace_back(f.verts, f.dim);

  for (int j = 0; j < n; ++j) {
    // apex x_j^(p1+p2) plus the facet {v_j = p2}
    std::vector<BigInt> e(static_cast<size_t>(n), BigInt(0));
    e[static_cast<size_t>(j)] = p1 + p2;
    int apex = static_cast<int>(labels.size());
    labels.emplace_back(std::move(e));

    std::vector<int> base;
    for (size_t k = 0; k < pi.vertex_labels().size(); ++k)
      if (pi.vertex_labels()[k].exponent(j) == p2) base.push_back(static_cast<int>(k));

    // all simplex faces through the apex; the rest already lie in the
    // permutohedron
    const size_t bsz = base.size();
    for (std::uint64_t mask = 0; mask < (1ULL << bsz); ++mask) {
      std::vector<int> verts{apex};
      for (size_t t = 0; t < bsz; ++t)
        if (mask & (1ULL << t)) verts.push_back(base[t]);
      int fdim = static_cast<int>(verts.size()) - 1;
      cells.emplace_back(std::move(verts), fdim);
    }
  }
  return LabeledComplex(n, std::move(labels), std::move(cells));
}

namespace {

// Homology of the subcomplex of faces whose label divides x^b, computed on
// the order complex of its face poset (the barycentric subdivision).
std::vector<std::int64_t> truncation_homology(const LabeledComplex& C,
                                              const std::vector<std::int64_t>& b,
                                              FieldChar F) {
  std::vector<int> elems;
  for (size_t f = 0; f < C.faces().size(); ++f) {
    bool below = true;
    for (int i = 0; i < C.vars(); ++i)
      if (C.faces()[f].label.exponent(i) > b[static_cast<size_t>(i)]) { below = false; break; }
    if (below) elems.push_back(static_cast<int>(f));
  }
  SimplicialComplex chains;
  if (elems.empty()) return {};
  chains.add_face({});

  const size_t m = elems.size();
  std::vector<std::vector<int>> above(m);
  for (size_t x = 0; x < m; ++x) {
    const auto& vx = C.faces()[static_cast<size_t>(elems[x])].verts;
    for (size_t y = 0; y < m; ++y) {
      const auto& vy = C.faces()[static_cast<size_t>(elems[y])].verts;
      if (vx.size() < vy.size() &&
          std::includes(vy.begin(), vy.end(), vx.begin(), vx.end()))
        above[x].push_back(static_cast<int>(y));
    }
  }
  std::vector<int> chain;
  auto dfs = [&](auto&& self, int last) -> void {
    chains.add_face(std::vector<int>(chain.begin(), chain.end()));
    for (int nxt : above[static_cast<size_t>(last)]) {
      chain.push_back(nxt);
      self(self, nxt);
      chain.pop_back();
    }
  };
  for (size_t x = 0; x < m; ++x) {
    chain.assign(1, static_cast<int>(x));
    dfs(dfs, static_cast<int>(x));
  }
  return reduced_homology(chains, F);
}

}  // namespace

std::optional<std::vector<std::int64_t>> resolution_witness(const LabeledComplex& C,
                                                            FieldChar F) {
  const int n = C.vars();
  Monomial top = C.label_lcm();
  std::vector<std::int64_t> box(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    box[static_cast<size_t>(i)] = to_int64(top.exponent(i), "resolution_witness box");

  std::vector<std::int64_t> b(static_cast<size_t>(n), 0);
  while (true) {
    auto dims = truncation_homology(C, b, F);
    for (auto h : dims)
      if (h != 0) return b;
    int pos = n - 1;  // lexicographic: last coordinate fastest
    while (pos >= 0 && b[static_cast<size_t>(pos)] == box[static_cast<size_t>(pos)]) {
      b[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++b[static_cast<size_t>(pos)];
  }
  return std::nullopt;
}

bool supports_resolution(const LabeledComplex& C, FieldChar F) {
  return !resolution_witness(C, F).has_value();
}

bool is_minimal_cellular(const LabeledComplex& C) {
  for (const auto& f : C.faces())
    for (int g : f.subfaces)
      if (C.faces()[static_cast<size_t>(g)].label == f.label) return false;
  return true;
}

GradedBettiTable cellular_betti(const LabeledComplex& C) {
  if (!is_minimal_cellular(C))
    throw std::domain_error("cellular_betti: complex is not minimal");
  if (!supports_resolution(C, FieldChar::rationals()))
    throw std::domain_error("cellular_betti: complex does not support a resolution");
  GradedBettiTable T;
  for (const auto& f : C.faces()) T.add(f.dim + 1, f.label.degree(), 1);
  return T;
}

std::string render_dump(const LabeledComplex& C) {
  std::string out;
  for (const auto& f : C.faces()) {
    out += std::to_string(f.dim);
    out += '\t';
    for (size_t t = 0; t < f.verts.size(); ++t) {
      if (t) out += ',';
      out += std::to_string(f.verts[t]);
    }
    out += '\t';
    out += to_text(f.label);
    out += '\n';
  }
  return out;
}

}  // namespace spborel
