#include "spborel/mapcone.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spborel {

const GradedBettiTable& OracleCache::table(const MonomialIdeal& I, FieldChar F) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto key = std::make_pair(I, F.value);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, betti_table(I, F)).first;
  return it->second;
}

GradedBettiTable mapping_cone_table(const GradedBettiTable& Tprev,
                                    const GradedBettiTable& Tcolon, const BigInt& degm) {
  GradedBettiTable out;
  for (const auto& [key, count] : Tprev.entries()) {
    if (key.first == 0) continue;
    out.add(key.first, key.second, count);
  }
  // the colon resolution enters shifted by one homological degree and by
  // the degree of the added generator; its (0,0) entry is the generator
  for (const auto& [key, count] : Tcolon.entries())
    out.add(key.first + 1, key.second + degm, count);
  return out;
}

namespace {

std::optional<std::pair<int, BigInt>> first_difference(const GradedBettiTable& A,
                                                       const GradedBettiTable& B) {
  auto ia = A.entries().begin(), ib = B.entries().begin();
  while (ia != A.entries().end() || ib != B.entries().end()) {
    if (ib == B.entries().end() || (ia != A.entries().end() && ia->first < ib->first)) {
      return ia->first;
    }
    if (ia == A.entries().end() || ib->first < ia->first) {
      return ib->first;
    }
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

void check_entrywise_geq(const GradedBettiTable& predicted, const GradedBettiTable& actual) {
  for (const auto& [key, count] : actual.entries())
    if (predicted.get(key.first, key.second) < count)
      throw std::logic_error("mapping cone: predicted table below the actual table");
}

}  // namespace

std::vector<MapconeStep> iterated_mapcone(const std::vector<Monomial>& gens, FieldChar F,
                                          OracleCache* cache) {
  if (gens.size() < 2)
    throw std::invalid_argument("iterated_mapcone: need at least two generators");
  const int n = gens.front().vars();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j)
      if (i != j && divides(gens[i], gens[j]))
        throw std::invalid_argument("iterated_mapcone: generators are not an antichain");

  OracleCache local;
  OracleCache& oracle = cache ? *cache : local;

  std::vector<MapconeStep> steps;
  std::vector<Monomial> prefix{gens[0]};
  MonomialIdeal prev(n, prefix);
  for (size_t i = 1; i < gens.size(); ++i) {
    const Monomial& m = gens[i];
    MonomialIdeal quot = colon(prev, m);
    prefix.push_back(m);
    MonomialIdeal next(n, prefix);

    const GradedBettiTable& Tprev = oracle.table(prev, F);
    const GradedBettiTable& Tcolon = oracle.table(quot, F);
    const GradedBettiTable& Tnext = oracle.table(next, F);
    GradedBettiTable predicted = mapping_cone_table(Tprev, Tcolon, m.degree());
    check_entrywise_geq(predicted, Tnext);

    MapconeStep step{static_cast<int>(i) + 1, m,          predicted,
                     Tnext,                   true,        std::nullopt};
    step.first_discrepancy = first_difference(predicted, Tnext);
    step.minimal = !step.first_discrepancy.has_value();
    steps.push_back(std::move(step));
    prev = next;
  }
  return steps;
}

AllOrdersReport all_orders_check(const MonomialIdeal& I, FieldChar F, OracleCache* cache) {
  const size_t r = I.gen_count();
  if (r > 9) throw std::invalid_argument("all_orders_check: more than 9 generators");
  if (r < 2) throw std::invalid_argument("all_orders_check: need at least two generators");

  OracleCache local;
  OracleCache& oracle = cache ? *cache : local;

  AllOrdersReport report;
  std::vector<int> perm(r);
  for (size_t i = 0; i < r; ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<Monomial> ordered;
    ordered.reserve(r);
    for (int idx : perm) ordered.push_back(I.gens()[static_cast<size_t>(idx)]);
    auto steps = iterated_mapcone(ordered, F, &oracle);

    OrderingRow row;
    row.perm.reserve(r);
    for (int idx : perm) row.perm.push_back(idx + 1);
    for (const auto& s : steps) {
      if (!s.minimal) { row.first_bad_step = s.step; break; }
    }
    if (!row.first_bad_step) ++report.minimal_orderings;
    ++report.total;
    report.rows.push_back(std::move(row));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return report;
}

std::string render_report(const AllOrdersReport& report) {
  std::ostringstream out;
  for (const auto& row : report.rows) {
    for (size_t i = 0; i < row.perm.size(); ++i) {
      if (i) out << ',';
      out << row.perm[i];
    }
    out << '\t';
    if (row.first_bad_step)
      out << *row.first_bad_step;
    else
      out << "ok";
    out << '\n';
  }
  out << report.minimal_orderings << " / " << report.total << " orderings minimal\n";
  return out.str();
}

std::vector<std::pair<int, MultigradedBettiTable::Multidegree>> common_multidegree_shifts(
    const MultigradedBettiTable& M1, const MultigradedBettiTable& M2,
    const MultigradedBettiTable::Multidegree& offset) {
  if (static_cast<int>(offset.size()) != M1.vars() || M1.vars() != M2.vars())
    throw std::invalid_argument("common_multidegree_shifts: mismatched ambient dimension");
  std::vector<std::pair<int, MultigradedBettiTable::Multidegree>> out;
  for (const auto& [key, count] : M1.entries()) {
    (void)count;
    const auto& [i, b] = key;
    if (i < 1) continue;
    MultigradedBettiTable::Multidegree shifted(b.size());
    bool ok = true;
    for (size_t t = 0; t < b.size(); ++t) {
      shifted[t] = b[t] - offset[t];
      if (shifted[t] < 0) { ok = false; break; }
    }
    if (ok && M2.get(i, shifted) > 0) out.emplace_back(i, b);
  }
  return out;
}

}  // namespace spborel
