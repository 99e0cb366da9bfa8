#include "spborel/betti_table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spborel {

GradedBettiTable::GradedBettiTable() { entries_[{0, BigInt(0)}] = 1; }

void GradedBettiTable::add(int i, const BigInt& d, const BigInt& count) {
  if (i < 1) throw std::invalid_argument("GradedBettiTable::add: i must be >= 1");
  if (d < 0) throw std::invalid_argument("GradedBettiTable::add: d must be >= 0");
  if (count < 0) throw std::invalid_argument("GradedBettiTable::add: negative count");
  if (count == 0) return;
  entries_[{i, d}] += count;
}

BigInt GradedBettiTable::get(int i, const BigInt& d) const {
  auto it = entries_.find({i, d});
  return it == entries_.end() ? BigInt(0) : it->second;
}

int GradedBettiTable::pdim() const { return entries_.rbegin()->first.first; }

bool GradedBettiTable::has_entries_at(int i) const {
  auto it = entries_.lower_bound({i, BigInt(0)});
  return it != entries_.end() && it->first.first == i;
}

BigInt GradedBettiTable::min_shift(int i) const {
  auto it = entries_.lower_bound({i, BigInt(0)});
  if (it == entries_.end() || it->first.first != i)
    throw std::invalid_argument("min_shift: no entries at homological degree " + std::to_string(i));
  return it->first.second;
}

BigInt GradedBettiTable::max_shift(int i) const {
  auto it = entries_.lower_bound({i + 1, BigInt(0)});
  if (it == entries_.begin()) throw std::invalid_argument("max_shift: no entries");
  --it;
  if (it->first.first != i)
    throw std::invalid_argument("max_shift: no entries at homological degree " + std::to_string(i));
  return it->first.second;
}

BigInt GradedBettiTable::total(int i) const {
  BigInt t = 0;
  for (auto it = entries_.lower_bound({i, BigInt(0)});
       it != entries_.end() && it->first.first == i; ++it)
    t += it->second;
  return t;
}

std::vector<BigInt> GradedBettiTable::totals() const {
  std::vector<BigInt> out(static_cast<size_t>(pdim()) + 1, BigInt(0));
  for (const auto& [key, count] : entries_) out[static_cast<size_t>(key.first)] += count;
  return out;
}

BigInt GradedBettiTable::regularity_quotient() const {
  BigInt reg = 0;
  for (const auto& [key, count] : entries_) {
    (void)count;
    BigInt v = key.second - key.first;
    if (v > reg) reg = v;
  }
  return reg;
}

TableStats regularity_and_pdim(const GradedBettiTable& T) {
  TableStats s;
  s.reg_quotient = T.regularity_quotient();
  s.reg_ideal = s.reg_quotient + 1;
  s.pdim = T.pdim();
  return s;
}

void MultigradedBettiTable::add(int i, const Multidegree& b, std::int64_t count) {
  if (static_cast<int>(b.size()) != n_)
    throw std::invalid_argument("MultigradedBettiTable::add: wrong multidegree length");
  if (count < 0) throw std::invalid_argument("MultigradedBettiTable::add: negative count");
  if (count == 0) return;
  entries_[{i, b}] += count;
}

std::int64_t MultigradedBettiTable::get(int i, const Multidegree& b) const {
  auto it = entries_.find({i, b});
  return it == entries_.end() ? 0 : it->second;
}

GradedBettiTable coarse_table(const MultigradedBettiTable& M) {
  GradedBettiTable T;
  for (const auto& [key, count] : M.entries()) {
    const auto& [i, b] = key;
    if (i == 0) continue;  // the fixed (0,0) entry is already present
    BigInt d = 0;
    for (auto e : b) d += e;
    T.add(i, d, count);
  }
  return T;
}

std::string render_diagram(const GradedBettiTable& T) {
  int cols = T.pdim() + 1;
  std::int64_t min_row = 0, max_row = 0;
  for (const auto& [key, count] : T.entries()) {
    (void)count;
    std::int64_t r = to_int64(key.second - key.first, "diagram row");
    max_row = std::max(max_row, r);
    min_row = std::min(min_row, r);
  }
  std::int64_t rows = max_row - min_row + 1;

  // cell text: row r, column i holds beta_{i, i+r}
  std::vector<std::string> header(static_cast<size_t>(cols));
  std::vector<std::vector<std::string>> grid(
      static_cast<size_t>(rows), std::vector<std::string>(static_cast<size_t>(cols), "."));
  for (int i = 0; i < cols; ++i) {
    std::ostringstream t;
    t << T.total(i);
    header[static_cast<size_t>(i)] = t.str();
  }
  for (const auto& [key, count] : T.entries()) {
    std::int64_t r = to_int64(key.second - key.first, "diagram row") - min_row;
    std::ostringstream c;
    c << count;
    grid[static_cast<size_t>(r)][static_cast<size_t>(key.first)] = c.str();
  }

  std::vector<size_t> width(static_cast<size_t>(cols), 1);
  for (int i = 0; i < cols; ++i) {
    width[static_cast<size_t>(i)] = header[static_cast<size_t>(i)].size();
    for (std::int64_t r = 0; r < rows; ++r)
      width[static_cast<size_t>(i)] =
          std::max(width[static_cast<size_t>(i)], grid[static_cast<size_t>(r)][static_cast<size_t>(i)].size());
  }

  size_t label_width = std::max<size_t>(std::to_string(max_row).size() + 1, 6);
  for (std::int64_t r = 0; r < rows; ++r)
    label_width = std::max(label_width, std::to_string(r + min_row).size() + 1);
  auto emit_row = [&](const std::string& label, const std::vector<std::string>& cells) {
    std::ostringstream line;
    line << std::string(label_width - label.size(), ' ') << label;
    for (int i = 0; i < cols; ++i) {
      const std::string& cell = cells[static_cast<size_t>(i)];
      line << ' ' << std::string(width[static_cast<size_t>(i)] - cell.size(), ' ') << cell;
    }
    return line.str();
  };

  std::ostringstream out;
  out << emit_row("total:", header) << '\n';
  for (std::int64_t r = 0; r < rows; ++r)
    out << emit_row(std::to_string(r + min_row) + ":", grid[static_cast<size_t>(r)]) << '\n';
  return out.str();
}

std::string render_tsv(const GradedBettiTable& T) {
  std::ostringstream out;
  for (const auto& [key, count] : T.entries())
    out << key.first << '\t' << key.second << '\t' << count << '\n';
  return out.str();
}

std::string render_tsv(const MultigradedBettiTable& M) {
  std::ostringstream out;
  for (const auto& [key, count] : M.entries()) {
    out << key.first << '\t';
    for (size_t j = 0; j < key.second.size(); ++j) {
      if (j) out << ',';
      out << key.second[j];
    }
    out << '\t' << count << '\n';
  }
  return out.str();
}

GradedBettiTable parse_tsv(const std::string& text) {
  GradedBettiTable T;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int i;
    std::string d_str, c_str;
    if (!(ls >> i >> d_str >> c_str))
      throw std::invalid_argument("parse_tsv: malformed line \"" + line + "\"");
    BigInt d(d_str), c(c_str);
    if (i == 0) {
      if (d != 0 || c != 1)
        throw std::invalid_argument("parse_tsv: row at i=0 must be (0,0) -> 1");
      continue;
    }
    T.add(i, d, c);
  }
  return T;
}

}  // namespace spborel
