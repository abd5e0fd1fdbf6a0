#include "vexillar/partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace vexillar {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("Partition: zero part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be non-increasing");
  }
}

unsigned Partition::degree() const {
  unsigned d = 0;
  for (unsigned p : parts_) d += p;
  return d;
}

unsigned Partition::part(std::size_t t) const {
  return t >= 1 && t <= parts_.size() ? parts_[t - 1] : 0;
}

Partition Partition::transpose() const {
  if (parts_.empty()) return Partition();
  std::vector<unsigned> cols(parts_[0]);
  for (unsigned p : parts_)
    for (unsigned j = 0; j < p; ++j) ++cols[j];
  return Partition(std::move(cols));
}

unsigned kappa_t(const Partition& mu, unsigned t) {
  if (t == 0) throw std::invalid_argument("kappa_t: t must be >= 1");
  // Boxes in columns t, t+1, ...: each row of length p contributes the part
  // of it weakly right of column t.
  unsigned s = 0;
  for (std::size_t k = 1; k <= mu.depth(); ++k) {
    const unsigned p = mu.part(k);
    if (p >= t) s += p - (t - 1);
  }
  return s;
}

bool shape_in_ideal(const Partition& sigma, const Partition& mu) {
  const unsigned tmax = std::max(sigma.part(1), mu.part(1));  // widths
  for (unsigned t = 1; t <= tmax; ++t)
    if (kappa_t(sigma, t) < kappa_t(mu, t)) return false;
  return true;
}

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (rows_.size() != shape_.depth())
    throw std::invalid_argument("Tableau: row count mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].size() != shape_.parts()[i])
      throw std::invalid_argument("Tableau: row length mismatch");
}

int Tableau::at(std::size_t row, std::size_t col) const {
  return rows_.at(row).at(col);
}

std::vector<int> Tableau::column(std::size_t col) const {
  std::vector<int> out;
  for (const auto& row : rows_)
    if (col < row.size()) out.push_back(row[col]);
  return out;
}

bool Tableau::is_standard() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0 && rows_[i][j] < rows_[i][j - 1]) return false;
      if (i > 0 && j < rows_[i - 1].size() && rows_[i][j] <= rows_[i - 1][j])
        return false;
    }
  }
  return true;
}

std::vector<std::pair<int, std::size_t>> Tableau::content() const {
  std::map<int, std::size_t> counts;
  for (const auto& row : rows_)
    for (int v : row) ++counts[v];
  return {counts.begin(), counts.end()};
}

namespace {

void fill_standard(const Partition& shape, int max_entry,
                   std::vector<std::vector<int>>& rows, std::size_t i,
                   std::size_t j, std::vector<Tableau>& out) {
  if (i == rows.size()) {
    out.emplace_back(shape, rows);
    return;
  }
  const std::size_t ni = j + 1 < rows[i].size() ? i : i + 1;
  const std::size_t nj = j + 1 < rows[i].size() ? j + 1 : 0;
  int lo = 1;
  if (j > 0) lo = std::max(lo, rows[i][j - 1]);             // row non-decreasing
  if (i > 0 && j < rows[i - 1].size())
    lo = std::max(lo, rows[i - 1][j] + 1);                  // column increasing
  for (int v = lo; v <= max_entry; ++v) {
    rows[i][j] = v;
    fill_standard(shape, max_entry, rows, ni, nj, out);
  }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& shape, int max_entry) {
  std::vector<Tableau> out;
  if (shape.depth() == 0) {
    out.emplace_back(shape, std::vector<std::vector<int>>{});
    return out;
  }
  std::vector<std::vector<int>> rows;
  for (unsigned p : shape.parts()) rows.emplace_back(p, 0);
  fill_standard(shape, max_entry, rows, 0, 0, out);
  return out;
}

bool has_violation(const Tableau& t) {
  const std::size_t ncols = t.shape().depth() ? t.shape().parts()[0] : 0;
  std::vector<std::set<int>> cols(ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    for (int v : t.column(c)) cols[c].insert(v);
  }
  for (std::size_t c1 = 0; c1 < ncols; ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < ncols; ++c2) {
      for (int v : cols[c1]) {
        if (!cols[c2].count(v)) continue;
        std::size_t repeated = 0, absent = 0;
        for (int u = 1; u < v; ++u) {
          const bool in1 = cols[c1].count(u) > 0;
          const bool in2 = cols[c2].count(u) > 0;
          if (in1 && in2) ++repeated;
          if (!in1 && !in2) ++absent;
        }
        if (repeated >= absent) return true;
      }
    }
  }
  return false;
}

}  // namespace vexillar
