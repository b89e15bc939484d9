#include "reflcat/ff/sparse.hpp"

#include <algorithm>
#include <string>

#include "reflcat/error.hpp"

namespace reflcat::ff {

SparseRow normalize_row(const PrimeField& f, SparseRow row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  SparseRow out;
  for (const auto& e : row) {
    const Residue v = e.val % f.p();
    if (!out.empty() && out.back().col == e.col)
      out.back().val = f.add(out.back().val, v);
    else
      out.push_back({e.col, v});
    if (out.back().val == 0) out.pop_back();
  }
  return out;
}

SparseEliminator::SparseEliminator(const PrimeField& f, std::size_t cols, std::size_t memory_budget)
    : field_(f), cols_(cols), budget_(memory_budget), pivot_rows_(cols), acc_(cols, 0) {
  if (budget_ && memory_bytes() > budget_)
    throw ResourceError("sparse elimination over " + std::to_string(cols) + " columns needs " +
                        std::to_string(memory_bytes()) + " bytes, budget " + std::to_string(budget_));
}

std::size_t SparseEliminator::memory_bytes() const {
  return cols_ * (sizeof(Residue) + sizeof(SparseRow)) + stored_entries_ * sizeof(SparseEntry);
}

SparseRow SparseEliminator::reduce(const SparseRow& row) {
  for (const auto& e : row) {
    if (e.col >= cols_) throw StructuralError("sparse entry column out of range");
    if (acc_[e.col] == 0) heap_.push(e.col);
    acc_[e.col] = field_.add(acc_[e.col], e.val % field_.p());
  }
  while (!heap_.empty()) {
    const std::uint32_t c = heap_.top();
    heap_.pop();
    const Residue lead = acc_[c];
    if (lead == 0) continue;
    const SparseRow& piv = pivot_rows_[c];
    if (piv.empty()) {
      // New leading column: drain the rest.
      SparseRow out{{c, lead}};
      acc_[c] = 0;
      while (!heap_.empty()) {
        const std::uint32_t d = heap_.top();
        heap_.pop();
        if (acc_[d] == 0) continue;
        out.push_back({d, acc_[d]});
        acc_[d] = 0;
      }
      return out;
    }
    const Residue m = field_.neg(lead);
    for (const auto& e : piv) {
      if (acc_[e.col] == 0 && e.col != c) heap_.push(e.col);
      acc_[e.col] = field_.add(acc_[e.col], field_.mul(m, e.val));
    }
  }
  return {};
}

bool SparseEliminator::add_row(const SparseRow& row) {
  SparseRow r = reduce(row);
  if (r.empty()) return false;
  const Residue inv = field_.inv(r.front().val);
  for (auto& e : r) e.val = field_.mul(e.val, inv);
  stored_entries_ += r.size();
  pivot_rows_[r.front().col] = std::move(r);
  ++rank_;
  if (budget_ && memory_bytes() > budget_)
    throw ResourceError("sparse elimination exceeded memory budget of " + std::to_string(budget_) +
                        " bytes at rank " + std::to_string(rank_));
  return true;
}

std::vector<std::vector<Residue>> SparseEliminator::nullspace() const {
  // Back-substitute from the last pivot so every pivot row ends up with zeros
  // in the other pivot columns.
  std::vector<SparseRow> reduced(cols_);
  std::vector<Residue> acc(cols_, 0);
  for (std::size_t c = cols_; c-- > 0;) {
    if (pivot_rows_[c].empty()) continue;
    for (const auto& e : pivot_rows_[c]) acc[e.col] = e.val;
    for (std::size_t d = c + 1; d < cols_; ++d) {
      if (acc[d] == 0 || reduced[d].empty()) continue;
      const Residue m = field_.neg(acc[d]);
      for (const auto& e : reduced[d]) acc[e.col] = field_.add(acc[e.col], field_.mul(m, e.val));
    }
    for (std::size_t d = c; d < cols_; ++d)
      if (acc[d]) {
        reduced[c].push_back({static_cast<std::uint32_t>(d), acc[d]});
        acc[d] = 0;
      }
  }
  std::vector<std::size_t> slot(cols_, cols_);
  std::vector<std::vector<Residue>> out;
  for (std::size_t j = 0; j < cols_; ++j)
    if (pivot_rows_[j].empty()) {
      slot[j] = out.size();
      out.emplace_back(cols_, 0);
      out.back()[j] = 1;
    }
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& e : reduced[c])
      if (e.col != c) out[slot[e.col]][c] = field_.neg(e.val);
  return out;
}

bool SparseEliminator::in_span(const SparseRow& row) { return reduce(row).empty(); }

std::size_t sparse_rank(const PrimeField& f, std::size_t cols, const std::vector<SparseRow>& rows) {
  SparseEliminator e(f, cols);
  for (const auto& r : rows) e.add_row(r);
  return e.rank();
}

}  // namespace reflcat::ff
