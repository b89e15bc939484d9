#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "reflcat/ff/field.hpp"

namespace reflcat::ff {

struct SparseEntry {
  std::uint32_t col;
  Residue val;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// Nonzero entries with strictly increasing columns.
using SparseRow = std::vector<SparseEntry>;

// Sorts by column, merges duplicates and drops zeros.
SparseRow normalize_row(const PrimeField& f, SparseRow row);

// Incremental row reduction over F_p. Rows are consumed one at a time and
// reduced against the pivot rows kept so far; only pivot rows are stored.
class SparseEliminator {
 public:
  // memory_budget = 0 means unbounded.
  SparseEliminator(const PrimeField& f, std::size_t cols, std::size_t memory_budget = 0);

  // Returns true when the row was independent of the rows seen so far.
  bool add_row(const SparseRow& row);
  bool in_span(const SparseRow& row);

  // Basis of {x : r.x = 0 for every row r added}, one vector per non-pivot
  // column (that coordinate 1, the other non-pivot coordinates 0).
  std::vector<std::vector<Residue>> nullspace() const;

  std::size_t rank() const { return rank_; }
  std::size_t cols() const { return cols_; }
  std::size_t memory_bytes() const;

 private:
  // Reduces row into acc_; returns the leftover row (empty when in span).
  SparseRow reduce(const SparseRow& row);

  PrimeField field_;
  std::size_t cols_;
  std::size_t budget_;
  std::size_t rank_ = 0;
  std::size_t stored_entries_ = 0;
  std::vector<SparseRow> pivot_rows_;  // indexed by leading column, monic
  std::vector<Residue> acc_;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap_;
};

std::size_t sparse_rank(const PrimeField& f, std::size_t cols, const std::vector<SparseRow>& rows);

}  // namespace reflcat::ff
