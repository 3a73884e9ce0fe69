#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace veronese {

/// Incremental reduced row echelon form over F_p on raw residues.
///
/// Stored rows are kept fully reduced against each other, so reducing a new
/// row needs only its original entries at the pivot columns as multipliers.
/// That lets the whole reduction accumulate in 64 bits and take a single
/// modulus at the end, which is what makes systems with thousands of
/// columns practical.
class FpEchelon {
 public:
  FpEchelon(std::uint32_t p, std::size_t cols);

  std::uint32_t modulus() const noexcept { return p_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Reduces `row` against the stored rows; returns the residue.
  std::vector<std::uint32_t> reduce(std::span<const std::uint32_t> row) const;

  /// Adds `row`; returns false when it was already in the row space.
  bool insert(std::span<const std::uint32_t> row);

  bool contains(std::span<const std::uint32_t> row) const;

  /// Rows sorted by pivot column: the canonical reduced echelon form.
  std::vector<std::vector<std::uint32_t>> sorted_rows() const;
  std::vector<std::size_t> sorted_pivots() const;

  /// Basis of the right null space of the inserted rows: one vector per
  /// free column, with a 1 there and zeros at the other free columns.
  std::vector<std::vector<std::uint32_t>> kernel() const;

 private:
  std::uint32_t p_;
  std::size_t cols_;
  std::uint64_t flush_every_;  // products that fit in the accumulator
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> pivot_row_;  // column -> stored row, or -1
};

/// Kernel of a row-major residue matrix (rows x cols).
std::vector<std::vector<std::uint32_t>> fp_kernel(std::uint32_t p, std::size_t cols,
                                                  const std::vector<std::vector<std::uint32_t>>& rows);

}  // namespace veronese
