#include "veronese/fp_echelon.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace veronese {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("residue is not invertible");
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

}  // namespace

FpEchelon::FpEchelon(std::uint32_t p, std::size_t cols)
    : p_(p), cols_(cols), pivot_row_(cols, -1) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  const std::uint64_t square = static_cast<std::uint64_t>(p - 1) * (p - 1);
  flush_every_ = std::max<std::uint64_t>(1, (~std::uint64_t{0} - p) / square - 1);
}

std::vector<std::uint32_t> FpEchelon::reduce(std::span<const std::uint32_t> row) const {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  std::vector<std::uint64_t> acc(row.begin(), row.end());
  std::uint64_t pending = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::uint32_t coef = row[pivots_[r]] % p_;
    if (coef == 0) continue;
    const std::uint64_t m = p_ - coef;
    const std::uint32_t* src = rows_[r].data();
    std::uint64_t* dst = acc.data();
    for (std::size_t j = 0; j < cols_; ++j) dst[j] += m * src[j];
    if (++pending >= flush_every_) {
      for (auto& x : acc) x %= p_;
      pending = 0;
    }
  }
  std::vector<std::uint32_t> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = static_cast<std::uint32_t>(acc[j] % p_);
  return out;
}

bool FpEchelon::insert(std::span<const std::uint32_t> row) {
  auto residue = reduce(row);
  std::size_t c = 0;
  while (c < cols_ && residue[c] == 0) ++c;
  if (c == cols_) return false;
  const std::uint64_t inv = inverse_mod(residue[c], p_);
  for (auto& x : residue) x = static_cast<std::uint32_t>(x * inv % p_);
  for (auto& stored : rows_) {
    const std::uint32_t f = stored[c];
    if (f == 0) continue;
    const std::uint64_t m = p_ - f;
    for (std::size_t j = 0; j < cols_; ++j)
      if (residue[j] != 0) stored[j] = static_cast<std::uint32_t>((stored[j] + m * residue[j]) % p_);
  }
  pivot_row_[c] = static_cast<std::int64_t>(rows_.size());
  pivots_.push_back(c);
  rows_.push_back(std::move(residue));
  return true;
}

bool FpEchelon::contains(std::span<const std::uint32_t> row) const {
  const auto residue = reduce(row);
  return std::all_of(residue.begin(), residue.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<std::size_t> FpEchelon::sorted_pivots() const {
  auto out = pivots_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> FpEchelon::sorted_rows() const {
  std::vector<std::vector<std::uint32_t>> out;
  for (auto c : sorted_pivots()) out.push_back(rows_[static_cast<std::size_t>(pivot_row_[c])]);
  return out;
}

std::vector<std::vector<std::uint32_t>> FpEchelon::kernel() const {
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (pivot_row_[free] >= 0) continue;
    std::vector<std::uint32_t> v(cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::uint32_t x = rows_[r][free];
      if (x != 0) v[pivots_[r]] = p_ - x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<std::uint32_t>> fp_kernel(std::uint32_t p, std::size_t cols,
                                                  const std::vector<std::vector<std::uint32_t>>& rows) {
  FpEchelon ech(p, cols);
  for (const auto& r : rows) {
    ech.insert(r);
    if (ech.rank() == cols) break;
  }
  return ech.kernel();
}

}  // namespace veronese
