#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "k3ml/exact/rational.hpp"

namespace k3ml::exact {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<BigInt>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  // Copies the strict upper triangle onto the lower one, or vice versa.
  IntMatrix symmetrized_from_upper() const;
  IntMatrix symmetrized_from_lower() const;

  // Positions (r, c), r < c, where entry (r, c) differs from (c, r).
  std::vector<std::pair<std::size_t, std::size_t>> asymmetric_positions() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

// Reads rows of comma-separated integers; blank lines and '#' comments skipped.
IntMatrix read_int_matrix_csv(const std::filesystem::path& path);
IntMatrix parse_int_matrix_csv(const std::string& text);

// Fraction-free (Bareiss) elimination with row pivoting. Throws DomainError
// for non-square input.
BigInt det_exact(const IntMatrix& m);

}  // namespace k3ml::exact
