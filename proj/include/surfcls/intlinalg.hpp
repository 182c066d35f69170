#pragma once

// Exact integer matrices, Smith normal form and finitely generated abelian
// groups.  Arithmetic is int64 with overflow checks (Error Overflow).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace surfcls {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  // Row-major; throws DimensionMismatch on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntMatrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> a_;
};

// Checked product; DimensionMismatch / Overflow.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Nonzero invariant factors d1 | d2 | ... (all positive).
std::vector<std::int64_t> smith_normal_form(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

struct FgAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;  // each >= 2, dividing the next

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
};

// Z^ambient_rank modulo the column space of m (m has ambient_rank rows).
FgAbelianGroup cokernel(std::size_t ambient_rank, const IntMatrix& m);

// "0", "Z", "Z^2", "Z/2", "Z (+) Z/2", ...
std::string group_format(const FgAbelianGroup& g);

}  // namespace surfcls
