#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stight/tightness.hpp"

namespace stight {

using IntVector = std::vector<std::int64_t>;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  explicit IntMatrix(const SignMatrix& m);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Exact product; throws OverflowError.
  IntVector multiply(std::span<const std::int64_t> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Basis of ker(M) intersected with Z^n, in row Hermite normal form and then
/// sorted lexicographically. Each vector is primitive.
struct KernelBasis {
  std::size_t ambient = 0;
  std::vector<IntVector> vectors;
};

KernelBasis integer_kernel_basis(const IntMatrix& m);
KernelBasis integer_kernel_basis(const SignMatrix& m);

/// True iff v is an integer combination of the basis vectors.
bool in_lattice(const KernelBasis& basis, std::span<const std::int64_t> v);

/// Residue-class indicators for CyclePower(n,k): chi_i has a 1 at vertex p
/// iff p+1 = i mod gcd(n,k), for i = 1..gcd(n,k). Requires 1 <= k, 2k < n.
std::vector<IntVector> chi_vectors(std::size_t n, std::size_t k);

/// All x with 0 <= x_j <= bound and M x = 0, sorted.
std::vector<IntVector> nonnegative_kernel_vectors(const SignMatrix& m, std::int64_t bound);

}  // namespace stight
