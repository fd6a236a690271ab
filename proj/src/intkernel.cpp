#include "stight/intkernel.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "stight/constructions.hpp"
#include "stight/errors.hpp"

namespace stight {
namespace {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in kernel computation");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in kernel computation");
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// row[target] -= q * row[source], over a list of rows.
void axpy(IntVector& target, const IntVector& source, std::int64_t q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < target.size(); ++i)
    if (source[i] != 0) target[i] = add(target[i], -mul(q, source[i]));
}

// Puts `rows` into row Hermite normal form: pivots strictly increasing and
// positive, entries above a pivot in [0, pivot). Zero rows are dropped.
void hermite(std::vector<IntVector>& rows, std::size_t width) {
  std::size_t top = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < width && top < rows.size(); ++col) {
    // Euclid over the rows below `top`.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        axpy(rows[r], rows[top], floor_div(rows[r][col], rows[top][col]));
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0)
      for (auto& e : rows[top]) e = -e;
    pivots.push_back(col);
    ++top;
  }
  rows.resize(top);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t col = pivots[i];
    for (std::size_t r = 0; r < i; ++r) axpy(rows[r], rows[i], floor_div(rows[r][col], rows[i][col]));
  }
}

std::size_t leading(const IntVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

}  // namespace

IntMatrix::IntMatrix(const SignMatrix& m) : IntMatrix(m.size(), m.size()) {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = m.at(r, c);
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::multiply(std::span<const std::int64_t> x) const {
  if (x.size() != cols_) throw InputError("vector length does not match matrix");
  IntVector y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != 0) y[r] = add(y[r], mul(at(r, c), x[c]));
  return y;
}

KernelBasis integer_kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.cols();
  // Column operations on M, mirrored on U = I, stored column-wise.
  std::vector<IntVector> col(n, IntVector(m.rows())), u(n, IntVector(n, 0));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) col[c][r] = m.at(r, c);
    u[c][c] = 1;
  }
  std::size_t rank = 0;
  for (std::size_t r = 0; r < m.rows() && rank < n; ++r) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t c = rank; c < n; ++c) {
        if (col[c][r] == 0) continue;
        if (best == n || std::llabs(col[c][r]) < std::llabs(col[best][r])) best = c;
      }
      if (best == n) break;
      std::swap(col[rank], col[best]);
      std::swap(u[rank], u[best]);
      bool done = true;
      for (std::size_t c = rank + 1; c < n; ++c) {
        if (col[c][r] == 0) continue;
        const std::int64_t q = floor_div(col[c][r], col[rank][r]);
        axpy(col[c], col[rank], q);
        axpy(u[c], u[rank], q);
        if (col[c][r] != 0) done = false;
      }
      if (done) break;
    }
    if (col[rank][r] != 0) ++rank;
  }
  KernelBasis basis;
  basis.ambient = n;
  basis.vectors.assign(u.begin() + static_cast<std::ptrdiff_t>(rank), u.end());
  hermite(basis.vectors, n);
  for (const IntVector& v : basis.vectors) {
    for (std::int64_t e : m.multiply(v))
      if (e != 0) throw std::logic_error("kernel vector failed verification");
  }
  std::sort(basis.vectors.begin(), basis.vectors.end());
  return basis;
}

KernelBasis integer_kernel_basis(const SignMatrix& m) {
  return integer_kernel_basis(IntMatrix(m));
}

bool in_lattice(const KernelBasis& basis, std::span<const std::int64_t> v) {
  if (v.size() != basis.ambient) return false;
  std::vector<IntVector> rows = basis.vectors;
  hermite(rows, basis.ambient);
  IntVector rest(v.begin(), v.end());
  for (const IntVector& row : rows) {
    const std::size_t p = leading(row);
    if (rest[p] % row[p] != 0) return false;
    axpy(rest, row, rest[p] / row[p]);
  }
  return std::all_of(rest.begin(), rest.end(), [](std::int64_t e) { return e == 0; });
}

std::vector<IntVector> chi_vectors(std::size_t n, std::size_t k) {
  FamilySpec::cycle_power(n, k).validate();
  const std::size_t d = std::gcd(n, k);
  const SignMatrix s = seymour_matrix(build_family(FamilySpec::cycle_power(n, k)));
  std::vector<IntVector> out;
  for (std::size_t i = 1; i <= d; ++i) {
    IntVector chi(n, 0);
    for (std::size_t p = 0; p < n; ++p)
      if ((p + 1) % d == i % d) chi[p] = 1;
    for (std::int64_t e : s.multiply(chi))
      if (e != 0) throw TheoremViolation("residue indicator not annihilated for n=" +
                                         std::to_string(n) + " k=" + std::to_string(k));
    out.push_back(std::move(chi));
  }
  return out;
}

std::vector<IntVector> nonnegative_kernel_vectors(const SignMatrix& m, std::int64_t bound) {
  if (bound < 1) throw InputError("entry bound must be at least 1");
  const std::size_t n = m.size();
  std::vector<IntVector> rows = integer_kernel_basis(m).vectors;
  hermite(rows, n);
  std::vector<std::size_t> pivot(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) pivot[i] = leading(rows[i]);

  std::vector<IntVector> found;
  IntVector x(n, 0);
  // Columns below `end` are final once rows 0..i are fixed.
  auto final_ok = [&](std::size_t from, std::size_t end) {
    for (std::size_t c = from; c < end; ++c)
      if (x[c] < 0 || x[c] > bound) return false;
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == rows.size()) {
      found.push_back(x);
      return;
    }
    const std::size_t p = pivot[i];
    const std::int64_t h = rows[i][p];
    const std::size_t end = i + 1 < rows.size() ? pivot[i + 1] : n;
    const std::int64_t base = x[p];
    for (std::int64_t target = 0; target <= bound; ++target) {
      const std::int64_t diff = target - base;
      if (diff % h != 0) continue;
      const std::int64_t c = diff / h;
      axpy(x, rows[i], -c);
      if (final_ok(p, end)) self(self, i + 1);
      axpy(x, rows[i], c);
    }
  };
  if (rows.empty()) {
    found.push_back(x);
  } else if (final_ok(0, pivot[0])) {
    recurse(recurse, 0);
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace stight
