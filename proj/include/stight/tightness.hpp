#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stight/digraph.hpp"

namespace stight {

struct VertexProfile {
  std::size_t out1 = 0;  // |N+1(v)|
  std::size_t out2 = 0;  // |N+2(v)|
  std::size_t in1 = 0;   // |N-1(v)|
  std::size_t in2 = 0;   // |N-2(v)|
  friend bool operator==(const VertexProfile&, const VertexProfile&) = default;
};

/// Per-vertex first/second neighbourhood sizes. Deficiencies are signed and
/// never clamped.
class NeighbourhoodProfile {
 public:
  NeighbourhoodProfile() = default;
  explicit NeighbourhoodProfile(std::vector<VertexProfile> records)
      : records_(std::move(records)) {}

  std::size_t order() const { return records_.size(); }
  const VertexProfile& at(Vertex v) const { return records_.at(v); }
  std::span<const VertexProfile> records() const { return records_; }

  /// out1 - out2.
  std::int64_t seymour_deficiency(Vertex v) const;
  /// in1 - out2.
  std::int64_t sullivan_deficiency(Vertex v) const;
  std::vector<std::int64_t> seymour_deficiencies() const;
  std::vector<std::int64_t> sullivan_deficiencies() const;

  friend bool operator==(const NeighbourhoodProfile&,
                         const NeighbourhoodProfile&) = default;

 private:
  std::vector<VertexProfile> records_;
};

NeighbourhoodProfile profile(const Digraph& d);

/// Seymour deficiency >= 0 everywhere.
bool is_seymour_orientation(const Orientation& d);
/// Seymour deficiency == 0 everywhere.
bool is_seymour_tight(const Orientation& d);
/// Seymour deficiency > 0 everywhere.
bool is_seymour_counterexample(const Orientation& d);
/// Sullivan deficiency == 0 everywhere.
bool is_sullivan_tight(const Orientation& d);

enum class SignKind { seymour, sullivan };

/// Dense row-major n x n matrix with entries in {-1, 0, 1} and zero diagonal.
class SignMatrix {
 public:
  SignMatrix() = default;
  /// Validates the entry range and the zero diagonal (InputError).
  SignMatrix(std::size_t n, SignKind kind, std::vector<std::int8_t> entries);

  std::size_t size() const { return n_; }
  SignKind kind() const { return kind_; }
  int at(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }
  std::span<const std::int8_t> row(std::size_t r) const {
    return std::span<const std::int8_t>(entries_).subspan(r * n_, n_);
  }
  std::span<const std::int8_t> entries() const { return entries_; }

  /// Exact product M x.
  std::vector<std::int64_t> multiply(std::span<const std::int64_t> x) const;
  /// M 1.
  std::vector<std::int64_t> row_sums() const;
  SignMatrix transpose() const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t n_ = 0;
  SignKind kind_ = SignKind::seymour;
  std::vector<std::int8_t> entries_;
};

/// +1 on N+1(v), -1 on N+2(v).
SignMatrix seymour_matrix(const Orientation& d);
/// +1 on N+2(v) \ N-1(v), -1 on N-1(v) \ N+2(v); zero on the intersection.
SignMatrix sullivan_matrix(const Orientation& d);

}  // namespace stight
