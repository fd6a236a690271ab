#include "stight/tightness.hpp"

#include <string>

#include "stight/errors.hpp"

namespace stight {

std::int64_t NeighbourhoodProfile::seymour_deficiency(Vertex v) const {
  const VertexProfile& r = at(v);
  return static_cast<std::int64_t>(r.out1) - static_cast<std::int64_t>(r.out2);
}

std::int64_t NeighbourhoodProfile::sullivan_deficiency(Vertex v) const {
  const VertexProfile& r = at(v);
  return static_cast<std::int64_t>(r.in1) - static_cast<std::int64_t>(r.out2);
}

std::vector<std::int64_t> NeighbourhoodProfile::seymour_deficiencies() const {
  std::vector<std::int64_t> out(order());
  for (Vertex v = 0; v < order(); ++v) out[v] = seymour_deficiency(v);
  return out;
}

std::vector<std::int64_t> NeighbourhoodProfile::sullivan_deficiencies() const {
  std::vector<std::int64_t> out(order());
  for (Vertex v = 0; v < order(); ++v) out[v] = sullivan_deficiency(v);
  return out;
}

NeighbourhoodProfile profile(const Digraph& d) {
  std::vector<VertexProfile> records(d.order());
  for (Vertex v = 0; v < d.order(); ++v) {
    records[v] = {d.out_degree(v), second_out_set(d, v).count(), d.in_degree(v),
                  second_in_set(d, v).count()};
  }
  return NeighbourhoodProfile(std::move(records));
}

namespace {

template <class Pred>
bool all_vertices(const Orientation& d, Pred pred) {
  for (Vertex v = 0; v < d.order(); ++v) {
    const auto out1 = static_cast<std::int64_t>(d.out_degree(v));
    const auto out2 = static_cast<std::int64_t>(second_out_set(d, v).count());
    if (!pred(v, out1, out2)) return false;
  }
  return true;
}

}  // namespace

bool is_seymour_orientation(const Orientation& d) {
  return all_vertices(d, [](Vertex, auto a, auto b) { return a >= b; });
}

bool is_seymour_tight(const Orientation& d) {
  return all_vertices(d, [](Vertex, auto a, auto b) { return a == b; });
}

bool is_seymour_counterexample(const Orientation& d) {
  return all_vertices(d, [](Vertex, auto a, auto b) { return a > b; });
}

bool is_sullivan_tight(const Orientation& d) {
  return all_vertices(d, [&](Vertex v, auto, auto out2) {
    return static_cast<std::int64_t>(d.in_degree(v)) == out2;
  });
}

SignMatrix::SignMatrix(std::size_t n, SignKind kind,
                       std::vector<std::int8_t> entries)
    : n_(n), kind_(kind), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw InputError("sign matrix has wrong size");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const int e = at(i, j);
      if (e < -1 || e > 1)
        throw InputError("sign matrix entry out of {-1,0,1} at row " + std::to_string(i));
      if (i == j && e != 0)
        throw InputError("sign matrix diagonal nonzero at " + std::to_string(i));
    }
  }
}

std::vector<std::int64_t> SignMatrix::multiply(
    std::span<const std::int64_t> x) const {
  if (x.size() != n_) throw InputError("vector length does not match matrix");
  std::vector<std::int64_t> y(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      const int e = entries_[i * n_ + j];
      if (e == 0) continue;
      if (__builtin_add_overflow(acc, e * x[j], &acc))
        throw OverflowError("sign matrix product overflows");
    }
    y[i] = acc;
  }
  return y;
}

std::vector<std::int64_t> SignMatrix::row_sums() const {
  return multiply(std::vector<std::int64_t>(n_, 1));
}

SignMatrix SignMatrix::transpose() const {
  std::vector<std::int8_t> t(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[j * n_ + i] = entries_[i * n_ + j];
  return SignMatrix(n_, kind_, std::move(t));
}

SignMatrix seymour_matrix(const Orientation& d) {
  const std::size_t n = d.order();
  std::vector<std::int8_t> e(n * n, 0);
  for (Vertex v = 0; v < n; ++v) {
    d.out_set(v).for_each([&](Vertex w) { e[v * n + w] = 1; });
    second_out_set(d, v).for_each([&](Vertex w) { e[v * n + w] = -1; });
  }
  return SignMatrix(n, SignKind::seymour, std::move(e));
}

SignMatrix sullivan_matrix(const Orientation& d) {
  const std::size_t n = d.order();
  std::vector<std::int8_t> e(n * n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const VertexSet out2 = second_out_set(d, v);
    const VertexSet& in1 = d.in_set(v);
    out2.for_each([&](Vertex w) {
      if (!in1.contains(w)) e[v * n + w] = 1;
    });
    in1.for_each([&](Vertex w) {
      if (!out2.contains(w)) e[v * n + w] = -1;
    });
  }
  return SignMatrix(n, SignKind::sullivan, std::move(e));
}

}  // namespace stight
