#pragma once

#include "assoc/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace assoc {

using Index = std::uint64_t;

/// Sparse vector of exact rationals. Zero entries are never stored.
class SparseVector {
public:
  using Storage = std::map<Index, Rational>;

  SparseVector() = default;
  explicit SparseVector(Storage entries);

  /// Builds a vector from a dense list, dropping zeros.
  static SparseVector from_dense(std::span<const Rational> values);

  const Rational& get(Index i) const;
  void set(Index i, const Rational& v);
  /// this[i] += v
  void add_at(Index i, const Rational& v);
  /// this += scale * other
  void axpy(const Rational& scale, const SparseVector& other);
  void scale(const Rational& s);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Index leading() const { return entries_.begin()->first; }
  const Storage& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Rational dot(const SparseVector& other) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
  Storage entries_;
};

/// Row-major sparse matrix; every stored column index is < ncols.
class SparseMatrix {
public:
  SparseMatrix() = default;
  explicit SparseMatrix(Index ncols) : ncols_(ncols) {}
  SparseMatrix(Index ncols, std::vector<SparseVector> rows);

  void push_row(SparseVector row);

  Index ncols() const { return ncols_; }
  std::size_t nrows() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const SparseVector& row(std::size_t r) const { return rows_[r]; }

  /// Matrix-vector product; the result is indexed by row number.
  SparseVector apply(const SparseVector& x) const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
  Index ncols_ = 0;
  std::vector<SparseVector> rows_;
};

struct RrefResult {
  SparseMatrix echelon;
  std::vector<Index> pivots;
};

/// Reduced row-echelon form. Rows are consumed in insertion order and each
/// pivot is the first nonzero column of its row; output rows are sorted by
/// pivot and have leading coefficient 1.
RrefResult rref(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);

/// Null-space basis: one vector per free column in increasing order, with
/// that column set to 1 and the other free columns set to 0.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// Solves a * x = b. Returns the solution whose non-pivot coordinates are
/// all zero, or nullopt when the system is inconsistent. `b` is indexed by
/// row number.
std::optional<SparseVector> solve_affine(const SparseMatrix& a, const SparseVector& b);

/// Incrementally built row echelon structure (not necessarily reduced above
/// the pivots). Every stored row has leading coefficient 1 at its pivot,
/// which is its smallest column, and pivots are pairwise distinct. Reducing
/// a vector eliminates all pivot columns in increasing order, so the result
/// is the unique representative supported on non-pivot columns.
class Echelon {
public:
  Echelon() = default;
  explicit Echelon(Index ncols);

  Index ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces `row` and stores it when the remainder is nonzero. Returns true
  /// when the rank grew.
  bool insert(SparseVector row);

  /// Stores a row whose leading column is known not to be a pivot yet. The
  /// row is normalized but not reduced.
  void insert_unchecked(SparseVector row);

  SparseVector reduce(const SparseVector& v) const;

  bool is_pivot(Index col) const;
  const std::vector<SparseVector>& rows() const { return rows_; }

private:
  static constexpr std::uint32_t kNoRow = UINT32_MAX;

  std::uint32_t row_for(Index col) const;

  Index ncols_ = 0;
  std::vector<SparseVector> rows_;
  // Dense pivot lookup for moderate column counts, hashed otherwise.
  std::vector<std::uint32_t> dense_pivot_;
  std::unordered_map<Index, std::uint32_t> sparse_pivot_;
};

}  // namespace assoc
