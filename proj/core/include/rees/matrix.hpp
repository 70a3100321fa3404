#pragma once

#include <optional>
#include <vector>

#include "rees/field.hpp"

namespace rees {

/// Dense row-major matrix over a field.
template <class K>
class DenseMatrix {
 public:
  using Elem = typename K::Elem;

  DenseMatrix(const K& field, std::size_t rows, std::size_t cols);

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// In-place reduced row echelon form. Columns are scanned left to right,
  /// or right to left with `reverse`; pivots are 1. Returns pivot columns
  /// in row order. Zero rows end up at the bottom.
  std::vector<std::size_t> rref(bool reverse = false);
  std::size_t rank() const;
  /// Basis of {v : A v = 0}, one vector per free column with that entry 1.
  std::vector<std::vector<Elem>> nullspace() const;
  /// A solution of A v = b with all free variables zero, or nothing.
  std::optional<std::vector<Elem>> solve(const std::vector<Elem>& b) const;

 private:
  K field_;
  std::size_t rows_, cols_;
  std::vector<Elem> data_;
};

/// Incrementally maintained row space of vectors of a fixed length, kept
/// reduced against each other. Pivots run left to right.
template <class K>
class RowSpace {
 public:
  using Elem = typename K::Elem;

  RowSpace(const K& field, std::size_t dim) : field_(field), dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// v minus its projection onto the span along pivot coordinates.
  std::vector<Elem> reduce(std::vector<Elem> v) const;
  bool contains(const std::vector<Elem>& v) const;
  /// Adds v; returns false when v was already in the span.
  bool insert(std::vector<Elem> v);

 private:
  K field_;
  std::size_t dim_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace rees
