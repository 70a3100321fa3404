#pragma once

#include <string>
#include <vector>

#include "rees/poly.hpp"

namespace rees {

/// Matrix over R whose entry (i,j) is homogeneous of degree
/// col_degrees[j] + row_twists[i] (or zero).
template <class K>
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(RingPtr<K> ring, std::size_t rows, std::size_t cols,
               std::vector<int> col_degrees = {}, std::vector<int> row_twists = {});

  const RingPtr<K>& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<int>& col_degrees() const { return col_degrees_; }
  const std::vector<int>& row_twists() const { return row_twists_; }
  int degree(std::size_t i, std::size_t j) const { return col_degrees_[j] + row_twists_[i]; }

  Poly<K>& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Poly<K>& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Throws ValidationError naming the first entry of the wrong degree.
  void validate() const;
  bool is_zero() const;

  GradedMatrix transpose() const;
  GradedMatrix without_row(std::size_t i) const;
  GradedMatrix first_columns(std::size_t k) const;
  std::vector<Poly<K>> row(std::size_t i) const;
  std::vector<Poly<K>> column(std::size_t j) const;

  /// Plain product; the result's grading is taken from the operands when it
  /// is consistent.
  GradedMatrix operator*(const GradedMatrix& o) const;
  bool operator==(const GradedMatrix& o) const;

  std::string to_string() const;

 private:
  RingPtr<K> ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly<K>> entries_;
  std::vector<int> col_degrees_, row_twists_;
};

}  // namespace rees
