#include "rees/graded_matrix.hpp"

#include "rees/errors.hpp"

namespace rees {

template <class K>
GradedMatrix<K>::GradedMatrix(RingPtr<K> ring, std::size_t rows, std::size_t cols,
                              std::vector<int> col_degrees, std::vector<int> row_twists)
    : ring_(std::move(ring)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, Poly<K>(ring_)),
      col_degrees_(std::move(col_degrees)),
      row_twists_(std::move(row_twists)) {
  if (col_degrees_.empty()) col_degrees_.assign(cols, 0);
  if (row_twists_.empty()) row_twists_.assign(rows, 0);
  if (col_degrees_.size() != cols || row_twists_.size() != rows)
    throw PreconditionError("graded matrix: degree vectors do not match the shape");
}

template <class K>
void GradedMatrix<K>::validate() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& e = at(i, j);
      if (e.is_zero()) continue;
      if (!e.is_bihomogeneous())
        throw ValidationError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") is not homogeneous");
      if (e.degree() != degree(i, j))
        throw ValidationError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") has degree " + std::to_string(e.degree()) + ", expected " +
                              std::to_string(degree(i, j)));
    }
}

template <class K>
bool GradedMatrix<K>::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

template <class K>
GradedMatrix<K> GradedMatrix<K>::transpose() const {
  GradedMatrix t(ring_, cols_, rows_, row_twists_, col_degrees_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

template <class K>
GradedMatrix<K> GradedMatrix<K>::without_row(std::size_t i) const {
  std::vector<int> tw;
  for (std::size_t k = 0; k < rows_; ++k)
    if (k != i) tw.push_back(row_twists_[k]);
  GradedMatrix r(ring_, rows_ - 1, cols_, col_degrees_, tw);
  std::size_t rr = 0;
  for (std::size_t k = 0; k < rows_; ++k) {
    if (k == i) continue;
    for (std::size_t j = 0; j < cols_; ++j) r.at(rr, j) = at(k, j);
    ++rr;
  }
  return r;
}

template <class K>
GradedMatrix<K> GradedMatrix<K>::first_columns(std::size_t k) const {
  GradedMatrix r(ring_, rows_, k,
                 std::vector<int>(col_degrees_.begin(), col_degrees_.begin() + k), row_twists_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < k; ++j) r.at(i, j) = at(i, j);
  return r;
}

template <class K>
std::vector<Poly<K>> GradedMatrix<K>::row(std::size_t i) const {
  return std::vector<Poly<K>>(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
}

template <class K>
std::vector<Poly<K>> GradedMatrix<K>::column(std::size_t j) const {
  std::vector<Poly<K>> c;
  for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return c;
}

template <class K>
GradedMatrix<K> GradedMatrix<K>::operator*(const GradedMatrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix product: shape mismatch");
  std::vector<int> cd = o.col_degrees_;
  if (cols_ > 0)
    for (auto& c : cd) c += col_degrees_[0] + o.row_twists_[0];
  GradedMatrix r(ring_, rows_, o.cols_, cd, row_twists_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < o.cols_; ++k) {
      Poly<K> s(ring_);
      for (std::size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero() && !o.at(j, k).is_zero()) s += at(i, j) * o.at(j, k);
      r.at(i, k) = s;
    }
  return r;
}

template <class K>
bool GradedMatrix<K>::operator==(const GradedMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

template <class K>
std::string GradedMatrix<K>::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += at(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

template class GradedMatrix<PrimeField>;
template class GradedMatrix<RationalField>;

}  // namespace rees
