#include "rees/matrix.hpp"

#include "rees/errors.hpp"

namespace rees {

template <class K>
DenseMatrix<K>::DenseMatrix(const K& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

template <class K>
std::vector<std::size_t> DenseMatrix<K>::rref(bool reverse) {
  const K& f = field_;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t step = 0; step < cols_ && r < rows_; ++step) {
    std::size_t c = reverse ? cols_ - 1 - step : step;
    std::size_t sel = rows_;
    for (std::size_t i = r; i < rows_; ++i)
      if (!f.is_zero(at(i, c))) {
        sel = i;
        break;
      }
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t k = 0; k < cols_; ++k) std::swap(at(sel, k), at(r, k));
    Elem inv = f.inv(at(r, c));
    for (std::size_t k = 0; k < cols_; ++k)
      if (!f.is_zero(at(r, k))) at(r, k) = f.mul(at(r, k), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || f.is_zero(at(i, c))) continue;
      Elem factor = at(i, c);
      for (std::size_t k = 0; k < cols_; ++k)
        if (!f.is_zero(at(r, k))) at(i, k) = f.sub(at(i, k), f.mul(factor, at(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
std::size_t DenseMatrix<K>::rank() const {
  DenseMatrix copy = *this;
  return copy.rref().size();
}

template <class K>
std::vector<std::vector<typename K::Elem>> DenseMatrix<K>::nullspace() const {
  const K& f = field_;
  DenseMatrix red = *this;
  auto pivots = red.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(cols_, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(red.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
std::optional<std::vector<typename K::Elem>> DenseMatrix<K>::solve(
    const std::vector<Elem>& b) const {
  const K& f = field_;
  if (b.size() != rows_) throw PreconditionError("solve: right-hand side has wrong length");
  DenseMatrix aug(f, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) aug.at(i, k) = at(i, k);
    aug.at(i, cols_) = b[i];
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Elem> x(cols_, f.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
  return x;
}

template <class K>
std::vector<typename K::Elem> RowSpace<K>::reduce(std::vector<Elem> v) const {
  const K& f = field_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t p = pivots_[i];
    if (f.is_zero(v[p])) continue;
    Elem factor = v[p];
    const auto& row = rows_[i];
    for (std::size_t k = 0; k < dim_; ++k)
      if (!f.is_zero(row[k])) v[k] = f.sub(v[k], f.mul(factor, row[k]));
  }
  return v;
}

template <class K>
bool RowSpace<K>::contains(const std::vector<Elem>& v) const {
  auto r = reduce(v);
  for (const auto& e : r)
    if (!field_.is_zero(e)) return false;
  return true;
}

template <class K>
bool RowSpace<K>::insert(std::vector<Elem> v) {
  const K& f = field_;
  if (v.size() != dim_) throw PreconditionError("RowSpace: vector has wrong length");
  v = reduce(std::move(v));
  std::size_t p = dim_;
  for (std::size_t k = 0; k < dim_; ++k)
    if (!f.is_zero(v[k])) {
      p = k;
      break;
    }
  if (p == dim_) return false;
  Elem inv = f.inv(v[p]);
  for (auto& e : v)
    if (!f.is_zero(e)) e = f.mul(e, inv);
  // keep the rows fully reduced at the new pivot
  for (auto& row : rows_) {
    if (f.is_zero(row[p])) continue;
    Elem factor = row[p];
    for (std::size_t k = 0; k < dim_; ++k)
      if (!f.is_zero(v[k])) row[k] = f.sub(row[k], f.mul(factor, v[k]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

template class DenseMatrix<PrimeField>;
template class DenseMatrix<RationalField>;
template class RowSpace<PrimeField>;
template class RowSpace<RationalField>;

}  // namespace rees
