#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tlgram {

/// Dense row-major matrix over an exact ring.
template <class T>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  ExactMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static ExactMatrix identity(std::size_t n, const T& zero, const T& one) {
    ExactMatrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Entrywise image under `f`.
  template <class F>
  auto map(F&& f) const -> ExactMatrix<decltype(f(std::declval<const T&>()))> {
    ExactMatrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    }
    return out;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = r + 1; c < cols_; ++c) {
        if (!((*this)(r, c) == (*this)(c, r))) return false;
      }
    }
    return true;
  }

  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace tlgram
