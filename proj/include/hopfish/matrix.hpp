#ifndef HOPFISH_MATRIX_HPP
#define HOPFISH_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "hopfish/rational.hpp"

namespace hopfish {

// Dense matrix over Q, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw std::invalid_argument("matrix entry count mismatch");
  }
  Mat(std::initializer_list<std::initializer_list<Rat>> init);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<Rat>& data() const { return data_; }

  bool operator==(const Mat& o) const = default;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Rat& c) const;
  std::vector<Rat> operator*(const std::vector<Rat>& v) const;

  Mat transposed() const;
  bool is_zero() const;
  bool is_identity() const;

  // Kronecker product; block (i,j) is (*this)(i,j) * o.
  Mat kron(const Mat& o) const;

  std::vector<Rat> row(std::size_t i) const;
  std::vector<Rat> col(std::size_t j) const;
  void set_col(std::size_t j, const std::vector<Rat>& v);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace hopfish

#endif
