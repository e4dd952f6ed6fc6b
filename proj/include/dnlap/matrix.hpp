#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dnlap {

using Vector = std::vector<double>;

/// Dense row-major real matrix. Sizes here are desk-scale (a few hundred at
/// most), so everything is stored and multiplied naively.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector column(std::size_t j) const;

  const std::vector<double>& data() const { return data_; }

  Matrix transposed() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double s);

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, Matrix a);
Vector operator*(const Matrix& a, std::span<const double> x);

double max_abs(const Matrix& a);
double max_abs_difference(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& a);
double trace(const Matrix& a);

/// Sum of x_i y_i w_i; the measure-weighted inner product on a vertex set.
double weighted_dot(std::span<const double> x, std::span<const double> y,
                    std::span<const double> weights);
double dot(std::span<const double> x, std::span<const double> y);

}  // namespace dnlap
