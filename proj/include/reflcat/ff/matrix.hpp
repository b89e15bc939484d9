#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "reflcat/ff/field.hpp"

namespace reflcat::ff {

// Dense row-major matrix over F_p. Value semantics: arithmetic returns fresh
// matrices; set() exists only for filling freshly built values.
class Matrix {
 public:
  Matrix(const PrimeField& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const PrimeField& f, std::size_t n);
  static Matrix scalar(const PrimeField& f, std::size_t n, Residue c);
  // Entries are reduced mod p; ragged input throws StructuralError.
  static Matrix from_rows(const PrimeField& f, const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_rows(const PrimeField& f, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_columns(const PrimeField& f, std::size_t rows, const std::vector<Vec>& cols);
  static Matrix diagonal(const PrimeField& f, const Vec& diag);
  static Matrix block_diagonal(const Matrix& a, const Matrix& b);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Residue v) { data_[i * cols_ + j] = v; }
  std::span<const Residue> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Residue> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Vec column(std::size_t j) const;
  const Vec& data() const { return data_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(Residue c) const;
  Matrix transpose() const;
  // M v for a column vector v.
  Vec apply(const Vec& v) const;
  Matrix pow(std::uint64_t e) const;
  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  Residue trace() const;
  Residue det() const;
  bool invertible() const { return det() != 0; }
  // Throws StructuralError when singular.
  Matrix inverse() const;
  bool is_identity() const;
  bool is_zero() const;
  // Least k >= 1 with M^k = I, 0 when none exists below limit.
  std::uint64_t order(std::uint64_t limit = 1u << 20) const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  // Lexicographic on entries (shapes must agree); gives canonical coset reps.
  friend bool operator<(const Matrix& a, const Matrix& b) { return a.data_ < b.data_; }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  Vec data_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

void require_same_field(const PrimeField& a, const PrimeField& b);

// Vector helpers over F_p.
Vec vec_add(const PrimeField& f, const Vec& a, const Vec& b);
Vec vec_sub(const PrimeField& f, const Vec& a, const Vec& b);
Vec vec_scale(const PrimeField& f, const Vec& a, Residue c);
Residue dot(const PrimeField& f, const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

}  // namespace reflcat::ff
