#pragma once

// Exact linear algebra over Q and F_p, plus Smith normal form over Z.
// Scalars are always carried as mpq_class; over F_p they are kept reduced to
// representatives in [0, p).

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace strandalg {

struct FieldSpec {
  enum class Kind { Rationals, Prime, Integers };
  Kind kind = Kind::Rationals;
  long p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(long p);
  static FieldSpec integers() { return {Kind::Integers, 0}; }
  /// "q", "z", "f2", "f3", "fP" for any prime P.
  static FieldSpec parse(const std::string& text);

  bool is_field() const { return kind != Kind::Integers; }
  std::string name() const;
  /// Image of an integer or rational in this field (identity over Q and Z).
  mpq_class reduce(const mpq_class& x) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
  static Matrix identity(int k);
  /// From a list of rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<mpq_class>>& rows, int cols = -1);
  /// The given vectors become the columns.
  static Matrix from_columns(const std::vector<std::vector<mpq_class>>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& at(int r, int c) { return a_[idx(r, c)]; }
  const mpq_class& at(int r, int c) const { return a_[idx(r, c)]; }

  bool is_zero() const;
  Matrix transpose() const;
  std::vector<mpq_class> column(int c) const;
  std::vector<mpq_class> row(int r) const;
  /// Entrywise image in the field.
  Matrix reduced(const FieldSpec& f) const;
  /// Columns of this followed by columns of other.
  Matrix hcat(const Matrix& other) const;
  Matrix vcat(const Matrix& other) const;
  Matrix select_columns(const std::vector<int>& cols) const;
  Matrix select_rows(const std::vector<int>& rows) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  std::vector<mpq_class> apply(const std::vector<mpq_class>& v) const;

  std::string str() const;

 private:
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c); }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> a_;
};

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), r_(static_cast<std::size_t>(rows)) {}
  static SparseMatrix from_dense(const Matrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// Stores v, dropping the entry when v == 0.
  void set(int r, int c, const mpq_class& v);
  void add(int r, int c, const mpq_class& v);
  mpq_class get(int r, int c) const;
  const std::map<int, mpq_class>& row(int r) const { return r_[static_cast<std::size_t>(r)]; }
  std::size_t nnz() const;
  Matrix to_dense() const;

 private:
  void check(int r, int c) const;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::map<int, mpq_class>> r_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  Matrix rref;
  std::vector<int> pivots;
};

Echelon row_reduce(const Matrix& m, const FieldSpec& f);

/// Rank over a field. Dense elimination (fraction-free Bareiss over Q) below
/// 64x64, sparse row elimination otherwise. Throws over Z.
int rank(const Matrix& m, const FieldSpec& f);
int rank(const SparseMatrix& m, const FieldSpec& f);

// The two rank engines, exposed so they can be compared directly.
int rank_dense(const Matrix& m, const FieldSpec& f);
int rank_sparse(const SparseMatrix& m, const FieldSpec& f);

/// Columns form a basis of {x : m x = 0}.
Matrix kernel_basis(const Matrix& m, const FieldSpec& f);
/// Columns form a basis of the column space (a subset of m's columns).
Matrix image_basis(const Matrix& m, const FieldSpec& f);

/// span(S) / span(T) for column spans with span(T) inside span(S).
struct Quotient {
  /// Representatives in the ambient space, one column per quotient basis vector.
  Matrix reps;
  /// dim x ambient; applied to a vector of span(S) it gives quotient coordinates.
  Matrix projection;
  int dim() const { return reps.cols(); }
};
Quotient quotient_basis(const Matrix& S, const Matrix& T, const FieldSpec& f);

/// Some x with m x = b, or nullopt.
std::optional<std::vector<mpq_class>> solve(const Matrix& m, const std::vector<mpq_class>& b,
                                            const FieldSpec& f);

/// Nonzero Smith invariants d_1 | d_2 | ... of an integer matrix, all positive.
std::vector<mpz_class> snf(const Matrix& m);

}  // namespace strandalg
