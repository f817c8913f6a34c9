#include "strandalg/exactla.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace strandalg {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::int64_t mod(const mpz_class& x, long p) {
  mpz_class r = x % p;
  if (r < 0) r += p;
  return r.get_si();
}

std::int64_t inv_mod(std::int64_t a, long p) {
  // a^(p-2), p prime
  std::int64_t r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Element arithmetic for the two elimination back ends.
struct RationalOps {
  using T = mpq_class;
  T from(const mpq_class& x) const { return x; }
  mpq_class to(const T& x) const { return x; }
  bool zero(const T& x) const { return sgn(x) == 0; }
  T inv(const T& x) const { return 1 / x; }
  T mul(const T& a, const T& b) const { return a * b; }
  T sub(const T& a, const T& b) const { return a - b; }
};

struct PrimeOps {
  using T = std::int64_t;
  long p;
  T from(const mpq_class& x) const {
    std::int64_t den = mod(x.get_den(), p);
    if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
    return mod(x.get_num(), p) * inv_mod(den, p) % p;
  }
  mpq_class to(const T& x) const { return mpq_class(static_cast<long>(x)); }
  bool zero(const T& x) const { return x == 0; }
  T inv(const T& x) const { return inv_mod(x, p); }
  T mul(const T& a, const T& b) const { return a * b % p; }
  T sub(const T& a, const T& b) const { return ((a - b) % p + p) % p; }
};

template <class Ops>
Echelon gauss_jordan(const Matrix& m, const Ops& ops) {
  using T = typename Ops::T;
  const int R = m.rows(), C = m.cols();
  std::vector<std::vector<T>> a(static_cast<std::size_t>(R), std::vector<T>(static_cast<std::size_t>(C)));
  for (int r = 0; r < R; ++r) {
    for (int c = 0; c < C; ++c) a[r][c] = ops.from(m.at(r, c));
  }
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < C && row < R; ++c) {
    int piv = -1;
    for (int r = row; r < R; ++r) {
      if (!ops.zero(a[r][c])) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    T s = ops.inv(a[row][c]);
    for (int k = c; k < C; ++k) a[row][k] = ops.mul(a[row][k], s);
    for (int r = 0; r < R; ++r) {
      if (r == row || ops.zero(a[r][c])) continue;
      T f = a[r][c];
      for (int k = c; k < C; ++k) {
        if (!ops.zero(a[row][k])) a[r][k] = ops.sub(a[r][k], ops.mul(f, a[row][k]));
      }
    }
    pivots.push_back(c);
    ++row;
  }
  Echelon out{Matrix(R, C), pivots};
  for (int r = 0; r < R; ++r) {
    for (int c = 0; c < C; ++c) out.rref.at(r, c) = ops.to(a[r][c]);
  }
  return out;
}

template <class Ops>
int sparse_rank_impl(const SparseMatrix& m, const Ops& ops) {
  using T = typename Ops::T;
  // pivot column -> normalized row with that leading column
  std::map<int, std::map<int, T>> basis;
  for (int r = 0; r < m.rows(); ++r) {
    std::map<int, T> row;
    for (const auto& [c, v] : m.row(r)) {
      T x = ops.from(v);
      if (!ops.zero(x)) row.emplace(c, x);
    }
    while (!row.empty()) {
      auto lead = row.begin();
      auto it = basis.find(lead->first);
      if (it == basis.end()) {
        T s = ops.inv(lead->second);
        for (auto& [c, v] : row) v = ops.mul(v, s);
        basis.emplace(lead->first, std::move(row));
        break;
      }
      T f = lead->second;
      for (const auto& [c, v] : it->second) {
        auto [pos, inserted] = row.try_emplace(c);
        T nv = ops.sub(inserted ? T(0) : pos->second, ops.mul(f, v));
        if (ops.zero(nv)) {
          row.erase(pos);
        } else {
          pos->second = nv;
        }
      }
    }
  }
  return static_cast<int>(basis.size());
}

// Fraction-free elimination after clearing denominators row by row.
int bareiss_rank(const Matrix& m) {
  const int R = m.rows(), C = m.cols();
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(R), std::vector<mpz_class>(static_cast<std::size_t>(C)));
  for (int r = 0; r < R; ++r) {
    mpz_class l = 1;
    for (int c = 0; c < C; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    for (int c = 0; c < C; ++c) {
      mpq_class v = m.at(r, c) * l;
      a[r][c] = v.get_num();
    }
  }
  mpz_class prev = 1;
  int row = 0;
  for (int c = 0; c < C && row < R; ++c) {
    int piv = -1;
    for (int r = row; r < R; ++r) {
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    for (int r = row + 1; r < R; ++r) {
      for (int k = c + 1; k < C; ++k) {
        a[r][k] = (a[row][c] * a[r][k] - a[r][c] * a[row][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[row][c];
    ++row;
  }
  return row;
}

}  // namespace

FieldSpec FieldSpec::prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument("FieldSpec: " + std::to_string(p) + " is not prime");
  return {Kind::Prime, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text == "z" || text == "Z") return integers();
  if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
    std::size_t used = 0;
    long p = std::stol(text.substr(1), &used);
    if (used + 1 != text.size()) throw std::invalid_argument("FieldSpec: cannot parse '" + text + "'");
    return prime(p);
  }
  throw std::invalid_argument("FieldSpec: cannot parse '" + text + "'");
}

std::string FieldSpec::name() const {
  switch (kind) {
    case Kind::Rationals: return "Q";
    case Kind::Integers: return "Z";
    case Kind::Prime: return "F" + std::to_string(p);
  }
  return "?";
}

mpq_class FieldSpec::reduce(const mpq_class& x) const {
  if (kind != Kind::Prime) return x;
  return PrimeOps{p}.to(PrimeOps{p}.from(x));
}

Matrix Matrix::identity(int k) {
  Matrix m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<mpq_class>>& rows, int cols) {
  int C = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  Matrix m(static_cast<int>(rows.size()), C);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != C) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (int c = 0; c < C; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<mpq_class>>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows) throw std::invalid_argument("Matrix::from_columns: bad length");
    for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

std::vector<mpq_class> Matrix::column(int c) const {
  std::vector<mpq_class> v(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

std::vector<mpq_class> Matrix::row(int r) const {
  return std::vector<mpq_class>(a_.begin() + static_cast<long>(idx(r, 0)), a_.begin() + static_cast<long>(idx(r, 0) + cols_));
}

Matrix Matrix::reduced(const FieldSpec& f) const {
  Matrix m = *this;
  for (auto& x : m.a_) x = f.reduce(x);
  return m;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("Matrix::hcat: row mismatch");
  Matrix m(rows_, cols_ + o.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (int c = 0; c < o.cols_; ++c) m.at(r, cols_ + c) = o.at(r, c);
  }
  return m;
}

Matrix Matrix::vcat(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("Matrix::vcat: column mismatch");
  Matrix m(rows_ + o.rows_, cols_);
  for (int c = 0; c < cols_; ++c) {
    for (int r = 0; r < rows_; ++r) m.at(r, c) = at(r, c);
    for (int r = 0; r < o.rows_; ++r) m.at(rows_ + r, c) = o.at(r, c);
  }
  return m;
}

Matrix Matrix::select_columns(const std::vector<int>& cs) const {
  Matrix m(rows_, static_cast<int>(cs.size()));
  for (int k = 0; k < m.cols(); ++k) {
    for (int r = 0; r < rows_; ++r) m.at(r, k) = at(r, cs[k]);
  }
  return m;
}

Matrix Matrix::select_rows(const std::vector<int>& rs) const {
  Matrix m(static_cast<int>(rs.size()), cols_);
  for (int k = 0; k < m.rows(); ++k) {
    for (int c = 0; c < cols_; ++c) m.at(k, c) = at(rs[k], c);
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
  Matrix m(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int k = 0; k < a.cols_; ++k) {
      const mpq_class& x = a.at(r, k);
      if (sgn(x) == 0) continue;
      for (int c = 0; c < b.cols_; ++c) {
        if (sgn(b.at(k, c)) != 0) m.at(r, c) += x * b.at(k, c);
      }
    }
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix sum: dimension mismatch");
  Matrix m = a;
  for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += b.a_[k];
  return m;
}

Matrix operator-(const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.a_) x = -x;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<mpq_class> Matrix::apply(const std::vector<mpq_class>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  std::vector<mpq_class> out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (sgn(at(r, c)) != 0 && sgn(v[c]) != 0) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << '[';
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).get_str();
    os << "]\n";
  }
  return os.str();
}

void SparseMatrix::check(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("SparseMatrix index out of range");
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) s.set(r, c, m.at(r, c));
  }
  return s;
}

void SparseMatrix::set(int r, int c, const mpq_class& v) {
  check(r, c);
  auto& row = r_[static_cast<std::size_t>(r)];
  if (sgn(v) == 0) {
    row.erase(c);
  } else {
    row[c] = v;
  }
}

void SparseMatrix::add(int r, int c, const mpq_class& v) { set(r, c, get(r, c) + v); }

mpq_class SparseMatrix::get(int r, int c) const {
  check(r, c);
  const auto& row = r_[static_cast<std::size_t>(r)];
  auto it = row.find(c);
  return it == row.end() ? mpq_class(0) : it->second;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& row : r_) n += row.size();
  return n;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : r_[static_cast<std::size_t>(r)]) m.at(r, c) = v;
  }
  return m;
}

Echelon row_reduce(const Matrix& m, const FieldSpec& f) {
  switch (f.kind) {
    case FieldSpec::Kind::Rationals: return gauss_jordan(m, RationalOps{});
    case FieldSpec::Kind::Prime: return gauss_jordan(m, PrimeOps{f.p});
    case FieldSpec::Kind::Integers: break;
  }
  throw std::invalid_argument("row_reduce needs a field; use snf over Z");
}

int rank_dense(const Matrix& m, const FieldSpec& f) {
  if (f.kind == FieldSpec::Kind::Rationals) return bareiss_rank(m);
  return static_cast<int>(row_reduce(m, f).pivots.size());
}

int rank_sparse(const SparseMatrix& m, const FieldSpec& f) {
  switch (f.kind) {
    case FieldSpec::Kind::Rationals: return sparse_rank_impl(m, RationalOps{});
    case FieldSpec::Kind::Prime: return sparse_rank_impl(m, PrimeOps{f.p});
    case FieldSpec::Kind::Integers: break;
  }
  throw std::invalid_argument("rank needs a field; use snf over Z");
}

int rank(const Matrix& m, const FieldSpec& f) {
  if (!f.is_field()) throw std::invalid_argument("rank needs a field; use snf over Z");
  if (m.rows() < 64 && m.cols() < 64) return rank_dense(m, f);
  return rank_sparse(SparseMatrix::from_dense(m), f);
}

int rank(const SparseMatrix& m, const FieldSpec& f) {
  if (!f.is_field()) throw std::invalid_argument("rank needs a field; use snf over Z");
  if (m.rows() < 64 && m.cols() < 64) return rank_dense(m.to_dense(), f);
  return rank_sparse(m, f);
}

Matrix kernel_basis(const Matrix& m, const FieldSpec& f) {
  const Echelon e = row_reduce(m, f);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix k(m.cols(), static_cast<int>(free_cols.size()));
  for (int j = 0; j < k.cols(); ++j) {
    const int fc = free_cols[j];
    k.at(fc, j) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      k.at(e.pivots[r], j) = f.reduce(-e.rref.at(static_cast<int>(r), fc));
    }
  }
  return k;
}

Matrix image_basis(const Matrix& m, const FieldSpec& f) {
  return m.select_columns(row_reduce(m, f).pivots).reduced(f);
}

Quotient quotient_basis(const Matrix& S, const Matrix& T, const FieldSpec& f) {
  if (S.rows() != T.rows()) throw std::invalid_argument("quotient_basis: ambient dimension mismatch");
  const int n = S.rows();
  // Basis of T, then the columns of S that enlarge it, then unit vectors.
  const Matrix tb = image_basis(T, f);
  const Echelon e = row_reduce(tb.hcat(S), f);
  std::vector<int> rep_cols;
  for (int c : e.pivots) {
    if (c < tb.cols()) continue;
    rep_cols.push_back(c - tb.cols());
  }
  if (rank(S.hcat(T), f) != rank(S, f)) throw std::invalid_argument("quotient_basis: span(T) not inside span(S)");
  Quotient q;
  q.reps = S.select_columns(rep_cols).reduced(f);
  const Matrix partial = tb.hcat(q.reps);
  // complete to an ambient basis with unit vectors
  const Echelon ee = row_reduce(partial.hcat(Matrix::identity(n)), f);
  std::vector<int> extra;
  for (int c : ee.pivots) {
    if (c >= partial.cols()) extra.push_back(c - partial.cols());
  }
  const Matrix full = partial.hcat(Matrix::identity(n).select_columns(extra));
  // Invert the change of basis; rows for the representatives give the projection.
  const Echelon inv = row_reduce(full.hcat(Matrix::identity(n)), f);
  Matrix inverse(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) inverse.at(r, c) = inv.rref.at(r, n + c);
  }
  std::vector<int> rows;
  for (int k = 0; k < q.dim(); ++k) rows.push_back(tb.cols() + k);
  q.projection = inverse.select_rows(rows);
  return q;
}

std::optional<std::vector<mpq_class>> solve(const Matrix& m, const std::vector<mpq_class>& b,
                                            const FieldSpec& f) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const Echelon e = row_reduce(m.hcat(Matrix::from_columns({b}, m.rows())), f);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<mpq_class> x(static_cast<std::size_t>(m.cols()));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rref.at(static_cast<int>(r), m.cols());
  return x;
}

std::vector<mpz_class> snf(const Matrix& m) {
  const int R = m.rows(), C = m.cols();
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(R), std::vector<mpz_class>(static_cast<std::size_t>(C)));
  for (int r = 0; r < R; ++r) {
    for (int c = 0; c < C; ++c) {
      if (m.at(r, c).get_den() != 1) throw std::invalid_argument("snf: non-integer entry");
      a[r][c] = m.at(r, c).get_num();
    }
  }
  std::vector<mpz_class> diag;
  for (int t = 0; t < std::min(R, C); ++t) {
    // smallest nonzero entry of the remaining block as pivot
    for (;;) {
      int pr = -1, pc = -1;
      for (int r = t; r < R; ++r) {
        for (int c = t; c < C; ++c) {
          if (a[r][c] != 0 && (pr < 0 || abs(a[r][c]) < abs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr < 0) goto done;
      std::swap(a[t], a[pr]);
      for (int r = 0; r < R; ++r) std::swap(a[r][t], a[r][pc]);
      bool clean = true;
      for (int r = t + 1; r < R; ++r) {
        if (a[r][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (int c = t; c < C; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) clean = false;
      }
      for (int c = t + 1; c < C; ++c) {
        if (a[t][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), a[t][t].get_mpz_t());
        for (int r = t; r < R; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold any entry the pivot does not divide into row t
      int br = -1;
      for (int r = t + 1; r < R && br < 0; ++r) {
        for (int c = t + 1; c < C; ++c) {
          if (a[r][c] % a[t][t] != 0) {
            br = r;
            break;
          }
        }
      }
      if (br < 0) break;
      for (int c = t; c < C; ++c) a[t][c] += a[br][c];
    }
    diag.push_back(abs(a[t][t]));
  }
done:
  return diag;
}

}  // namespace strandalg
