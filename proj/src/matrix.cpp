#include "cbgon/matrix.hpp"

#include "cbgon/error.hpp"

#include <algorithm>
#include <utility>

namespace cbgon {

namespace {

using ResidueRows = std::vector<std::vector<std::uint32_t>>;

ResidueRows to_residues(const Matrix& m) {
  ResidueRows out(m.rows(), std::vector<std::uint32_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c).residue();
  }
  return out;
}

// Gauss-Jordan over F_p in place; returns pivot columns, rows [0, rank) hold the RREF.
std::vector<std::size_t> residue_rref(ResidueRows& a, std::uint32_t p, bool full) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[r], a[sel]);
    const std::uint64_t inv = detail::inverse_mod(a[r][c], p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = static_cast<std::uint32_t>(a[r][j] * inv % p);
    for (std::size_t i = full ? 0 : r + 1; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t f = p - a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (a[r][j] != 0) a[i][j] = static_cast<std::uint32_t>((a[i][j] + f * a[r][j]) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Clears denominators row by row so Bareiss can run over ZZ.
std::vector<std::vector<mpz_class>> to_integer_rows(const Matrix& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(r, c).rational().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m.at(r, c).rational();
      out[r][c] = q.get_num() * (scale / q.get_den());
    }
  }
  return out;
}

// Fraction-free Bareiss elimination to row echelon form in place.
std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<mpz_class>>& a) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[r], a[sel]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar(field)) {}

Matrix Matrix::identity(Field field, std::size_t size) {
  Matrix m(field, size, size);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i, Scalar(field, 1));
  return m;
}

Matrix Matrix::from_integers(Field field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Scalar(field, rows[r][c]));
  }
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (value.field() != field_) {
    throw Error(ErrorCode::FieldMismatch, "matrix entry from " + value.field().name() +
                                              " in a matrix over " + field_.name());
  }
  entries_[r * cols_ + c] = value;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = at(r, c);
  }
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (field_ != other.field_) throw Error(ErrorCode::FieldMismatch, "matrix product across fields");
  if (cols_ != other.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        out.entries_[r * other.cols_ + c] += a * other.at(k, c);
      }
    }
  }
  return out;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  Vector out(rows_, Scalar(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().is_rational()) {
    auto a = to_integer_rows(m);
    return bareiss_echelon(a).size();
  }
  auto a = to_residues(m);
  return residue_rref(a, m.field().characteristic(), false).size();
}

EchelonForm row_reduce(const Matrix& m) {
  EchelonForm out;
  const Field field = m.field();
  if (m.rows() == 0 || m.cols() == 0) return out;
  if (!field.is_rational()) {
    auto a = to_residues(m);
    out.pivot_columns = residue_rref(a, field.characteristic(), true);
    for (std::size_t r = 0; r < out.pivot_columns.size(); ++r) {
      Vector row;
      row.reserve(m.cols());
      for (std::uint32_t v : a[r]) row.emplace_back(field, static_cast<long long>(v));
      out.rows.push_back(std::move(row));
    }
    return out;
  }
  auto a = to_integer_rows(m);
  out.pivot_columns = bareiss_echelon(a);
  const std::size_t rank = out.pivot_columns.size();
  std::vector<std::vector<mpq_class>> q(rank, std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < rank; ++r) {
    const mpz_class& lead = a[r][out.pivot_columns[r]];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      q[r][c] = mpq_class(a[r][c], lead);
      q[r][c].canonicalize();
    }
  }
  // Back substitution from the echelon form.
  for (std::size_t r = rank; r-- > 0;) {
    const std::size_t pc = out.pivot_columns[r];
    for (std::size_t i = 0; i < r; ++i) {
      if (q[i][pc] == 0) continue;
      const mpq_class f = q[i][pc];
      for (std::size_t c = pc; c < m.cols(); ++c) q[i][c] -= f * q[r][c];
    }
  }
  for (auto& row : q) {
    Vector v;
    v.reserve(row.size());
    for (auto& x : row) v.emplace_back(field, x);
    out.rows.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> kernel(const Matrix& m) {
  const Field field = m.field();
  const EchelonForm e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Scalar(field));
    v[free] = Scalar(field, 1);
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivot_columns[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RowSpace::RowSpace(Field field, std::size_t cols) : field_(field), cols_(cols) {}

Vector RowSpace::reduce(std::span<const Scalar> row) const {
  if (row.size() != cols_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
  Vector v(row.begin(), row.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!basis_[i][c].is_zero()) v[c] -= f * basis_[i][c];
    }
  }
  return v;
}

bool RowSpace::contains(std::span<const Scalar> row) const {
  const Vector v = reduce(row);
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool RowSpace::insert(std::span<const Scalar> row) {
  Vector v = reduce(row);
  std::size_t pivot = cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!v[c].is_zero()) {
      pivot = c;
      break;
    }
  }
  if (pivot == cols_) return false;
  const Scalar inv = v[pivot].inverse();
  for (auto& x : v) x *= inv;
  // Keep the basis fully reduced against the new pivot.
  for (auto& b : basis_) {
    const Scalar f = b[pivot];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < cols_; ++c) b[c] -= f * v[c];
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace cbgon
