#include "sandflower/int_matrix.hpp"

#include <istream>
#include <optional>
#include <sstream>
#include <utility>

#include "sandflower/error.hpp"

namespace sandflower {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::Parse, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const BigInt> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const BigInt& s = (*this)(src, c);
    if (s != 0) (*this)(dst, c) += factor * s;
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const BigInt& s = (*this)(r, src);
    if (s != 0) (*this)(r, dst) += factor * s;
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_idx,
                               std::span<const std::size_t> col_idx) const {
  IntMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

IntMatrix IntMatrix::without(std::size_t row, std::size_t col) const {
  std::vector<std::size_t> ri, ci;
  for (std::size_t r = 0; r < rows_; ++r)
    if (r != row) ri.push_back(r);
  for (std::size_t c = 0; c < cols_; ++c)
    if (c != col) ci.push_back(c);
  return submatrix(ri, ci);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::BadIndex, "dimension mismatch in product");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Nonzero entry of least absolute value in the lower-right block starting at s.
std::optional<Position> min_pivot(const IntMatrix& a, std::size_t s) {
  std::optional<Position> best;
  for (std::size_t i = s; i < a.rows(); ++i)
    for (std::size_t j = s; j < a.cols(); ++j) {
      const BigInt& v = a(i, j);
      if (v == 0) continue;
      if (!best || mpz_cmpabs(v.get_mpz_t(), a(best->row, best->col).get_mpz_t()) < 0) best = Position{i, j};
      if (v == 1 || v == -1) return best;
    }
  return best;
}

std::optional<Position> find_non_multiple(const IntMatrix& a, std::size_t s) {
  const BigInt& pivot = a(s, s);
  for (std::size_t i = s + 1; i < a.rows(); ++i)
    for (std::size_t j = s + 1; j < a.cols(); ++j)
      if (!divides(pivot, a(i, j))) return Position{i, j};
  return std::nullopt;
}

// Reduces `a` to Smith form in place. Column operations are mirrored into
// `transform` when it is non-null.
std::size_t reduce_to_smith(IntMatrix& a, IntMatrix* transform) {
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::size_t s = 0;
  for (; s < limit; ++s) {
    while (true) {
      auto pos = min_pivot(a, s);
      if (!pos) return s;
      a.swap_rows(s, pos->row);
      a.swap_cols(s, pos->col);
      if (transform) transform->swap_cols(s, pos->col);

      bool clean = true;
      for (std::size_t i = s + 1; i < a.rows(); ++i) {
        if (a(i, s) == 0) continue;
        BigInt q = floor_div(a(i, s), a(s, s));
        a.add_row_multiple(i, s, -q);
        if (a(i, s) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < a.cols(); ++j) {
        if (a(s, j) == 0) continue;
        BigInt q = floor_div(a(s, j), a(s, s));
        a.add_col_multiple(j, s, -q);
        if (transform) transform->add_col_multiple(j, s, -q);
        if (a(s, j) != 0) clean = false;
      }
      if (!clean) continue;

      if (auto bad = find_non_multiple(a, s)) {
        a.add_row_multiple(s, bad->row, 1);
        continue;
      }
      if (a(s, s) < 0) a.negate_row(s);
      break;
    }
  }
  return s;
}

SmithForm read_diagonal(const IntMatrix& a, std::size_t rank) {
  SmithForm f;
  f.rank = rank;
  const std::size_t limit = std::min(a.rows(), a.cols());
  f.diagonal.reserve(limit);
  for (std::size_t i = 0; i < limit; ++i) f.diagonal.push_back(i < rank ? a(i, i) : BigInt(0));
  return f;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rank = reduce_to_smith(a, nullptr);
  return read_diagonal(a, rank);
}

SmithDecomposition smith_decompose(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t rank = reduce_to_smith(a, &v);
  return {read_diagonal(a, rank), std::move(v)};
}

namespace {

std::vector<BigInt> smith_coordinates(const SmithDecomposition& smith, std::span<const BigInt> x) {
  const IntMatrix& v = smith.col_transform;
  if (x.size() != v.rows()) throw Error(ErrorKind::BadIndex, "vector length does not match column count");
  std::vector<BigInt> y(v.cols());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < v.cols(); ++j) y[j] += x[i] * v(i, j);
  }
  return y;
}

// Diagonal entry governing coordinate j; coordinates past the diagonal are free.
BigInt modulus(const SmithDecomposition& smith, std::size_t j) {
  const auto& d = smith.form.diagonal;
  return j < d.size() ? d[j] : BigInt(0);
}

}  // namespace

bool cokernel_contains(const SmithDecomposition& smith, std::span<const BigInt> x) {
  const auto y = smith_coordinates(smith, x);
  for (std::size_t j = 0; j < y.size(); ++j) {
    const BigInt d = modulus(smith, j);
    if (d == 0 ? y[j] != 0 : !divides(d, y[j])) return false;
  }
  return true;
}

BigInt cokernel_order(const SmithDecomposition& smith, std::span<const BigInt> x) {
  const auto y = smith_coordinates(smith, x);
  BigInt order = 1;
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j] == 0) continue;
    const BigInt d = modulus(smith, j);
    if (d == 0) throw Error(ErrorKind::InfiniteGroup, "element of infinite order");
    order = lcm(order, d / gcd(d, y[j]));
  }
  return order;
}

BigInt determinant(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t pos = k;
  while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
  if (pos == 0) return false;
  ++idx[pos - 1];
  for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace

BigInt determinant_divisor(const IntMatrix& m, std::size_t k) {
  if (k == 0 || k > std::min(m.rows(), m.cols()))
    throw Error(ErrorKind::BadIndex, "minor size " + std::to_string(k) + " out of range");
  BigInt g = 0;
  auto rows = first_combination(k);
  do {
    auto cols = first_combination(k);
    do {
      g = gcd(g, determinant(m.submatrix(rows, cols)));
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return g;
}

namespace {

BigInt parse_integer(const std::string& token) {
  BigInt v;
  std::string digits = token;
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  if (digits.empty() || v.set_str(digits, 10) != 0)
    throw Error(ErrorKind::Parse, "not an integer: '" + token + "'");
  return v;
}

}  // namespace

IntMatrix parse_matrix(std::istream& in) {
  std::string tok_rows, tok_cols;
  if (!(in >> tok_rows >> tok_cols)) throw Error(ErrorKind::Parse, "missing 'rows cols' header");
  const BigInt r = parse_integer(tok_rows);
  const BigInt c = parse_integer(tok_cols);
  if (r < 0 || c < 0 || r > 100000 || c > 100000)
    throw Error(ErrorKind::Parse, "bad matrix dimensions");
  IntMatrix m(r.get_ui(), c.get_ui());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string tok;
      if (!(in >> tok)) throw Error(ErrorKind::Parse, "matrix has fewer entries than declared");
      m(i, j) = parse_integer(tok);
    }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::Parse, "trailing data after matrix entries");
  return m;
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace sandflower
