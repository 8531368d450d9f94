#include "holoforms/rational_matrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace holoforms {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

namespace {

// Row-reduces `rows` in place, pivoting only in the first `cols` columns but
// updating whole rows; returns the rank.
int eliminate(std::vector<std::vector<Rational>>& rows, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < rows[r].size(); ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int RationalMatrix::rank() const {
  std::vector<std::vector<Rational>> rows(rows_, std::vector<Rational>(cols_));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) rows[r][c] = (*this)(r, c);
  }
  return eliminate(rows, cols_);
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (x == 0) continue;
      for (int c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
  return a;
}

RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
  return a;
}

RationalMatrix operator*(const Rational& c, RationalMatrix a) {
  for (auto& q : a.data_) q *= c;
  return a;
}

std::vector<Rational> minimal_polynomial(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("minimal polynomial of a non-square matrix");
  const int n = a.rows();
  const int len = n * n;
  // Each row holds vec(Aʲ) followed by the unit vector e_j, so a zero
  // leading block after elimination exposes a dependency in the tail.
  std::vector<RationalMatrix> powers{RationalMatrix::identity(n)};
  for (int d = 1; d <= n; ++d) {
    powers.push_back(powers.back() * a);
    std::vector<std::vector<Rational>> rows;
    for (int j = 0; j <= d; ++j) {
      std::vector<Rational> row(len + d + 1);
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) row[r * n + c] = powers[j](r, c);
      }
      row[len + j] = 1;
      rows.push_back(std::move(row));
    }
    const int rank_all = eliminate(rows, len);
    if (rank_all == d + 1) continue;
    // The row with a zero leading block gives Σ cⱼAʲ = 0 with c_d ≠ 0,
    // because I..A^{d-1} were independent.
    for (const auto& row : rows) {
      bool lead_zero = true;
      for (int i = 0; i < len && lead_zero; ++i) lead_zero = row[i] == 0;
      if (!lead_zero) continue;
      std::vector<Rational> coeffs(row.begin() + len, row.end());
      const Rational top = coeffs.back();
      for (auto& c : coeffs) c /= top;
      return coeffs;
    }
  }
  throw std::logic_error("no minimal polynomial found");
}

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  // Clear denominators, then test ±p/q with p | c_low, q | c_high.
  std::vector<mpz_class> ints;
  mpz_class lcm = 1;
  for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : coeffs) ints.push_back(mpz_class(c * lcm));
  std::set<Rational> roots;
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  if (low + 1 >= ints.size()) return {roots.begin(), roots.end()};
  auto divisors = [](mpz_class v) {
    std::vector<mpz_class> out;
    v = abs(v);
    for (mpz_class d = 1; d * d <= v; ++d) {
      if (v % d == 0) {
        out.push_back(d);
        if (d * d != v) out.push_back(v / d);
      }
    }
    return out;
  };
  auto eval = [&](const Rational& x) {
    Rational s = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * x + *it;
    return s;
  };
  for (const auto& p : divisors(ints[low])) {
    for (const auto& q : divisors(ints.back())) {
      for (int sign : {1, -1}) {
        Rational x(sign * p, q);
        x.canonicalize();
        if (eval(x) == 0) roots.insert(x);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

RationalMatrix evaluate_at(const std::vector<Rational>& coeffs, const RationalMatrix& a) {
  RationalMatrix out(a.rows(), a.cols());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    out = out * a + *it * RationalMatrix::identity(a.rows());
  }
  return out;
}

}  // namespace holoforms
