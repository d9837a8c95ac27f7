#include "fnil/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace fnil {

PrimeFieldMatrix PrimeFieldMatrix::identity(int n, int64_t p) {
  PrimeFieldMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool PrimeFieldMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](int64_t x) { return x == 0; });
}

PrimeFieldMatrix multiply(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
  if (a.cols() != b.rows() || a.modulus() != b.modulus())
    throw std::invalid_argument("matrix shape/modulus mismatch in multiply");
  const PrimeField f(a.modulus());
  PrimeFieldMatrix c(a.rows(), b.cols(), a.modulus());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const int64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return c;
}

std::vector<int64_t> apply(const PrimeFieldMatrix& m,
                           const std::vector<int64_t>& v) {
  if (int(v.size()) != m.cols())
    throw std::invalid_argument("vector length mismatch in apply");
  const PrimeField f(m.modulus());
  std::vector<int64_t> out(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    int64_t acc = 0;
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0 && v[j] != 0)
        acc = f.add(acc, f.mul(m.at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

PrimeFieldMatrix rref(const PrimeFieldMatrix& m) {
  const PrimeField f(m.modulus());
  PrimeFieldMatrix r = m;
  int pivot_row = 0;
  for (int col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    int sel = -1;
    for (int i = pivot_row; i < r.rows(); ++i)
      if (r.at(i, col) != 0) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < r.cols(); ++j)
        std::swap(r.at(sel, j), r.at(pivot_row, j));
    const int64_t inv = f.inv(r.at(pivot_row, col));
    for (int j = col; j < r.cols(); ++j)
      r.at(pivot_row, j) = f.mul(r.at(pivot_row, j), inv);
    for (int i = 0; i < r.rows(); ++i) {
      if (i == pivot_row) continue;
      const int64_t factor = r.at(i, col);
      if (factor == 0) continue;
      for (int j = col; j < r.cols(); ++j)
        r.at(i, j) = f.sub(r.at(i, j), f.mul(factor, r.at(pivot_row, j)));
    }
    ++pivot_row;
  }
  return r;
}

int rank(const PrimeFieldMatrix& m) {
  const PrimeFieldMatrix r = rref(m);
  int rk = 0;
  for (int i = 0; i < r.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0) { nonzero = true; break; }
    if (nonzero) ++rk;
  }
  return rk;
}

int nullity(const PrimeFieldMatrix& m) { return m.cols() - rank(m); }

std::vector<std::vector<int64_t>> kernel(const PrimeFieldMatrix& m) {
  const PrimeField f(m.modulus());
  const PrimeFieldMatrix r = rref(m);
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(m.cols(), false);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0) {
        pivot_col_of_row.push_back(j);
        is_pivot[j] = true;
        break;
      }

  std::vector<std::vector<int64_t>> span;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<int64_t> v(m.cols(), 0);
    v[free] = 1;
    for (size_t row = 0; row < pivot_col_of_row.size(); ++row)
      v[pivot_col_of_row[row]] = f.neg(r.at(int(row), free));
    span.push_back(std::move(v));
  }
  if (span.empty()) return span;

  // Canonicalize: the basis, viewed as rows, is returned in reduced echelon
  // form, which is unique for the kernel subspace.
  PrimeFieldMatrix basis(int(span.size()), m.cols(), m.modulus());
  for (int i = 0; i < basis.rows(); ++i)
    for (int j = 0; j < basis.cols(); ++j) basis.at(i, j) = span[i][j];
  basis = rref(basis);
  std::vector<std::vector<int64_t>> out;
  for (int i = 0; i < basis.rows(); ++i) {
    std::vector<int64_t> v(basis.cols());
    bool nonzero = false;
    for (int j = 0; j < basis.cols(); ++j) {
      v[j] = basis.at(i, j);
      nonzero = nonzero || v[j] != 0;
    }
    if (nonzero) out.push_back(std::move(v));
  }
  return out;
}

KernelChain iterate_kernel_chain(std::span<const PrimeFieldMatrix> maps,
                                 int max_e) {
  if (max_e < 1) throw std::invalid_argument("max_e must be >= 1");
  KernelChain chain;
  if (maps.empty()) return chain;
  for (size_t i = 0; i + 1 < maps.size(); ++i)
    if (maps[i + 1].cols() != maps[i].rows())
      throw std::invalid_argument(
          "dimension mismatch between consecutive maps");
  const int ambient = maps[0].cols();
  PrimeFieldMatrix composite = maps[0];
  const int steps = std::min<int>(int(maps.size()), max_e);
  for (int e = 1; e <= steps; ++e) {
    if (e > 1) composite = multiply(maps[e - 1], composite);
    chain.dims.push_back(nullity(composite));
    if (chain.dims.back() == ambient) {
      chain.full_at = e;
      break;
    }
  }
  const size_t n = chain.dims.size();
  chain.stabilized = chain.full_at.has_value() ||
                     (n >= 2 && chain.dims[n - 1] == chain.dims[n - 2]);
  return chain;
}

std::optional<int> endo_nilpotence_index(const PrimeFieldMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("matrix is not square");
  const int d = m.rows();
  if (d == 0) return 0;
  PrimeFieldMatrix power = m;
  for (int e = 1; e <= d; ++e) {
    if (e > 1) power = multiply(power, m);
    if (power.is_zero()) return e;
  }
  return std::nullopt;
}

}  // namespace fnil
