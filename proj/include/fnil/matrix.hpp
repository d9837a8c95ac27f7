#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fnil/prime_field.hpp"

namespace fnil {

// Dense matrix over F_p, row-major, canonical entries. Carrier for all the
// Frobenius matrices restricted to graded pieces.
class PrimeFieldMatrix {
public:
  PrimeFieldMatrix() : rows_(0), cols_(0), p_(2) {}
  PrimeFieldMatrix(int rows, int cols, int64_t p)
      : rows_(rows), cols_(cols), p_(p),
        a_(size_t(rows) * size_t(cols), 0) {}

  static PrimeFieldMatrix identity(int n, int64_t p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int64_t modulus() const { return p_; }

  int64_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
  int64_t& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const PrimeFieldMatrix&,
                         const PrimeFieldMatrix&) = default;

private:
  int rows_, cols_;
  int64_t p_;
  std::vector<int64_t> a_;
};

PrimeFieldMatrix multiply(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);
std::vector<int64_t> apply(const PrimeFieldMatrix& m,
                           const std::vector<int64_t>& v);

// Reduced row echelon form (deterministic: leftmost pivot, scaled to 1,
// cleared above and below).
PrimeFieldMatrix rref(const PrimeFieldMatrix& m);
int rank(const PrimeFieldMatrix& m);
int nullity(const PrimeFieldMatrix& m);

// Basis of {v : Mv = 0} as the rows of a reduced-echelon matrix; unique for
// a given input, empty when the kernel is trivial.
std::vector<std::vector<int64_t>> kernel(const PrimeFieldMatrix& m);

// Kernel dimensions of the composites map[e-1] o ... o map[0]; the per-degree
// view of an orbit closure along one graded orbit.
struct KernelChain {
  std::vector<int> dims;           // dims[e-1] = nullity after e steps
  bool stabilized = false;         // last two entries agree, or chain filled
  std::optional<int> full_at;      // least e with kernel = whole source
};

// maps[i] sends the degree-t*p^i piece to the degree-t*p^(i+1) piece, so
// maps[i+1].cols() must equal maps[i].rows(). Runs min(maps.size(), max_e)
// steps, stopping early once the kernel fills.
KernelChain iterate_kernel_chain(std::span<const PrimeFieldMatrix> maps,
                                 int max_e);

// Least e with M^e = 0, if M is nilpotent (equivalently M^dim = 0); nullopt
// otherwise. Requires a square matrix.
std::optional<int> endo_nilpotence_index(const PrimeFieldMatrix& m);

}  // namespace fnil
