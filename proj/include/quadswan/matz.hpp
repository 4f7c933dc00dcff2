#pragma once

#include <cstddef>
#include <gmpxx.h>

#include <optional>
#include <vector>

namespace quadswan {

// Dense matrix of exact integers.  All the normal-form code below works on
// these; intermediate coefficient growth is a non-issue with mpz entries.
class MatZ {
  public:
    MatZ() = default;
    MatZ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}

    static MatZ identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    bool is_zero() const;

    friend bool operator==(const MatZ&, const MatZ&) = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> d_;
};

MatZ mat_mul(const MatZ& a, const MatZ& b);

// Exact determinant (fraction-free Bareiss elimination); square input.
mpz_class det(const MatZ& m);

struct SnfResult {
    MatZ d;  // diagonal, nonnegative, d[i] | d[i+1]
    MatZ u;  // unimodular, u * m * v == d
    MatZ v;
};

// Smith normal form.  Pivot selection: smallest nonzero absolute value in the
// trailing submatrix, then gcd-style reduction until the pivot divides
// everything it meets.
SnfResult smith_normal_form(const MatZ& m);

// Row-style Hermite normal form of the lattice spanned by the rows of m:
// echelon shape, positive pivots, entries above each pivot reduced into
// [0, pivot).  Zero rows are dropped, so the result is a lattice basis.
MatZ hnf_rows(const MatZ& m);

// Is v in the row lattice of basis (basis in hnf_rows form)?
bool hnf_contains(const MatZ& basis, const std::vector<mpz_class>& v);

// One integer solution x of a*x = b, if any exists.
std::optional<std::vector<mpz_class>> solve_integer(const MatZ& a, const std::vector<mpz_class>& b);

}  // namespace quadswan
