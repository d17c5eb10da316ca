#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace stackchow {

// Dense matrix over Z with arbitrary precision entries.  Zero rows or
// columns are legal; the 0x0 matrix is a legal value.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);  // zero-filled
    IntMatrix(std::initializer_list<std::initializer_list<long>> init);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const;
    bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }
    bool is_zero() const;

    std::vector<mpz_class> row(int i) const;
    std::vector<mpz_class> col(int j) const;
    void set_row(int i, const std::vector<mpz_class>& v);
    void set_col(int j, const std::vector<mpz_class>& v);

    // Submatrix of the listed rows/columns, in the listed order.
    IntMatrix select_rows(const std::vector<int>& idx) const;
    IntMatrix select_cols(const std::vector<int>& idx) const;

    // Stacks rhs below; column counts must agree.
    IntMatrix stacked(const IntMatrix& below) const;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpz_class> data_;
};

// u * input * v == d with u, v unimodular, d diagonal with nonnegative
// entries satisfying d[i] | d[i+1].  invariant_factors is the full nonzero
// diagonal of d, divisibility-ordered.
struct SnfResult {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    std::vector<mpz_class> invariant_factors;
};

// Deterministic Smith normal form.  Pivot rule: among the nonzero entries of
// the working submatrix pick one of minimal absolute value, ties broken by
// (row, col) lexicographic order; clear its row and column; restore the
// divisibility chain by folding in the first offending entry (row-major).
SnfResult smith_normal_form(const IntMatrix& m);

// The nonzero diagonal of the Smith normal form without tracking the
// transforms; much cheaper when only the factors are needed.
std::vector<mpz_class> invariant_factors(const IntMatrix& m);

int rank(const IntMatrix& m);

// Bareiss fraction-free determinant; m must be square.
mpz_class determinant(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

// Exact inverse of a unimodular matrix.
IntMatrix inverse_unimodular(const IntMatrix& u);

// Canonical row Hermite normal form: pivot columns strictly increase, pivots
// positive, entries above a pivot reduced into [0, pivot), zero rows last.
IntMatrix row_hermite(const IntMatrix& m);

// Column Hermite normal form (transpose convention of row_hermite).
IntMatrix column_hermite(const IntMatrix& m);

// Basis of { x : m x = 0 } as columns, in column Hermite normal form.
// Kernels are saturated, so the basis is canonical.
IntMatrix kernel(const IntMatrix& m);

// Whether x lies in the integer column span of m.
bool in_column_span(const IntMatrix& m, const std::vector<mpz_class>& x);

// v divided by the gcd of its entries; direction is preserved.  Rejects the
// zero vector.
std::vector<mpz_class> primitive(const std::vector<mpz_class>& v);

}  // namespace stackchow
