#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace lefkit {

// Dense matrix of arbitrary-precision integers, row-major.
// All sizes in this library are tiny (at most a few dozen rows), so no
// attempt is made at sparsity or asymptotically clever algorithms.
struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<mpz_class> a; // rows*cols entries, row-major

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
};

// A 2g x 2g integer matrix with M^T J M = J in the basis
// (a_1, b_1, ..., a_g, b_g); the genus is cols/2. Kept as a plain alias:
// symplecticity is a checkable property, not a separate representation.
using SymplecticMatrix = IntegerMatrix;

IntegerMatrix identity(std::size_t n);
IntegerMatrix mul(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix transpose(const IntegerMatrix& m);
std::vector<mpz_class> apply(const IntegerMatrix& m, const std::vector<mpz_class>& v);

// Exact determinant (Bareiss fraction-free elimination).
mpz_class determinant(const IntegerMatrix& m);

// The intersection form: block-diagonal with blocks [[0,1],[-1,0]],
// so <a_i, b_i> = +1.
IntegerMatrix standard_j(int genus);

// True iff m is square of even dimension and m^T J m = J.
// Throws std::invalid_argument on a non-square or odd-dimensional input.
bool is_symplectic(const IntegerMatrix& m);

// Inverse of a symplectic matrix, computed as -J m^T J (exact, no division).
// The input must be symplectic; this is checked.
IntegerMatrix symplectic_inverse(const IntegerMatrix& m);

} // namespace lefkit
