#pragma once

#include <string>
#include <vector>

#include "lefkit/matrix.hpp"

namespace lefkit {

// A finitely generated abelian group in canonical form:
// Z^free_rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... and every d_i >= 2.
// Structural equality of the canonical form is group isomorphism.
struct AbelianGroup {
    long free_rank = 0;
    std::vector<mpz_class> torsion;

    std::string to_string() const; // "0", "Z", "Z^3", "Z + Z/5", ...

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Canonicalize a factor list: 0-factors become free rank, 1-factors are
// dropped, the rest must already form a divisibility chain (throws if not).
AbelianGroup make_group(long free_rank, std::vector<mpz_class> factors);

// Smith normal form: d = u * a * v with u, v unimodular and d diagonal,
// nonnegative, d_1 | d_2 | ...
struct SmithResult {
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;
};

SmithResult smith_normal_form(const IntegerMatrix& a);

// The nonzero diagonal entries of the Smith form (invariant factors).
std::vector<mpz_class> invariant_factors(const IntegerMatrix& a);

// Z^rows / (column span of a), via the Smith form.
AbelianGroup cokernel(const IntegerMatrix& a);

// Dense rational matrix, row-major.
struct RationalMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<mpq_class> a;

    RationalMatrix() = default;
    RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    mpq_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Basis of the rational nullspace {v : m v = 0}, one vector per free column
// of the reduced echelon form.
std::vector<std::vector<mpq_class>> rational_nullspace(const RationalMatrix& m);

// A symmetric bilinear form over Q, stored densely.
struct RationalSymmetricForm {
    std::size_t dimension = 0;
    std::vector<mpq_class> entries; // dimension^2, must satisfy Q = Q^T

    RationalSymmetricForm() = default;
    explicit RationalSymmetricForm(std::size_t n) : dimension(n), entries(n * n) {}

    mpq_class& at(std::size_t i, std::size_t j) { return entries[i * dimension + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return entries[i * dimension + j]; }
};

// Signature (#positive - #negative diagonal entries) via exact symmetric
// congruence diagonalization; degenerate directions contribute 0.
// Throws std::invalid_argument on an asymmetric input.
long form_signature(const RationalSymmetricForm& q);

} // namespace lefkit
