#pragma once

#include <vector>

#include <gmpxx.h>

#include "lefkit/common.hpp"

namespace lefkit {

// A closed oriented surface of genus g >= 1. The surface fixes the homology
// basis order (a_1, b_1, a_2, b_2, ..., a_g, b_g) and with it the
// intersection form.
struct Surface {
    int genus = 1;

    friend bool operator==(const Surface&, const Surface&) = default;
};

// An element of H_1 of the surface: an integer vector of length 2g in the
// basis (a_1, b_1, ..., a_g, b_g). Entries are arbitrary precision.
struct HomologyClass {
    Surface surface;
    std::vector<mpz_class> coords;

    bool is_zero() const;

    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

// Checked constructor: coords must have length 2*genus, genus >= 1.
HomologyClass make_class(Surface s, std::vector<mpz_class> coords);

HomologyClass zero_class(Surface s);

// The basis class a_i or b_i (kind 'a' or 'b', 1 <= i <= g).
HomologyClass basis_class(Surface s, char kind, int i);

// <x, y> = x^T J y. Antisymmetric, bilinear; <a_i, b_i> = +1.
// Throws if x and y live on different surfaces.
mpz_class intersection_pairing(const HomologyClass& x, const HomologyClass& y);

HomologyClass operator+(const HomologyClass& x, const HomologyClass& y);
HomologyClass operator-(const HomologyClass& x, const HomologyClass& y);
HomologyClass operator-(const HomologyClass& x);
HomologyClass operator*(const mpz_class& k, const HomologyClass& x);

} // namespace lefkit
