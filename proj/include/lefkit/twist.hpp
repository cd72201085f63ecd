#pragma once

#include <vector>

#include "lefkit/matrix.hpp"
#include "lefkit/surface.hpp"

namespace lefkit {

// One letter of a twist word: a Dehn twist t_c^e along a curve with homology
// class `curve`. The separating flag is carried metadata (a separating curve
// is null-homologous, so separating == true forces curve == 0; the converse
// is not inferred).
struct TwistLetter {
    HomologyClass curve;
    mpz_class exponent = 1; // nonzero
    bool separating = false;

    friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

// An ordered word of twists on one surface. By convention the leftmost
// letter acts first, so the homology action of the word is
// M_s * ... * M_2 * M_1 on column vectors.
struct TwistWord {
    Surface surface;
    std::vector<TwistLetter> letters;

    friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

// Checked constructor: exponent nonzero, separating implies zero class.
TwistLetter make_letter(HomologyClass curve, mpz_class exponent = 1,
                        bool separating = false);

// Checked constructor: all letters must live on `s`.
TwistWord make_word(Surface s, std::vector<TwistLetter> letters);

// Image of a class under a 2g x 2g matrix.
HomologyClass apply(const IntegerMatrix& m, const HomologyClass& x);

// Picard-Lefschetz transvection x -> x + handedness * <x,c> * c, as the
// matrix I - handedness * c (c^T J). handedness must be +1 or -1
// (+1 is the right-handed twist in our orientation convention).
SymplecticMatrix twist_matrix(const HomologyClass& c, int handedness = +1);

// Exact power T_c^e = I - e * c (c^T J), valid for any integer e because
// (c c^T J)^2 = 0.
SymplecticMatrix twist_power(const HomologyClass& c, const mpz_class& e);

// Composite homology action of the word (leftmost letter applied first).
// The empty word gives the identity.
SymplecticMatrix word_matrix(const TwistWord& w);

// Conjugation: each letter (c, e, sep) becomes (f*c, e, sep), realizing
// f t_c f^{-1} = t_{f(c)} letterwise. f must be a symplectic 2g x 2g matrix
// on the word's surface.
TwistWord conjugate_word(const TwistWord& w, const SymplecticMatrix& f);

} // namespace lefkit
