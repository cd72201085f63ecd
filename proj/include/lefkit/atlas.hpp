#pragma once

#include <map>
#include <string>
#include <vector>

#include "lefkit/twist.hpp"

namespace lefkit {

// The named curve system on the genus-g surface behind the relator
// constructions: B_0, ..., B_g together with two extra nonseparating curves
// a, b when g is odd, or one separating curve c (class 0) when g is even.
struct CurveAtlas {
    Surface surface;
    std::vector<std::string> names;            // display order: B0..Bg, then a,b or c
    std::map<std::string, TwistLetter> curves; // unit-exponent letter per name

    bool has(const std::string& name) const;
    const TwistLetter& at(const std::string& name) const; // throws on unknown name
};

// Homology classes of the curve system for g >= 2.
//
// Both parities share the downward recursion
//   B_{2i}   = a_i - a_{i+1} + B_{2i+1} + a_{g-i+1} - a_{g-i}
//   B_{2i-1} = b_i + B_{2i} + b_{g-i+1}
// and B_0 = b_1 + ... + b_g; they differ in the seed and the extra curves:
//   g = 2r+1: B_g = 2 a_{r+1} + b_{r+1}, and class(a) = class(b) = a_{r+1}
//             (the two extra twist curves are the two lifts of one curve
//              under the relevant free double cover, hence homologous);
//   g = 2r:   B_g = a_r + a_{r+1}, and c is separating with class 0.
CurveAtlas korkmaz_curves(int g);

// The relator word:
//   g odd:  (t_B0 t_B1 ... t_Bg t_a^2 t_b^2)^2, 2g+10 letters,
//   g even: (t_B0 t_B1 ... t_Bg t_c)^2,         2g+4  letters,
// with every exponent stored as +1 (squares are expanded into two letters,
// so letters count singular fibers one-to-one).
// Its word_matrix is the identity.
TwistWord korkmaz_word(int g);

// The twisted double W_g(n) = W_g * (W_g conjugated by t_{a_1}^n), n >= 0.
// Twice the length of korkmaz_word(g); still a relator on homology.
TwistWord twisted_relator(int g, const mpz_class& n);

} // namespace lefkit
