#include "lefkit/twist.hpp"

namespace lefkit {

TwistLetter make_letter(HomologyClass curve, mpz_class exponent, bool separating) {
    if (exponent == 0)
        throw std::invalid_argument("twist exponent must be nonzero");
    if (separating && !curve.is_zero())
        throw std::invalid_argument("a separating curve is null-homologous, its class must be zero");
    return TwistLetter{std::move(curve), std::move(exponent), separating};
}

TwistWord make_word(Surface s, std::vector<TwistLetter> letters) {
    for (const TwistLetter& l : letters) {
        if (!(l.curve.surface == s))
            throw std::invalid_argument("twist word letter lives on a different surface");
        if (l.exponent == 0)
            throw std::invalid_argument("twist exponent must be nonzero");
        if (l.separating && !l.curve.is_zero())
            throw std::invalid_argument("a separating curve is null-homologous, its class must be zero");
    }
    return TwistWord{s, std::move(letters)};
}

HomologyClass apply(const IntegerMatrix& m, const HomologyClass& x) {
    if (m.rows != x.coords.size() || m.cols != x.coords.size())
        throw std::invalid_argument("matrix does not act on this surface's homology");
    return HomologyClass{x.surface, apply(m, x.coords)};
}

SymplecticMatrix twist_power(const HomologyClass& c, const mpz_class& e) {
    std::size_t n = c.coords.size();
    // (c^T J)_j: pair c against the j-th basis vector from the right.
    std::vector<mpz_class> ctj(n);
    for (std::size_t i = 0; i < n / 2; ++i) {
        ctj[2 * i + 1] = c.coords[2 * i];
        ctj[2 * i] = -c.coords[2 * i + 1];
    }
    IntegerMatrix m = identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (c.coords[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) -= e * c.coords[i] * ctj[j];
    }
    return m;
}

SymplecticMatrix twist_matrix(const HomologyClass& c, int handedness) {
    if (handedness != 1 && handedness != -1)
        throw std::invalid_argument("handedness must be +1 or -1");
    return twist_power(c, handedness);
}

SymplecticMatrix word_matrix(const TwistWord& w) {
    IntegerMatrix m = identity(2 * static_cast<std::size_t>(w.surface.genus));
    // leftmost letter acts first: total = M_s ... M_2 M_1
    for (const TwistLetter& l : w.letters) {
        if (!(l.curve.surface == w.surface))
            throw std::invalid_argument("twist word letter lives on a different surface");
        m = mul(twist_power(l.curve, l.exponent), m);
    }
    return m;
}

TwistWord conjugate_word(const TwistWord& w, const SymplecticMatrix& f) {
    std::size_t n = 2 * static_cast<std::size_t>(w.surface.genus);
    if (f.rows != n || f.cols != n)
        throw std::invalid_argument("conjugating matrix does not act on this surface's homology");
    if (!is_symplectic(f))
        throw std::invalid_argument("conjugating matrix must be symplectic");
    TwistWord r;
    r.surface = w.surface;
    r.letters.reserve(w.letters.size());
    for (const TwistLetter& l : w.letters)
        r.letters.push_back(TwistLetter{apply(f, l.curve), l.exponent, l.separating});
    return r;
}

} // namespace lefkit
