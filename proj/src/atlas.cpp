#include "lefkit/atlas.hpp"

#include <stdexcept>

namespace lefkit {

bool CurveAtlas::has(const std::string& name) const {
    return curves.count(name) != 0;
}

const TwistLetter& CurveAtlas::at(const std::string& name) const {
    auto it = curves.find(name);
    if (it == curves.end())
        throw std::invalid_argument("unknown atlas curve '" + name + "'");
    return it->second;
}

CurveAtlas korkmaz_curves(int g) {
    if (g < 2)
        throw std::invalid_argument("the curve system needs genus at least 2");
    Surface s{g};
    int r = (g % 2 == 0) ? g / 2 : (g - 1) / 2;

    std::vector<HomologyClass> b(g + 1, zero_class(s));
    if (g % 2 == 1) {
        // seed: B_g = 2 a_{r+1} + b_{r+1}
        HomologyClass mid = basis_class(s, 'a', r + 1);
        b[g] = mid + basis_class(s, 'b', r + 1) + mid;
    } else {
        // seed: B_g = a_r + a_{r+1}
        b[g] = basis_class(s, 'a', r) + basis_class(s, 'a', r + 1);
    }
    for (int k = g - 1; k >= 1; --k) {
        if (k % 2 == 0) {
            int i = k / 2;
            b[k] = basis_class(s, 'a', i) - basis_class(s, 'a', i + 1) + b[k + 1]
                 + basis_class(s, 'a', g - i + 1) - basis_class(s, 'a', g - i);
        } else {
            int i = (k + 1) / 2;
            b[k] = basis_class(s, 'b', i) + b[k + 1] + basis_class(s, 'b', g - i + 1);
        }
    }
    b[0] = zero_class(s);
    for (int j = 1; j <= g; ++j)
        b[0] = b[0] + basis_class(s, 'b', j);

    CurveAtlas atlas;
    atlas.surface = s;
    for (int k = 0; k <= g; ++k) {
        std::string name = "B" + std::to_string(k);
        atlas.names.push_back(name);
        atlas.curves[name] = make_letter(b[k], 1, false);
    }
    if (g % 2 == 1) {
        // the two extra curves are homologous lifts of one curve
        HomologyClass mid = basis_class(s, 'a', r + 1);
        atlas.names.push_back("a");
        atlas.curves["a"] = make_letter(mid, 1, false);
        atlas.names.push_back("b");
        atlas.curves["b"] = make_letter(mid, 1, false);
    } else {
        atlas.names.push_back("c");
        atlas.curves["c"] = make_letter(zero_class(s), 1, true);
    }
    return atlas;
}

TwistWord korkmaz_word(int g) {
    CurveAtlas atlas = korkmaz_curves(g);
    std::vector<TwistLetter> half;
    for (int k = 0; k <= g; ++k)
        half.push_back(atlas.at("B" + std::to_string(k)));
    if (g % 2 == 1) {
        half.push_back(atlas.at("a"));
        half.push_back(atlas.at("a"));
        half.push_back(atlas.at("b"));
        half.push_back(atlas.at("b"));
    } else {
        half.push_back(atlas.at("c"));
    }
    std::vector<TwistLetter> letters = half;
    letters.insert(letters.end(), half.begin(), half.end());
    return make_word(atlas.surface, std::move(letters));
}

TwistWord twisted_relator(int g, const mpz_class& n) {
    if (n < 0)
        throw std::invalid_argument("twist power must be nonnegative");
    TwistWord w = korkmaz_word(g);
    SymplecticMatrix f = twist_power(basis_class(w.surface, 'a', 1), n);
    TwistWord conj = conjugate_word(w, f);
    TwistWord r = w;
    r.letters.insert(r.letters.end(), conj.letters.begin(), conj.letters.end());
    return r;
}

} // namespace lefkit
