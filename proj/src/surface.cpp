#include "lefkit/surface.hpp"

#include <algorithm>

namespace lefkit {

namespace {

void check_surface(Surface s) {
    if (s.genus < 1)
        throw std::invalid_argument("surface genus must be at least 1");
}

void check_same_surface(const HomologyClass& x, const HomologyClass& y) {
    if (!(x.surface == y.surface))
        throw std::invalid_argument("homology classes live on different surfaces");
}

} // namespace

bool HomologyClass::is_zero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](const mpz_class& c) { return c == 0; });
}

HomologyClass make_class(Surface s, std::vector<mpz_class> coords) {
    check_surface(s);
    if (coords.size() != static_cast<std::size_t>(2 * s.genus))
        throw std::invalid_argument("homology class needs 2*genus coordinates");
    return HomologyClass{s, std::move(coords)};
}

HomologyClass zero_class(Surface s) {
    check_surface(s);
    return HomologyClass{s, std::vector<mpz_class>(2 * s.genus)};
}

HomologyClass basis_class(Surface s, char kind, int i) {
    check_surface(s);
    if (kind != 'a' && kind != 'b')
        throw std::invalid_argument("basis class kind must be 'a' or 'b'");
    if (i < 1 || i > s.genus)
        throw std::invalid_argument("basis class index out of range");
    HomologyClass x = zero_class(s);
    x.coords[2 * (i - 1) + (kind == 'a' ? 0 : 1)] = 1;
    return x;
}

mpz_class intersection_pairing(const HomologyClass& x, const HomologyClass& y) {
    check_same_surface(x, y);
    mpz_class s = 0;
    for (int i = 0; i < x.surface.genus; ++i) {
        s += x.coords[2 * i] * y.coords[2 * i + 1];
        s -= x.coords[2 * i + 1] * y.coords[2 * i];
    }
    return s;
}

HomologyClass operator+(const HomologyClass& x, const HomologyClass& y) {
    check_same_surface(x, y);
    HomologyClass r = x;
    for (std::size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] += y.coords[i];
    return r;
}

HomologyClass operator-(const HomologyClass& x, const HomologyClass& y) {
    check_same_surface(x, y);
    HomologyClass r = x;
    for (std::size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] -= y.coords[i];
    return r;
}

HomologyClass operator-(const HomologyClass& x) {
    HomologyClass r = x;
    for (mpz_class& c : r.coords)
        c = -c;
    return r;
}

HomologyClass operator*(const mpz_class& k, const HomologyClass& x) {
    HomologyClass r = x;
    for (mpz_class& c : r.coords)
        c *= k;
    return r;
}

} // namespace lefkit
