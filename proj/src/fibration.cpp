#include "lefkit/fibration.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lefkit {

const char* to_string(Base b) {
    return b == Base::disk ? "disk" : "sphere";
}

namespace {

const char* kRelatorCaveat =
    "identity on homology is a necessary condition for a relator, not a sufficient one";

TwistWord word_of(const Fibration& f) {
    return TwistWord{Surface{f.fiber_genus}, f.cycles};
}

std::size_t count_separating(const std::vector<TwistLetter>& letters) {
    return static_cast<std::size_t>(
        std::count_if(letters.begin(), letters.end(),
                      [](const TwistLetter& l) { return l.separating; }));
}

} // namespace

Fibration make_fibration(const TwistWord& w, Base base,
                         std::optional<mpz_class> section_square) {
    // revalidate letters: fibrations are often built from parsed input
    TwistWord checked = make_word(w.surface, w.letters);
    if (base == Base::sphere) {
        std::size_t n = 2 * static_cast<std::size_t>(w.surface.genus);
        if (!(word_matrix(checked) == identity(n)))
            throw precondition_error(
                "a sphere-base fibration needs total monodromy equal to the identity "
                "on homology; this word is not a relator");
    }
    Fibration f;
    f.fiber_genus = w.surface.genus;
    f.base = base;
    f.fiber_boundary_components = (base == Base::sphere) ? 0 : 1;
    f.cycles = std::move(checked.letters);
    f.section_square = std::move(section_square);
    return f;
}

Fibration korkmaz_fibration(int g) {
    return make_fibration(korkmaz_word(g), Base::sphere, mpz_class(-1));
}

Fibration twisted_fibration(int g, const mpz_class& n) {
    return make_fibration(twisted_relator(g, n), Base::sphere, mpz_class(-2));
}

Fibration filling_fibration(int g, const mpz_class& n) {
    return make_fibration(twisted_relator(g, n), Base::disk, mpz_class(-2));
}

Fibration fiber_sum(const Fibration& f1, const Fibration& f2, const SymplecticMatrix& f) {
    if (f1.fiber_genus != f2.fiber_genus)
        throw std::invalid_argument("fiber sum needs equal fiber genus");
    if (f1.base != Base::sphere || f2.base != Base::sphere)
        throw precondition_error("fiber sum is defined for sphere-base fibrations");
    std::size_t n = 2 * static_cast<std::size_t>(f1.fiber_genus);
    if (f.rows != n || f.cols != n || !is_symplectic(f))
        throw std::invalid_argument("fiber-sum gluing must act symplectically on the fiber");

    Fibration r;
    r.fiber_genus = f1.fiber_genus;
    r.base = Base::sphere;
    r.fiber_boundary_components = 0;
    r.cycles = f1.cycles;
    for (const TwistLetter& l : f2.cycles)
        r.cycles.push_back(TwistLetter{apply(f, l.curve), l.exponent, l.separating});
    if (f1.section_square && f2.section_square)
        r.section_square = *f1.section_square + *f2.section_square;
    return r;
}

AbelianGroup h1(const Fibration& f) {
    if (f.base == Base::sphere && !f.section_square)
        throw precondition_error(
            "h1 over a sphere base needs a section (section_square metadata): without "
            "one, the quotient-by-vanishing-cycles formula does not apply");
    std::size_t n = 2 * static_cast<std::size_t>(f.fiber_genus);
    IntegerMatrix m(n, f.cycles.size());
    for (std::size_t j = 0; j < f.cycles.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, j) = f.cycles[j].curve.coords[i];
    return cokernel(m);
}

long long euler_characteristic(const Fibration& f) {
    long long g = f.fiber_genus;
    long long s = static_cast<long long>(f.cycles.size());
    if (f.base == Base::sphere)
        return 2 * (2 - 2 * g) + s;
    return (1 - 2 * g) + s;
}

long meyer_cocycle(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("cocycle arguments must have equal dimension");
    if (!is_symplectic(a) || !is_symplectic(b))
        throw std::invalid_argument("cocycle arguments must be symplectic");
    std::size_t n = a.rows;
    IntegerMatrix ai = symplectic_inverse(a);

    // constraint matrix [A^{-1} - I | B - I], n x 2n
    RationalMatrix c(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            c.at(i, j) = ai.at(i, j) - (i == j ? 1 : 0);
            c.at(i, n + j) = b.at(i, j) - (i == j ? 1 : 0);
        }
    }
    std::vector<std::vector<mpq_class>> basis = rational_nullspace(c);
    if (basis.empty())
        return 0;

    // K = J (I - B)
    IntegerMatrix j = standard_j(static_cast<int>(n / 2));
    IntegerMatrix imb(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            imb.at(i, k) = (i == k ? 1 : 0) - b.at(i, k);
    IntegerMatrix kmat = mul(j, imb);

    std::size_t m = basis.size();
    RationalSymmetricForm q(m);
    std::vector<mpq_class> ky(n);
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t t = 0; t < m; ++t) {
            // phi((x1,y1),(x2,y2)) = (x1 + y1)^T K y2
            for (std::size_t i = 0; i < n; ++i) {
                ky[i] = 0;
                for (std::size_t k = 0; k < n; ++k)
                    ky[i] += mpq_class(kmat.at(i, k)) * basis[t][n + k];
            }
            mpq_class acc = 0;
            for (std::size_t i = 0; i < n; ++i)
                acc += (basis[p][i] + basis[p][n + i]) * ky[i];
            q.at(p, t) = acc;
        }
    }
    // symmetrize; a positive overall scale does not change the signature
    RationalSymmetricForm s(m);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t t = 0; t < m; ++t)
            s.at(p, t) = q.at(p, t) + q.at(t, p);
    return form_signature(s);
}

long long signature(const TwistWord& w) {
    std::size_t n = 2 * static_cast<std::size_t>(w.surface.genus);
    IntegerMatrix id = identity(n);
    if (!(word_matrix(w) == id))
        throw precondition_error(
            "signature needs a relator word: the total monodromy is not the identity "
            "on homology, so the cocycle assembly hypothesis fails");
    if (w.letters.empty())
        return 0;

    std::vector<IntegerMatrix> mats;
    mats.reserve(w.letters.size());
    for (const TwistLetter& l : w.letters)
        mats.push_back(twist_power(l.curve, l.exponent));

    // sum of tau(M_k ... M_1, M_{k+1}) over prefixes, leftmost letter first;
    // each separating letter contributes -1 locally
    long long total = 0;
    IntegerMatrix prefix = mats[0];
    for (std::size_t k = 1; k < mats.size(); ++k) {
        total += meyer_cocycle(prefix, mats[k]);
        prefix = mul(mats[k], prefix);
    }
    total -= static_cast<long long>(count_separating(w.letters));
    return total;
}

long long signature(const Fibration& f) {
    return signature(word_of(f));
}

RelatorReport verify_relator(const TwistWord& w) {
    RelatorReport r;
    r.length = w.letters.size();
    r.matrix = word_matrix(w);
    r.identity = (r.matrix == identity(r.matrix.rows));
    r.separating_count = count_separating(w.letters);
    r.caveat = kRelatorCaveat;
    return r;
}

AbelianGroup plumbing_boundary_h1(const PlumbingGraph& p) {
    std::size_t n = p.vertices.size();
    if (n == 0)
        throw std::invalid_argument("plumbing graph needs at least one vertex");
    long genus_sum = 0;
    for (const PlumbingVertex& v : p.vertices) {
        if (v.genus < 0)
            throw std::invalid_argument("plumbing vertex genus must be nonnegative");
        genus_sum += v.genus;
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [i, j] : p.edges) {
        if (i >= n || j >= n)
            throw std::invalid_argument("plumbing edge endpoint out of range");
        if (i == j)
            throw std::invalid_argument("plumbing edges must join distinct vertices");
        auto key = std::minmax(i, j);
        if (!seen.insert(key).second)
            throw std::invalid_argument("at most one plumbing edge per vertex pair");
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    // connectivity
    std::vector<bool> visited(n, false);
    std::queue<std::size_t> bfs;
    bfs.push(0);
    visited[0] = true;
    std::size_t reached = 1;
    while (!bfs.empty()) {
        std::size_t v = bfs.front();
        bfs.pop();
        for (std::size_t u : adj[v]) {
            if (!visited[u]) {
                visited[u] = true;
                ++reached;
                bfs.push(u);
            }
        }
    }
    if (reached != n)
        throw std::invalid_argument("plumbing graph must be connected");

    // intersection matrix: Euler numbers on the diagonal, edge counts off it
    IntegerMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
        q.at(i, i) = p.vertices[i].euler;
    for (auto [i, j] : p.edges) {
        q.at(i, j) += 1;
        q.at(j, i) += 1;
    }
    AbelianGroup c = cokernel(q);
    c.free_rank += 2 * genus_sum;
    return c;
}

FillingReport filling_report(int g, const mpz_class& n) {
    Fibration filling = filling_fibration(g, n);

    FillingReport r;
    r.genus = g;
    r.twist_power = n;
    r.length = filling.cycles.size();
    r.separating_count = count_separating(filling.cycles);
    r.h1 = h1(filling);
    r.chi = euler_characteristic(filling);
    r.sigma = signature(filling);
    r.section_square = *filling.section_square;
    r.boundary_h1 = plumbing_boundary_h1(
        PlumbingGraph{{{g, 0}, {0, 2}}, {{0, 1}}});

    long long s = static_cast<long long>(r.length);
    long long base_chi = 1 - 2 * static_cast<long long>(g);
    std::ostringstream rel;
    rel << "twist power n = " << n.get_str();
    r.notes.push_back(rel.str());
    std::ostringstream rel2;
    rel2 << "s = chi - (1 - 2g): " << s << " = " << r.chi << " - (" << base_chi << ")";
    r.notes.push_back(rel2.str());
    // chi bookkeeping caveat: the doubled word has twice the letters of one
    // relator period, and per-period quotes of chi are correspondingly lower
    long long period = static_cast<long long>(r.length / 2);
    long long period_chi = base_chi + period;
    std::ostringstream chi_note;
    chi_note << "chi counts every letter of the doubled word (s = " << s
             << "); one relator period (s = " << period << ") gives chi = "
             << period_chi;
    r.notes.push_back(chi_note.str());
    std::ostringstream bd;
    bd << "boundary plumbing h1: " << r.boundary_h1.to_string();
    r.notes.push_back(bd.str());
    return r;
}

} // namespace lefkit
