#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "lefkit/atlas.hpp"
#include "lefkit/fibration.hpp"

using namespace lefkit;

namespace {

SymplecticMatrix random_word_matrix(const Surface& s, std::mt19937& rng, int letters) {
    std::uniform_int_distribution<long> entry(-3, 3);
    std::uniform_int_distribution<long> expo(-2, 2);
    SymplecticMatrix m = identity(2 * static_cast<std::size_t>(s.genus));
    for (int k = 0; k < letters; ++k) {
        std::vector<mpz_class> c(2 * static_cast<std::size_t>(s.genus));
        for (auto& x : c)
            x = entry(rng);
        long e = expo(rng);
        if (e == 0)
            e = 1;
        m = mul(twist_power(make_class(s, c), e), m);
    }
    return m;
}

} // namespace

TEST_CASE("meyer cocycle: base values") {
    Surface s{1};
    SymplecticMatrix ta = twist_matrix(basis_class(s, 'a', 1));
    SymplecticMatrix tb = twist_matrix(basis_class(s, 'b', 1));

    CHECK(meyer_cocycle(identity(2), ta) == 0);
    CHECK(meyer_cocycle(ta, identity(2)) == 0);
    CHECK(meyer_cocycle(ta, symplectic_inverse(ta)) == 0);
    CHECK(meyer_cocycle(ta, tb) == 0);
    CHECK(meyer_cocycle(ta, ta) == -1);
    CHECK(meyer_cocycle(mul(ta, tb), ta) == -1);
    SymplecticMatrix m = mul(tb, ta); // t_a then t_b
    CHECK(meyer_cocycle(m, m) == -2);

    SUBCASE("genus two spot value") {
        Surface t{2};
        CHECK(meyer_cocycle(twist_matrix(basis_class(t, 'a', 1)),
                            twist_matrix(basis_class(t, 'b', 2))) == 0);
    }
    SUBCASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS(meyer_cocycle(identity(2), identity(4)), std::invalid_argument);
    }
    SUBCASE("non-symplectic input is rejected") {
        IntegerMatrix bad = identity(2);
        bad.at(0, 0) = 2;
        CHECK_THROWS_AS(meyer_cocycle(bad, identity(2)), std::invalid_argument);
    }
}

TEST_CASE("meyer cocycle: cocycle identity on random triples") {
    // tau(A,B) + tau(AB,C) = tau(B,C) + tau(A,BC), 200 triples through genus 3
    std::mt19937 rng(112358);
    for (int trial = 0; trial < 200; ++trial) {
        Surface s{1 + trial % 3};
        SymplecticMatrix a = random_word_matrix(s, rng, 3);
        SymplecticMatrix b = random_word_matrix(s, rng, 3);
        SymplecticMatrix c = random_word_matrix(s, rng, 3);
        long lhs = meyer_cocycle(a, b) + meyer_cocycle(mul(a, b), c);
        long rhs = meyer_cocycle(b, c) + meyer_cocycle(a, mul(b, c));
        CHECK(lhs == rhs);
        CHECK(std::abs(meyer_cocycle(a, b)) <= 2 * (1 + trial % 3));
    }
}

TEST_CASE("signature of relator words") {
    SUBCASE("known values for the base relators") {
        CHECK(signature(korkmaz_word(2)) == -4);
        CHECK(signature(korkmaz_word(3)) == -8);
        CHECK(signature(korkmaz_word(4)) == -4);
        CHECK(signature(korkmaz_word(5)) == -8);
    }
    SUBCASE("twisting does not change by n, only by the doubling") {
        CHECK(signature(twisted_relator(2, 1)) == -8);
        CHECK(signature(twisted_relator(2, 3)) == -8);
        CHECK(signature(twisted_relator(3, 1)) == -16);
        CHECK(signature(twisted_relator(3, 2)) == -16);
        CHECK(signature(twisted_relator(4, 2)) == -8);
    }
    SUBCASE("non-relator words are refused") {
        Surface s{2};
        TwistWord w = make_word(s, {make_letter(basis_class(s, 'a', 1))});
        CHECK_THROWS_AS(signature(w), precondition_error);
    }
    SUBCASE("a relator with one extra twist is refused") {
        // appending B0 once more breaks triviality on homology
        TwistWord w = korkmaz_word(2);
        w.letters.push_back(w.letters.front());
        CHECK(word_matrix(w) != identity(4));
        CHECK_THROWS_AS(signature(w), precondition_error);
    }
    SUBCASE("invariance under cyclic rotation") {
        TwistWord w = korkmaz_word(3);
        for (std::size_t k : {std::size_t{1}, std::size_t{5}, std::size_t{9}}) {
            TwistWord rot = w;
            std::rotate(rot.letters.begin(), rot.letters.begin() + k,
                        rot.letters.end());
            CHECK(signature(rot) == -8);
        }
    }
    SUBCASE("empty word has signature zero") {
        CHECK(signature(make_word(Surface{2}, {})) == 0);
    }
}

TEST_CASE("fibrations: construction and euler characteristic") {
    SUBCASE("sphere base demands a relator") {
        Surface s{2};
        TwistWord w = make_word(s, {make_letter(basis_class(s, 'a', 1))});
        CHECK_THROWS_AS(make_fibration(w, Base::sphere), precondition_error);
        CHECK_NOTHROW(make_fibration(w, Base::disk));
    }
    SUBCASE("chi over the sphere: 2(2-2g) + s") {
        CHECK(euler_characteristic(korkmaz_fibration(3)) == 2 * (2 - 6) + 16);
        CHECK(euler_characteristic(korkmaz_fibration(2)) == 2 * (2 - 4) + 8);
        CHECK(euler_characteristic(twisted_fibration(3, 5)) == 2 * (2 - 6) + 32);
    }
    SUBCASE("chi over the disk: (1-2g) + s") {
        CHECK(euler_characteristic(filling_fibration(3, 5)) == (1 - 6) + 32);
        for (int g : {3, 5, 7})
            for (int n : {1, 4})
                CHECK(euler_characteristic(filling_fibration(g, n)) == 2 * g + 21);
    }
    SUBCASE("chi is additive under fiber sum minus the doubled fiber") {
        // chi(X1 # X2) = chi(X1) + chi(X2) - 2 chi(F)
        Fibration f = korkmaz_fibration(3);
        Fibration sum = fiber_sum(f, f, identity(6));
        CHECK(euler_characteristic(sum) ==
              2 * euler_characteristic(f) - 2 * (2 - 6));
    }
}

TEST_CASE("fibrations: first homology") {
    SUBCASE("untwisted total spaces") {
        // odd genus: Z^{g-1}; even genus: Z^g
        for (int g = 2; g <= 6; ++g) {
            AbelianGroup h = h1(korkmaz_fibration(g));
            CHECK(h.free_rank == (g % 2 ? g - 1 : g));
            CHECK(h.torsion.empty());
        }
    }
    SUBCASE("twisted total spaces pick up Z/n") {
        for (int g : {3, 5}) {
            for (int n = 1; n <= 4; ++n) {
                AbelianGroup h = h1(twisted_fibration(g, n));
                CHECK(h.free_rank == g - 2);
                if (n == 1) {
                    CHECK(h.torsion.empty());
                } else {
                    REQUIRE(h.torsion.size() == 1);
                    CHECK(h.torsion[0] == n);
                }
            }
        }
    }
    SUBCASE("disk and sphere totals agree for these words") {
        for (int g : {2, 3, 4, 5})
            for (int n : {1, 2, 5})
                CHECK(h1(filling_fibration(g, n)) == h1(twisted_fibration(g, n)));
    }
    SUBCASE("a sphere fibration without section data refuses h1") {
        Fibration f = make_fibration(korkmaz_word(2), Base::sphere);
        CHECK_THROWS_AS(h1(f), precondition_error);
    }
    SUBCASE("h1 ignores letter order and curve orientation") {
        TwistWord w = twisted_relator(3, 4);
        Fibration base = make_fibration(w, Base::disk);
        AbelianGroup expected = h1(base);

        TwistWord shuffled = w;
        std::mt19937 rng(31415);
        std::shuffle(shuffled.letters.begin(), shuffled.letters.end(), rng);
        CHECK(h1(make_fibration(shuffled, Base::disk)) == expected);

        TwistWord negated = w;
        for (TwistLetter& l : negated.letters)
            l.curve = -l.curve;
        CHECK(h1(make_fibration(negated, Base::disk)) == expected);
    }
}

TEST_CASE("fiber sums") {
    Fibration f2 = korkmaz_fibration(2);
    Fibration f3 = korkmaz_fibration(3);

    SUBCASE("genus mismatch is rejected") {
        CHECK_THROWS_AS(fiber_sum(f2, f3, identity(4)), std::invalid_argument);
    }
    SUBCASE("disk pieces cannot be summed") {
        Fibration d = filling_fibration(2, 1);
        CHECK_THROWS_AS(fiber_sum(d, make_fibration(korkmaz_word(2), Base::sphere),
                                  identity(4)),
                        precondition_error);
    }
    SUBCASE("gluing map must be symplectic") {
        IntegerMatrix bad = identity(4);
        bad.at(0, 1) = 1;
        bad.at(1, 0) = 1;
        CHECK_FALSE(is_symplectic(bad));
        CHECK_THROWS_AS(fiber_sum(f2, f2, bad), std::invalid_argument);
    }
    SUBCASE("twisted relator equals the self-sum along the twist") {
        for (int g : {2, 3}) {
            for (int n : {0, 2}) {
                Fibration base = korkmaz_fibration(g);
                SymplecticMatrix f =
                    twist_power(basis_class(Surface{g}, 'a', 1), n);
                Fibration sum = fiber_sum(base, base, f);
                TwistWord expected = twisted_relator(g, n);
                REQUIRE(sum.cycles.size() == expected.letters.size());
                for (std::size_t i = 0; i < expected.letters.size(); ++i)
                    CHECK(sum.cycles[i] == expected.letters[i]);
                // section squares add: (-1) + (-1)
                REQUIRE(sum.section_square.has_value());
                CHECK(*sum.section_square == -2);
            }
        }
    }
    SUBCASE("signature is additive for these sums") {
        // sigma(X1 #_f X2) = sigma(X1) + sigma(X2) for the relator sums here
        for (int g : {2, 3}) {
            Fibration base = korkmaz_fibration(g);
            long sigma_base = signature(base);
            Surface s{g};
            std::vector<SymplecticMatrix> glues = {
                identity(2 * static_cast<std::size_t>(g)),
                twist_power(basis_class(s, 'a', 1), 1),
                twist_power(basis_class(s, 'a', 1), 3)};
            for (const SymplecticMatrix& f : glues) {
                Fibration sum = fiber_sum(base, base, f);
                CHECK(signature(sum) == 2 * sigma_base);
            }
        }
    }
}

TEST_CASE("filling reports") {
    FillingReport r = filling_report(3, 5);
    CHECK(r.genus == 3);
    CHECK(r.twist_power == 5);
    CHECK(r.length == 32);
    CHECK(r.separating_count == 0);
    CHECK(r.h1.free_rank == 1);
    REQUIRE(r.h1.torsion.size() == 1);
    CHECK(r.h1.torsion[0] == 5);
    CHECK(r.chi == 27);
    CHECK(r.sigma == -16);
    CHECK(r.section_square == -2);
    CHECK(r.boundary_h1 == make_group(6, {}));

    SUBCASE("notes mention the per-period count") {
        bool found = false;
        for (const std::string& n : r.notes)
            if (n.find("chi") != std::string::npos &&
                n.find("11") != std::string::npos)
                found = true;
        CHECK(found);
    }
    SUBCASE("distinct twist powers give distinct fillings") {
        for (int g : {3, 4, 5}) {
            for (int n = 1; n <= 5; ++n)
                for (int m = n + 1; m <= 6; ++m)
                    CHECK(filling_report(g, n).h1 != filling_report(g, m).h1);
        }
    }
    SUBCASE("even genus torsion still detects n") {
        FillingReport e = filling_report(4, 3);
        CHECK(e.h1.free_rank == 3);
        REQUIRE(e.h1.torsion.size() == 1);
        CHECK(e.h1.torsion[0] == 3);
    }
}

TEST_CASE("plumbing boundaries") {
    SUBCASE("the family's boundary graph: genus g joined to a sphere of square 2") {
        for (long g = 2; g <= 8; ++g) {
            PlumbingGraph p;
            p.vertices.push_back({g, 0});
            p.vertices.push_back({0, 2});
            p.edges.emplace_back(0, 1);
            AbelianGroup h = plumbing_boundary_h1(p);
            CHECK(h.free_rank == 2 * g);
            CHECK(h.torsion.empty());
        }
    }
    SUBCASE("single vertex: circle bundle over a surface") {
        // euler number e over genus h: H1 = Z^{2h} + Z + Z/e (e > 0)
        PlumbingGraph p;
        p.vertices.push_back({2, 3});
        AbelianGroup h = plumbing_boundary_h1(p);
        CHECK(h.free_rank == 4);
        REQUIRE(h.torsion.size() == 1);
        CHECK(h.torsion[0] == 3);

        PlumbingGraph zero;
        zero.vertices.push_back({1, 0});
        AbelianGroup hz = plumbing_boundary_h1(zero);
        CHECK(hz.free_rank == 3);
        CHECK(hz.torsion.empty());
    }
    SUBCASE("two spheres joined by an edge") {
        // intersection form [[-2,1],[1,-2]]: determinant 3
        PlumbingGraph p;
        p.vertices.push_back({0, -2});
        p.vertices.push_back({0, -2});
        p.edges.emplace_back(0, 1);
        AbelianGroup h = plumbing_boundary_h1(p);
        CHECK(h.free_rank == 0);
        REQUIRE(h.torsion.size() == 1);
        CHECK(h.torsion[0] == 3);
    }
    SUBCASE("malformed graphs are rejected") {
        PlumbingGraph empty;
        CHECK_THROWS_AS(plumbing_boundary_h1(empty), std::invalid_argument);

        PlumbingGraph neg;
        neg.vertices.push_back({-1, 0});
        CHECK_THROWS_AS(plumbing_boundary_h1(neg), std::invalid_argument);

        PlumbingGraph loop;
        loop.vertices.push_back({0, 1});
        loop.edges.emplace_back(0, 0);
        CHECK_THROWS_AS(plumbing_boundary_h1(loop), std::invalid_argument);

        PlumbingGraph range;
        range.vertices.push_back({0, 1});
        range.edges.emplace_back(0, 1);
        CHECK_THROWS_AS(plumbing_boundary_h1(range), std::invalid_argument);

        PlumbingGraph dup;
        dup.vertices.push_back({0, 1});
        dup.vertices.push_back({0, 1});
        dup.edges.emplace_back(0, 1);
        dup.edges.emplace_back(1, 0);
        CHECK_THROWS_AS(plumbing_boundary_h1(dup), std::invalid_argument);

        PlumbingGraph disconnected;
        disconnected.vertices.push_back({0, 1});
        disconnected.vertices.push_back({0, 1});
        CHECK_THROWS_AS(plumbing_boundary_h1(disconnected), std::invalid_argument);
    }
}

TEST_CASE("relator verification") {
    RelatorReport ok = verify_relator(korkmaz_word(4));
    CHECK(ok.identity);
    CHECK(ok.length == 12);
    CHECK(ok.separating_count == 2);
    CHECK_FALSE(ok.caveat.empty());

    Surface s{2};
    TwistWord w = make_word(s, {make_letter(basis_class(s, 'b', 2), 2)});
    RelatorReport bad = verify_relator(w);
    CHECK_FALSE(bad.identity);
    CHECK(bad.length == 1);
}
