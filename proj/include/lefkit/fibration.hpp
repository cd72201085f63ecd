#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefkit/atlas.hpp"
#include "lefkit/linalg.hpp"

namespace lefkit {

enum class Base { disk, sphere };

const char* to_string(Base b);

// A Lefschetz fibration described by its monodromy factorization: fiber
// genus, base surface, and the ordered vanishing-cycle letters. Over the
// sphere the total monodromy must be the identity on homology (the
// fibration has to close up); over the disk the fiber has one boundary
// component. section_square is trusted metadata (self-intersection of a
// chosen section), never inferred.
struct Fibration {
    int fiber_genus = 1;
    Base base = Base::disk;
    int fiber_boundary_components = 1; // 0 for sphere base, 1 for disk base
    std::vector<TwistLetter> cycles;
    std::optional<mpz_class> section_square;
};

// Checked constructor; enforces the sphere-base closure condition.
Fibration make_fibration(const TwistWord& w, Base base,
                         std::optional<mpz_class> section_square = std::nullopt);

// The standard fibrations of the relator family:
//   korkmaz_fibration(g): W_g over the sphere, section of square -1;
//   twisted_fibration(g,n): W_g(n) over the sphere, section of square -2;
//   filling_fibration(g,n): W_g(n) over the disk (the Stein-filling side),
//                           same section metadata.
Fibration korkmaz_fibration(int g);
Fibration twisted_fibration(int g, const mpz_class& n);
Fibration filling_fibration(int g, const mpz_class& n);

// Fiber sum along a fiber-preserving gluing acting as f on homology:
// concatenates the factorizations, with the second one's classes mapped
// through f. Requires equal fiber genus and sphere base on both sides.
// section_square adds when both summands carry it, else is absent.
Fibration fiber_sum(const Fibration& f1, const Fibration& f2, const SymplecticMatrix& f);

// H_1 of the total space: the quotient of H_1(fiber) by the span of the
// vanishing-cycle classes. Over a sphere base this formula needs a section
// (refused otherwise); over a disk base it is the handle-attachment
// presentation and always applies.
AbelianGroup h1(const Fibration& f);

// chi = chi(base) * chi(fiber) + s with s = number of letters:
// sphere base 2(2-2g) + s, disk base (1-2g) + s.
long long euler_characteristic(const Fibration& f);

// Meyer's signature cocycle tau(A, B) for symplectic A, B: the signature of
// the symmetrized form <(x1,y1),(x2,y2)> = (x1+y1)^T J (I-B) y2 on
// V = {(x,y) : (A^{-1} - I)x + (B - I)y = 0}.
long meyer_cocycle(const SymplecticMatrix& a, const SymplecticMatrix& b);

// Signature of the total space, assembled from the cocycle:
//   sigma = sum_{k=1}^{s-1} tau(M_k...M_1, M_{k+1}) - #separating letters.
// Only defined for relator words (total monodromy = identity on homology);
// anything else is refused. See docs/CONVENTIONS.md for the sign
// calibration.
long long signature(const TwistWord& w);
long long signature(const Fibration& f);

// Relator check on homology. identity == true is a necessary condition for
// the word to be a relator in the mapping class group, never a proof.
struct RelatorReport {
    std::size_t length = 0;
    SymplecticMatrix matrix;
    bool identity = false;
    std::size_t separating_count = 0;
    std::string caveat;
};

RelatorReport verify_relator(const TwistWord& w);

// A plumbing graph: disk bundles over closed surfaces (vertex = genus and
// Euler number), plumbed along edges. At most one edge per vertex pair.
struct PlumbingVertex {
    long genus = 0;
    long euler = 0;
};

struct PlumbingGraph {
    std::vector<PlumbingVertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// H_1 of the boundary 3-manifold: Z^(2 * sum of genera) + coker(Q), where Q
// has the Euler numbers on the diagonal and edge counts off it.
// The graph must be connected.
AbelianGroup plumbing_boundary_h1(const PlumbingGraph& p);

// Aggregated invariants of the disk-base fibration of W_g(n) together with
// the boundary plumbing of the associated contact 3-manifold.
struct FillingReport {
    int genus = 0;
    mpz_class twist_power; // n
    std::size_t length = 0;
    std::size_t separating_count = 0;
    AbelianGroup h1;
    long long chi = 0;
    long long sigma = 0;
    mpz_class section_square;
    AbelianGroup boundary_h1;
    std::vector<std::string> notes;
};

FillingReport filling_report(int g, const mpz_class& n);

} // namespace lefkit
