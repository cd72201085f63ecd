#include "lefkit/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lefkit {

std::string AbelianGroup::to_string() const {
    if (free_rank == 0 && torsion.empty())
        return "0";
    std::string s;
    if (free_rank == 1)
        s = "Z";
    else if (free_rank > 1)
        s = "Z^" + std::to_string(free_rank);
    for (const mpz_class& d : torsion) {
        if (!s.empty())
            s += " + ";
        s += "Z/" + d.get_str();
    }
    return s;
}

AbelianGroup make_group(long free_rank, std::vector<mpz_class> factors) {
    if (free_rank < 0)
        throw std::invalid_argument("free rank must be nonnegative");
    AbelianGroup g;
    g.free_rank = free_rank;
    for (mpz_class& d : factors) {
        if (d < 0)
            d = -d;
        if (d == 0)
            g.free_rank += 1; // Z/0 = Z
        else if (d != 1)
            g.torsion.push_back(d);
    }
    for (std::size_t i = 0; i + 1 < g.torsion.size(); ++i)
        if (g.torsion[i + 1] % g.torsion[i] != 0)
            throw std::invalid_argument("torsion factors must form a divisibility chain");
    return g;
}

namespace {

// Row/column operations applied in lockstep to the work matrix and the
// accumulated transformations, keeping d = u * a * v at every step.
struct SmithWork {
    IntegerMatrix d, u, v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t k = 0; k < d.cols; ++k)
            std::swap(d.at(i, k), d.at(j, k));
        for (std::size_t k = 0; k < u.cols; ++k)
            std::swap(u.at(i, k), u.at(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t k = 0; k < d.rows; ++k)
            std::swap(d.at(k, i), d.at(k, j));
        for (std::size_t k = 0; k < v.rows; ++k)
            std::swap(v.at(k, i), v.at(k, j));
    }
    // row i -= q * row t
    void row_sub(std::size_t i, const mpz_class& q, std::size_t t) {
        for (std::size_t k = 0; k < d.cols; ++k)
            d.at(i, k) -= q * d.at(t, k);
        for (std::size_t k = 0; k < u.cols; ++k)
            u.at(i, k) -= q * u.at(t, k);
    }
    // col j -= q * col t
    void col_sub(std::size_t j, const mpz_class& q, std::size_t t) {
        for (std::size_t k = 0; k < d.rows; ++k)
            d.at(k, j) -= q * d.at(k, t);
        for (std::size_t k = 0; k < v.rows; ++k)
            v.at(k, j) -= q * v.at(k, t);
    }
    // row t += row i
    void row_add(std::size_t t, std::size_t i) {
        for (std::size_t k = 0; k < d.cols; ++k)
            d.at(t, k) += d.at(i, k);
        for (std::size_t k = 0; k < u.cols; ++k)
            u.at(t, k) += u.at(i, k);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < d.cols; ++k)
            d.at(i, k) = -d.at(i, k);
        for (std::size_t k = 0; k < u.cols; ++k)
            u.at(i, k) = -u.at(i, k);
    }
};

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

SmithResult smith_normal_form(const IntegerMatrix& a) {
    SmithWork w{a, identity(a.rows), identity(a.cols)};
    std::size_t bound = std::min(a.rows, a.cols);
    bool exhausted = false;
    for (std::size_t t = 0; t < bound && !exhausted; ++t) {
        for (;;) {
            // pivot: entry of smallest nonzero absolute value in the block.
            // Re-selecting on every round keeps all quotients against the
            // current minimum, which is what keeps entries from exploding.
            bool found = false;
            std::size_t pi = t, pj = t;
            mpz_class best;
            for (std::size_t i = t; i < a.rows; ++i) {
                for (std::size_t j = t; j < a.cols; ++j) {
                    const mpz_class& x = w.d.at(i, j);
                    if (x == 0)
                        continue;
                    mpz_class ax = abs(x);
                    if (!found || ax < best) {
                        found = true;
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (!found) {
                exhausted = true; // block is zero: the diagonal is complete
                break;
            }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            // reduce the pivot's column and row; any nonzero remainder is a
            // strictly smaller entry, found by the next pivot selection
            bool changed = false;
            for (std::size_t i = t + 1; i < a.rows; ++i) {
                if (w.d.at(i, t) == 0)
                    continue;
                w.row_sub(i, floor_div(w.d.at(i, t), w.d.at(t, t)), t);
                if (w.d.at(i, t) != 0)
                    changed = true;
            }
            for (std::size_t j = t + 1; j < a.cols; ++j) {
                if (w.d.at(t, j) == 0)
                    continue;
                w.col_sub(j, floor_div(w.d.at(t, j), w.d.at(t, t)), t);
                if (w.d.at(t, j) != 0)
                    changed = true;
            }
            if (changed)
                continue;
            // pivot must divide the whole remaining block for the
            // divisibility chain; fold an offending row in and retry
            bool divides = true;
            for (std::size_t i = t + 1; i < a.rows && divides; ++i) {
                for (std::size_t j = t + 1; j < a.cols && divides; ++j) {
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        w.row_add(t, i);
                        divides = false;
                    }
                }
            }
            if (divides)
                break;
        }
        if (!exhausted && w.d.at(t, t) < 0)
            w.negate_row(t);
    }
    return SmithResult{std::move(w.u), std::move(w.d), std::move(w.v)};
}

std::vector<mpz_class> invariant_factors(const IntegerMatrix& a) {
    SmithResult s = smith_normal_form(a);
    std::vector<mpz_class> f;
    std::size_t bound = std::min(a.rows, a.cols);
    for (std::size_t i = 0; i < bound; ++i)
        if (s.d.at(i, i) != 0)
            f.push_back(s.d.at(i, i));
    return f;
}

AbelianGroup cokernel(const IntegerMatrix& a) {
    std::vector<mpz_class> f = invariant_factors(a);
    long rank = static_cast<long>(f.size());
    return make_group(static_cast<long>(a.rows) - rank, std::move(f));
}

std::vector<std::vector<mpq_class>> rational_nullspace(const RationalMatrix& m) {
    RationalMatrix a = m;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t p = r;
        while (p < a.rows && a.at(p, c) == 0)
            ++p;
        if (p == a.rows)
            continue;
        if (p != r)
            for (std::size_t k = 0; k < a.cols; ++k)
                std::swap(a.at(r, k), a.at(p, k));
        mpq_class d = a.at(r, c);
        for (std::size_t k = 0; k < a.cols; ++k)
            a.at(r, k) /= d;
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == r || a.at(i, c) == 0)
                continue;
            mpq_class f = a.at(i, c);
            for (std::size_t k = 0; k < a.cols; ++k)
                a.at(i, k) -= f * a.at(r, k);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<std::vector<mpq_class>> basis;
    std::size_t next_pivot = 0;
    for (std::size_t c = 0; c < a.cols; ++c) {
        if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        std::vector<mpq_class> v(a.cols);
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = -a.at(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

long form_signature(const RationalSymmetricForm& q) {
    std::size_t n = q.dimension;
    if (q.entries.size() != n * n)
        throw std::invalid_argument("form entry count does not match its dimension");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (q.at(i, j) != q.at(j, i))
                throw std::invalid_argument("form is not symmetric");

    RationalSymmetricForm w = q;
    long sig = 0;
    std::size_t start = 0;
    while (start < n) {
        // a nonzero diagonal entry to pivot on
        std::size_t p = n;
        for (std::size_t i = start; i < n; ++i) {
            if (w.at(i, i) != 0) {
                p = i;
                break;
            }
        }
        if (p == n) {
            // all-zero diagonal: fold one hyperbolic direction onto the
            // diagonal (row/col i += row/col j), then retry
            std::size_t fi = n, fj = n;
            for (std::size_t i = start; i < n && fi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (w.at(i, j) != 0) {
                        fi = i;
                        fj = j;
                        break;
                    }
            if (fi == n)
                break; // zero block: no further signature contribution
            for (std::size_t k = 0; k < n; ++k)
                w.at(fi, k) += w.at(fj, k);
            for (std::size_t k = 0; k < n; ++k)
                w.at(k, fi) += w.at(k, fj);
            continue;
        }
        if (p != start) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(w.at(start, k), w.at(p, k));
            for (std::size_t k = 0; k < n; ++k)
                std::swap(w.at(k, start), w.at(k, p));
        }
        mpq_class d = w.at(start, start);
        sig += sgn(d) > 0 ? 1 : -1;
        for (std::size_t i = start + 1; i < n; ++i) {
            if (w.at(i, start) == 0)
                continue;
            mpq_class f = w.at(i, start) / d;
            for (std::size_t k = 0; k < n; ++k)
                w.at(i, k) -= f * w.at(start, k);
        }
        for (std::size_t j = start + 1; j < n; ++j) {
            if (w.at(start, j) == 0)
                continue;
            mpq_class f = w.at(start, j) / d;
            for (std::size_t k = 0; k < n; ++k)
                w.at(k, j) -= f * w.at(k, start);
        }
        ++start;
    }
    return sig;
}

} // namespace lefkit
