#include "lefkit/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace lefkit {

IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntegerMatrix mul(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("matrix product shape mismatch");
    IntegerMatrix r(a.rows, b.cols);
    mpz_class acc;
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < b.cols; ++j) {
            acc = 0;
            for (std::size_t k = 0; k < a.cols; ++k)
                acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    }
    return r;
}

IntegerMatrix transpose(const IntegerMatrix& m) {
    IntegerMatrix r(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            r.at(j, i) = m.at(i, j);
    return r;
}

std::vector<mpz_class> apply(const IntegerMatrix& m, const std::vector<mpz_class>& v) {
    if (m.cols != v.size())
        throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<mpz_class> r(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        mpz_class acc = 0;
        for (std::size_t k = 0; k < m.cols; ++k)
            acc += m.at(i, k) * v[k];
        r[i] = acc;
    }
    return r;
}

mpz_class determinant(const IntegerMatrix& m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("determinant needs a square matrix");
    std::size_t n = m.rows;
    if (n == 0)
        return 1;
    // Bareiss: every division below is exact, so everything stays integral.
    IntegerMatrix w = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

IntegerMatrix standard_j(int genus) {
    if (genus < 1)
        throw std::invalid_argument("genus must be at least 1");
    std::size_t n = 2 * static_cast<std::size_t>(genus);
    IntegerMatrix j(n, n);
    for (int i = 0; i < genus; ++i) {
        j.at(2 * i, 2 * i + 1) = 1;
        j.at(2 * i + 1, 2 * i) = -1;
    }
    return j;
}

bool is_symplectic(const IntegerMatrix& m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("symplectic test needs a square matrix");
    if (m.rows % 2 != 0)
        throw std::invalid_argument("symplectic test needs even dimension");
    if (m.rows == 0)
        return true;
    IntegerMatrix j = standard_j(static_cast<int>(m.rows / 2));
    return mul(mul(transpose(m), j), m) == j;
}

IntegerMatrix symplectic_inverse(const IntegerMatrix& m) {
    if (!is_symplectic(m))
        throw std::invalid_argument("symplectic inverse of a non-symplectic matrix");
    IntegerMatrix j = standard_j(static_cast<int>(m.rows / 2));
    IntegerMatrix mj = j;
    for (mpz_class& x : mj.a)
        x = -x;
    return mul(mul(mj, transpose(m)), j);
}

} // namespace lefkit
