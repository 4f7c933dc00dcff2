#include "quadswan/matz.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace quadswan {

MatZ MatZ::identity(std::size_t n) {
    MatZ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool MatZ::is_zero() const {
    return std::all_of(d_.begin(), d_.end(), [](const mpz_class& x) { return x == 0; });
}

MatZ mat_mul(const MatZ& a, const MatZ& b) {
    assert(a.cols() == b.rows());
    MatZ c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

mpz_class det(const MatZ& m) {
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    MatZ a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t pivot = k;
            while (pivot < n && a.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

void swap_rows(MatZ& m, std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(s, j));
}

void swap_cols(MatZ& m, std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, r), m.at(i, s));
}

// row[r] -= q * row[s]
void row_axpy(MatZ& m, std::size_t r, std::size_t s, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) -= q * m.at(s, j);
}

void col_axpy(MatZ& m, std::size_t r, std::size_t s, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, r) -= q * m.at(i, s);
}

void negate_row(MatZ& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

// Smallest nonzero |entry| of d in the submatrix starting at (t, t).
bool find_pivot(const MatZ& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            mpz_class a = abs(d.at(i, j));
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SnfResult smith_normal_form(const MatZ& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    SnfResult r{m, MatZ::identity(nr), MatZ::identity(nc)};
    MatZ& d = r.d;

    const std::size_t steps = std::min(nr, nc);
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(d, t, pi, pj)) break;
        swap_rows(d, t, pi);
        swap_rows(r.u, t, pi);
        swap_cols(d, t, pj);
        swap_cols(r.v, t, pj);

        for (;;) {
            bool clean = true;
            // Division steps; a nonzero remainder becomes the next, smaller pivot.
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (d.at(i, t) == 0) continue;
                mpz_class q = d.at(i, t) / d.at(t, t);
                row_axpy(d, i, t, q);
                row_axpy(r.u, i, t, q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (d.at(t, j) == 0) continue;
                mpz_class q = d.at(t, j) / d.at(t, t);
                col_axpy(d, j, t, q);
                col_axpy(r.v, j, t, q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) {
                std::size_t qi, qj;
                find_pivot(d, t, qi, qj);
                swap_rows(d, t, qi);
                swap_rows(r.u, t, qi);
                swap_cols(d, t, qj);
                swap_cols(r.v, t, qj);
                continue;
            }
            // Pivot must divide the rest of the submatrix for the chain.
            bool divides = true;
            for (std::size_t i = t + 1; i < nr && divides; ++i)
                for (std::size_t j = t + 1; j < nc && divides; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        row_axpy(d, t, i, mpz_class(-1));
                        row_axpy(r.u, t, i, mpz_class(-1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(r.u, t);
        }
    }
    return r;
}

MatZ hnf_rows(const MatZ& m) {
    MatZ h = m;
    const std::size_t nr = h.rows(), nc = h.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        // Reduce column `col` below row r to a single nonzero entry.
        for (;;) {
            std::size_t best = nr;
            for (std::size_t i = r; i < nr; ++i) {
                if (h.at(i, col) == 0) continue;
                if (best == nr || abs(h.at(i, col)) < abs(h.at(best, col))) best = i;
            }
            if (best == nr) break;  // column already clear
            swap_rows(h, r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < nr; ++i) {
                if (h.at(i, col) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
                row_axpy(h, i, r, q);
                if (h.at(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (h.at(r, col) == 0) continue;
        if (h.at(r, col) < 0) negate_row(h, r);
        // Reduce the entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
            row_axpy(h, i, r, q);
        }
        ++r;
    }
    MatZ out(r, nc);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = h.at(i, j);
    return out;
}

bool hnf_contains(const MatZ& basis, const std::vector<mpz_class>& v) {
    assert(v.size() == basis.cols());
    std::vector<mpz_class> w = v;
    std::size_t row = 0;
    for (std::size_t col = 0; col < basis.cols(); ++col) {
        bool has_pivot = row < basis.rows() && basis.at(row, col) != 0;
        if (w[col] == 0) {
            if (has_pivot) ++row;
            continue;
        }
        if (!has_pivot) return false;
        if (w[col] % basis.at(row, col) != 0) return false;
        mpz_class q = w[col] / basis.at(row, col);
        for (std::size_t j = col; j < basis.cols(); ++j) w[j] -= q * basis.at(row, j);
        ++row;
    }
    return std::all_of(w.begin(), w.end(), [](const mpz_class& x) { return x == 0; });
}

std::optional<std::vector<mpz_class>> solve_integer(const MatZ& a, const std::vector<mpz_class>& b) {
    assert(b.size() == a.rows());
    SnfResult s = smith_normal_form(a);
    const std::size_t nr = a.rows(), nc = a.cols();

    std::vector<mpz_class> y(nr);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nr; ++j) y[i] += s.u.at(i, j) * b[j];

    std::vector<mpz_class> z(nc);
    for (std::size_t i = 0; i < nr; ++i) {
        mpz_class di = i < nc ? s.d.at(i, i) : mpz_class(0);
        if (di == 0) {
            if (y[i] != 0) return std::nullopt;
        } else {
            if (y[i] % di != 0) return std::nullopt;
            z[i] = y[i] / di;
        }
    }
    std::vector<mpz_class> x(nc);
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = 0; j < nc; ++j) x[i] += s.v.at(i, j) * z[j];
    return x;
}

}  // namespace quadswan
