#include "bmcover/int_matrix.hpp"

#include "bmcover/parallel.hpp"

#include <utility>

namespace bmcover {

IntMatrix IntMatrix::identity(int r) {
    IntMatrix m(r);
    for (int i = 0; i < r; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

void check_same_rank(const IntMatrix& a, const IntMatrix& b) {
    if (a.rank != b.rank)
        throw DomainError(Errc::rank_mismatch,
                          "ranks " + std::to_string(a.rank) + " vs " + std::to_string(b.rank));
}

void mul_row(const IntMatrix& a, const IntMatrix& b, IntMatrix& out, int i) {
    const int n = a.rank;
    for (int l = 0; l < n; ++l) {
        const Int& ail = a.at(i, l);
        if (ail == 0) continue;
        for (int j = 0; j < n; ++j) out.at(i, j) += ail * b.at(l, j);
    }
}

} // namespace

IntMatrix mat_mul_serial(const IntMatrix& a, const IntMatrix& b) {
    check_same_rank(a, b);
    IntMatrix out(a.rank);
    for (int i = 0; i < a.rank; ++i) mul_row(a, b, out, i);
    return out;
}

IntMatrix mat_mul_parallel(const IntMatrix& a, const IntMatrix& b) {
    check_same_rank(a, b);
    IntMatrix out(a.rank);
    parallel_for(static_cast<std::size_t>(a.rank),
                 [&](std::size_t i) { mul_row(a, b, out, static_cast<int>(i)); });
    return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    // rows are independent; below this size the fork costs more than the work
    if (a.rank >= 16) return mat_mul_parallel(a, b);
    return mat_mul_serial(a, b);
}

Int trace(const IntMatrix& a) {
    Int t = 0;
    for (int i = 0; i < a.rank; ++i) t += a.at(i, i);
    return t;
}

Int det(const IntMatrix& a) {
    const int n = a.rank;
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int v = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = v / prev; // exact by Sylvester's identity
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

IntMatrix mat_inverse_unimodular(const IntMatrix& a) {
    const Int d = det(a);
    if (d != 1 && d != -1)
        throw DomainError(Errc::not_invertible, "determinant " + d.str() + " is not a unit");
    const int n = a.rank;
    IntMatrix inv(n);
    // adjugate transpose: inv[j][i] = cofactor(i,j) / det
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMatrix minor(n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = a.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int cof = det(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            inv.at(j, i) = d > 0 ? cof : -cof;
        }
    return inv;
}

IntMatrix mat_pow(const IntMatrix& a, long long k) {
    IntMatrix base = a;
    if (k < 0) {
        base = mat_inverse_unimodular(a);
        k = -k;
    }
    IntMatrix acc = IntMatrix::identity(a.rank);
    while (k) {
        if (k & 1) acc = mat_mul(acc, base);
        k >>= 1;
        if (k) base = mat_mul(base, base);
    }
    return acc;
}

LaurentPoly char_poly(const IntMatrix& a) {
    const int n = a.rank;
    LaurentPoly p = LaurentPoly::monomial(n, 1);
    IntMatrix m = IntMatrix::identity(n); // M_0
    for (int i = 1; i <= n; ++i) {
        IntMatrix am = mat_mul(a, m);
        Int c = -trace(am) / i; // exact
        p.set_coeff(n - i, c);
        if (i < n) {
            m = std::move(am);
            for (int r = 0; r < n; ++r) m.at(r, r) += c;
        }
    }
    return p;
}

} // namespace bmcover
