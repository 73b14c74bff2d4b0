#include "bmcover/poly_matrix.hpp"

#include "bmcover/parallel.hpp"

namespace bmcover {

PolyMatrix PolyMatrix::identity(int r) {
    PolyMatrix m(r);
    for (int i = 0; i < r; ++i) m.at(i, i) = LaurentPoly(1);
    return m;
}

namespace {

void check_same_rank(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rank != b.rank)
        throw DomainError(Errc::rank_mismatch,
                          "ranks " + std::to_string(a.rank) + " vs " + std::to_string(b.rank));
}

void mul_row(const PolyMatrix& a, const PolyMatrix& b, PolyMatrix& out, int i) {
    const int n = a.rank;
    for (int l = 0; l < n; ++l) {
        const LaurentPoly& ail = a.at(i, l);
        if (ail.is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (b.at(l, j).is_zero()) continue;
            out.at(i, j) += ail * b.at(l, j);
        }
    }
}

} // namespace

PolyMatrix pm_mul_serial(const PolyMatrix& a, const PolyMatrix& b) {
    check_same_rank(a, b);
    PolyMatrix out(a.rank);
    for (int i = 0; i < a.rank; ++i) mul_row(a, b, out, i);
    return out;
}

PolyMatrix pm_mul_parallel(const PolyMatrix& a, const PolyMatrix& b) {
    check_same_rank(a, b);
    PolyMatrix out(a.rank);
    parallel_for(static_cast<std::size_t>(a.rank),
                 [&](std::size_t i) { mul_row(a, b, out, static_cast<int>(i)); });
    return out;
}

PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rank >= 6) return pm_mul_parallel(a, b);
    return pm_mul_serial(a, b);
}

LaurentPoly pm_det(const PolyMatrix& a) {
    const int n = a.rank;
    if (n == 0) return LaurentPoly(1);

    PolyMatrix m = a;
    long long shift = 0;
    for (int i = 0; i < n; ++i) {
        long long lo = 0;
        bool seen = false;
        for (int j = 0; j < n; ++j) {
            if (m.at(i, j).is_zero()) continue;
            const long long l = m.at(i, j).lowest_exp();
            lo = seen ? std::min(lo, l) : l;
            seen = true;
        }
        if (!seen) return {}; // zero row
        if (lo != 0) {
            for (int j = 0; j < n; ++j) m.at(i, j) = m.at(i, j).shift_exponent(-lo);
            shift += lo;
        }
    }

    LaurentPoly prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m.at(r, k).is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return {};
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly v = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = divide_exact(v, prev); // exact: Sylvester's identity
            }
            m.at(i, k) = {};
        }
        prev = m.at(k, k);
    }
    LaurentPoly d = m.at(n - 1, n - 1).shift_exponent(shift);
    return sign > 0 ? d : -d;
}

} // namespace bmcover
