#pragma once

#include "bmcover/laurent.hpp"

#include <vector>

namespace bmcover {

/// Dense square matrix with Laurent-polynomial entries (reduced Burau carrier).
struct PolyMatrix {
    int rank = 0;
    std::vector<LaurentPoly> a;

    PolyMatrix() = default;
    explicit PolyMatrix(int r) : rank(r), a(static_cast<std::size_t>(r) * r) {}

    LaurentPoly& at(int i, int j) { return a[static_cast<std::size_t>(i) * rank + j]; }
    const LaurentPoly& at(int i, int j) const { return a[static_cast<std::size_t>(i) * rank + j]; }

    static PolyMatrix identity(int r);

    bool operator==(const PolyMatrix& rhs) const = default;
};

PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_mul_serial(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_mul_parallel(const PolyMatrix& a, const PolyMatrix& b);

/// Exact determinant over the Laurent ring: rows are shifted to ordinary
/// polynomials, eliminated fraction-free (Bareiss with row pivoting), and the
/// collected t-power is restored at the end.
LaurentPoly pm_det(const PolyMatrix& a);

} // namespace bmcover
