#pragma once

#include "bmcover/bigint.hpp"
#include "bmcover/errors.hpp"
#include "bmcover/laurent.hpp"

#include <vector>

namespace bmcover {

/// Dense square matrix over arbitrary-precision integers, row-major.
struct IntMatrix {
    int rank = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    explicit IntMatrix(int r) : rank(r), a(static_cast<std::size_t>(r) * r, Int(0)) {}

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * rank + j]; }
    const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * rank + j]; }

    static IntMatrix identity(int r);

    bool operator==(const IntMatrix& rhs) const = default;
};

/// Exact product. Dispatches to the OpenMP kernel for matrices big enough to
/// amortize the fork; always bit-identical to mat_mul_serial.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_mul_serial(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_mul_parallel(const IntMatrix& a, const IntMatrix& b);

/// Exact k-th power; k = 0 gives the identity. Negative k requires a
/// unimodular matrix (NotInvertible otherwise).
IntMatrix mat_pow(const IntMatrix& a, long long k);

/// Inverse of a matrix with determinant +-1, via the adjugate.
IntMatrix mat_inverse_unimodular(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& a);

Int trace(const IntMatrix& a);

/// Monic characteristic polynomial det(tI - a), computed exactly by
/// Faddeev-LeVerrier (every division is an exact integer division).
LaurentPoly char_poly(const IntMatrix& a);

} // namespace bmcover
