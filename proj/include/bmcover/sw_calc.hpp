#pragma once

#include "bmcover/laurent.hpp"

#include <vector>

namespace bmcover {

/// Formal Seiberg-Witten invariant in the half-exponent variable s = t^{1/2}:
/// a t-power t^e is stored as s^{2e}, and odd s-exponents are legal.
struct SWExpr {
    LaurentPoly p;

    bool operator==(const SWExpr& rhs) const = default;
};

/// One glued piece of a link-surgery manifold. E(1) is handled symbolically:
/// its SW is the formal inverse of (s - 1/s), so the piece contributes the
/// constant 1 to the product. Any other piece supplies its SW explicitly.
struct PieceDescriptor {
    bool is_e1 = true;
    SWExpr sw;

    static PieceDescriptor e1() { return {}; }
    static PieceDescriptor explicit_piece(SWExpr sw_value) { return {false, std::move(sw_value)}; }
};

/// One-variable link-surgery product: embeds the symmetric reduced Alexander
/// polynomial into s-exponents and multiplies the SW * (s - 1/s) factor of
/// every piece. delta_sym must be literally symmetric (NonReciprocal
/// otherwise); pieces must be nonempty.
SWExpr sw_link_surgery(const LaurentPoly& delta_sym, const std::vector<PieceDescriptor>& pieces);

/// Sum of all coefficients (evaluation at s = 1), the total SW invariant.
Int total_sw(const SWExpr& e);

enum class DistinguishVerdict { distinct, not_distinct, inconclusive };

const char* distinguish_verdict_name(DistinguishVerdict v);

/// Isotopy-distinguishing test for the covering tori of classes 2m[T]:
/// under SW_X != 0 the product factors cancel in the integral Laurent domain,
/// so the k = i and k = j tori differ exactly when their reduced Alexander
/// polynomials differ up to units.
DistinguishVerdict distinguish(int m, long long i, long long j, bool sw_nonzero);

/// Total SW of the E(1) link-surgery manifold for (m, k): equals the reduced
/// Alexander polynomial evaluated at 1.
Int e1_family_invariant(int m, long long k);

struct FiberData {
    int fiber_genus = 0;
    int boundary_components = 2;
    int h1_rank = 0;
    int lefschetz_fiber_genus = 0;

    bool operator==(const FiberData& rhs) const = default;
};

/// Surface bookkeeping for the double cover of a 2m-strand braid axis: the
/// fiber is a twice-punctured genus m-1 surface, and the induced fibration on
/// the covering 4-manifold has closed fibers of genus 2m-1.
FiberData covering_fiber_data(int m2);

} // namespace bmcover
