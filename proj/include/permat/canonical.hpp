#pragma once

#include "permat/matrix.hpp"

namespace permat {

/// One elementary divisor of xI - A and the companion block it induces.
struct ElementaryDivisor {
    enum class Kind { X, Nilpotent, Torsion };
    Kind kind;
    /// X: 1. Nilpotent: the power k >= 2 of x^k. Torsion: deg(poly).
    int k;
    /// The divisor polynomial itself: x, x^k, or an invertible factor f
    /// (f(0) != 0, possibly a power of an irreducible).
    Polynomial poly;
    /// Torsion order of the companion block, when finite (Torsion only).
    std::optional<std::int64_t> order;
};

/// Canonical block data: P^{-1} A P = B exactly, with B the block diagonal of
/// companion blocks of `divisors` in the stored order (all X first, then
/// nilpotent powers by descending k, then torsion factors by order, degree,
/// coefficient sequence).
struct CanonicalData {
    std::vector<ElementaryDivisor> divisors;
    Matrix P;
    Matrix Pinv;
    Matrix B;
};

/// Invariant factors d_1 | d_2 | ... | d_n of xI - A, monic, units reported as 1.
/// Their product is charpoly(A) and the last one is minpoly(A).
std::vector<Polynomial> smith_invariant_factors(const Matrix& A);

/// Throws NotSplitOverFieldError when the torsion part of the characteristic
/// polynomial does not factor into cyclotomics (char 0) over the field.
CanonicalData canonical_form(const Matrix& A);

/// Splits one invariant factor into elementary divisors (without orders filled
/// in they are computed by canonical_form). Exposed for tests.
std::vector<Polynomial> split_invariant_factor(const Polynomial& d, std::uint64_t seed = 1);

/// Exact torsion order of the companion of an invertible divisor polynomial:
/// char 0: d for a plain cyclotomic, nullopt for proper powers; F_p: always finite.
std::optional<std::int64_t> divisor_torsion_order(const Polynomial& f);

/// The canonical block order: X, then nilpotent by descending power, then
/// torsion by (order, degree, coefficient sequence).
bool divisor_order_less(const ElementaryDivisor& a, const ElementaryDivisor& b);

}  // namespace permat
