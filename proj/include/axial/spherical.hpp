#pragma once

// Inner spherical monogenics P_{k,l}, the two Fischer decompositions, the
// grade-wise two-sidedness criterion and the kernel of the Lemma-type
// identity between two-sided monogenic families.

#include "axial/linalg.hpp"
#include "axial/mpoly.hpp"

#include <utility>
#include <vector>

namespace axial {

/// Grade-l valued, degree-k homogeneous, left monogenic polynomial in x_1..x_m.
struct InnerMonogenic {
    int m = 0;
    int k = 0;
    int ell = 0;
    RPoly poly{1};

    /// l in {0, m}: the axial families collapse (xP = +-Px).
    bool degenerate() const { return ell == 0 || ell == m; }
};

/// Checks the invariants (homogeneity, grade purity, left and right
/// monogenicity, no x_0) and wraps the polynomial. Throws std::invalid_argument.
InnerMonogenic certify_inner_monogenic(int m, int k, int ell, RPoly poly);

/// All exponent vectors of total degree k in x_1..x_m (x_0 exponent zero),
/// in lexicographic order.
std::vector<Exponents> spatial_monomials(int m, int k);

/// Blades of grade ell, ascending.
std::vector<Blade> blades_of_grade(int m, int ell);

/// Rational basis of the grade-ell, degree-k left monogenic homogeneous
/// polynomials (kernel of the Dirac operator). Elements have primitive
/// integer coefficients.
std::vector<InnerMonogenic> inner_monogenic_basis(int m, int k, int ell);

/// Basis of the two-sided monogenic homogeneous polynomials of degree k in
/// R^m, grade by grade (each element is grade-pure).
std::vector<InnerMonogenic> two_sided_monogenic_basis(int m, int k);

/// P_k = H_k + |x|^2 P_{k-2}.
struct HarmonicSplit {
    RPoly harmonic;
    RPoly remainder;
};

HarmonicSplit fischer_harmonic(const RPoly& p);

/// P_k = M_k + x L_{k-1} + R_{k-1} x with M_k two-sided monogenic.
struct MonogenicSplit {
    RPoly monogenic;
    RPoly left_factor;
    RPoly right_factor;
};

/// The representative is the basic solution of the exact system with the
/// monogenic unknowns ordered first (fewest pivots, leftmost preferred).
MonogenicSplit fischer_monogenic(const RPoly& p);

struct TwoSidedReport {
    bool left_monogenic = false;
    bool right_monogenic = false;
    bool two_sided = false;
    /// Indexed by grade 0..m: is [F]_l left monogenic?
    std::vector<bool> grade_left_monogenic;
    bool all_grades_monogenic = false;
    bool verdicts_agree = false;
};

/// Compares "Dirac F == F Dirac == 0" with "each [F]_l is left monogenic".
TwoSidedReport two_sided_check(const RPoly& f);

/// One kernel element: R_0..R_k and S_0..S_{k-1} (S_k is fixed to zero).
struct LemmaKernelElement {
    std::vector<RPoly> r;
    std::vector<RPoly> s;
};

struct LemmaKernel {
    int m = 0;
    int k = 0;
    std::size_t unknowns = 0;
    std::vector<LemmaKernelElement> basis;
    /// Kernel equals span{(R_0,S_0) = (1, (-1)^k), (e_M, (-1)^{m+k-1} e_M)}.
    bool matches_lemma = false;
};

/// Kernel of (R_n, S_n) -> sum_{n even} (|x|^n R_{k-n} + |x|^{n-2} x S_{k-n} x)
///                        + sum_{n odd} |x|^{n-1} (x R_{k-n} + S_{k-n} x)
/// over two-sided monogenic R_n, S_n of degree n.
LemmaKernel lemfund_kernel(int m, int k);

/// Key of a (monomial, blade) coordinate.
using CoefficientKey = std::pair<Exponents, Blade>;

/// Sparse coordinates of p over (monomial, blade) keys.
SparseVector coordinates(const RPoly& p, Indexer<CoefficientKey>& index);

}  // namespace axial
