#pragma once

#include "schubert/errors.hpp"
#include "schubert/integers.hpp"

namespace schubert {

/// Dimension, complexity and rank of a group action: complexity is the
/// codimension of a general Borel orbit, rank the rank of the lattice of
/// Borel weights. A Borel orbit plus the weight lattice cannot exceed the
/// dimension.
struct SphericalData {
    int dim = 0;
    int complexity = 0;
    int rank = 0;

    SphericalData(int dimension, int c, int r) : dim(dimension), complexity(c), rank(r) {
        if (dim < 0 || complexity < 0 || rank < 0)
            throw invalid_input("spherical data must be nonnegative");
        if (complexity + rank > dim)
            throw invalid_input("complexity + rank cannot exceed the dimension");
    }
};

/// Dimension of the moment-map image: 2 dim(X) - 2 c(X) - r(X).
inline long knop_dimension(const SphericalData& s) {
    long value = 2L * s.dim - 2L * s.complexity - s.rank;
    // follows from complexity + rank <= dim, kept as a hard guard
    if (value < 0) throw invalid_input("negative moment-map dimension");
    return value;
}

/// An ambient variety with a prime divisor inside it. A proper divisor can
/// never preserve both the complexity and the rank, and neither invariant
/// can grow when passing to the divisor.
struct DivisorData {
    SphericalData ambient;
    SphericalData divisor;

    DivisorData(SphericalData x, SphericalData d) : ambient(x), divisor(d) {
        if (divisor.dim != ambient.dim - 1)
            throw invalid_input("divisor dimension must be ambient dimension - 1");
        if (divisor.complexity > ambient.complexity || divisor.rank > ambient.rank)
            throw invalid_input("complexity and rank cannot grow on a divisor");
        if (divisor.complexity == ambient.complexity && divisor.rank == ambient.rank)
            throw invalid_input("a proper divisor cannot preserve both complexity and rank");
    }
};

/// True iff the moment-map image drops dimension along the divisor:
/// knop_dimension(divisor) < knop_dimension(ambient), equivalently
/// c(X) = c(D) and r(X) = r(D) + 1. Both routes are evaluated and must
/// agree.
inline bool divisor_drop_check(const DivisorData& d) {
    bool by_formula = knop_dimension(d.divisor) < knop_dimension(d.ambient);
    bool by_invariants = d.ambient.complexity == d.divisor.complexity &&
                         d.ambient.rank == d.divisor.rank + 1;
    if (by_formula != by_invariants)
        throw error("divisor drop criteria disagree; input violates the divisor invariants");
    return by_formula;
}

/// Pseudoeffective slope of the tangent bundle against the anticanonical
/// class when the boundary relation D_H ~ a Lambda - 2 pi^* D holds:
/// exactly 2 / (a * fano_index).
inline Rational ec_slope(int codegree_a, int fano_index) {
    if (codegree_a < 1 || fano_index < 1)
        throw invalid_input("slope needs positive codegree and Fano index");
    return {Int(2), Int(codegree_a) * fano_index};
}

/// With the total dual VMRT class a Lambda + b pi^* H (a >= 1, so the VMRT
/// is not dual defective), the tangent bundle is big iff b < 0.
inline bool bigness_from_vmrt_class(int a, long b) {
    if (a < 1) throw invalid_input("total dual VMRT class needs a >= 1");
    return b < 0;
}

/// Bookkeeping row tying a codegree to the slope it induces.
struct SlopeRecord {
    int codegree_a = 0;
    long vmrt_class_b = 0;
    int fano_index = 0;
    Rational slope;

    SlopeRecord(int a, long b, int index)
        : codegree_a(a), vmrt_class_b(b), fano_index(index), slope(ec_slope(a, index)) {}
};

} // namespace schubert
