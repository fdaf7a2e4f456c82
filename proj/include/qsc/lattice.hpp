#pragma once

#include <vector>

#include "qsc/numeric.hpp"

namespace qsc {

using IntMat = std::vector<std::vector<Int>>;

IntMat identity_mat(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);

/// Smith normal form: left * a * right = s with s diagonal, d_i | d_{i+1},
/// d_i >= 0, and left/right unimodular.
struct SmithResult {
    IntMat s;
    IntMat left;
    IntMat right;
};
SmithResult smith_normal_form(IntMat a);

/// Nonzero diagonal entries of the Smith form, in divisibility order.
std::vector<Int> elementary_divisors(const IntMat& a);

/// Primitive basis of {x in Z^n : a x = 0} for an m x n matrix; each basis
/// vector is a row of the result.
IntMat kernel_basis(const IntMat& a);

/// Structure of Z^n / (column span of `cols`): torsion factors > 1 in
/// divisibility order plus the free rank.
struct QuotientStructure {
    std::vector<Int> torsion;
    int free_rank = 0;
    Int order() const; // 0 when free_rank > 0
};
QuotientStructure quotient_structure(const IntMat& cols, int n);

/// Row-style Hermite normal form (used for lattice equality of row spans).
IntMat row_hnf(IntMat a);
bool same_row_lattice(const IntMat& a, const IntMat& b);

} // namespace qsc
