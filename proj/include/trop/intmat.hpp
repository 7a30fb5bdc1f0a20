#pragma once

#include <optional>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

// dense row-major integer matrix; columns play the role of lattice generators
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

inline IntMat make_mat(size_t rows, size_t cols) { return IntMat(rows, IntVec(cols, 0)); }
inline size_t row_count(const IntMat& a) { return a.size(); }
inline size_t col_count(const IntMat& a) { return a.empty() ? 0 : a[0].size(); }

// a zero-row IntMat forgets its width; callers with possibly-empty constraint sets
// must special-case that before calling the solvers
inline IntMat identity_mat(size_t n) {
    IntMat m = make_mat(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_apply(const IntMat& a, const IntVec& x);

// column-style Hermite normal form: h = a * u with u unimodular, h in canonical
// column echelon form (positive pivots, entries left of a pivot reduced mod the pivot,
// non-pivot columns zero).
struct HnfResult {
    IntMat h;
    IntMat u;
    std::vector<std::pair<size_t, size_t>> pivots; // (row, col), increasing in both
};
HnfResult hnf(const IntMat& a);

// one integer solution of a x = b, if any
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b);

// columns form a basis of {x : a x = 0}
IntMat kernel_basis(const IntMat& a);

size_t rank_q(const IntMat& a);

// canonical basis (columns) of the lattice spanned by the columns of gens
IntMat lattice_basis(const IntMat& gens);
bool lattice_equal(const IntMat& gens1, const IntMat& gens2);
bool in_lattice(const IntMat& gens, const IntVec& v);
// basis of the intersection of the two column spans
IntMat lattice_intersect(const IntMat& gens1, const IntMat& gens2);

} // namespace trop
