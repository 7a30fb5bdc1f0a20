#include "trop/intmat.hpp"

#include <cassert>

namespace trop {

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    size_t m = row_count(a), k = col_count(a), n = col_count(b);
    assert(row_count(b) == k);
    IntMat c = make_mat(m, n);
    for (size_t i = 0; i < m; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < n; ++j)
                if (b[t][j] != 0) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

IntVec mat_apply(const IntMat& a, const IntVec& x) {
    size_t m = row_count(a), n = col_count(a);
    assert(x.size() == n);
    IntVec y(m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j)
            if (a[i][j] != 0 && x[j] != 0) y[i] += a[i][j] * x[j];
    return y;
}

namespace {

Int xgcd(const Int& a, const Int& b, Int& p, Int& q) {
    // returns g = gcd(a,b) with p*a + q*b = g
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int quot = old_r / r; // truncated is fine inside the loop
        Int tmp = old_r - quot * r; old_r = r; r = tmp;
        tmp = old_s - quot * s; old_s = s; s = tmp;
        tmp = old_t - quot * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    p = old_s; q = old_t;
    return old_r;
}

Int floor_div(const Int& a, const Int& b) {
    assert(b > 0);
    Int q = a / b, r = a % b;
    if (r < 0) q -= 1;
    return q;
}

void col_axpy(IntMat& m, size_t dst, size_t src, const Int& f) {
    if (f == 0) return;
    for (auto& row : m) row[dst] += f * row[src];
}

void col_swap(IntMat& m, size_t i, size_t j) {
    if (i == j) return;
    for (auto& row : m) std::swap(row[i], row[j]);
}

void col_negate(IntMat& m, size_t j) {
    for (auto& row : m) row[j] = -row[j];
}

// combine columns i, j so that column i holds gcd at row r and column j is zero there;
// the 2x2 transform has determinant 1
void col_gcd_step(IntMat& h, IntMat& u, size_t r, size_t i, size_t j) {
    Int a = h[r][i], b = h[r][j];
    if (b == 0) return;
    if (a == 0) { col_swap(h, i, j); col_swap(u, i, j); col_negate(h, j); col_negate(u, j); return; }
    Int p, q;
    Int g = xgcd(a, b, p, q);
    Int ai = a / g, bj = b / g;
    size_t rows = row_count(h);
    for (size_t k = 0; k < rows; ++k) {
        Int hi = h[k][i], hj = h[k][j];
        h[k][i] = p * hi + q * hj;
        h[k][j] = -bj * hi + ai * hj;
    }
    for (size_t k = 0; k < row_count(u); ++k) {
        Int ui = u[k][i], uj = u[k][j];
        u[k][i] = p * ui + q * uj;
        u[k][j] = -bj * ui + ai * uj;
    }
}

} // namespace

HnfResult hnf(const IntMat& a) {
    size_t m = row_count(a), n = col_count(a);
    HnfResult res;
    res.h = a;
    res.u = make_mat(n, n);
    for (size_t i = 0; i < n; ++i) res.u[i][i] = 1;
    size_t c = 0;
    for (size_t r = 0; r < m && c < n; ++r) {
        // gather the gcd of row r over columns >= c into column c
        bool any = false;
        for (size_t j = c; j < n; ++j)
            if (res.h[r][j] != 0) { any = true; break; }
        if (!any) continue;
        for (size_t j = c + 1; j < n; ++j) col_gcd_step(res.h, res.u, r, c, j);
        if (res.h[r][c] < 0) { col_negate(res.h, c); col_negate(res.u, c); }
        // canonical reduction of earlier pivot columns at this row
        for (auto& [pr, pc] : res.pivots) {
            (void)pr;
            Int f = floor_div(res.h[r][pc], res.h[r][c]);
            col_axpy(res.h, pc, c, -f);
            col_axpy(res.u, pc, c, -f);
        }
        res.pivots.emplace_back(r, c);
        ++c;
    }
    return res;
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b) {
    size_t m = row_count(a), n = col_count(a);
    assert(b.size() == m);
    HnfResult f = hnf(a);
    IntVec y(n, 0);
    for (auto& [r, c] : f.pivots) {
        Int s = b[r];
        for (size_t j = 0; j < n; ++j)
            if (j != c && f.h[r][j] != 0) s -= f.h[r][j] * y[j];
        if (s % f.h[r][c] != 0) return std::nullopt;
        y[c] = s / f.h[r][c];
    }
    IntVec x = mat_apply(f.u, y);
    if (mat_apply(a, x) != b) return std::nullopt;
    return x;
}

IntMat kernel_basis(const IntMat& a) {
    size_t n = col_count(a);
    HnfResult f = hnf(a);
    std::vector<bool> is_pivot(n, false);
    for (auto& [r, c] : f.pivots) { (void)r; is_pivot[c] = true; }
    IntMat k = make_mat(n, n - f.pivots.size());
    size_t out = 0;
    for (size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        for (size_t i = 0; i < n; ++i) k[i][out] = f.u[i][j];
        ++out;
    }
    return k;
}

size_t rank_q(const IntMat& a) { return hnf(a).pivots.size(); }

IntMat lattice_basis(const IntMat& gens) {
    size_t m = row_count(gens);
    HnfResult f = hnf(gens);
    IntMat b = make_mat(m, f.pivots.size());
    for (size_t j = 0; j < f.pivots.size(); ++j)
        for (size_t i = 0; i < m; ++i) b[i][j] = f.h[i][f.pivots[j].second];
    return b;
}

bool lattice_equal(const IntMat& gens1, const IntMat& gens2) {
    return lattice_basis(gens1) == lattice_basis(gens2);
}

bool in_lattice(const IntMat& gens, const IntVec& v) {
    return solve_integer(gens, v).has_value();
}

IntMat lattice_intersect(const IntMat& gens1, const IntMat& gens2) {
    size_t m = row_count(gens1), n1 = col_count(gens1), n2 = col_count(gens2);
    assert(row_count(gens2) == m);
    IntMat stacked = make_mat(m, n1 + n2);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n1; ++j) stacked[i][j] = gens1[i][j];
        for (size_t j = 0; j < n2; ++j) stacked[i][n1 + j] = -gens2[i][j];
    }
    IntMat ker = kernel_basis(stacked);
    // first block of each kernel column gives coefficients in gens1
    IntMat coeff = make_mat(n1, col_count(ker));
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < col_count(ker); ++j) coeff[i][j] = ker[i][j];
    return lattice_basis(mat_mul(gens1, coeff));
}

} // namespace trop
