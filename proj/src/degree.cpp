#include "trop/degree.hpp"

#include <algorithm>

namespace trop {

namespace {

// solve m x = b over the rationals; returns false when m is singular
bool solve_rational(const IntMat& m, const std::vector<Rat>& b, std::vector<Rat>& x) {
    size_t n = row_count(m);
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
        a[i][n] = b[i];
    }
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return false;
        std::swap(a[k], a[piv]);
        for (size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    x.assign(n, 0);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return true;
}

Int det_of(const IntMat& m) {
    // small matrices only; cofactor expansion
    size_t n = row_count(m);
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Int d = 0;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        IntMat minor = make_mat(n - 1, n - 1);
        for (size_t i = 1; i < n; ++i) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c)
                if (c != j) minor[i - 1][cc++] = m[i][c];
        }
        Int term = m[0][j] * det_of(minor);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

} // namespace

Rat degree_at(const DegreeProblem& p, const TropicalCycle& c, const std::string& target,
              const std::vector<Rat>& sample) {
    auto ti = p.targets.find(target);
    if (ti == p.targets.end()) fail(errc::unknown_cone, "no degree target '" + target + "'");
    const StackyTarget& t = ti->second;
    if (sample.size() != t.dim)
        fail(errc::precondition, "sample dimension mismatch for target '" + target + "'");
    for (auto& v : sample)
        if (v <= 0) fail(errc::non_generic_sample, "sample touches the target boundary");

    std::vector<std::vector<Rat>> orbit{sample};
    if (t.folded) {
        std::vector<Rat> swapped(sample.rbegin(), sample.rend());
        if (swapped == sample) fail(errc::non_generic_sample, "sample lies on the fold");
        orbit.push_back(std::move(swapped));
    }

    Rat total = 0;
    for (auto& chart : p.charts) {
        if (chart.target != target) continue;
        Int det = det_of(chart.cols);
        if (det == 0) continue;
        if (det < 0) det = -det;
        Rat w = c.weight(chart.source_cone);
        for (auto& q : orbit) {
            std::vector<Rat> x;
            if (!solve_rational(chart.cols, q, x)) continue;
            bool interior = true, boundary = false;
            for (auto& xi : x) {
                if (xi < 0) interior = false;
                if (xi == 0) boundary = true;
            }
            if (boundary && interior)
                fail(errc::non_generic_sample, "sample hits the image of a chart wall");
            if (interior) total += w * Rat(det);
        }
    }
    return total * Rat(t.aut_order);
}

DegreeProblem degree_problem(const ComplexMorphism& f) {
    DegreeProblem p;
    const ConeComplex& tgt = *f.target;
    int k = tgt.dim();
    for (auto& c : tgt.cones())
        if (c.dim() == k)
            p.targets[c.id] = StackyTarget{c.aut_order, false, static_cast<size_t>(k)};
    for (auto& sigma : f.source->cones()) {
        if (sigma.dim() != k) continue;
        std::set<std::string> support;
        for (auto& r : sigma.rays)
            for (auto& [t, v] : f.ray_images.at(r))
                if (v != 0) support.insert(t);
        std::vector<std::string> rays(support.begin(), support.end());
        const Cone* image = tgt.cone_by_rays(rays);
        if (!image || image->dim() != k) continue;
        DegreeChart chart;
        chart.source_cone = sigma.id;
        chart.target = image->id;
        chart.ray_order = sigma.rays;
        chart.cols = make_mat(k, k);
        for (size_t j = 0; j < sigma.rays.size(); ++j) {
            auto& img = f.ray_images.at(sigma.rays[j]);
            for (size_t i = 0; i < image->rays.size(); ++i) {
                auto it = img.find(image->rays[i]);
                if (it != img.end()) chart.cols[i][j] = it->second;
            }
        }
        p.charts.push_back(std::move(chart));
    }
    return p;
}

} // namespace trop
