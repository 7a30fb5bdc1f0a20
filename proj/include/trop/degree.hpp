#pragma once

#include <map>
#include <string>
#include <vector>

#include "trop/cycle.hpp"
#include "trop/intmat.hpp"
#include "trop/morphism.hpp"

namespace trop {

// Degree bookkeeping for a map onto a stacky target. Each chart records the linear map
// of one top-dimensional source cone into a target coordinate orthant; a folded target
// identifies the orthant coordinates under the swap, so a sample there stands for its
// two-element orbit.
struct StackyTarget {
    long aut_order = 1;
    bool folded = false;
    size_t dim = 2;
};

struct DegreeChart {
    std::string source_cone;
    std::string target;
    std::vector<std::string> ray_order; // source cone rays, matching the matrix columns
    IntMat cols;                        // dim x dim, column j = image of ray_order[j]
};

struct DegreeProblem {
    std::map<std::string, StackyTarget> targets;
    std::vector<DegreeChart> charts;
};

// sum over chart solutions M x = q (x > 0 strictly, q running over the sample orbit) of
// weight(source cone) * |det M|, times the target aut order; a solution on a chart
// boundary or a sample on the fold is NonGenericSample
Rat degree_at(const DegreeProblem& p, const TropicalCycle& c, const std::string& target,
              const std::vector<Rat>& sample);

// charts of an honest (unfolded) morphism of cone complexes: one per top-dimensional
// source cone whose ray images span a top-dimensional target cone
DegreeProblem degree_problem(const ComplexMorphism& f);

} // namespace trop
