#pragma once

#include <optional>

#include "neumax/packing.hpp"

namespace neumax {

/// Requested second positive Neumann eigenvalue t, with an optional slack
/// for the rectangle branches. Without one, min(t/100, 1/100) is used and
/// halved until the construction verifies.
struct RangeTarget {
    double t = 0.0;
    std::optional<double> epsilon;
};

enum class RangeBranch {
    automatic,
    components,      // t = 0: three equal disks
    thin_rectangle,  // 0 < t <= pi^2: a x b rectangle plus a small disk
    near_square,     // pi^2 <= t <= pi j'_{1,1}^2: b x (b - eps) rectangle plus a disk
    two_disks,       // pi j'_{1,1}^2 <= t <= 2 pi j'_{1,1}^2
};

/// pi j'_{1,1}^2, the largest first positive eigenvalue at unit area.
double mu1_upper_limit();
/// 2 pi j'_{1,1}^2, the largest second positive eigenvalue at unit area.
double mu2_upper_limit();

/// A unit-area disjoint union of rectangles and disks whose mu_2 equals t.
/// Throws std::invalid_argument for t outside [0, mu2_upper_limit()], for a
/// forced branch that does not cover t, or for an explicit epsilon that
/// breaks the branch's conditions.
PackedDomain mu2_range_domain(const RangeTarget& target, RangeBranch branch = RangeBranch::automatic);

/// (2 j_{0,1} + (m - 1) pi)^2 / d^2: upper bound on mu_m of a bounded convex
/// planar domain of diameter d.
double kroger_bound(int m, double diameter);

}  // namespace neumax
