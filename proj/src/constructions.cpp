#include "neumax/constructions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "neumax/special_functions.hpp"

namespace neumax {

using std::numbers::pi;

namespace {

constexpr int max_halvings = 50;

double disk_mu1(double area) { return mu1_upper_limit() / area; }

RangeBranch select_branch(double t) {
    if (t == 0.0) {
        return RangeBranch::components;
    }
    if (t <= pi * pi) {
        return RangeBranch::thin_rectangle;
    }
    if (t <= mu1_upper_limit()) {
        return RangeBranch::near_square;
    }
    return RangeBranch::two_disks;
}

bool branch_covers(RangeBranch branch, double t) {
    switch (branch) {
    case RangeBranch::components:
        return t == 0.0;
    case RangeBranch::thin_rectangle:
        return t > 0.0 && t <= pi * pi;
    case RangeBranch::near_square:
        return t >= pi * pi && t <= mu1_upper_limit();
    case RangeBranch::two_disks:
        return t >= mu1_upper_limit() && t <= mu2_upper_limit();
    case RangeBranch::automatic:
        return true;
    }
    return false;
}

// Rectangle a x b (a <= b, pi^2/b^2 = t) next to a disk of area eps/t.
std::optional<PackedDomain> thin_rectangle(double t, double eps) {
    const double a = (t - eps) / (pi * std::sqrt(t));
    const double b = pi / std::sqrt(t);
    const double disk_area = eps / t;
    if (!(eps > 0.0) || !(a > 0.0) || !(disk_mu1(disk_area) > t)) {
        return std::nullopt;
    }
    PackedDomain out;
    out.components.push_back({DomainShape::rectangle(a, b).unit_volume(), a * b, 1});
    out.components.push_back({DomainShape::disk(), disk_area, 0});
    return out;
}

// Rectangle b x (b - eps) with pi^2/b^2 = t, completed to unit area by a disk.
std::optional<PackedDomain> near_square(double t, double eps) {
    const double b = pi / std::sqrt(t);
    const double side = b - eps;
    const double rect_area = b * side;
    const double disk_area = 1.0 - rect_area;
    if (!(eps > 0.0) || !(side > 0.0) || !(disk_area > 0.0) || !(disk_mu1(disk_area) > t)) {
        return std::nullopt;
    }
    PackedDomain out;
    out.components.push_back({DomainShape::rectangle(b, side).unit_volume(), rect_area, 1});
    out.components.push_back({DomainShape::disk(), disk_area, 0});
    return out;
}

PackedDomain two_disks(double t) {
    const double large = mu1_upper_limit() / t;
    const double small = 1.0 - large;
    PackedDomain out;
    if (!(small > 0.0)) {
        // t = pi j'_{1,1}^2: the unit disk alone, whose mu_1 = mu_2 = t.
        out.components.push_back({DomainShape::disk(), 1.0, 2});
        return out;
    }
    out.components.push_back({DomainShape::disk(), large, 1});
    out.components.push_back({DomainShape::disk(), small, small == large ? 1u : 0u});
    return out;
}

template <class Build>
PackedDomain with_epsilon(double t, const std::optional<double>& epsilon, Build build) {
    if (epsilon) {
        if (auto out = build(t, *epsilon)) {
            return *out;
        }
        throw std::invalid_argument(
            fmt::format("epsilon = {} does not give a valid construction for t = {} (need 0 < eps < t and the "
                        "small component's first eigenvalue above t)",
                        *epsilon, t));
    }
    double eps = std::min(t / 100.0, 0.01);
    for (int i = 0; i <= max_halvings; ++i, eps *= 0.5) {
        if (auto out = build(t, eps)) {
            return *out;
        }
    }
    throw std::runtime_error(fmt::format("no valid epsilon found for t = {} after {} halvings", t, max_halvings));
}

}  // namespace

double mu1_upper_limit() {
    const double z = bessel_jprime_zero({1, 1});
    return pi * z * z;
}

double mu2_upper_limit() { return 2.0 * mu1_upper_limit(); }

PackedDomain mu2_range_domain(const RangeTarget& target, RangeBranch branch) {
    const double t = target.t;
    if (!(t >= 0.0) || !(t <= mu2_upper_limit())) {
        throw std::invalid_argument(fmt::format("t = {} outside the attainable range [0, {:.6f}]", t, mu2_upper_limit()));
    }
    if (branch == RangeBranch::automatic) {
        branch = select_branch(t);
    } else if (!branch_covers(branch, t)) {
        throw std::invalid_argument(fmt::format("the requested construction branch does not cover t = {}", t));
    }
    switch (branch) {
    case RangeBranch::components: {
        PackedDomain out;
        for (int i = 0; i < 3; ++i) {
            out.components.push_back({DomainShape::disk(), 1.0 / 3.0, 0});
        }
        return out;
    }
    case RangeBranch::thin_rectangle:
        return with_epsilon(t, target.epsilon, thin_rectangle);
    case RangeBranch::near_square:
        return with_epsilon(t, target.epsilon, near_square);
    case RangeBranch::two_disks:
    case RangeBranch::automatic:
        break;
    }
    return two_disks(t);
}

double kroger_bound(int m, double diameter) {
    if (m < 1) {
        throw std::invalid_argument("Kroger bound needs m >= 1");
    }
    if (!(diameter > 0.0)) {
        throw std::invalid_argument("diameter must be positive");
    }
    const double top = 2.0 * bessel_j_zero({0, 1}) + (m - 1) * pi;
    return top * top / (diameter * diameter);
}

}  // namespace neumax
