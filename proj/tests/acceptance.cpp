#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "commands.hpp"
#include "neumax/constructions.hpp"
#include "neumax/extremal.hpp"
#include "neumax/special_functions.hpp"
#include "oracles.hpp"
#include "render.hpp"

using namespace neumax;
using namespace neumax::cli;
using std::numbers::pi;

namespace {

// Printed reference table, 25 rows. Column 2 as (order, rank) in the table's
// own notation, column 7 as j^2 + k^2, column 8 as the printed number.
struct PrintedRow {
    int disk_order;
    int disk_rank;
    double disk_value;
    double disks_split;  // NaN in row 1
    const char* disks_provenance;
    double disks_value;
    int square_sum;
    double squares_split;  // NaN in row 1
    const char* squares_provenance;
    double squares_value;
};

const double none = std::nan("");

const std::vector<PrintedRow> printed{
    {1, 1, 10.650, none, "μ_1", 10.65, 1, none, "μ_1", 9.87},
    {1, 1, 10.650, 21.300, "2μ_1", 21.30, 1, 2, "2μ_1", 19.74},
    {2, 1, 29.306, 31.950, "3μ_1", 31.95, 2, 3, "3μ_1", 29.61},
    {2, 1, 29.306, 42.599, "4μ_1", 42.60, 4, 4, "4μ_1 = μ_4", 39.48},
    {0, 2, 46.125, 53.249, "5μ_1", 53.25, 4, 5, "5μ_1", 49.35},
    {3, 1, 55.449, 63.899, "6μ_1", 63.90, 5, 6, "6μ_1", 59.22},
    {3, 1, 55.449, 74.549, "7μ_1", 74.55, 5, 7, "7μ_1", 69.09},
    {4, 1, 88.833, 85.199, "μ_8", 88.83, 8, 8, "8μ_1 = μ_8", 78.96},
    {4, 1, 88.833, 99.483, "μ_8 + μ_1", 99.48, 9, 9, "9μ_1 = μ_9", 88.83},
    {1, 2, 89.298, 110.133, "μ_8 + 2μ_1", 110.13, 9, 10, "10μ_1", 98.70},
    {1, 2, 89.298, 120.783, "μ_8 + 3μ_1", 120.78, 10, 11, "11μ_1", 108.57},
    {5, 1, 129.308, 131.432, "μ_8 + 4μ_1", 131.43, 10, 12, "12μ_1", 118.44},
    {5, 1, 129.308, 142.081, "μ_8 + 5μ_1", 142.08, 13, 13, "13μ_1 = μ_13", 128.30},
    {2, 2, 141.284, 152.732, "μ_8 + 6μ_1", 152.73, 13, 14, "14μ_1", 138.17},
    {2, 2, 141.284, 163.382, "μ_8 + 7μ_1", 163.38, 16, 15, "μ_15", 157.91},
    {0, 3, 154.624, 177.666, "2μ_8", 177.67, 16, 17, "μ_15 + μ_1", 167.78},
    {6, 1, 176.774, 188.316, "2μ_8 + μ_1", 188.32, 17, 18, "μ_15 + 2μ_1", 177.65},
    {6, 1, 176.774, 198.965, "2μ_8 + 2μ_1", 198.97, 17, 19, "μ_15 + 3μ_1", 187.52},
    {3, 2, 201.829, 209.615, "2μ_8 + 3μ_1", 209.62, 18, 20, "μ_15 + 4μ_1", 197.39},
    {3, 2, 201.829, 220.265, "2μ_8 + 4μ_1", 220.27, 20, 21, "μ_15 + 5μ_1", 207.26},
    {1, 3, 228.924, 230.915, "2μ_8 + 5μ_1", 230.92, 20, 22, "μ_15 + 6μ_1", 217.13},
    {1, 3, 228.924, 241.565, "2μ_8 + 6μ_1", 241.56, 25, 23, "μ_22", 246.74},
    {7, 1, 231.156, 252.215, "2μ_8 + 7μ_1", 252.21, 25, 26, "μ_22 + μ_1", 256.61},
    {7, 1, 231.156, 266.499, "3μ_8", 266.50, 25, 27, "μ_22 + 2μ_1", 266.48},
    {4, 2, 270.689, 277.148, "3μ_8 + μ_1", 277.15, 25, 28, "μ_22 + 3μ_1", 276.35},
};

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (notes.size() < 8) {
                notes.push_back(what);
            }
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool near(double got, double printed_value, double tol) {
    if (std::isnan(printed_value)) {
        return std::isnan(got);
    }
    return std::abs(got - printed_value) <= tol;
}

Outcome table_reproduction(std::string& summary) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream rendered;
    cmd_table(25, TableFormat::markdown, rendered);
    const double elapsed = seconds_since(start);
    out.check(elapsed < 1.0, fmt::format("runtime {:.3f} s", elapsed));

    const auto disks = extremal_sequence(disks_class(), 25);
    const auto squares = extremal_sequence(squares_class(), 25);
    const auto rows = table_rows(disks, squares, 25);
    constexpr double tol = 0.005 + 1e-9;
    for (std::size_t i = 0; i < printed.size(); ++i) {
        const auto& p = printed[i];
        const auto& r = rows[i];
        const std::size_t n = i + 1;
        const int rank = r.disk_mode.q[0] == 0 ? r.disk_mode.q[1] + 1 : r.disk_mode.q[1];
        out.check(r.disk_mode.q[0] == p.disk_order && rank == p.disk_rank, fmt::format("row {} column 2", n));
        out.check(near(r.disk_value, p.disk_value, tol), fmt::format("row {} column 3: {}", n, r.disk_value));
        out.check(near(r.disks_split, p.disks_split, tol), fmt::format("row {} column 4: {}", n, r.disks_split));
        out.check(r.disks_provenance == p.disks_provenance,
                  fmt::format("row {} column 5: '{}'", n, r.disks_provenance));
        out.check(near(r.disks_value, p.disks_value, tol), fmt::format("row {} column 6: {}", n, r.disks_value));
        const int sum = r.square_mode.q[0] * r.square_mode.q[0] + r.square_mode.q[1] * r.square_mode.q[1];
        out.check(sum == p.square_sum, fmt::format("row {} column 7: {}", n, sum));
        out.check(near(r.squares_split_over_pi2, p.squares_split, tol),
                  fmt::format("row {} column 8: {}", n, r.squares_split_over_pi2));
        out.check(r.squares_provenance == p.squares_provenance,
                  fmt::format("row {} column 9: '{}'", n, r.squares_provenance));
        out.check(near(r.squares_value, p.squares_value, tol),
                  fmt::format("row {} column 10: {}", n, r.squares_value));
    }
    summary = fmt::format("25 rows x 9 columns within 0.005, provenance verbatim, {:.3f} s", elapsed);
    return out;
}

Outcome n22_comparison(std::string& summary) {
    Outcome out;
    const auto disks = extremal_sequence(disks_class(), 22);
    const auto squares = extremal_sequence(squares_class(), 22);
    out.check(std::abs(disks.value(22) - 241.56) <= 0.01, fmt::format("disks {}", disks.value(22)));
    out.check(std::abs(squares.value(22) - 246.74) <= 0.01, fmt::format("squares {}", squares.value(22)));
    out.check(disks.value(22) < squares.value(22), "ordering");
    const auto packing = unpack_geometry(disks, 22);
    int large = 0;
    int small = 0;
    for (const auto& c : packing.components) {
        large += std::abs(c.volume - 0.3677) < 5e-4 ? 1 : 0;
        small += std::abs(c.volume - 0.0441) < 5e-4 ? 1 : 0;
    }
    out.check(packing.components.size() == 8 && large == 2 && small == 6, "component areas");
    const double total = packing.total_volume();
    out.check(std::abs(total - 1.0) <= 1e-12, fmt::format("total area {:.17g}", total));
    summary = fmt::format("disks {:.4f} < squares {:.4f}; {} disks of area {:.4f} + {} of area {:.4f}, total 1{:+.1e}",
                          disks.value(22), squares.value(22), large, packing.components.front().volume, small,
                          packing.components.back().volume, total - 1.0);
    return out;
}

Outcome crossover_set(std::string& summary) {
    Outcome out;
    std::ostringstream text;
    cmd_scan(2, 83, text);
    out.check(text.str().find("(squares beat disks): 22, 23, 83\n") != std::string::npos, "scan output");
    const auto disks = extremal_sequence(disks_class(), 83);
    const auto squares = extremal_sequence(squares_class(), 83);
    const auto hits = crossover_scan(disks, squares, 83);
    out.check(hits == std::vector<std::size_t>{22, 23, 83}, fmt::format("hits {}", hits.size()));
    out.check(std::abs(disks.value(23) - 252.21) <= 0.01, "disks at 23");
    out.check(std::abs(squares.value(23) - 256.61) <= 0.01, "squares at 23");
    summary = fmt::format("crossovers {{22, 23, 83}}; n = 23: {:.2f} vs {:.2f}", disks.value(23), squares.value(23));
    return out;
}

Outcome sweep_3d(std::string& summary) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream text;
    cmd_scan(3, 640, text);
    const double elapsed = seconds_since(start);
    out.check(text.str().rfind("no crossover", 0) == 0, "scan output");
    const auto balls = extremal_sequence(balls_class(), 640);
    const auto cubes = extremal_sequence(cubes_class(), 640);
    std::size_t exceed = 0;
    for (std::size_t n = 1; n <= 640; ++n) {
        exceed += cubes.value(n) > balls.value(n) ? 1 : 0;
    }
    out.check(exceed == 0, fmt::format("{} indices where cubes exceed balls", exceed));
    out.check(elapsed < 30.0, fmt::format("runtime {:.3f} s", elapsed));
    summary = fmt::format("balls >= cubes for all n <= 640, {:.3f} s", elapsed);
    return out;
}

Outcome zero_oracle(std::string& summary) {
    Outcome out;
    double worst = 0.0;
    for (int m = 0; m <= 10; ++m) {
        const auto jp = oracle::zeros([m](double x) { return oracle::jprime(m, x); }, 11, 1e-4);
        const auto jz = oracle::zeros([m](double x) { return oracle::j(m, x); }, 11, 1e-4);
        const auto ap = oracle::zeros([m](double x) { return oracle::sph_jprime(m, x); }, 10, 1e-4);
        for (int n = 1; n <= 10; ++n) {
            const double a = bessel_jprime_zero({m, n});
            const double b = bessel_j_zero({m, n});
            const double c = spherical_jprime_zero({m, n});
            const double d = std::max({std::abs(a - jp[n - 1]), std::abs(b - jz[n - 1]), std::abs(c - ap[n - 1])});
            worst = std::max(worst, d);
            out.check(d <= 1e-8, fmt::format("(m, n) = ({}, {}): {:.2e}", m, n, d));
            // With the root x = 0 of J'_0 counted, j'_{0,n} is the (n-1)-th positive zero.
            const double lower = m == 0 ? (n == 1 ? 0.0 : bessel_jprime_zero({0, n - 1})) : a;
            const double upper = m == 0 ? a : bessel_jprime_zero({m, n + 1});
            out.check(lower < b && b < upper, fmt::format("interlacing at ({}, {})", m, n));
        }
    }
    summary = fmt::format("363 zeros, largest deviation {:.1e}; interlacing holds", worst);
    return out;
}

Outcome round_trip(std::string& summary) {
    Outcome out;
    double worst = 0.0;
    for (const auto& cls : {disks_class(), squares_class()}) {
        const auto seq = extremal_sequence(cls, 30);
        for (std::size_t n = 1; n <= 30; ++n) {
            const double got = packed_spectrum(unpack_geometry(seq, n), n + 1).eigenvalue(n);
            const double rel = std::abs(got - seq.value(n)) / seq.value(n);
            worst = std::max(worst, rel);
            out.check(rel <= 1e-9, fmt::format("{} n = {}: {:.2e}", cls.name, n, rel));
        }
    }
    summary = fmt::format("60 packings, largest relative deviation {:.1e}", worst);
    return out;
}

Outcome mu2_range(std::string& summary) {
    Outcome out;
    std::vector<double> targets;
    for (int i = 1; i <= 98; ++i) {
        targets.push_back(mu2_upper_limit() * i / 98.0);
    }
    targets.push_back(pi * pi);
    targets.push_back(mu1_upper_limit());
    double worst_area = 0.0;
    double worst_mu = 0.0;
    for (double t : targets) {
        const auto domain = mu2_range_domain({t, std::nullopt});
        const double area = std::abs(domain.total_volume() - 1.0);
        const double mu = std::abs(packed_spectrum(domain, 6).eigenvalue(2) - t);
        worst_area = std::max(worst_area, area);
        worst_mu = std::max(worst_mu, mu);
        out.check(area <= 1e-12, fmt::format("t = {}: area off by {:.1e}", t, area));
        out.check(mu <= 1e-9, fmt::format("t = {}: mu_2 off by {:.1e}", t, mu));
    }
    summary = fmt::format("{} targets, area error <= {:.1e}, mu_2 error <= {:.1e}", targets.size(), worst_area,
                          worst_mu);
    return out;
}

Outcome kroger(std::string& summary) {
    Outcome out;
    std::vector<DomainShape> shapes{DomainShape::disk(), DomainShape::square()};
    std::mt19937 rng(20);
    std::uniform_real_distribution<double> aspect(1.0, 4.0);
    for (int i = 0; i < 5; ++i) {
        shapes.push_back(DomainShape::rectangle(aspect(rng), 1.0).unit_volume());
    }
    double tightest = 0.0;
    for (const auto& shape : shapes) {
        const auto s = shape_spectrum(shape, 20);
        const double d = shape.diameter();
        for (int m = 1; m <= 20; ++m) {
            const double lhs = s.eigenvalue(static_cast<std::size_t>(m)) * d * d;
            const double rhs = kroger_bound(m, 1.0);
            tightest = std::max(tightest, lhs / rhs);
            out.check(lhs <= rhs, fmt::format("{} m = {}", shape.name(), m));
        }
    }
    summary = fmt::format("7 shapes x 20 indices, largest mu_m d^2 / bound = {:.4f}", tightest);
    return out;
}

Outcome dirichlet(std::string& summary) {
    Outcome out;
    const auto check = dirichlet_min_check();
    out.check(std::abs(check.square_lambda13 - 20.0 * pi * pi) <= 1e-9, "square lambda_13");
    out.check(std::abs(check.square_lambda13 - 197.39) <= 0.005, "square lambda_13 printed");
    out.check(check.disks_larger && check.disks_lambda13 > check.square_lambda13, "disks not larger");
    const auto seq = extremal_sequence(disks_class(Boundary::dirichlet), 2);
    const auto packing = unpack_geometry(seq, 2);
    const bool two_equal = packing.components.size() == 2 &&
                           std::abs(packing.components[0].volume - packing.components[1].volume) <= 1e-12;
    out.check(two_equal, "n = 2 is not two equal disks");
    summary = fmt::format("square {:.4f} < disks {:.4f}; lambda*_2 from two disks of area 0.5", check.square_lambda13,
                          check.disks_lambda13);
    return out;
}

Outcome properties(std::string& summary) {
    Outcome out;
    // Scaling law.
    for (const auto& shape : {DomainShape::disk(), DomainShape::square(), DomainShape::ball(), DomainShape::cube()}) {
        const auto s = shape_spectrum(shape, 20);
        for (double v : {0.1, 0.5, 3.0}) {
            const auto r = s.rescaled(v);
            const double f = std::pow(1.0 / v, 2.0 / s.dimension());
            for (std::size_t k = 1; k <= 20; ++k) {
                out.check(std::abs(r.positive(k) - f * s.positive(k)) <= 1e-14 * r.positive(k),
                          fmt::format("scaling {} v = {}", shape.name(), v));
            }
        }
    }
    // Superadditivity and exhaustive-split agreement.
    struct Case {
        DomainClass cls;
        std::vector<double> connected;
        bool maximize;
    };
    const std::size_t n = 30;
    std::vector<Case> cases{
        {disks_class(), oracle::neumann_disk(n), true},
        {squares_class(), oracle::lattice(n, true, 1.0, 1.0), true},
        {balls_class(), oracle::neumann_ball(n), true},
        {cubes_class(), oracle::lattice(n, true, 1.0, 1.0, 1.0), true},
        {disks_class(Boundary::dirichlet), oracle::dirichlet_disk(n), false},
    };
    for (const auto& c : cases) {
        const auto seq = extremal_sequence(c.cls, n);
        const auto want = oracle::exhaustive_extremal(c.connected, seq.dimension(), c.maximize);
        for (std::size_t i = 1; i <= n; ++i) {
            out.check(std::abs(seq.value(i) - want[i - 1]) <= 1e-10 * want[i - 1],
                      fmt::format("exhaustive {} n = {}", c.cls.name, i));
            for (std::size_t j = 1; i + j <= n; ++j) {
                const double joined = seq.combine(seq.value(i), seq.value(j));
                const bool ok = c.maximize ? seq.value(i + j) >= joined * (1.0 - 1e-12)
                                           : seq.value(i + j) <= joined * (1.0 + 1e-12);
                out.check(ok, fmt::format("superadditivity {} {} + {}", c.cls.name, i, j));
            }
        }
    }
    // Permutation invariance of unions.
    std::vector<SpectrumPart> parts{{disk_spectrum(Boundary::neumann, 25), 0.4},
                                    {rectangle_spectrum(1.0, 1.0, Boundary::neumann, 25), 0.35},
                                    {rectangle_spectrum(2.0, 0.5, Boundary::neumann, 25), 0.25}};
    const auto reference = union_spectrum(parts, 25).values();
    std::mt19937 rng(5);
    for (int trial = 0; trial < 12; ++trial) {
        std::shuffle(parts.begin(), parts.end(), rng);
        out.check(union_spectrum(parts, 25).values() == reference, "union permutation");
    }
    // Ball multiplicity.
    const auto ball = ball_spectrum(Boundary::neumann, 4);
    out.check(ball.positive(1) == ball.positive(2) && ball.positive(2) == ball.positive(3) &&
                  ball.positive(4) > ball.positive(3),
              "ball mu_1 = mu_2 = mu_3");
    summary = "scaling, superadditivity, exhaustive splits (n <= 30, 5 classes), permutations, ball multiplicity";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome(std::string&)>>> criteria{
        {"table reproduction", table_reproduction},
        {"n = 22 comparison and geometry", n22_comparison},
        {"crossover set up to 83", crossover_set},
        {"3D sweep to 640", sweep_3d},
        {"zero finder vs oracle", zero_oracle},
        {"geometry round trip", round_trip},
        {"mu_2 range construction", mu2_range},
        {"Kroger bound", kroger},
        {"Dirichlet cross-check", dirichlet},
        {"property suites", properties},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string summary;
        Outcome outcome;
        try {
            outcome = criteria[i].second(summary);
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.notes.push_back(std::string("exception: ") + e.what());
        }
        std::cout << fmt::format("{} criterion {}: {}", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first);
        if (!summary.empty()) {
            std::cout << " (" << summary << ")";
        }
        std::cout << "\n";
        for (const auto& note : outcome.notes) {
            std::cout << "    " << note << "\n";
        }
        failures += outcome.pass ? 0 : 1;
    }
    std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
