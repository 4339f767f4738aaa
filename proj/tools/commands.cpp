#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "neumax/constructions.hpp"
#include "neumax/extremal.hpp"
#include "neumax/special_functions.hpp"
#include "render.hpp"

namespace neumax::cli {

namespace {

void require_positive(std::size_t n, const char* what) {
    if (n < 1) {
        throw std::invalid_argument(fmt::format("{} must be >= 1", what));
    }
}

DomainClass class_by_name(const std::string& name, Boundary bc) {
    if (name == "disks") {
        return disks_class(bc);
    }
    if (name == "squares") {
        return squares_class(bc);
    }
    if (name == "balls") {
        if (bc != Boundary::neumann) {
            throw std::invalid_argument("the balls class is Neumann only");
        }
        return balls_class();
    }
    if (name == "cubes") {
        return DomainClass{"cubes", {DomainShape::cube(bc)}};
    }
    throw std::invalid_argument("unknown domain class '" + name + "'");
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    }
    file << contents;
    if (!file) {
        throw std::invalid_argument("failed writing '" + path + "'");
    }
}

std::string index_list(const std::vector<std::size_t>& indices) {
    std::string out;
    for (std::size_t n : indices) {
        out += out.empty() ? fmt::format("{}", n) : fmt::format(", {}", n);
    }
    return out;
}

}  // namespace

int cmd_table(std::size_t rows, TableFormat format, std::ostream& out) {
    require_positive(rows, "row count");
    const auto disks = extremal_sequence(disks_class(), rows);
    const auto squares = extremal_sequence(squares_class(), rows);
    const auto table = table_rows(disks, squares, rows);
    out << (format == TableFormat::markdown ? render_table_markdown(table) : render_table_csv(table, disks, squares));
    return exit_ok;
}

int cmd_certify(std::size_t n, std::ostream& out) {
    require_positive(n, "n");
    const auto disks = extremal_sequence(disks_class(), n);
    const auto squares = extremal_sequence(squares_class(), n);
    const double d = disks.value(n);
    const double s = squares.value(n);
    const auto hits = crossover_scan(disks, squares, n);
    const bool crossover = !hits.empty() && hits.back() == n;
    if (crossover) {
        out << fmt::format("μ_{}: disks {:.2f} < squares {:.2f}: certified\n", n, d, s);
        out << fmt::format("  disks:   {}\n  squares: {}\n", provenance_expression(disks, n),
                           provenance_expression(squares, n));
        return exit_ok;
    }
    const char* relation = d > s ? ">" : (d < s ? "<" : "=");
    out << fmt::format("μ_{}: disks {:.2f} {} squares {:.2f}: not a crossover\n", n, d, relation, s);
    return exit_contradiction;
}

int cmd_figure(std::size_t n, const std::string& domain_class, const std::string& path, std::ostream& out) {
    require_positive(n, "n");
    if (domain_class != "disks" && domain_class != "squares") {
        throw std::invalid_argument("figure class must be disks or squares");
    }
    const auto seq = extremal_sequence(class_by_name(domain_class, Boundary::neumann), n);
    const auto packing = unpack_geometry(seq, n);
    const std::string annotation = fmt::format("μ_{} ≈ {:.2f} ({})", n, seq.value(n), provenance_expression(seq, n));
    write_file(path, render_svg(packing, annotation));
    out << fmt::format("wrote {}: {} component(s), μ_{} ≈ {:.2f}\n", path, packing.components.size(), n,
                       seq.value(n));
    return exit_ok;
}

int cmd_scan(int dimension, std::size_t max_n, std::ostream& out) {
    require_positive(max_n, "max-n");
    if (dimension == 2) {
        const auto disks = extremal_sequence(disks_class(), max_n);
        const auto squares = extremal_sequence(squares_class(), max_n);
        const auto hits = crossover_scan(disks, squares, max_n);
        if (hits.empty()) {
            out << fmt::format("no crossover for n <= {}: disjoint unions of disks match or beat squares\n", max_n);
        } else {
            out << fmt::format("crossovers for n <= {} (squares beat disks): {}\n", max_n, index_list(hits));
            for (std::size_t n : hits) {
                out << fmt::format("  n = {}: disks {:.2f} < squares {:.2f}\n", n, disks.value(n), squares.value(n));
            }
        }
        return exit_ok;
    }
    if (dimension == 3) {
        const auto balls = extremal_sequence(balls_class(), max_n);
        const auto cubes = extremal_sequence(cubes_class(), max_n);
        const auto hits = crossover_scan(balls, cubes, max_n);
        double worst = std::numeric_limits<double>::infinity();
        std::size_t worst_n = 1;
        for (std::size_t n = 1; n <= max_n; ++n) {
            const double ratio = balls.value(n) / cubes.value(n);
            if (ratio < worst) {
                worst = ratio;
                worst_n = n;
            }
        }
        if (hits.empty()) {
            out << fmt::format("no crossover: for all n <= {} a disjoint union of balls beats the cube\n", max_n);
        } else {
            out << fmt::format("crossovers for n <= {} (cubes beat balls): {}\n", max_n, index_list(hits));
        }
        out << fmt::format("  smallest ratio balls/cubes = {:.6f} at n = {}\n", worst, worst_n);
        return exit_ok;
    }
    throw std::invalid_argument("dimension must be 2 or 3");
}

int cmd_construct(double t, const std::optional<std::string>& svg_path, std::ostream& out) {
    const auto domain = mu2_range_domain(RangeTarget{t, std::nullopt});
    const double mu2 = packed_spectrum(domain, 6).eigenvalue(2);
    if (std::abs(mu2 - t) > 1e-9 * std::max(1.0, t)) {
        throw AccuracyError(fmt::format("constructed domain has μ_2 = {:.12f}, expected {:.12f}", mu2, t));
    }
    out << fmt::format("t = {}: μ_2 = {:.12f} (total area {:.15f})\n", t, mu2, domain.total_volume());
    for (const auto& c : domain.components) {
        const double s = c.linear_scale();
        std::string what;
        if (c.shape.kind == ShapeKind::rectangle) {
            what = fmt::format("rectangle {:.9f} x {:.9f}", c.shape.sides[0] * s, c.shape.sides[1] * s);
        } else {
            what = fmt::format("disk radius {:.9f}", unit_disk_radius() * s);
        }
        out << fmt::format("  {:<40} area {:.12f}", what, c.volume);
        if (c.index > 0) {
            out << fmt::format("  supports μ_{}", c.index);
        }
        out << "\n";
    }
    if (svg_path) {
        write_file(*svg_path, render_svg(domain, fmt::format("μ_2 = {:.6f}", mu2)));
        out << fmt::format("wrote {}\n", *svg_path);
    }
    return exit_ok;
}

int cmd_spectrum(const std::string& shape, Boundary bc, std::size_t count, std::ostream& out) {
    require_positive(count, "count");
    DomainShape domain;
    if (shape == "disk") {
        domain = DomainShape::disk(bc);
    } else if (shape == "square") {
        domain = DomainShape::square(bc);
    } else if (shape == "ball") {
        domain = DomainShape::ball(bc);
    } else if (shape == "cube") {
        domain = DomainShape::cube(bc);
    } else {
        throw std::invalid_argument("unknown shape '" + shape + "'");
    }
    // Extra entries complete a degenerate group cut at the last printed row.
    out << spectrum_csv(shape_spectrum(domain, 2 * count + 64), count);
    return exit_ok;
}

int cmd_sequence(const std::string& domain_class, Boundary bc, std::size_t max_n, std::ostream& out) {
    require_positive(max_n, "max-n");
    out << sequence_csv(extremal_sequence(class_by_name(domain_class, bc), max_n));
    return exit_ok;
}

int run_guarded(const std::function<int()>& command, std::ostream& err) {
    try {
        return command();
    } catch (const AccuracyError& e) {
        err << "accuracy failure: " << e.what() << "\n";
        return exit_accuracy_failure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

}  // namespace neumax::cli
