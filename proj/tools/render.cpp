#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

namespace neumax::cli {

using std::numbers::pi;

std::vector<TableRow> table_rows(const ExtremalSequence& disks, const ExtremalSequence& squares, std::size_t rows) {
    const Spectrum& disk = disks.base_spectrum(0);
    const Spectrum& square = squares.base_spectrum(0);
    std::vector<TableRow> out;
    for (std::size_t n = 1; n <= rows; ++n) {
        TableRow row;
        row.n = n;
        row.disk_mode = disk.entries()[n - 1].label;
        row.disk_value = disk.positive(n);
        row.disks_split = disks.best_split(n);
        row.disks_provenance = provenance_expression(disks, n);
        row.disks_value = disks.value(n);
        row.square_mode = square.entries()[n - 1].label;
        row.squares_split_over_pi2 = squares.best_split(n) / (pi * pi);
        row.squares_provenance = provenance_expression(squares, n);
        row.squares_value = squares.value(n);
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

std::string fixed_or_dash(double v, int decimals) {
    if (std::isnan(v)) {
        return "-";
    }
    return fmt::format("{:.{}f}", v, decimals);
}

// Split values of the square class are integers in units of pi^2.
std::string pi2_units(double v) {
    if (std::isnan(v)) {
        return "-";
    }
    const double r = std::round(v);
    if (std::abs(v - r) < 1e-9 * std::max(1.0, std::abs(v))) {
        return fmt::format("{}", static_cast<long long>(r));
    }
    return fmt::format("{:.2f}", v);
}

std::string xml_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

// Classical tables count the root x = 0 of J'_0 as its first zero, so the
// order-0 rank is shifted by one in the label.
std::string disk_label(const ModeLabel& m) {
    const int rank = m.q[0] == 0 ? m.q[1] + 1 : m.q[1];
    return fmt::format("πj'²_{{{},{}}}", m.q[0], rank);
}

std::string square_label(const ModeLabel& m) { return fmt::format("{}+{}", m.q[0] * m.q[0], m.q[1] * m.q[1]); }

}  // namespace

std::string render_table_markdown(const std::vector<TableRow>& rows) {
    std::string out =
        "| n | μ_n(D) | μ_n(D) | μ_n*(UD) | μ_n* | μ_n* | (j²+k²) | μ_n*(US)/π² | μ_n* | μ_n* |\n"
        "|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
        out += fmt::format("| {} | {} | {:.3f} | {} | {} | {:.2f} | {} | {} | {} | {:.2f} |\n", r.n,
                           disk_label(r.disk_mode), r.disk_value, fixed_or_dash(r.disks_split, 3), r.disks_provenance,
                           r.disks_value, square_label(r.square_mode), pi2_units(r.squares_split_over_pi2),
                           r.squares_provenance, r.squares_value);
    }
    return out;
}

std::string render_table_csv(const std::vector<TableRow>& rows, const ExtremalSequence& disks,
                             const ExtremalSequence& squares) {
    std::string out =
        "n,disk_mode,disk_value,disks_split,disks_provenance,disks_value,"
        "square_mode,squares_split_over_pi2,squares_provenance,squares_value\n";
    auto full = [](double v) { return std::isnan(v) ? std::string{} : fmt::format("{:.17g}", v); };
    for (const auto& r : rows) {
        out += fmt::format("{},\"{},{}\",{},{},{},{},\"{},{}\",{},{},{}\n", r.n, r.disk_mode.q[0], r.disk_mode.q[1],
                           full(r.disk_value), full(r.disks_split), provenance_ascii(disks, r.n), full(r.disks_value),
                           r.square_mode.q[0], r.square_mode.q[1], full(r.squares_split_over_pi2),
                           provenance_ascii(squares, r.n), full(r.squares_value));
    }
    return out;
}

std::string render_svg(const PackedDomain& domain, const std::string& annotation) {
    constexpr double gap = 0.05;
    constexpr double text_band = 0.12;

    std::vector<PackedComponent> parts = domain.components;
    std::stable_sort(parts.begin(), parts.end(),
                     [](const PackedComponent& a, const PackedComponent& b) { return a.volume > b.volume; });

    struct Box {
        double w;
        double h;
    };
    std::vector<Box> boxes;
    double width = gap;
    double height = 0.0;
    for (const auto& c : parts) {
        const double s = c.linear_scale();
        Box b{};
        switch (c.shape.kind) {
        case ShapeKind::disk:
            b.w = b.h = 2.0 * unit_disk_radius() * s;
            break;
        case ShapeKind::ball:
            b.w = b.h = 2.0 * unit_ball_radius() * s;
            break;
        case ShapeKind::rectangle:
        case ShapeKind::box:
            b.w = c.shape.sides[0] * s;
            b.h = c.shape.sides[1] * s;
            break;
        }
        boxes.push_back(b);
        width += b.w + gap;
        height = std::max(height, b.h);
    }
    const double total_h = height + 2.0 * gap + text_band;
    const double mid = gap + 0.5 * height;

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {:.6f} {:.6f}\" width=\"{:.0f}\" height=\"{:.0f}\">\n",
        width, total_h, 800.0, 800.0 * total_h / width);
    double x = gap;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Box& b = boxes[i];
        const auto kind = parts[i].shape.kind;
        if (kind == ShapeKind::disk || kind == ShapeKind::ball) {
            out += fmt::format(
                "  <circle cx=\"{:.6f}\" cy=\"{:.6f}\" r=\"{:.6f}\" fill=\"#9ecae1\" stroke=\"#08519c\" "
                "stroke-width=\"0.004\"/>\n",
                x + 0.5 * b.w, mid, 0.5 * b.w);
        } else {
            out += fmt::format(
                "  <rect x=\"{:.6f}\" y=\"{:.6f}\" width=\"{:.6f}\" height=\"{:.6f}\" fill=\"#fdd0a2\" "
                "stroke=\"#a63603\" stroke-width=\"0.004\"/>\n",
                x, mid - 0.5 * b.h, b.w, b.h);
        }
        x += b.w + gap;
    }
    out += fmt::format(
        "  <text x=\"{:.6f}\" y=\"{:.6f}\" font-family=\"sans-serif\" font-size=\"0.06\" "
        "text-anchor=\"middle\">{}</text>\n",
        0.5 * width, height + 2.0 * gap + 0.5 * text_band, xml_escape(annotation));
    out += "</svg>\n";
    return out;
}

}  // namespace neumax::cli
