#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "neumax/extremal.hpp"
#include "neumax/packing.hpp"

namespace neumax::cli {

/// One row of the disks-versus-squares comparison table. Values are kept at
/// full precision; rounding happens only when rendering.
struct TableRow {
    std::size_t n = 0;
    ModeLabel disk_mode;
    double disk_value = 0.0;
    double disks_split = 0.0;  // NaN at n = 1
    std::string disks_provenance;
    double disks_value = 0.0;
    ModeLabel square_mode;
    double squares_split_over_pi2 = 0.0;  // NaN at n = 1
    std::string squares_provenance;
    double squares_value = 0.0;
};

std::vector<TableRow> table_rows(const ExtremalSequence& disks, const ExtremalSequence& squares, std::size_t rows);

std::string render_table_markdown(const std::vector<TableRow>& rows);
std::string render_table_csv(const std::vector<TableRow>& rows, const ExtremalSequence& disks,
                             const ExtremalSequence& squares);

/// Components drawn to scale left to right by decreasing volume, with one
/// text annotation underneath.
std::string render_svg(const PackedDomain& domain, const std::string& annotation);

}  // namespace neumax::cli
