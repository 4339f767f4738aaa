#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "neumax/spectra.hpp"

namespace neumax::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_input_error = 1,
    exit_contradiction = 2,
    exit_accuracy_failure = 3,
};

enum class TableFormat { markdown, csv };

int cmd_table(std::size_t rows, TableFormat format, std::ostream& out);

/// Certifies that squares beat disks at n; exit_contradiction otherwise.
int cmd_certify(std::size_t n, std::ostream& out);

/// `domain_class` is "disks" or "squares".
int cmd_figure(std::size_t n, const std::string& domain_class, const std::string& path, std::ostream& out);

int cmd_scan(int dimension, std::size_t max_n, std::ostream& out);

int cmd_construct(double t, const std::optional<std::string>& svg_path, std::ostream& out);

/// `shape` is disk, square, ball or cube.
int cmd_spectrum(const std::string& shape, Boundary bc, std::size_t count, std::ostream& out);

/// `domain_class` is disks, squares, balls or cubes.
int cmd_sequence(const std::string& domain_class, Boundary bc, std::size_t max_n, std::ostream& out);

/// Runs a command, mapping bad input to exit_input_error and numerical
/// failures to exit_accuracy_failure with a message on `err`.
int run_guarded(const std::function<int()>& command, std::ostream& err);

}  // namespace neumax::cli
