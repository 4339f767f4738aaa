#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace neumax;
using namespace neumax::cli;

int main(int argc, char** argv) {
    CLI::App app{"Extremal Neumann eigenvalues over disjoint unions of disks, squares, balls and cubes"};
    app.require_subcommand(1);

    const std::map<std::string, Boundary> boundaries{{"neumann", Boundary::neumann},
                                                     {"dirichlet", Boundary::dirichlet}};
    const std::map<std::string, TableFormat> formats{{"md", TableFormat::markdown}, {"csv", TableFormat::csv}};

    std::size_t rows = 25;
    TableFormat format = TableFormat::markdown;
    auto* table = app.add_subcommand("table", "Disks versus squares extremal table");
    table->add_option("--rows", rows, "Number of rows")->check(CLI::PositiveNumber);
    table->add_option("--format", format, "md or csv")->transform(CLI::CheckedTransformer(formats));

    std::size_t certify_n = 22;
    auto* certify = app.add_subcommand("certify", "Certify that squares beat disks at index n");
    certify->add_option("--n", certify_n, "Eigenvalue index")->check(CLI::PositiveNumber);

    std::size_t figure_n = 22;
    std::string figure_class = "disks";
    std::string figure_out;
    auto* figure = app.add_subcommand("figure", "Draw the extremal packing as SVG");
    figure->add_option("--n", figure_n, "Eigenvalue index")->check(CLI::PositiveNumber);
    figure->add_option("--class", figure_class, "disks or squares")->check(CLI::IsMember({"disks", "squares"}));
    figure->add_option("--out", figure_out, "Output SVG path")->required();

    int scan_dim = 2;
    std::size_t scan_max = 83;
    auto* scan = app.add_subcommand("scan", "List indices where the challenger class wins");
    scan->add_option("--dim", scan_dim, "2 (disks vs squares) or 3 (balls vs cubes)")->check(CLI::IsMember({2, 3}));
    scan->add_option("--max-n", scan_max, "Largest index")->check(CLI::PositiveNumber);

    double construct_t = 0.0;
    std::optional<std::string> construct_svg;
    auto* construct = app.add_subcommand("construct", "Build a unit-area union with prescribed mu_2");
    construct->add_option("--t", construct_t, "Target mu_2")->required();
    construct->add_option("--svg", construct_svg, "Optional SVG output path");

    std::string spectrum_shape = "disk";
    Boundary spectrum_bc = Boundary::neumann;
    std::size_t spectrum_count = 10;
    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of a unit-volume shape as CSV");
    spectrum->add_option("--shape", spectrum_shape, "disk, square, ball or cube")
        ->check(CLI::IsMember({"disk", "square", "ball", "cube"}));
    spectrum->add_option("--bc", spectrum_bc, "neumann or dirichlet")->transform(CLI::CheckedTransformer(boundaries));
    spectrum->add_option("--count", spectrum_count, "Number of positive eigenvalues")->check(CLI::PositiveNumber);

    std::string sequence_class = "disks";
    Boundary sequence_bc = Boundary::neumann;
    std::size_t sequence_max = 25;
    auto* sequence = app.add_subcommand("sequence", "Extremal sequence of one class as CSV");
    sequence->add_option("--class", sequence_class, "disks, squares, balls or cubes")
        ->check(CLI::IsMember({"disks", "squares", "balls", "cubes"}));
    sequence->add_option("--bc", sequence_bc, "neumann or dirichlet")->transform(CLI::CheckedTransformer(boundaries));
    sequence->add_option("--max-n", sequence_max, "Largest index")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }

    return run_guarded(
        [&]() -> int {
            if (*table) {
                return cmd_table(rows, format, std::cout);
            }
            if (*certify) {
                return cmd_certify(certify_n, std::cout);
            }
            if (*figure) {
                return cmd_figure(figure_n, figure_class, figure_out, std::cout);
            }
            if (*scan) {
                return cmd_scan(scan_dim, scan_max, std::cout);
            }
            if (*construct) {
                return cmd_construct(construct_t, construct_svg, std::cout);
            }
            if (*spectrum) {
                return cmd_spectrum(spectrum_shape, spectrum_bc, spectrum_count, std::cout);
            }
            return cmd_sequence(sequence_class, sequence_bc, sequence_max, std::cout);
        },
        std::cerr);
}
