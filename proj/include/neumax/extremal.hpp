#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "neumax/packing.hpp"
#include "neumax/spectra.hpp"

namespace neumax {

/// Relative tolerance below which two candidate values count as equal (tie
/// detection) and above which one strictly beats another (certificates,
/// crossover scans).
inline constexpr double relative_tolerance = 1e-9;

enum class Objective { maximize, minimize };

/// Disjoint unions of scaled copies of the base shapes. All bases share one
/// dimension and boundary condition; Neumann classes are maximized, Dirichlet
/// classes minimized.
struct DomainClass {
    std::string name;
    std::vector<DomainShape> bases;

    int dimension() const;
    Boundary bc() const;
    Objective objective() const;
};

DomainClass disks_class(Boundary bc = Boundary::neumann);
DomainClass squares_class(Boundary bc = Boundary::neumann);
DomainClass balls_class();
DomainClass cubes_class();

/// How the extremal value at one index is realized. A split at n combines the
/// class optima at `split` and n - split. A connected node that ties with its
/// best split keeps that split in `split` and sets `tie`.
struct Decomposition {
    enum class Kind { connected, split };

    Kind kind = Kind::connected;
    int base = 0;
    std::size_t split = 0;
    bool tie = false;
};

/// The extremal values mu*_n (maximize) or lambda*_n (minimize) for
/// n = 1..size() within a domain class.
class ExtremalSequence {
public:
    ExtremalSequence(DomainClass domain_class, std::vector<Spectrum> base_spectra, std::vector<double> values,
                     std::vector<double> best_splits, std::vector<Decomposition> provenance);

    const DomainClass& domain_class() const { return class_; }
    int dimension() const { return class_.dimension(); }
    Objective objective() const { return class_.objective(); }
    std::size_t size() const { return values_.size(); }

    /// 1-based.
    double value(std::size_t n) const;
    const Decomposition& provenance(std::size_t n) const;
    /// Best value over splits alone; NaN for n = 1.
    double best_split(std::size_t n) const;

    const Spectrum& base_spectrum(int base) const { return base_spectra_.at(static_cast<std::size_t>(base)); }

    /// (a^{N/2} + b^{N/2})^{2/N}, plain addition in the plane.
    double combine(double a, double b) const;

private:
    DomainClass class_;
    std::vector<Spectrum> base_spectra_;
    std::vector<double> values_;
    std::vector<double> best_splits_;
    std::vector<Decomposition> provenance_;
};

ExtremalSequence extremal_sequence(const DomainClass& domain_class, std::size_t max_n);

/// Runs the recursion on caller-supplied unit-volume base spectra (one per
/// class base, each with at least max_n positive values).
ExtremalSequence extremal_sequence(const DomainClass& domain_class, std::vector<Spectrum> base_spectra,
                                   std::size_t max_n);

/// Unrolls the decomposition at n into the scaled components realizing it.
/// A leaf supporting mu*_j gets volume (value(j) / value(n))^{N/2}.
PackedDomain unpack_geometry(const ExtremalSequence& seq, std::size_t n);

/// Leaves of the decomposition at n as (base, supported index), in unpack order.
/// With expand_ties, tied connected nodes are replaced by their split.
std::vector<std::pair<int, std::size_t>> decomposition_leaves(const ExtremalSequence& seq, std::size_t n,
                                                              bool expand_ties);

/// True iff candidate strictly beats every split of n (relative tolerance),
/// so the class optimum at n must be connected.
bool connectedness_certificate(double candidate, const ExtremalSequence& seq, std::size_t n);

/// Indices n <= max_n at which `challenger` strictly beats `reference`.
std::vector<std::size_t> crossover_scan(const ExtremalSequence& reference, const ExtremalSequence& challenger,
                                        std::size_t max_n);

struct DirichletCheck {
    double square_lambda13 = 0.0;
    double disks_lambda13 = 0.0;
    bool disks_larger = false;
};

/// lambda_13 of the unit square against the minimized lambda*_13 over disjoint
/// unions of disks.
DirichletCheck dirichlet_min_check(std::size_t max_n = 13);

/// `n,value,provenance` rows, e.g. `22,241.564877922407,2*mu8+6*mu1`.
std::string sequence_csv(const ExtremalSequence& seq);

/// Table notation, e.g. "2μ_8 + 6μ_1"; a tie at the top reads "4μ_1 = μ_4".
std::string provenance_expression(const ExtremalSequence& seq, std::size_t n);
/// ASCII form used in CSV, e.g. "2*mu8+6*mu1" or "4*mu1=mu4".
std::string provenance_ascii(const ExtremalSequence& seq, std::size_t n);

namespace detail {

struct SplitChoice {
    std::size_t split = 0;
    double value = 0.0;
};

/// Picks the best split candidate (candidates[j-1] is the value of split j):
/// the extremal value over all candidates, then the smallest j within the
/// relative tolerance of it. `visit_order` permutes the scan; the result
/// does not depend on it.
SplitChoice pick_split(std::span<const double> candidates, std::span<const std::size_t> visit_order,
                       Objective objective);

}  // namespace detail

}  // namespace neumax
