#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace neumax {

enum class Boundary { neumann, dirichlet };

const char* to_string(Boundary bc);

enum class ShapeKind { disk, rectangle, ball, box };

/// A canonical domain. Disks and balls are always of unit volume; rectangles
/// and boxes carry their side lengths.
struct DomainShape {
    ShapeKind kind = ShapeKind::disk;
    Boundary bc = Boundary::neumann;
    std::array<double, 3> sides{1.0, 1.0, 1.0};

    static DomainShape disk(Boundary bc = Boundary::neumann);
    static DomainShape ball(Boundary bc = Boundary::neumann);
    static DomainShape rectangle(double a, double b, Boundary bc = Boundary::neumann);
    static DomainShape square(Boundary bc = Boundary::neumann) { return rectangle(1.0, 1.0, bc); }
    static DomainShape box(double a1, double a2, double a3, Boundary bc = Boundary::neumann);
    static DomainShape cube(Boundary bc = Boundary::neumann) { return box(1.0, 1.0, 1.0, bc); }

    int dimension() const;
    double volume() const;
    /// Same shape rescaled to volume 1.
    DomainShape unit_volume() const;
    /// Largest distance between two points of the shape.
    double diameter() const;
    /// "disk", "square", "rectangle 2x0.5", ...
    std::string name() const;

    bool operator==(const DomainShape&) const = default;
};

/// Radius of the unit-area disk, 1/sqrt(pi).
double unit_disk_radius();
/// Radius of the unit-volume ball, (3/(4 pi))^(1/3).
double unit_ball_radius();

/// Quantum numbers of a mode: disk (m, n), rectangle (j, k), ball (p, q),
/// box (j, k, l). `component` distinguishes parts of a disjoint union.
struct ModeLabel {
    ShapeKind kind = ShapeKind::disk;
    std::array<int, 3> q{};
    int component = 0;

    std::string to_string() const;
    bool operator==(const ModeLabel&) const = default;
};

struct Eigenvalue {
    double value = 0.0;
    ModeLabel label;
};

/// A degenerate eigenvalue of one label, e.g. a disk mode with m >= 1 has
/// multiplicity 2 and a ball mode with order p has multiplicity 2p+1.
struct Mode {
    ModeLabel label;
    double value = 0.0;
    int multiplicity = 1;
};

/// Orders coincident eigenvalues deterministically: by value, then component,
/// then descending quantum numbers (so the rectangle's (1,0) precedes (0,1)).
bool eigenvalue_before(const Eigenvalue& a, const Eigenvalue& b);

/// The first `count` strictly positive eigenvalues of a domain, expanded by
/// multiplicity and sorted. The zero eigenvalues of a Neumann problem are
/// implicit, one per connected component.
class Spectrum {
public:
    Spectrum(int dimension, Boundary bc, double volume, int components, std::vector<Eigenvalue> entries,
             std::optional<DomainShape> shape = std::nullopt);

    int dimension() const { return dimension_; }
    Boundary bc() const { return bc_; }
    double volume() const { return volume_; }
    int components() const { return components_; }
    const std::optional<DomainShape>& shape() const { return shape_; }

    std::size_t count() const { return entries_.size(); }
    const std::vector<Eigenvalue>& entries() const { return entries_; }
    std::vector<double> values() const;
    std::vector<Mode> modes() const;

    /// k-th positive eigenvalue, k >= 1.
    double positive(std::size_t k) const;

    /// Eigenvalue under the problem's own indexing: mu_n with
    /// mu_0 = ... = mu_{components-1} = 0 for Neumann, lambda_n (n >= 1) for Dirichlet.
    double eigenvalue(std::size_t n) const;

    /// Largest n for which eigenvalue(n) is known.
    std::size_t max_index() const;

    /// Same domain homothetically rescaled to the given volume.
    Spectrum rescaled(double new_volume) const;

    /// Every value multiplied by `factor` (volume untouched).
    Spectrum multiplied(double factor) const;

    /// Size of each entry's group of coincident values (relative 1e-12),
    /// for display only.
    std::vector<int> display_multiplicity() const;

private:
    int dimension_;
    Boundary bc_;
    double volume_;
    int components_;
    std::vector<Eigenvalue> entries_;
    std::optional<DomainShape> shape_;
};

Spectrum disk_spectrum(Boundary bc, std::size_t k);
Spectrum rectangle_spectrum(double a, double b, Boundary bc, std::size_t k);
Spectrum ball_spectrum(Boundary bc, std::size_t k);
Spectrum box_spectrum(double a1, double a2, double a3, Boundary bc, std::size_t k);

/// Dispatches on shape kind.
Spectrum shape_spectrum(const DomainShape& shape, std::size_t k);

/// Every eigenvalue of the shape not exceeding `ceiling`, sorted.
std::vector<Eigenvalue> eigenvalues_below(const DomainShape& shape, double ceiling);

struct SpectrumPart {
    Spectrum spectrum;
    double volume = 1.0;
};

/// Spectrum of the disjoint union of the given parts, each rescaled to its
/// volume. Keeps the first k positive values; throws if a truncated part
/// cannot vouch for them.
Spectrum union_spectrum(std::span<const SpectrumPart> parts, std::size_t k);

/// `index,value,multiplicity,label` with 10 significant digits, for the first
/// `rows` entries (all by default). Multiplicities are counted over the whole
/// spectrum, so pass a longer one than you print to avoid cut-off groups.
std::string spectrum_csv(const Spectrum& spectrum, std::size_t rows = static_cast<std::size_t>(-1));

}  // namespace neumax
