#include "neumax/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "neumax/special_functions.hpp"

namespace neumax {

using std::numbers::pi;

const char* to_string(Boundary bc) { return bc == Boundary::neumann ? "neumann" : "dirichlet"; }

DomainShape DomainShape::disk(Boundary bc) { return DomainShape{ShapeKind::disk, bc, {1.0, 1.0, 1.0}}; }

DomainShape DomainShape::ball(Boundary bc) { return DomainShape{ShapeKind::ball, bc, {1.0, 1.0, 1.0}}; }

DomainShape DomainShape::rectangle(double a, double b, Boundary bc) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("rectangle sides must be positive");
    }
    return DomainShape{ShapeKind::rectangle, bc, {a, b, 1.0}};
}

DomainShape DomainShape::box(double a1, double a2, double a3, Boundary bc) {
    if (!(a1 > 0.0) || !(a2 > 0.0) || !(a3 > 0.0)) {
        throw std::invalid_argument("box sides must be positive");
    }
    return DomainShape{ShapeKind::box, bc, {a1, a2, a3}};
}

int DomainShape::dimension() const { return kind == ShapeKind::disk || kind == ShapeKind::rectangle ? 2 : 3; }

double DomainShape::volume() const {
    switch (kind) {
    case ShapeKind::rectangle:
        return sides[0] * sides[1];
    case ShapeKind::box:
        return sides[0] * sides[1] * sides[2];
    default:
        return 1.0;
    }
}

DomainShape DomainShape::unit_volume() const {
    DomainShape out = *this;
    if (kind == ShapeKind::rectangle) {
        const double s = std::sqrt(volume());
        out.sides = {sides[0] / s, sides[1] / s, 1.0};
    } else if (kind == ShapeKind::box) {
        const double s = std::cbrt(volume());
        out.sides = {sides[0] / s, sides[1] / s, sides[2] / s};
    }
    return out;
}

double DomainShape::diameter() const {
    switch (kind) {
    case ShapeKind::disk:
        return 2.0 * unit_disk_radius();
    case ShapeKind::ball:
        return 2.0 * unit_ball_radius();
    case ShapeKind::rectangle:
        return std::hypot(sides[0], sides[1]);
    case ShapeKind::box:
        return std::sqrt(sides[0] * sides[0] + sides[1] * sides[1] + sides[2] * sides[2]);
    }
    return 0.0;
}

std::string DomainShape::name() const {
    switch (kind) {
    case ShapeKind::disk:
        return "disk";
    case ShapeKind::ball:
        return "ball";
    case ShapeKind::rectangle:
        if (sides[0] == sides[1]) {
            return "square";
        }
        return fmt::format("rectangle {:.6g}x{:.6g}", sides[0], sides[1]);
    case ShapeKind::box:
        if (sides[0] == sides[1] && sides[1] == sides[2]) {
            return "cube";
        }
        return fmt::format("box {:.6g}x{:.6g}x{:.6g}", sides[0], sides[1], sides[2]);
    }
    return "?";
}

double unit_disk_radius() { return 1.0 / std::sqrt(pi); }

double unit_ball_radius() { return std::cbrt(3.0 / (4.0 * pi)); }

std::string ModeLabel::to_string() const {
    const bool three = kind == ShapeKind::box;
    std::string out = component > 0 ? fmt::format("#{}", component) : std::string{};
    if (three) {
        out += fmt::format("({},{},{})", q[0], q[1], q[2]);
    } else {
        out += fmt::format("({},{})", q[0], q[1]);
    }
    return out;
}

bool eigenvalue_before(const Eigenvalue& a, const Eigenvalue& b) {
    if (a.value != b.value) {
        return a.value < b.value;
    }
    if (a.label.component != b.label.component) {
        return a.label.component < b.label.component;
    }
    return b.label.q < a.label.q;
}

Spectrum::Spectrum(int dimension, Boundary bc, double volume, int components, std::vector<Eigenvalue> entries,
                   std::optional<DomainShape> shape)
    : dimension_(dimension), bc_(bc), volume_(volume), components_(components), entries_(std::move(entries)),
      shape_(std::move(shape)) {
    if (dimension_ != 2 && dimension_ != 3) {
        throw std::invalid_argument("dimension must be 2 or 3");
    }
    if (!(volume_ > 0.0)) {
        throw std::invalid_argument("spectrum volume must be positive");
    }
    if (components_ < 1) {
        throw std::invalid_argument("a domain has at least one component");
    }
    std::stable_sort(entries_.begin(), entries_.end(), eigenvalue_before);
}

std::vector<double> Spectrum::values() const {
    std::vector<double> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) {
        out.push_back(e.value);
    }
    return out;
}

std::vector<Mode> Spectrum::modes() const {
    std::vector<Mode> out;
    for (const auto& e : entries_) {
        if (!out.empty() && out.back().label == e.label && out.back().value == e.value) {
            ++out.back().multiplicity;
        } else {
            out.push_back(Mode{e.label, e.value, 1});
        }
    }
    return out;
}

double Spectrum::positive(std::size_t k) const {
    if (k < 1 || k > entries_.size()) {
        throw std::out_of_range(fmt::format("positive eigenvalue {} not available (have {})", k, entries_.size()));
    }
    return entries_[k - 1].value;
}

double Spectrum::eigenvalue(std::size_t n) const {
    if (bc_ == Boundary::dirichlet) {
        return positive(n);
    }
    const auto zeros = static_cast<std::size_t>(components_);
    if (n < zeros) {
        return 0.0;
    }
    return positive(n - zeros + 1);
}

std::size_t Spectrum::max_index() const {
    if (bc_ == Boundary::dirichlet) {
        return entries_.size();
    }
    return entries_.size() + static_cast<std::size_t>(components_) - 1;
}

Spectrum Spectrum::rescaled(double new_volume) const {
    if (!(new_volume > 0.0)) {
        throw std::invalid_argument("volume must be positive");
    }
    const double factor = std::pow(volume_ / new_volume, 2.0 / dimension_);
    Spectrum out = multiplied(factor);
    out.volume_ = new_volume;
    if (out.shape_ && (out.shape_->kind == ShapeKind::rectangle || out.shape_->kind == ShapeKind::box)) {
        const double linear = std::pow(new_volume / volume_, 1.0 / dimension_);
        for (double& s : out.shape_->sides) {
            s *= linear;
        }
        if (out.shape_->kind == ShapeKind::rectangle) {
            out.shape_->sides[2] = 1.0;
        }
    } else if (out.shape_ && new_volume != 1.0) {
        // Disks and balls are only representable at unit volume.
        out.shape_.reset();
    }
    return out;
}

Spectrum Spectrum::multiplied(double factor) const {
    Spectrum out = *this;
    for (auto& e : out.entries_) {
        e.value *= factor;
    }
    return out;
}

std::vector<int> Spectrum::display_multiplicity() const {
    std::vector<int> out(entries_.size(), 1);
    std::size_t begin = 0;
    while (begin < entries_.size()) {
        std::size_t end = begin + 1;
        const double ref = entries_[begin].value;
        while (end < entries_.size() && std::abs(entries_[end].value - ref) <= 1e-12 * std::abs(ref)) {
            ++end;
        }
        std::fill(out.begin() + static_cast<std::ptrdiff_t>(begin), out.begin() + static_cast<std::ptrdiff_t>(end),
                  static_cast<int>(end - begin));
        begin = end;
    }
    return out;
}

namespace {

// Disk of unit area: eigenvalue pi z^2 for each positive zero z of J'_m
// (Neumann) or J_m (Dirichlet). The order loop stops once the lower bound
// j'_{m,1} >= sqrt(m(m+2)) (which j_{m,1} also satisfies) exceeds the ceiling.
std::vector<Eigenvalue> disk_below(Boundary bc, double ceiling) {
    const ZeroKind kind = bc == Boundary::neumann ? ZeroKind::bessel_prime : ZeroKind::bessel;
    const double zmax = std::sqrt(ceiling / pi);
    std::vector<Eigenvalue> out;
    for (int m = 0; m == 0 || std::sqrt(m * (m + 2.0)) <= zmax; ++m) {
        for (int n = 1;; ++n) {
            const ZeroIndex idx{m, n};
            const double z = kind == ZeroKind::bessel_prime ? bessel_jprime_zero(idx) : bessel_j_zero(idx);
            const double value = pi * z * z;
            if (value > ceiling) {
                break;
            }
            const Eigenvalue e{value, ModeLabel{ShapeKind::disk, {m, n, 0}, 0}};
            out.push_back(e);
            if (m > 0) {
                out.push_back(e);
            }
        }
    }
    return out;
}

// Ball of unit volume, Neumann: (a'_{p,q}/R)^2 with multiplicity 2p+1.
// a'_{p,1} increases with p for p >= 1, so the order loop stops at the first
// order whose lowest zero already exceeds the ceiling; p = 0 is always scanned.
std::vector<Eigenvalue> ball_below(Boundary bc, double ceiling) {
    if (bc != Boundary::neumann) {
        throw std::invalid_argument("only Neumann spectra of the ball are supported");
    }
    const double radius = unit_ball_radius();
    std::vector<Eigenvalue> out;
    for (int p = 0;; ++p) {
        bool any = false;
        for (int q = 1;; ++q) {
            const double z = spherical_jprime_zero({p, q});
            const double value = (z / radius) * (z / radius);
            if (value > ceiling) {
                break;
            }
            any = true;
            const Eigenvalue e{value, ModeLabel{ShapeKind::ball, {p, q, 0}, 0}};
            out.insert(out.end(), static_cast<std::size_t>(2 * p + 1), e);
        }
        if (!any && p >= 1) {
            break;
        }
    }
    return out;
}

std::vector<Eigenvalue> lattice_below(const DomainShape& shape, double ceiling) {
    const int dims = shape.kind == ShapeKind::box ? 3 : 2;
    const int lo = shape.bc == Boundary::neumann ? 0 : 1;
    std::array<int, 3> hi{0, 0, 0};
    for (int d = 0; d < dims; ++d) {
        hi[d] = static_cast<int>(std::floor(shape.sides[d] * std::sqrt(ceiling) / pi));
    }
    const double pi2 = pi * pi;
    std::vector<Eigenvalue> out;
    const int lo3 = dims == 3 ? lo : 0;
    for (int j = lo; j <= hi[0]; ++j) {
        for (int k = lo; k <= hi[1]; ++k) {
            for (int l = lo3; l <= hi[2]; ++l) {
                if (j == 0 && k == 0 && l == 0) {
                    continue;
                }
                double term = double(j) * j / (shape.sides[0] * shape.sides[0]) +
                              double(k) * k / (shape.sides[1] * shape.sides[1]);
                if (dims == 3) {
                    term += double(l) * l / (shape.sides[2] * shape.sides[2]);
                }
                const double value = pi2 * term;
                if (value <= ceiling) {
                    out.push_back(Eigenvalue{value, ModeLabel{shape.kind, {j, k, l}, 0}});
                }
            }
        }
    }
    return out;
}

// Initial ceiling from the leading Weyl term; enlarged by doubling.
double weyl_ceiling(int dimension, double volume, std::size_t k) {
    const double n = static_cast<double>(k) + 4.0;
    if (dimension == 2) {
        return 1.25 * 4.0 * pi * n / volume;
    }
    return 1.25 * std::pow(6.0 * pi * pi * n / volume, 2.0 / 3.0);
}

void check_count(std::size_t k) {
    if (k < 1) {
        throw std::invalid_argument("eigenvalue count must be >= 1");
    }
}

}  // namespace

std::vector<Eigenvalue> eigenvalues_below(const DomainShape& shape, double ceiling) {
    std::vector<Eigenvalue> out;
    switch (shape.kind) {
    case ShapeKind::disk:
        out = disk_below(shape.bc, ceiling);
        break;
    case ShapeKind::ball:
        out = ball_below(shape.bc, ceiling);
        break;
    case ShapeKind::rectangle:
    case ShapeKind::box:
        out = lattice_below(shape, ceiling);
        break;
    }
    std::stable_sort(out.begin(), out.end(), eigenvalue_before);
    return out;
}

Spectrum shape_spectrum(const DomainShape& shape, std::size_t k) {
    check_count(k);
    double ceiling = weyl_ceiling(shape.dimension(), shape.volume(), k);
    std::vector<Eigenvalue> entries = eigenvalues_below(shape, ceiling);
    while (entries.size() < k) {
        ceiling *= 2.0;
        entries = eigenvalues_below(shape, ceiling);
    }
    entries.resize(k);
    return Spectrum(shape.dimension(), shape.bc, shape.volume(), 1, std::move(entries), shape);
}

Spectrum disk_spectrum(Boundary bc, std::size_t k) { return shape_spectrum(DomainShape::disk(bc), k); }

Spectrum rectangle_spectrum(double a, double b, Boundary bc, std::size_t k) {
    return shape_spectrum(DomainShape::rectangle(a, b, bc), k);
}

Spectrum ball_spectrum(Boundary bc, std::size_t k) { return shape_spectrum(DomainShape::ball(bc), k); }

Spectrum box_spectrum(double a1, double a2, double a3, Boundary bc, std::size_t k) {
    return shape_spectrum(DomainShape::box(a1, a2, a3, bc), k);
}

Spectrum union_spectrum(std::span<const SpectrumPart> parts, std::size_t k) {
    check_count(k);
    if (parts.empty()) {
        throw std::invalid_argument("union needs at least one part");
    }
    const int dimension = parts.front().spectrum.dimension();
    const Boundary bc = parts.front().spectrum.bc();
    double volume = 0.0;
    int components = 0;
    std::vector<Eigenvalue> merged;
    for (const auto& part : parts) {
        if (part.spectrum.dimension() != dimension || part.spectrum.bc() != bc) {
            throw std::invalid_argument("union parts must share dimension and boundary condition");
        }
        if (!(part.volume > 0.0)) {
            throw std::invalid_argument("union part volumes must be positive");
        }
        const Spectrum scaled = part.spectrum.rescaled(part.volume);
        for (Eigenvalue e : scaled.entries()) {
            e.label.component += components;
            merged.push_back(e);
        }
        volume += part.volume;
        components += part.spectrum.components();
    }
    std::stable_sort(merged.begin(), merged.end(), eigenvalue_before);
    if (merged.size() < k) {
        throw std::invalid_argument(fmt::format("union has only {} known eigenvalues, {} requested", merged.size(), k));
    }
    merged.resize(k);
    const double kth = merged.back().value;
    for (const auto& part : parts) {
        const Spectrum& s = part.spectrum;
        if (s.count() < k && s.count() > 0) {
            const double last = s.entries().back().value * std::pow(s.volume() / part.volume, 2.0 / dimension);
            if (last < kth) {
                throw std::invalid_argument("a truncated part spectrum cannot vouch for the requested union eigenvalues");
            }
        }
    }
    std::optional<DomainShape> shape;
    if (parts.size() == 1 && parts.front().volume == parts.front().spectrum.volume()) {
        shape = parts.front().spectrum.shape();
    }
    return Spectrum(dimension, bc, volume, components, std::move(merged), shape);
}

std::string spectrum_csv(const Spectrum& spectrum, std::size_t rows) {
    std::string out = "index,value,multiplicity,label\n";
    const auto multiplicity = spectrum.display_multiplicity();
    const std::size_t first = spectrum.bc() == Boundary::neumann ? static_cast<std::size_t>(spectrum.components()) : 1;
    for (std::size_t i = 0; i < std::min(rows, spectrum.count()); ++i) {
        const auto& e = spectrum.entries()[i];
        out += fmt::format("{},{:.10g},{},\"{}\"\n", first + i, e.value, multiplicity[i], e.label.to_string());
    }
    return out;
}

}  // namespace neumax
