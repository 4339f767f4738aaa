#pragma once

#include <cstddef>
#include <vector>

#include "neumax/spectra.hpp"

namespace neumax {

/// One piece of a disjoint union: a unit-volume canonical shape scaled to
/// `volume`. `index` is the eigenvalue index the piece supports in the
/// extremal configuration (0 when it supports none).
struct PackedComponent {
    DomainShape shape;
    double volume = 1.0;
    std::size_t index = 0;

    /// Linear scale factor applied to the unit shape.
    double linear_scale() const;
};

struct PackedDomain {
    std::vector<PackedComponent> components;

    double total_volume() const;
    int dimension() const;
};

/// Spectrum of the disjoint union, keeping k positive eigenvalues.
Spectrum packed_spectrum(const PackedDomain& domain, std::size_t k);

}  // namespace neumax
