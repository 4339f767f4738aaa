#include "neumax/packing.hpp"

#include <cmath>
#include <stdexcept>

namespace neumax {

double PackedComponent::linear_scale() const { return std::pow(volume, 1.0 / shape.dimension()); }

double PackedDomain::total_volume() const {
    double total = 0.0;
    for (const auto& c : components) {
        total += c.volume;
    }
    return total;
}

int PackedDomain::dimension() const {
    if (components.empty()) {
        throw std::logic_error("empty packing has no dimension");
    }
    return components.front().shape.dimension();
}

Spectrum packed_spectrum(const PackedDomain& domain, std::size_t k) {
    std::vector<SpectrumPart> parts;
    parts.reserve(domain.components.size());
    for (const auto& c : domain.components) {
        parts.push_back(SpectrumPart{shape_spectrum(c.shape.unit_volume(), k), c.volume});
    }
    return union_spectrum(parts, k);
}

}  // namespace neumax
