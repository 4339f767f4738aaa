#include "neumax/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace neumax {

namespace {

// a strictly beats b under the objective, beyond the relative tolerance.
bool beats(double a, double b, Objective objective) {
    const double margin = relative_tolerance * std::max(std::abs(a), std::abs(b));
    return objective == Objective::maximize ? a > b + margin : a < b - margin;
}

double combine_values(int dimension, double a, double b) {
    if (dimension == 2) {
        return a + b;
    }
    const double half = 0.5 * dimension;
    return std::pow(std::pow(a, half) + std::pow(b, half), 1.0 / half);
}

}  // namespace

int DomainClass::dimension() const {
    if (bases.empty()) {
        throw std::logic_error("domain class '" + name + "' has no base shapes");
    }
    return bases.front().dimension();
}

Boundary DomainClass::bc() const {
    if (bases.empty()) {
        throw std::logic_error("domain class '" + name + "' has no base shapes");
    }
    return bases.front().bc;
}

Objective DomainClass::objective() const { return bc() == Boundary::neumann ? Objective::maximize : Objective::minimize; }

DomainClass disks_class(Boundary bc) { return DomainClass{"disks", {DomainShape::disk(bc)}}; }

DomainClass squares_class(Boundary bc) { return DomainClass{"squares", {DomainShape::square(bc)}}; }

DomainClass balls_class() { return DomainClass{"balls", {DomainShape::ball()}}; }

DomainClass cubes_class() { return DomainClass{"cubes", {DomainShape::cube()}}; }

ExtremalSequence::ExtremalSequence(DomainClass domain_class, std::vector<Spectrum> base_spectra,
                                   std::vector<double> values, std::vector<double> best_splits,
                                   std::vector<Decomposition> provenance)
    : class_(std::move(domain_class)), base_spectra_(std::move(base_spectra)), values_(std::move(values)),
      best_splits_(std::move(best_splits)), provenance_(std::move(provenance)) {}

double ExtremalSequence::value(std::size_t n) const {
    if (n < 1 || n > values_.size()) {
        throw std::out_of_range(fmt::format("extremal index {} outside 1..{}", n, values_.size()));
    }
    return values_[n - 1];
}

const Decomposition& ExtremalSequence::provenance(std::size_t n) const {
    if (n < 1 || n > provenance_.size()) {
        throw std::out_of_range(fmt::format("extremal index {} outside 1..{}", n, provenance_.size()));
    }
    return provenance_[n - 1];
}

double ExtremalSequence::best_split(std::size_t n) const {
    if (n < 1 || n > best_splits_.size()) {
        throw std::out_of_range(fmt::format("extremal index {} outside 1..{}", n, best_splits_.size()));
    }
    return best_splits_[n - 1];
}

double ExtremalSequence::combine(double a, double b) const { return combine_values(dimension(), a, b); }

namespace detail {

SplitChoice pick_split(std::span<const double> candidates, std::span<const std::size_t> visit_order,
                       Objective objective) {
    if (candidates.empty() || visit_order.size() != candidates.size()) {
        throw std::invalid_argument("pick_split needs one visit slot per candidate");
    }
    double extreme = candidates[visit_order.front()];
    for (std::size_t slot : visit_order) {
        extreme = objective == Objective::maximize ? std::max(extreme, candidates[slot])
                                                   : std::min(extreme, candidates[slot]);
    }
    for (std::size_t j = 0; j < candidates.size(); ++j) {
        if (!beats(extreme, candidates[j], objective)) {
            return SplitChoice{j + 1, candidates[j]};
        }
    }
    return SplitChoice{};  // unreachable: the extreme itself qualifies
}

}  // namespace detail

ExtremalSequence extremal_sequence(const DomainClass& domain_class, std::size_t max_n) {
    std::vector<Spectrum> spectra;
    for (const auto& base : domain_class.bases) {
        spectra.push_back(shape_spectrum(base.unit_volume(), max_n));
    }
    return extremal_sequence(domain_class, std::move(spectra), max_n);
}

ExtremalSequence extremal_sequence(const DomainClass& domain_class, std::vector<Spectrum> base_spectra,
                                   std::size_t max_n) {
    if (max_n < 1) {
        throw std::invalid_argument("extremal sequence needs max_n >= 1");
    }
    if (base_spectra.size() != domain_class.bases.size()) {
        throw std::invalid_argument("one base spectrum per class base is required");
    }
    for (const auto& s : base_spectra) {
        if (s.count() < max_n || s.components() != 1 || s.dimension() != domain_class.dimension() ||
            s.bc() != domain_class.bc()) {
            throw std::invalid_argument("base spectra must be connected, match the class, and reach max_n");
        }
    }
    const Objective objective = domain_class.objective();

    std::vector<double> values;
    std::vector<double> best_splits;
    std::vector<Decomposition> provenance;
    const int dimension = domain_class.dimension();

    std::vector<double> candidates;
    std::vector<std::size_t> order;
    for (std::size_t n = 1; n <= max_n; ++n) {
        // Connected candidate: the best base shape's n-th eigenvalue.
        int base = 0;
        double connected = base_spectra[0].positive(n);
        for (std::size_t b = 1; b < base_spectra.size(); ++b) {
            const double v = base_spectra[b].positive(n);
            if (beats(v, connected, objective)) {
                connected = v;
                base = static_cast<int>(b);
            }
        }

        Decomposition step;
        step.base = base;
        double value = connected;
        double split_value = std::numeric_limits<double>::quiet_NaN();
        if (n >= 2) {
            candidates.clear();
            for (std::size_t j = 1; j <= n / 2; ++j) {
                candidates.push_back(combine_values(dimension, values[j - 1], values[n - j - 1]));
            }
            order.resize(candidates.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            const auto choice = detail::pick_split(candidates, order, objective);
            split_value = choice.value;
            step.split = choice.split;
            if (beats(choice.value, connected, objective)) {
                step.kind = Decomposition::Kind::split;
                value = choice.value;
            } else {
                step.tie = !beats(connected, choice.value, objective);
            }
        }
        values.push_back(value);
        best_splits.push_back(split_value);
        provenance.push_back(step);
    }
    return ExtremalSequence(domain_class, std::move(base_spectra), std::move(values), std::move(best_splits),
                            std::move(provenance));
}

namespace {

void collect_leaves(const ExtremalSequence& seq, std::size_t n, bool expand_ties,
                    std::vector<std::pair<int, std::size_t>>& out) {
    const Decomposition& d = seq.provenance(n);
    const bool expand = d.kind == Decomposition::Kind::split || (expand_ties && d.tie);
    if (!expand) {
        out.emplace_back(d.base, n);
        return;
    }
    collect_leaves(seq, n - d.split, expand_ties, out);
    collect_leaves(seq, d.split, expand_ties, out);
}

}  // namespace

std::vector<std::pair<int, std::size_t>> decomposition_leaves(const ExtremalSequence& seq, std::size_t n,
                                                              bool expand_ties) {
    std::vector<std::pair<int, std::size_t>> out;
    collect_leaves(seq, n, expand_ties, out);
    return out;
}

PackedDomain unpack_geometry(const ExtremalSequence& seq, std::size_t n) {
    const double root = seq.value(n);
    const double half = 0.5 * seq.dimension();
    PackedDomain out;
    for (const auto& [base, index] : decomposition_leaves(seq, n, false)) {
        const double ratio = seq.value(index) / root;
        const double volume = seq.dimension() == 2 ? ratio : std::pow(ratio, half);
        out.components.push_back(
            PackedComponent{seq.domain_class().bases[static_cast<std::size_t>(base)].unit_volume(), volume, index});
    }
    return out;
}

bool connectedness_certificate(double candidate, const ExtremalSequence& seq, std::size_t n) {
    if (n < 1 || (n > 1 && seq.size() < n - 1)) {
        throw std::invalid_argument(fmt::format("certificate at n = {} needs the sequence up to {}", n, n - 1));
    }
    for (std::size_t i = 1; i <= n / 2; ++i) {
        if (!beats(candidate, seq.combine(seq.value(i), seq.value(n - i)), seq.objective())) {
            return false;
        }
    }
    return true;
}

std::vector<std::size_t> crossover_scan(const ExtremalSequence& reference, const ExtremalSequence& challenger,
                                        std::size_t max_n) {
    if (reference.dimension() != challenger.dimension() || reference.objective() != challenger.objective()) {
        throw std::invalid_argument("crossover scan needs sequences of equal dimension and objective");
    }
    if (reference.size() < max_n || challenger.size() < max_n) {
        throw std::invalid_argument(fmt::format("crossover scan to {} needs both sequences that long", max_n));
    }
    std::vector<std::size_t> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        if (beats(challenger.value(n), reference.value(n), reference.objective())) {
            out.push_back(n);
        }
    }
    return out;
}

DirichletCheck dirichlet_min_check(std::size_t max_n) {
    if (max_n < 13) {
        throw std::invalid_argument("the Dirichlet check needs max_n >= 13");
    }
    DirichletCheck out;
    out.square_lambda13 = rectangle_spectrum(1.0, 1.0, Boundary::dirichlet, 13).positive(13);
    const auto seq = extremal_sequence(disks_class(Boundary::dirichlet), max_n);
    out.disks_lambda13 = seq.value(13);
    out.disks_larger = beats(out.disks_lambda13, out.square_lambda13, Objective::maximize);
    return out;
}

namespace {

struct Term {
    std::size_t index;
    int base;
    int count;
};

std::vector<Term> grouped_terms(const ExtremalSequence& seq, std::size_t n) {
    std::map<std::pair<std::size_t, int>, int, std::greater<>> counts;
    for (const auto& [base, index] : decomposition_leaves(seq, n, true)) {
        ++counts[{index, base}];
    }
    std::vector<Term> out;
    for (const auto& [key, count] : counts) {
        out.push_back(Term{key.first, key.second, count});
    }
    return out;
}

template <class Format>
std::string render(const ExtremalSequence& seq, std::size_t n, const char* plus, const char* equals, Format term) {
    const bool several_bases = seq.domain_class().bases.size() > 1;
    std::string out;
    for (const auto& t : grouped_terms(seq, n)) {
        if (!out.empty()) {
            out += plus;
        }
        out += term(t.count, t.index);
        if (several_bases) {
            out += "[" + seq.domain_class().bases[static_cast<std::size_t>(t.base)].name() + "]";
        }
    }
    const Decomposition& d = seq.provenance(n);
    if (d.kind == Decomposition::Kind::connected && d.tie) {
        out += equals + term(1, n);
    }
    return out;
}

}  // namespace

std::string provenance_expression(const ExtremalSequence& seq, std::size_t n) {
    const char* symbol = seq.objective() == Objective::maximize ? "μ" : "λ";
    return render(seq, n, " + ", " = ", [symbol](int count, std::size_t index) {
        return count == 1 ? fmt::format("{}_{}", symbol, index) : fmt::format("{}{}_{}", count, symbol, index);
    });
}

std::string provenance_ascii(const ExtremalSequence& seq, std::size_t n) {
    const char* symbol = seq.objective() == Objective::maximize ? "mu" : "lambda";
    return render(seq, n, "+", "=", [symbol](int count, std::size_t index) {
        return count == 1 ? fmt::format("{}{}", symbol, index) : fmt::format("{}*{}{}", count, symbol, index);
    });
}

std::string sequence_csv(const ExtremalSequence& seq) {
    std::string out = "n,value,provenance\n";
    for (std::size_t n = 1; n <= seq.size(); ++n) {
        out += fmt::format("{},{:.17g},{}\n", n, seq.value(n), provenance_ascii(seq, n));
    }
    return out;
}

}  // namespace neumax
