#include "neumax/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

namespace neumax {

namespace {

constexpr double rescale_threshold = 1e250;
constexpr double rescale_factor = 1e-250;

// Ascending series; used where (x/2)^2 <= order + 1 so terms decrease
// monotonically and no cancellation occurs.
double bessel_series(int order, double x) {
    const double half = 0.5 * x;
    double term = 1.0;
    for (int k = 1; k <= order; ++k) {
        term *= half / k;
    }
    const double q = half * half;
    double sum = term;
    for (int k = 0; k < 500; ++k) {
        term *= -q / ((k + 1.0) * (k + 1.0 + order));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

// Miller's backward recurrence normalized by J_0 + 2 sum J_{2k} = 1.
double bessel_miller(int order, double x) {
    const int top = std::max(order, static_cast<int>(x));
    int start = top + 20 + static_cast<int>(std::sqrt(60.0 * top));
    start += start % 2;

    double next = 0.0;  // J_{k+1}
    double cur = 1.0;   // J_k, unnormalized
    double even_sum = cur;
    double result = 0.0;
    for (int k = start; k > 0; --k) {
        const double prev = (2.0 * k / x) * cur - next;
        next = cur;
        cur = prev;
        const int idx = k - 1;
        if (idx == order) {
            result = cur;
        }
        if (idx > 0 && idx % 2 == 0) {
            even_sum += cur;
        }
        if (std::abs(cur) > rescale_threshold) {
            cur *= rescale_factor;
            next *= rescale_factor;
            even_sum *= rescale_factor;
            result *= rescale_factor;
        }
    }
    return result / (cur + 2.0 * even_sum);
}

double spherical_series(int order, double x) {
    double term = 1.0;
    for (int k = 1; k <= order; ++k) {
        term *= x / (2.0 * k + 1.0);
    }
    const double q = 0.5 * x * x;
    double sum = term;
    for (int k = 0; k < 500; ++k) {
        term *= -q / ((k + 1.0) * (2.0 * order + 2.0 * k + 3.0));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

double spherical_j0(double x) { return std::sin(x) / x; }
double spherical_j1(double x) { return std::sin(x) / (x * x) - std::cos(x) / x; }

// Backward recurrence for 1 < x <= order, normalized against whichever of
// the closed forms j_0, j_1 is larger in magnitude.
double spherical_miller(int order, double x) {
    int start = order + 20 + static_cast<int>(std::sqrt(40.0 * order));
    double next = 0.0;
    double cur = 1e-300;
    double result = 0.0;
    double at_one = 0.0;
    for (int k = start; k > 0; --k) {
        const double prev = ((2.0 * k + 1.0) / x) * cur - next;
        next = cur;
        cur = prev;
        const int idx = k - 1;
        if (idx == order) {
            result = cur;
        }
        if (idx == 1) {
            at_one = cur;
        }
        if (std::abs(cur) > rescale_threshold) {
            cur *= rescale_factor;
            next *= rescale_factor;
            result *= rescale_factor;
            at_one *= rescale_factor;
        }
    }
    const double j0 = spherical_j0(x);
    const double j1 = spherical_j1(x);
    if (std::abs(j0) >= std::abs(j1)) {
        return result * (j0 / cur);
    }
    return result * (j1 / at_one);
}

void check_order(int order) {
    if (order < 0) {
        throw std::invalid_argument("Bessel order must be non-negative");
    }
}

}  // namespace

double bessel_j(int order, double x) {
    check_order(order);
    if (x < 0.0) {
        const double v = bessel_j(order, -x);
        return order % 2 == 0 ? v : -v;
    }
    if (x == 0.0) {
        return order == 0 ? 1.0 : 0.0;
    }
    if (0.25 * x * x <= order + 1.0) {
        return bessel_series(order, x);
    }
    return bessel_miller(order, x);
}

double bessel_j_prime(int order, double x) {
    check_order(order);
    if (order == 0) {
        return -bessel_j(1, x);
    }
    return 0.5 * (bessel_j(order - 1, x) - bessel_j(order + 1, x));
}

double spherical_bessel_j(int order, double x) {
    check_order(order);
    if (x < 0.0) {
        const double v = spherical_bessel_j(order, -x);
        return order % 2 == 0 ? v : -v;
    }
    if (x <= 1.0) {
        return spherical_series(order, x);
    }
    if (order == 0) {
        return spherical_j0(x);
    }
    if (order == 1) {
        return spherical_j1(x);
    }
    if (x > order) {
        double prev = spherical_j0(x);
        double cur = spherical_j1(x);
        for (int p = 1; p < order; ++p) {
            const double next = ((2.0 * p + 1.0) / x) * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    return spherical_miller(order, x);
}

double spherical_bessel_j_prime(int order, double x) {
    check_order(order);
    if (order == 0) {
        return -spherical_bessel_j(1, x);
    }
    if (x == 0.0) {
        return order == 1 ? 1.0 / 3.0 : 0.0;
    }
    return spherical_bessel_j(order - 1, x) - (order + 1.0) / x * spherical_bessel_j(order, x);
}

const char* to_string(ZeroKind kind) {
    switch (kind) {
    case ZeroKind::bessel_prime:
        return "bessel_prime";
    case ZeroKind::bessel:
        return "bessel";
    case ZeroKind::spherical_prime:
        return "spherical_prime";
    }
    return "?";
}

ZeroKind zero_kind_from_string(const std::string& name) {
    for (ZeroKind k : {ZeroKind::bessel_prime, ZeroKind::bessel, ZeroKind::spherical_prime}) {
        if (name == to_string(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown zero kind '" + name + "'");
}

double zero_function(ZeroKind kind, int order, double x) {
    switch (kind) {
    case ZeroKind::bessel_prime:
        return bessel_j_prime(order, x);
    case ZeroKind::bessel:
        return bessel_j(order, x);
    case ZeroKind::spherical_prime:
        return spherical_bessel_j_prime(order, x);
    }
    return 0.0;
}

double ZeroTable::zero(ZeroIndex idx) {
    check_order(idx.order);
    if (idx.rank < 1) {
        throw std::invalid_argument("zero rank must be >= 1");
    }
    OrderScan& scan = orders_[idx.order];
    auto f = [&](double x) { return zero_function(kind_, idx.order, x); };

    if (!scan.started) {
        scan.x = std::max(0.5 * idx.order, 0.01);
        scan.fx = f(scan.x);
        scan.started = true;
    }
    while (static_cast<int>(scan.zeros.size()) < idx.rank) {
        const double x = scan.x + scan_step;
        if (x > max_argument) {
            throw AccuracyError(fmt::format("{} zero (order {}, rank {}) lies beyond the bracketing range x <= {}",
                                            to_string(kind_), idx.order, idx.rank, max_argument));
        }
        const double fx = f(x);
        if (fx == 0.0) {
            scan.zeros.push_back(x);
        } else if (scan.fx != 0.0 && (scan.fx < 0.0) != (fx < 0.0)) {
            double lo = scan.x;
            double hi = x;
            double flo = scan.fx;
            while (hi - lo > 1e-12) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            const double root = 0.5 * (lo + hi);
            if (std::abs(f(root)) > residual_limit) {
                throw AccuracyError(fmt::format("{} zero (order {}, rank {}) residual {:.3g} exceeds {}",
                                                to_string(kind_), idx.order, scan.zeros.size() + 1,
                                                f(root), residual_limit));
            }
            scan.zeros.push_back(root);
        }
        scan.x = x;
        scan.fx = fx;
    }
    return scan.zeros[idx.rank - 1];
}

const std::vector<double>& ZeroTable::cached(int order) const {
    static const std::vector<double> empty;
    auto it = orders_.find(order);
    return it == orders_.end() ? empty : it->second.zeros;
}

void ZeroTable::insert(ZeroIndex idx, double value) {
    check_order(idx.order);
    if (!(value > 0.0) || value > max_argument) {
        throw std::invalid_argument(fmt::format("zero value {} out of range", value));
    }
    const double residual = zero_function(kind_, idx.order, value);
    if (std::abs(residual) > residual_limit) {
        throw AccuracyError(fmt::format("{} zero (order {}, rank {}) = {} has residual {:.3g}", to_string(kind_),
                                        idx.order, idx.rank, value, residual));
    }
    OrderScan& scan = orders_[idx.order];
    if (idx.rank != static_cast<int>(scan.zeros.size()) + 1) {
        throw std::invalid_argument(fmt::format("{} zeros of order {} must be loaded in rank order",
                                                to_string(kind_), idx.order));
    }
    if (!scan.zeros.empty() && !(value > scan.zeros.back())) {
        throw std::invalid_argument(fmt::format("{} zeros of order {} are not increasing", to_string(kind_), idx.order));
    }
    scan.zeros.push_back(value);
    // Resume any later scan just past the loaded zero.
    scan.x = value + 1e-9;
    scan.fx = zero_function(kind_, idx.order, scan.x);
    scan.started = true;
}

void ZeroTable::write(std::ostream& out) const {
    for (const auto& [order, scan] : orders_) {
        for (std::size_t r = 0; r < scan.zeros.size(); ++r) {
            out << fmt::format("{} {} {} {:.15g}\n", to_string(kind_), order, r + 1, scan.zeros[r]);
        }
    }
}

std::map<ZeroKind, ZeroTable> read_zero_tables(std::istream& in) {
    std::map<ZeroKind, ZeroTable> tables;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        std::string kind_name;
        ZeroIndex idx;
        double value = 0.0;
        if (!(fields >> kind_name >> idx.order >> idx.rank >> value)) {
            throw std::invalid_argument(fmt::format("zero table line {}: expected 'kind order rank value'", line_no));
        }
        const ZeroKind kind = zero_kind_from_string(kind_name);
        auto it = tables.try_emplace(kind, kind).first;
        it->second.insert(idx, value);
    }
    return tables;
}

namespace {

double shared_zero(ZeroKind kind, ZeroIndex idx) {
    static std::mutex mutex;
    static std::map<ZeroKind, ZeroTable> tables;
    std::lock_guard lock(mutex);
    auto it = tables.try_emplace(kind, kind).first;
    return it->second.zero(idx);
}

}  // namespace

double bessel_jprime_zero(ZeroIndex idx) { return shared_zero(ZeroKind::bessel_prime, idx); }

double bessel_j_zero(ZeroIndex idx) { return shared_zero(ZeroKind::bessel, idx); }

double spherical_jprime_zero(ZeroIndex idx) { return shared_zero(ZeroKind::spherical_prime, idx); }

}  // namespace neumax
