#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace neumax {

/// Raised when a root cannot be bracketed inside the supported argument range
/// or a polished root fails its residual check.
class AccuracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bessel functions of the first kind, integer order. Accurate to ~1e-14
// absolute (relative away from zeros) for 0 <= x <= 200.
double bessel_j(int order, double x);
double bessel_j_prime(int order, double x);

// Spherical Bessel functions j_p and their derivatives.
double spherical_bessel_j(int order, double x);
double spherical_bessel_j_prime(int order, double x);

enum class ZeroKind { bessel_prime, bessel, spherical_prime };

const char* to_string(ZeroKind kind);
ZeroKind zero_kind_from_string(const std::string& name);

/// (order, rank) of a positive zero. Rank counts strictly positive zeros, so
/// the x = 0 root of J'_0 and j'_0 never has an index.
struct ZeroIndex {
    int order = 0;
    int rank = 1;
};

/// The function whose zeros a table of the given kind holds.
double zero_function(ZeroKind kind, int order, double x);

/// Cache of positive zeros for one kind, filled lazily by a sign-change scan
/// on a 0.05 grid followed by bisection to width 1e-12.
///
/// Not synchronized: build it from one thread, then read it from many.
class ZeroTable {
public:
    static constexpr double scan_step = 0.05;
    static constexpr double max_argument = 200.0;
    static constexpr double residual_limit = 1e-9;

    explicit ZeroTable(ZeroKind kind) : kind_(kind) {}

    ZeroKind kind() const { return kind_; }

    /// Returns the zero, computing and caching it (and all lower ranks) if needed.
    double zero(ZeroIndex idx);

    /// Already-cached zeros of one order, ascending.
    const std::vector<double>& cached(int order) const;

    /// Inserts a zero read from storage. Rejects values that fail the residual
    /// check or break rank monotonicity.
    void insert(ZeroIndex idx, double value);

    /// One `kind order rank value` line per cached zero, 15 significant digits.
    void write(std::ostream& out) const;

private:
    struct OrderScan {
        std::vector<double> zeros;
        double x = 0.0;   // grid position of the last evaluation
        double fx = 0.0;  // function value there
        bool started = false;
    };

    ZeroKind kind_;
    std::map<int, OrderScan> orders_;
};

/// Reads a dump produced by ZeroTable::write; lines may mix kinds.
std::map<ZeroKind, ZeroTable> read_zero_tables(std::istream& in);

// Process-wide cached zeros (thread-safe).
double bessel_jprime_zero(ZeroIndex idx);
double bessel_j_zero(ZeroIndex idx);
double spherical_jprime_zero(ZeroIndex idx);

}  // namespace neumax
