#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "kuga/linalg.hpp"
#include "kuga/theta.hpp"

namespace kuga {

/// Index order of the six q-entries of a genus-3 period matrix:
/// (11, 22, 33, 12, 13, 23), stored 0-based as (row, col) pairs.
inline constexpr std::array<std::pair<int, int>, 6> kQEntries{
    {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};

struct Cone {
    std::string name;                       // "1", "1+1", "K3", "1+1+1", "K3+1", "C4", "K4-1", "K4"
    std::vector<std::array<int, 3>> generators;  // linear forms l; the generator is (l . x)^2
    int rank = 0;
    int dimension = 0;
    std::vector<int> entries;               // which q-entries (indices into kQEntries) the coordinates use
    Eigen::MatrixXi unbounded;              // k x entries.size(): exponent of each q in T_i
    Eigen::MatrixXi bounded;                // l x entries.size(): exponent of each q in S_j

    int bounded_count() const { return static_cast<int>(bounded.rows()); }
    /// Square map (T rows, then S rows) from log q to log coordinates.
    Eigen::MatrixXi coordinate_map() const;
};

const std::vector<Cone>& cone_catalog();
const Cone& cone_by_name(const std::string& name);
/// Rank of the sum of generator forms, computed exactly.
int generic_rank(const Cone& c);

struct BoundaryCoords {
    std::vector<std::complex<double>> T;
    std::vector<std::complex<double>> S;
    std::vector<std::complex<double>> moduli;  // tau-entries not used by the coordinates
};

BoundaryCoords boundary_coords(const Cone& cone, const CMatrix& tau);

/// Inverse coordinate map: given x with T_i = e^{2 pi i x_i} (then S_j likewise), the
/// tau-entries listed in cone.entries. Exact integer inverse.
QMatrix inverse_coordinate_map(const Cone& cone);
/// Builds a symmetric 3x3 tau from log-coordinates and values for the remaining entries.
CMatrix tau_from_log_coords(const Cone& cone, const std::vector<std::complex<double>>& log_coords,
                            const std::vector<std::complex<double>>& moduli = {});

struct MonomialExponents {
    std::array<Rational, 3> a;
    std::array<Rational, 3> b;
    /// Exponents in kQEntries order (a1, a2, a3, b3, b2, b1).
    std::array<Rational, 6> q_exponents() const;
};

MonomialExponents monomial_exponents(const Characteristic& c, const std::array<int, 3>& n);

/// Exponents of the unbounded variables in the series term indexed by n.
std::vector<Rational> cone_valuation(const Cone& cone, const Characteristic& c, const std::array<int, 3>& n);

struct MinimalValuation {
    std::vector<Rational> minimum;                 // componentwise minimum over the box
    std::vector<std::array<int, 3>> argmin;        // n attaining the full minimum vector
    bool unique_lowest_term() const { return !argmin.empty(); }
};

MinimalValuation minimal_valuations(const Cone& cone, const Characteristic& c, int box);

struct ThetaNullLot {
    std::vector<Rational> exponents;  // aggregated over the 36 even characteristics
    bool unique = true;               // every factor had a unique lowest term
};

ThetaNullLot theta_null_lowest_exponents(const Cone& cone, int box);

}  // namespace kuga
