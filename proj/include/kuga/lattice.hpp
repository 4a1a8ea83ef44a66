#pragma once

#include "kuga/linalg.hpp"

namespace kuga {

/// Row-style Hermite normal form: upper echelon, positive pivots, entries above
/// each pivot reduced into [0, pivot). Zero rows are dropped.
ZMatrix hermite_normal_form(ZMatrix a);

/// Basis (as columns) of the integer lattice {m in Z^n : a m = 0}, returned in
/// Hermite normal form of the transposed basis so that it is canonical.
ZMatrix integer_kernel(const QMatrix& a);

/// Clears denominators row by row, keeping the row space over Q.
ZMatrix clear_denominators(const QMatrix& a);

QMatrix to_rational(const ZMatrix& a);

/// Standard symplectic form J = (0 I; -I 0) of size 2g.
ZMatrix symplectic_form_z(int g);

/// m1^T J m2.
Integer symplectic_pairing(const ZVector& m1, const ZVector& m2);

Integer determinant_bareiss(ZMatrix a);

}  // namespace kuga
