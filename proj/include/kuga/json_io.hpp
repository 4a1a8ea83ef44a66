#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "kuga/cones.hpp"
#include "kuga/fourier_jacobi.hpp"
#include "kuga/mann.hpp"
#include "kuga/shimura.hpp"
#include "kuga/theta.hpp"
#include "kuga/z2z4.hpp"

namespace kuga {

// Insertion-ordered so that output is byte-stable across runs.
using Json = nlohmann::ordered_json;

/// printf("%.17g"); non-finite values become the strings "inf", "-inf", "nan".
std::string format_double(double x);

/// Serializer with fixed 17-significant-digit floats. indent < 0 gives one line.
std::string dump_json(const Json& j, int indent = 2);

Json complex_json(std::complex<double> z);  // [re, im]
Json rational_json(const Rational& x);      // "p/q"
Json integer_json(const Integer& x);        // number when it fits in 64 bits, else a decimal string
Json gaussian_json(const GaussianRational& x);  // [re_num, re_den, im_num, im_den]

Json matrix_json(const CMatrix& m);
Json matrix_json(const QMatrix& m);
Json matrix_json(const ZMatrix& m);
Json matrix_json(const GMatrix& m);
Json matrix_json(const KMatrix& m);

Json to_json(const ThetaValue& v);
Json to_json(const MinimalValuation& v);
Json to_json(const LotReport& r);
Json to_json(const SolutionSet& s);
Json to_json(const MannSolution& s);
Json to_json(const LFactorReport& r);
Json to_json(const C4FactorReport& r);
Json to_json(const FamilyComparison& c);
Json to_json(const VanishingReport& r);
Json to_json(const RelationsReport& r);
Json to_json(const GroupResidual& g);
Json to_json(const FixedPartReport& r);
Json to_json(const Check& c);
Json to_json(const MatrixRelationsReport& r);
Json to_json(const EigenRowReport& r);
Json to_json(const DiagonalizationReport& r);
Json to_json(const PathCheck& p);
Json to_json(const FinalPeriodReport& r);
Json to_json(const CrosscheckReport& r);

}  // namespace kuga
