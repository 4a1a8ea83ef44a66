#pragma once

// Small hand-rolled generators for the property tests. Every test draws from its own
// engine seeded from KUGA_TEST_SEED (or a fixed default), so failures reproduce.

#include <complex>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "kuga/exact.hpp"
#include "kuga/linalg.hpp"
#include "kuga/theta.hpp"

namespace kuga::testing {

inline std::uint64_t base_seed() {
    if (const char* s = std::getenv("KUGA_TEST_SEED"); s != nullptr && *s != '\0') return std::stoull(s);
    return 1729;
}

// Distinct streams per test, derived from a tag so adding a test does not shift the others.
inline std::mt19937_64 rng_for(const std::string& tag) {
    std::uint64_t h = base_seed() ^ 0x9e3779b97f4a7c15ULL;
    for (unsigned char ch : tag) h = (h ^ ch) * 0x100000001b3ULL;
    return std::mt19937_64(h);
}

inline int uniform_int(std::mt19937_64& g, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline double uniform_real(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Rational small_rational(std::mt19937_64& g, int num = 9, int den = 7) {
    return Rational(uniform_int(g, -num, num)) / Rational(uniform_int(g, 1, den));
}

inline GaussianRational small_gaussian(std::mt19937_64& g) {
    return GaussianRational(small_rational(g), small_rational(g));
}

inline RootOfUnity random_root(std::mt19937_64& g, int max_order) {
    const int n = uniform_int(g, 1, max_order);
    return RootOfUnity::from_fraction(uniform_int(g, 0, n - 1), n);
}

inline Characteristic random_characteristic(std::mt19937_64& g, int genus) {
    Characteristic c;
    for (int i = 0; i < genus; ++i) c.eps.push_back(uniform_int(g, 0, 1));
    for (int i = 0; i < genus; ++i) c.delta.push_back(uniform_int(g, 0, 1));
    return c;
}

inline CVector random_vector(std::mt19937_64& g, int n, double scale = 0.5) {
    CVector z(n);
    for (int i = 0; i < n; ++i) z(i) = {uniform_real(g, -scale, scale), uniform_real(g, -scale, scale)};
    return z;
}

inline double max_abs(const CMatrix& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace kuga::testing
