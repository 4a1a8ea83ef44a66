#include "kuga/mann.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kuga {

using cd = std::complex<double>;

namespace {

const std::vector<int> kSmallPrimes{2, 3, 5, 7};

std::vector<int> primes_up_to(int k) {
    std::vector<int> out;
    for (int p : kSmallPrimes)
        if (p <= k) out.push_back(p);
    return out;
}

cd root_value(const Rational& e) { return RootOfUnity(e).to_complex(); }

double abs_coefficient_sum(const std::vector<Rational>& c) {
    double s = 0;
    for (const auto& x : c) s += std::abs(to_double(x));
    return s;
}

Cyclotomic exact_sum(const std::vector<Rational>& c, const std::vector<RootOfUnity>& roots) {
    long m = 1;
    for (const auto& z : roots) m = std::lcm(m, z.order());
    Cyclotomic acc(0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Rational& e = roots[i].exponent();
        long k = (numerator(e) * Integer(m) / denominator(e)).convert_to<long>();
        acc += Cyclotomic(c[i]) * Cyclotomic::zeta(static_cast<int>(m), k);
    }
    return acc;
}

// Rows x^e mod Phi_n for e = 0..n-1, in the power basis. Entries stay tiny for the
// conductors used here, so the zero test below runs in machine integers.
const std::vector<std::vector<std::int64_t>>& power_table(long n) {
    static std::mutex mu;
    static std::map<long, std::vector<std::vector<std::int64_t>>> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(n);
    if (it != tables.end()) return it->second;
    const auto& phi_poly = cyclotomic_polynomial(static_cast<int>(n));
    const std::size_t phi = phi_poly.size() - 1;
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> v(phi, 0);
    v[0] = phi == 0 ? 0 : 1;
    for (long e = 0; e < n; ++e) {
        rows.push_back(v);
        // multiply by x and reduce with the monic Phi_n
        std::int64_t top = v[phi - 1];
        for (std::size_t j = phi - 1; j > 0; --j) v[j] = v[j - 1];
        v[0] = 0;
        for (std::size_t j = 0; j < phi; ++j) v[j] -= top * phi_poly[j].convert_to<std::int64_t>();
    }
    return tables.emplace(n, std::move(rows)).first->second;
}

// Exact zero test of sum c_i zeta_i.
bool sum_is_zero(const std::vector<Rational>& c, const std::vector<RootOfUnity>& roots) {
    long m = 1;
    for (const auto& z : roots) m = std::lcm(m, z.order());
    Integer den = 1;
    for (const auto& x : c) den = lcm(den, denominator(x));
    std::vector<std::int64_t> scaled;
    bool small = m <= Cyclotomic::kMaxConductor && m > 1;
    for (const auto& x : c) {
        Integer v = numerator(x) * (den / denominator(x));
        small = small && abs(v) < Integer(1) << 40;
        scaled.push_back(small ? v.convert_to<std::int64_t>() : 0);
    }
    if (!small) return exact_sum(c, roots).is_zero();
    const auto& table = power_table(m);
    std::vector<__int128> acc(table[0].size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Rational& e = roots[i].exponent();
        long k = (numerator(e) * Integer(m) / denominator(e)).convert_to<long>();
        const auto& row = table[static_cast<std::size_t>(k)];
        for (std::size_t j = 0; j < row.size(); ++j) acc[j] += static_cast<__int128>(scaled[i]) * row[j];
    }
    for (auto a : acc)
        if (a != 0) return false;
    return true;
}

// Numeric screen followed by the exact test.
bool subset_vanishes(const std::vector<Rational>& c, const std::vector<RootOfUnity>& roots, unsigned mask) {
    cd s = 0;
    double scale = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!(mask >> i & 1u)) continue;
        const double ci = to_double(c[i]);
        s += ci * roots[i].to_complex();
        scale += std::abs(ci);
    }
    if (std::abs(s) > 1e-8 * scale) return false;
    std::vector<Rational> cc;
    std::vector<RootOfUnity> rr;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (mask >> i & 1u) {
            cc.push_back(c[i]);
            rr.push_back(roots[i]);
        }
    return sum_is_zero(cc, rr);
}

std::vector<std::vector<int>> decompose(const std::vector<Rational>& c, const std::vector<RootOfUnity>& roots,
                                        unsigned mask) {
    // Smallest vanishing proper subset first; its complement in mask vanishes too.
    std::vector<unsigned> subsets;
    for (unsigned sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) subsets.push_back(sub);
    std::sort(subsets.begin(), subsets.end(), [](unsigned a, unsigned b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (unsigned sub : subsets) {
        if (!subset_vanishes(c, roots, sub)) continue;
        auto left = decompose(c, roots, sub);
        auto right = decompose(c, roots, mask & ~sub);
        left.insert(left.end(), right.begin(), right.end());
        std::sort(left.begin(), left.end());
        return left;
    }
    std::vector<int> block;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (mask >> i & 1u) block.push_back(static_cast<int>(i));
    return {block};
}

unsigned full_mask(std::size_t n) { return (1u << n) - 1; }

Solution make_solution(const Relation& r, std::vector<RootOfUnity> roots) {
    Solution s;
    s.roots = std::move(roots);
    s.partition = decompose(r.coefficients, s.roots, full_mask(r.size()));
    s.irreducible = s.partition.size() == 1;
    return s;
}

std::vector<Rational> exponents_of(const std::vector<RootOfUnity>& roots) {
    std::vector<Rational> e;
    for (const auto& z : roots) e.push_back(z.exponent());
    return e;
}

SolutionSet collect(std::map<std::vector<Rational>, Solution>& found) {
    SolutionSet out;
    for (auto& [k, s] : found) out.solutions.push_back(std::move(s));
    return out;
}

// Largest orders to search for an irreducible relation of length m. Besides Mann's
// bound (N squarefree, primes <= m) we use the sharper constraint that the primes
// dividing N satisfy sum (p - 2) <= m - 2; every admissible N divides one of these.
std::vector<long> search_orders(int m) {
    auto primes = primes_up_to(m);
    std::vector<long> admissible;
    for (unsigned mask = 0; mask < (1u << primes.size()); ++mask) {
        long n = 1;
        int weight = 0;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask >> i & 1u) {
                n *= primes[i];
                weight += primes[i] - 2;
            }
        if (weight <= m - 2) admissible.push_back(n);
    }
    std::vector<long> maximal;
    for (long n : admissible) {
        bool dominated = false;
        for (long other : admissible) dominated = dominated || (other != n && other % n == 0);
        if (!dominated) maximal.push_back(n);
    }
    return maximal;
}

struct PartialSum {
    cd value;
    std::uint64_t code;  // exponents in base n, first index least significant
};

// All exponent assignments for indices [from, to) over mu_n, with their weighted sums.
std::vector<PartialSum> partial_sums(const std::vector<double>& c, std::size_t from, std::size_t to, long n,
                                     const std::vector<cd>& table) {
    std::vector<PartialSum> out{{cd(0), 0}};
    std::uint64_t place = 1;
    for (std::size_t i = from; i < to; ++i) {
        std::vector<PartialSum> next;
        next.reserve(out.size() * static_cast<std::size_t>(n));
        for (const auto& p : out)
            for (long y = 0; y < n; ++y)
                next.push_back({p.value + c[i] * table[static_cast<std::size_t>(y)],
                                p.code + place * static_cast<std::uint64_t>(y)});
        out = std::move(next);
        place *= static_cast<std::uint64_t>(n);
    }
    return out;
}

// A nonzero x in Z[zeta_n] has |N(x)| >= 1 while every conjugate is at most the sum of
// the absolute coefficients C, so |x| >= C^{1 - phi(n)}. Half of that (scaled back by the
// common denominator) separates exact zeros from nonzeros in floating point.
double zero_radius(const std::vector<Rational>& c, long n) {
    Integer den = 1;
    for (const auto& x : c) den = lcm(den, denominator(x));
    const double d = den.convert_to<double>();
    const double big_c = d * abs_coefficient_sum(c);
    return 0.5 * std::pow(big_c, 1.0 - euler_phi(static_cast<int>(n))) / d;
}

// True when some proper nonempty sub-sum is certainly zero.
bool has_vanishing_subsum(const std::vector<double>& c, const std::vector<cd>& z, double radius) {
    const unsigned full = full_mask(c.size());
    for (unsigned sub = (full - 1) & full; sub != 0; sub = (sub - 1) & full) {
        cd s = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (sub >> i & 1u) s += c[i] * z[i];
        if (std::abs(s) < radius) return true;
    }
    return false;
}

// Irreducible solutions of a relation with roots[0] pinned to 1, by meet in the middle.
std::vector<std::vector<RootOfUnity>> irreducible_solutions(const std::vector<Rational>& c) {
    const std::size_t m = c.size();
    std::vector<double> cd_coeffs;
    for (const auto& x : c) cd_coeffs.push_back(to_double(x));
    std::set<std::vector<Rational>> seen;
    std::vector<std::vector<RootOfUnity>> out;
    const double eps = 1e-9 * abs_coefficient_sum(c);
    for (long n : search_orders(static_cast<int>(m))) {
        std::vector<cd> table;
        for (long y = 0; y < n; ++y) table.push_back(root_value(Rational(y, n)));
        // Rounding in the sums is far below this radius for the supported lengths.
        const double radius = zero_radius(c, n);
        const bool certified = radius > 1e-13 * abs_coefficient_sum(c);
        const std::size_t mid = 1 + (m - 1) / 2;
        auto left = partial_sums(cd_coeffs, 1, mid, n, table);
        auto right = partial_sums(cd_coeffs, mid, m, n, table);
        std::sort(right.begin(), right.end(),
                  [](const PartialSum& a, const PartialSum& b) { return a.value.real() < b.value.real(); });
        std::vector<long> exps(m, 0);
        std::vector<cd> z(m);
        for (const auto& l : left) {
            cd need = -(cd_coeffs[0] + l.value);
            auto lo = std::lower_bound(right.begin(), right.end(), need.real() - eps,
                                       [](const PartialSum& p, double v) { return p.value.real() < v; });
            for (auto it = lo; it != right.end() && it->value.real() <= need.real() + eps; ++it) {
                if (std::abs(it->value.imag() - need.imag()) > eps) continue;
                std::uint64_t lc = l.code, rc = it->code;
                for (std::size_t i = 1; i < m; ++i) {
                    std::uint64_t& code = i < mid ? lc : rc;
                    exps[i] = static_cast<long>(code % static_cast<std::uint64_t>(n));
                    code /= static_cast<std::uint64_t>(n);
                }
                for (std::size_t i = 0; i < m; ++i) z[i] = table[static_cast<std::size_t>(exps[i])];
                if (certified && has_vanishing_subsum(cd_coeffs, z, radius)) continue;
                std::vector<RootOfUnity> roots;
                for (long y : exps) roots.emplace_back(Rational(y, n));
                if (!sum_is_zero(c, roots)) continue;
                if (!certified && decompose(c, roots, full_mask(m)).size() != 1) continue;
                if (seen.insert(exponents_of(roots)).second) out.push_back(std::move(roots));
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return exponents_of(a) < exponents_of(b); });
    return out;
}

// Set partitions of {0..n-1} into blocks of size >= 2, blocks in order of first element.
void partitions(int n, int next, std::vector<std::vector<int>>& current, std::vector<std::vector<std::vector<int>>>& out) {
    if (next == n) {
        for (const auto& b : current)
            if (b.size() < 2) return;
        out.push_back(current);
        return;
    }
    for (std::size_t b = 0; b < current.size(); ++b) {
        current[b].push_back(next);
        partitions(n, next + 1, current, out);
        current[b].pop_back();
    }
    current.push_back({next});
    partitions(n, next + 1, current, out);
    current.pop_back();
}

}  // namespace

std::vector<long> mann_candidate_orders(int k) {
    if (k < 2) throw std::invalid_argument("relation length must be at least 2");
    long product = 1;
    for (int p = 2; p <= k; ++p) {
        bool prime = true;
        for (int d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
        if (prime) product *= p;
    }
    std::vector<long> out;
    for (long d = 1; d <= product; ++d)
        if (product % d == 0) out.push_back(d);
    return out;
}

Relation::Relation(std::vector<Rational> c) : coefficients(std::move(c)) {
    if (coefficients.size() < 2) throw std::invalid_argument("a relation needs at least two terms");
    for (const auto& x : coefficients)
        if (x == 0) throw std::invalid_argument("relation coefficients must be nonzero");
}

bool relation_vanishes(const Relation& r, const std::vector<RootOfUnity>& roots) {
    if (roots.size() != r.size()) throw std::invalid_argument("wrong number of roots");
    return sum_is_zero(r.coefficients, roots);
}

bool is_irreducible_solution(const Relation& r, const std::vector<RootOfUnity>& roots) {
    if (roots.size() != r.size()) throw std::invalid_argument("wrong number of roots");
    return decompose(r.coefficients, roots, full_mask(r.size())).size() == 1;
}

std::vector<std::vector<Rational>> SolutionSet::exponent_vectors() const {
    std::vector<std::vector<Rational>> out;
    for (const auto& s : solutions) out.push_back(exponents_of(s.roots));
    return out;
}

MannSolution solve_vanishing_sum(const Relation& r) {
    if (r.size() > kMaxRelationLength) throw std::invalid_argument("relation too long");
    const int k = static_cast<int>(r.size());
    std::map<std::vector<int>, std::vector<std::vector<RootOfUnity>>> cache;
    auto block_solutions = [&](const std::vector<int>& idx) -> const std::vector<std::vector<RootOfUnity>>& {
        auto it = cache.find(idx);
        if (it != cache.end()) return it->second;
        std::vector<Rational> c;
        for (int i : idx) c.push_back(r.coefficients[static_cast<std::size_t>(i)]);
        return cache.emplace(idx, irreducible_solutions(c)).first->second;
    };

    std::vector<std::vector<std::vector<int>>> parts;
    std::vector<std::vector<int>> current;
    partitions(k, 0, current, parts);

    MannSolution out{r, {}};
    for (const auto& p : parts) {
        MannSolution::Family fam;
        bool ok = true;
        for (const auto& b : p) {
            const auto& sols = block_solutions(b);
            if (sols.empty()) {
                ok = false;
                break;
            }
            fam.blocks.push_back({b, sols});
        }
        if (ok) out.families.push_back(std::move(fam));
    }
    return out;
}

SolutionSet MannSolution::irreducible() const {
    std::map<std::vector<Rational>, Solution> found;
    for (const auto& fam : families) {
        if (fam.blocks.size() != 1) continue;
        for (const auto& roots : fam.blocks[0].irreducible) {
            Solution s{roots, true, {fam.blocks[0].indices}};
            found.emplace(exponents_of(roots), std::move(s));
        }
    }
    return collect(found);
}

SolutionSet MannSolution::enumerate(long max_order) const {
    if (max_order < 1) throw std::invalid_argument("order must be positive");
    std::map<std::vector<Rational>, Solution> found;
    const std::size_t k = relation.size();
    for (const auto& fam : families) {
        // Keep only block solutions living in mu_{max_order}.
        std::vector<std::vector<std::vector<RootOfUnity>>> usable;
        for (const auto& b : fam.blocks) {
            std::vector<std::vector<RootOfUnity>> keep;
            for (const auto& roots : b.irreducible) {
                bool fits = true;
                for (const auto& z : roots) fits = fits && max_order % z.order() == 0;
                if (fits) keep.push_back(roots);
            }
            usable.push_back(std::move(keep));
        }
        bool empty = false;
        for (const auto& u : usable) empty = empty || u.empty();
        if (empty) continue;

        // Mixed-radix counter over (solution choice, rotation) per block; block 0 is not rotated.
        const std::size_t nb = fam.blocks.size();
        std::vector<long> radix, digit(2 * nb, 0);
        for (std::size_t b = 0; b < nb; ++b) {
            radix.push_back(static_cast<long>(usable[b].size()));
            radix.push_back(b == 0 ? 1 : max_order);
        }
        while (true) {
            std::vector<RootOfUnity> roots(k);
            for (std::size_t b = 0; b < nb; ++b) {
                const auto& sol = usable[b][static_cast<std::size_t>(digit[2 * b])];
                RootOfUnity rot(Rational(digit[2 * b + 1], max_order));
                for (std::size_t j = 0; j < fam.blocks[b].indices.size(); ++j)
                    roots[static_cast<std::size_t>(fam.blocks[b].indices[j])] = sol[j] * rot;
            }
            auto key = exponents_of(roots);
            if (!found.count(key)) found.emplace(key, make_solution(relation, roots));
            std::size_t pos = 0;
            while (pos < digit.size() && ++digit[pos] == radix[pos]) digit[pos++] = 0;
            if (pos == digit.size()) break;
        }
    }
    return collect(found);
}

SolutionSet brute_force_vanishing(const Relation& r, long max_order) {
    if (max_order < 1 || max_order > kMaxBruteForceOrder)
        throw std::invalid_argument("brute force order must be between 1 and 60");
    const std::size_t k = r.size();
    if (std::pow(static_cast<double>(max_order), static_cast<double>(k - 1)) > kBruteForceCap)
        throw std::invalid_argument("search space exceeds the brute-force cap");
    std::vector<cd> table;
    for (long y = 0; y < max_order; ++y) table.push_back(root_value(Rational(y, max_order)));
    const double eps = 1e-9 * abs_coefficient_sum(r.coefficients);
    std::vector<double> c;
    for (const auto& x : r.coefficients) c.push_back(to_double(x));

    std::map<std::vector<Rational>, Solution> found;
    std::vector<long> y(k, 0);
    while (true) {
        cd s = 0;
        for (std::size_t i = 0; i < k; ++i) s += c[i] * table[static_cast<std::size_t>(y[i])];
        if (std::abs(s) <= eps) {
            std::vector<RootOfUnity> roots;
            for (long v : y) roots.emplace_back(Rational(v, max_order));
            if (relation_vanishes(r, roots)) found.emplace(exponents_of(roots), make_solution(r, roots));
        }
        std::size_t pos = 1;
        while (pos < k && ++y[pos] == max_order) y[pos++] = 0;
        if (pos == k) break;
    }
    return collect(found);
}

std::string LFactor::str() const {
    auto sign = [](int s) { return s > 0 ? std::string(" + ") : std::string(" - "); };
    return "q12 q13 q23" + sign(s1) + "q12" + sign(s2) + "q13" + sign(s3) + "q23";
}

std::vector<LFactor> standard_cone_factors() { return {{-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}, {1, 1, 1}}; }

namespace {

Cyclotomic factor_value(const LFactor& f, const std::array<RootOfUnity, 3>& q) {
    std::vector<Rational> c{Rational(1), Rational(f.s1), Rational(f.s2), Rational(f.s3)};
    return exact_sum(c, {q[0] * q[1] * q[2], q[0], q[1], q[2]});
}

}  // namespace

LFactorReport analyze_L_factor(const LFactor& f) {
    LFactorReport rep;
    rep.factor = f;
    const Relation rel({Rational(1), Rational(f.s1), Rational(f.s2), Rational(f.s3)});
    const std::array<int, 3> signs{f.s1, f.s2, f.s3};

    // Direct enumeration: an irreducible zero has all ratios in mu_6, which puts every
    // q~ in mu_12, so mu_12^3 contains all irreducible zeros.
    rep.every_zero_has_two_unit_squares = true;
    const long n = 12;
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c) {
                std::array<RootOfUnity, 3> q{RootOfUnity(Rational(a, n)), RootOfUnity(Rational(b, n)),
                                             RootOfUnity(Rational(c, n))};
                cd approx = q[0].to_complex() * q[1].to_complex() * q[2].to_complex() +
                            double(f.s1) * q[0].to_complex() + double(f.s2) * q[1].to_complex() +
                            double(f.s3) * q[2].to_complex();
                if (std::abs(approx) > 1e-8 || !factor_value(f, q).is_zero()) continue;
                ++rep.mu12_solutions;
                if (is_irreducible_solution(rel, {q[0] * q[1] * q[2], q[0], q[1], q[2]})) ++rep.mu12_irreducible;
                int unit_squares = 0;
                for (const auto& z : q) unit_squares += z.pow(2).is_one() ? 1 : 0;
                rep.every_zero_has_two_unit_squares = rep.every_zero_has_two_unit_squares && unit_squares >= 2;
            }

    // Through the general solver: a normalized irreducible solution (1, r1, r2, r3) of the
    // monomial relation comes from (q~) = xi (r1, r2, r3) with xi^2 (r1 r2 r3) = 1.
    for (const auto& sol : solve_vanishing_sum(rel).irreducible().solutions) {
        RootOfUnity prod = sol.roots[1] * sol.roots[2] * sol.roots[3];
        RootOfUnity xi(-prod.exponent() / 2);
        for (int branch = 0; branch < 2; ++branch) {
            RootOfUnity x = branch == 0 ? xi : xi * RootOfUnity(Rational(1, 2));
            std::array<RootOfUnity, 3> q{x * sol.roots[1], x * sol.roots[2], x * sol.roots[3]};
            if (factor_value(f, q).is_zero()) ++rep.solver_irreducible;
        }
    }

    // Reducible zeros split the four monomials into two vanishing pairs. Pairing the cubic
    // monomial with q~_j leaves q~_k q~_l = -s_j and s_k q~_k = -s_l q~_l, hence
    // q~_k^2 = q~_l^2 = s_1 s_2 s_3 while q~_j stays free.
    const int square = f.s1 * f.s2 * f.s3;
    rep.forces_q_equal_one = true;
    for (int j = 0; j < 3; ++j) {
        LFactorReport::Pairing p;
        p.partner = j + 1;
        for (int v = 0; v < 3; ++v)
            if (v != j) p.forced.push_back(v);
        p.forced_square = square;
        // Exact check: every admissible (q~_k, q~_l) with q~_j ranging over mu_12 is a zero.
        const int k = p.forced[0], l = p.forced[1];
        Rational half = square == 1 ? Rational(0) : Rational(1, 4);  // q~_k with q~_k^2 = square
        p.verified = true;
        for (int root = 0; root < 2; ++root) {
            RootOfUnity qk(half + Rational(root, 2));
            // s_k q~_k = -s_l q~_l
            RootOfUnity ql = qk * RootOfUnity(Rational(signs[k] * signs[l] == 1 ? 1 : 0, 2));
            for (long a = 0; a < n; ++a) {
                std::array<RootOfUnity, 3> q;
                q[j] = RootOfUnity(Rational(a, n));
                q[k] = qk;
                q[l] = ql;
                bool pair_ok = factor_value(f, q).is_zero();
                p.verified = p.verified && pair_ok;
            }
        }
        rep.forces_q_equal_one = rep.forces_q_equal_one && square == 1 && p.verified;
        rep.pairings.push_back(p);
    }
    rep.forces_q_equal_one = rep.forces_q_equal_one && rep.mu12_irreducible == 0 && rep.solver_irreducible == 0 &&
                             rep.every_zero_has_two_unit_squares;
    return rep;
}

std::vector<LFactorReport> analyze_L_factors() {
    std::vector<LFactorReport> out;
    for (const auto& f : standard_cone_factors()) out.push_back(analyze_L_factor(f));
    return out;
}

std::vector<C4FactorReport> analyze_C4_factors() {
    // Each factor of the C4 coefficient is, up to sign, 1 + s1 S~1 + s2 S~2.
    std::vector<C4FactorReport> out;
    for (auto [s1, s2] : std::vector<std::pair<int, int>>{{-1, -1}, {1, -1}, {-1, 1}, {1, 1}}) {
        C4FactorReport rep;
        rep.s1 = s1;
        rep.s2 = s2;
        // Pinning the constant term to 1 is no loss here: its root really is 1.
        auto sols = solve_vanishing_sum(Relation({Rational(1), Rational(s1), Rational(s2)})).irreducible();
        rep.all_sixth_roots = rep.product_of_squares_is_one = rep.squares_are_cube_roots = true;
        for (const auto& s : sols.solutions) {
            rep.zeros.emplace_back(s.roots[1], s.roots[2]);
            rep.all_sixth_roots = rep.all_sixth_roots && 6 % s.roots[1].order() == 0 && 6 % s.roots[2].order() == 0;
            RootOfUnity a = s.roots[1].pow(2), b = s.roots[2].pow(2);
            rep.product_of_squares_is_one = rep.product_of_squares_is_one && (a * b).is_one();
            rep.squares_are_cube_roots = rep.squares_are_cube_roots && a.pow(3).is_one() && b.pow(3).is_one();
        }
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace kuga
