#include "kuga/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace kuga {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void write(std::ostringstream& os, const Json& j, int indent, int depth) {
    const bool pretty = indent >= 0;
    auto newline = [&](int d) {
        if (pretty) os << '\n' << std::string(static_cast<std::size_t>(d * indent), ' ');
    };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ',';
                first = false;
                newline(depth + 1);
                os << Json(it.key()).dump() << (pretty ? ": " : ":");
                write(os, it.value(), indent, depth + 1);
            }
            newline(depth);
            os << '}';
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            // Short arrays of scalars stay on one line; matrices read better that way.
            bool flat = j.size() <= 8;
            for (const auto& e : j) flat = flat && !e.is_structured();
            os << '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << (flat && pretty ? ", " : ",");
                if (!flat) newline(depth + 1);
                write(os, j[i], indent, depth + 1);
            }
            if (!flat) newline(depth);
            os << ']';
            return;
        }
        case Json::value_t::number_float: {
            const double x = j.get<double>();
            if (std::isfinite(x))
                os << format_double(x);
            else
                os << '"' << format_double(x) << '"';
            return;
        }
        default:
            os << j.dump();
    }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
    std::ostringstream os;
    write(os, j, indent, 0);
    return os.str();
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json rational_json(const Rational& x) { return to_string(x); }

Json integer_json(const Integer& x) {
    static const Integer lo(std::numeric_limits<long long>::min());
    static const Integer hi(std::numeric_limits<long long>::max());
    if (x >= lo && x <= hi) return x.convert_to<long long>();
    return x.str();
}

Json gaussian_json(const GaussianRational& x) {
    return Json::array({integer_json(numerator(x.re())), integer_json(denominator(x.re())),
                        integer_json(numerator(x.im())), integer_json(denominator(x.im()))});
}

namespace {

template <class M, class F>
Json rows_json(const M& m, F f) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(f(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

template <class T>
std::string streamed(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

Json pairs_json(const std::vector<std::pair<int, int>>& v) {
    Json out = Json::array();
    for (auto [a, b] : v) out.push_back(Json::array({a, b}));
    return out;
}

Json rationals_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rational_json(x));
    return out;
}

Json roots_json(const std::vector<RootOfUnity>& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(rational_json(z.exponent()));
    return out;
}

}  // namespace

Json matrix_json(const CMatrix& m) { return rows_json(m, [](std::complex<double> z) { return complex_json(z); }); }
Json matrix_json(const QMatrix& m) { return rows_json(m, [](const Rational& x) { return rational_json(x); }); }
Json matrix_json(const ZMatrix& m) { return rows_json(m, [](const Integer& x) { return integer_json(x); }); }
Json matrix_json(const GMatrix& m) { return rows_json(m, [](const GaussianRational& x) { return gaussian_json(x); }); }
Json matrix_json(const KMatrix& m) { return rows_json(m, [](const Cyclotomic& x) { return Json(streamed(x)); }); }

Json to_json(const ThetaValue& v) {
    return Json{{"value", complex_json(v.value)},
                {"tail_bound", v.tail_bound},
                {"rounding_bound", v.rounding_bound},
                {"radius", v.radius_used}};
}

Json to_json(const MinimalValuation& v) {
    Json argmin = Json::array();
    for (const auto& n : v.argmin) argmin.push_back(Json::array({n[0], n[1], n[2]}));
    return Json{{"minimum", rationals_json(v.minimum)}, {"argmin", argmin}, {"unique", v.unique_lowest_term()}};
}

Json to_json(const LotReport& r) {
    Json samples = Json::array();
    for (const auto& s : r.samples)
        samples.push_back(Json{{"im_t", s.im_t}, {"ratio", complex_json(s.ratio)}, {"deviation", s.deviation}});
    return Json{{"cone", r.cone},
                {"monomial", rationals_json(r.monomial)},
                {"predicted", complex_json(r.predicted)},
                {"samples", samples},
                {"monotone", r.monotone},
                {"pass", r.pass}};
}

Json to_json(const SolutionSet& s) {
    Json out = Json::array();
    for (const auto& sol : s.solutions) {
        Json blocks = Json::array();
        for (const auto& b : sol.partition) blocks.push_back(b);
        out.push_back(Json{{"exponents", roots_json(sol.roots)}, {"irreducible", sol.irreducible}, {"blocks", blocks}});
    }
    return out;
}

Json to_json(const MannSolution& s) {
    Json families = Json::array();
    for (const auto& f : s.families) {
        Json blocks = Json::array();
        for (const auto& b : f.blocks) {
            Json sols = Json::array();
            for (const auto& v : b.irreducible) sols.push_back(roots_json(v));
            blocks.push_back(Json{{"indices", b.indices}, {"irreducible_solutions", sols}});
        }
        families.push_back(Json{{"blocks", blocks}});
    }
    return Json{{"coefficients", rationals_json(s.relation.coefficients)}, {"families", families}};
}

Json to_json(const LFactorReport& r) {
    Json pairings = Json::array();
    for (const auto& p : r.pairings)
        pairings.push_back(Json{{"partner", p.partner},
                                {"forced", p.forced},
                                {"forced_square", p.forced_square},
                                {"verified", p.verified}});
    return Json{{"factor", r.factor.str()},
                {"mu12_solutions", r.mu12_solutions},
                {"mu12_irreducible", r.mu12_irreducible},
                {"solver_irreducible", r.solver_irreducible},
                {"every_zero_has_two_unit_squares", r.every_zero_has_two_unit_squares},
                {"pairings", pairings},
                {"forces_q_equal_one", r.forces_q_equal_one}};
}

Json to_json(const C4FactorReport& r) {
    Json zeros = Json::array();
    for (const auto& [a, b] : r.zeros) zeros.push_back(Json::array({rational_json(a.exponent()), rational_json(b.exponent())}));
    return Json{{"signs", Json::array({r.s1, r.s2})},
                {"zeros", zeros},
                {"all_sixth_roots", r.all_sixth_roots},
                {"product_of_squares_is_one", r.product_of_squares_is_one},
                {"squares_are_cube_roots", r.squares_are_cube_roots}};
}

Json to_json(const FamilyComparison& c) {
    return Json{{"difference", matrix_json(c.difference)},
                {"shift", gaussian_json(c.shift)},
                {"is_parameter_shift", c.is_parameter_shift}};
}

Json to_json(const VanishingReport& r) {
    Json samples = Json::array();
    for (const auto& s : r.samples)
        samples.push_back(Json{{"t", complex_json(s.t)},
                               {"vanishing_abs", s.vanishing_abs},
                               {"vanishing_bound", s.vanishing_bound},
                               {"other_min_abs", s.other_min_abs},
                               {"other_argmin", s.other_argmin}});
    return Json{{"u", gaussian_json(r.u)}, {"characteristic", vanishing_characteristic().str()},
                {"samples", samples}, {"pass", r.pass}};
}

Json to_json(const RelationsReport& r) {
    return Json{{"a", rational_json(r.a)},
                {"b", rational_json(r.b)},
                {"tau12_is_half_tau23_squared", r.tau12_is_half_tau23_squared},
                {"gamma_exponent_matches", r.gamma_exponent_matches},
                {"tau13_squared_is_minus_tau23_squared", r.tau13_squared_is_minus_tau23_squared},
                {"r12", rational_json(r.r12)},
                {"r22", rational_json(r.r22)},
                {"expected_r12", rational_json(r.expected_r12)},
                {"expected_r22", rational_json(r.expected_r22)},
                {"numeric_residual", r.numeric_residual},
                {"pass", r.pass}};
}

Json to_json(const GroupResidual& g) {
    Json members = Json::array();
    for (auto [a, b] : g.members) members.push_back(Json::array({a, b}));
    return Json{{"n1", g.n1}, {"n2", g.n2}, {"members", members}, {"sum", complex_json(g.sum)},
                {"scale", g.scale}, {"residual", g.residual}};
}

Json to_json(const FixedPartReport& r) {
    Json in_lattice = Json::array(), t_indep = Json::array();
    for (bool b : r.reference_generators_in_lattice) in_lattice.push_back(b);
    for (bool b : r.reference_generators_t_independent) t_indep.push_back(b);
    return Json{{"u", gaussian_json(r.u)},
                {"basis", matrix_json(r.basis)},
                {"degree", integer_json(r.degree)},
                {"constant_rank", r.constant_rank},
                {"axis_rank", r.axis_rank},
                {"reference_generators_in_lattice", in_lattice},
                {"reference_generators_t_independent", t_indep}};
}

Json to_json(const Check& c) { return Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }

Json to_json(const MatrixRelationsReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return Json{{"checks", checks}, {"pass", r.pass}};
}

Json to_json(const EigenRowReport& r) {
    Json rows = Json::array();
    for (const auto& e : r.rows)
        rows.push_back(Json{{"eigenvalue_exponent", e.eigen_exponent},
                            {"dimension", e.dimension},
                            {"row_in_space", e.period_row_in_space},
                            {"row_equation", e.period_row_equation},
                            {"basis", matrix_json(e.basis)}});
    return Json{{"rows", rows}, {"L_Pi_equals_Pi_M", r.L_Pi_equals_Pi_M}, {"pass", r.pass}};
}

Json to_json(const DiagonalizationReport& r) {
    return Json{{"homology_matches", pairs_json(r.homology_matches)},
                {"homology_inverse_matches", pairs_json(r.homology_inverse_matches)},
                {"unique", r.unique},
                {"involution", r.involution},
                {"plus_one_rank", r.plus_one_rank},
                {"form_matches", pairs_json(r.form_matches)},
                {"form_inverse_matches", pairs_json(r.form_inverse_matches)},
                {"form_conjugate_of_identified", r.form_conjugate_of_identified},
                {"Pi_B_matches", r.Pi_B_matches},
                {"Pi_B_block_form", r.Pi_B_block_form},
                {"pass", r.pass}};
}

Json to_json(const PathCheck& p) {
    Json out{{"name", p.name},
             {"product", matrix_json(p.product)},
             {"similitude", rational_json(p.similitude)},
             {"affine", p.affine}};
    if (p.affine) {
        out["slope"] = matrix_json(p.result.slope);
        out["offset"] = matrix_json(p.result.offset);
        out["parameter_map"] = Json{{"slope", gaussian_json(p.t_slope)}, {"offset", gaussian_json(p.t_offset)}};
    }
    out["matches"] = p.matches;
    out["lands_in_siegel_space"] = p.lands_in_siegel_space;
    out["mismatches"] = p.mismatches;
    return out;
}

Json to_json(const FinalPeriodReport& r) {
    Json conv = Json::array();
    for (const auto& c : r.pi2_conventions) conv.push_back(to_json(c));
    return Json{{"literal_first", to_json(r.literal_first)},
                {"literal_second", to_json(r.literal_second)},
                {"literal_product_is_displayed", r.literal_product_is_displayed},
                {"corrected_first", to_json(r.corrected_first)},
                {"corrected_second", to_json(r.corrected_second)},
                {"corrected_product_is_displayed", r.corrected_product_is_displayed},
                {"second_matches_pi_u", r.second_matches_pi_u},
                {"pi_u_offset_difference", matrix_json(r.pi_u_offset_difference)},
                {"Z_S_special_is_Z2", r.Z_S_special_is_Z2},
                {"pi2_conventions", conv},
                {"pass", r.pass}};
}

Json to_json(const CrosscheckReport& r) {
    Json samples = Json::array();
    for (const auto& s : r.samples)
        samples.push_back(Json{{"t", complex_json(s.t)},
                               {"characteristic", s.characteristic},
                               {"vanishing_abs", s.vanishing_abs},
                               {"literal_char_abs", s.literal_char_abs},
                               {"pi_u_abs", s.pi_u_abs},
                               {"other_min_abs", s.other_min_abs},
                               {"first_is_siegel", s.first_is_siegel},
                               {"second_is_siegel", s.second_is_siegel},
                               {"sp_relation_error", s.sp_relation_error}});
    return Json{{"samples", samples}, {"pass", r.pass}};
}

}  // namespace kuga
