#include "kuga/cones.hpp"

#include <cctype>
#include <numbers>
#include <stdexcept>

namespace kuga {

Eigen::MatrixXi Cone::coordinate_map() const {
    Eigen::MatrixXi p(unbounded.rows() + bounded.rows(), static_cast<Eigen::Index>(entries.size()));
    p << unbounded, bounded;
    return p;
}

namespace {

Eigen::MatrixXi rows(std::initializer_list<std::initializer_list<int>> data, int width) {
    Eigen::MatrixXi m(static_cast<Eigen::Index>(data.size()), width);
    Eigen::Index i = 0;
    for (const auto& r : data) {
        Eigen::Index j = 0;
        for (int v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

std::vector<Cone> build_catalog() {
    std::vector<Cone> cones;
    auto add = [&](std::string name, std::vector<std::array<int, 3>> gens, int rank, std::vector<int> entries,
                   Eigen::MatrixXi t, Eigen::MatrixXi s) {
        Cone c;
        c.name = std::move(name);
        c.generators = std::move(gens);
        c.rank = rank;
        c.dimension = static_cast<int>(c.generators.size());
        c.entries = std::move(entries);
        c.unbounded = std::move(t);
        c.bounded = s.size() == 0 ? Eigen::MatrixXi(0, static_cast<Eigen::Index>(c.entries.size())) : std::move(s);
        cones.push_back(std::move(c));
    };

    add("1", {{1, 0, 0}}, 1, {0}, rows({{1}}, 1), Eigen::MatrixXi(0, 1));

    // entries (11, 22, 12)
    add("1+1", {{1, 0, 0}, {0, 1, 0}}, 2, {0, 1, 3}, rows({{1, 0, 0}, {0, 1, 0}}, 3), rows({{0, 0, 1}}, 3));
    add("K3", {{1, 0, 0}, {0, 1, 0}, {1, -1, 0}}, 2, {0, 1, 3},
        rows({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}}, 3), Eigen::MatrixXi(0, 3));

    // entries (11, 22, 33, 12, 13, 23)
    const std::vector<int> all{0, 1, 2, 3, 4, 5};
    add("1+1+1", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3, all,
        rows({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}, 6),
        rows({{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}, 6));
    add("K3+1", {{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {0, 0, 1}}, 3, all,
        rows({{1, 0, 0, 1, 0, 0}, {0, 1, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, -1, 0, 0}}, 6),
        rows({{0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}, 6));
    add("C4", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, 3, all,
        rows({{1, 0, 0, 0, 0, -1}, {0, 1, 0, 0, -1, 0}, {0, 0, 1, -1, 0, 0}, {0, 0, 0, 0, 0, 1}}, 6),
        rows({{0, 0, 0, 1, 0, -1}, {0, 0, 0, 0, 1, -1}}, 6));
    add("K4-1", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}}, 3, all,
        rows({{1, 0, 0, 1, 1, 0},
              {0, 1, 0, 1, 0, 0},
              {0, 0, 1, 0, 1, 0},
              {0, 0, 0, -1, 0, 0},
              {0, 0, 0, 0, -1, 0}},
             6),
        rows({{0, 0, 0, 0, 0, 1}}, 6));
    add("K4", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}}, 3, all,
        rows({{1, 0, 0, 1, 1, 0},
              {0, 1, 0, 1, 0, 1},
              {0, 0, 1, 0, 1, 1},
              {0, 0, 0, -1, 0, 0},
              {0, 0, 0, 0, -1, 0},
              {0, 0, 0, 0, 0, -1}},
             6),
        Eigen::MatrixXi(0, 6));
    return cones;
}

}  // namespace

const std::vector<Cone>& cone_catalog() {
    static const std::vector<Cone> catalog = build_catalog();
    return catalog;
}

const Cone& cone_by_name(const std::string& name) {
    std::string key = name;
    // Accept a few spellings: "sigma_{K3+1}", "K_3+1", "k3+1".
    for (const char* prefix : {"sigma_", "sigma"})
        if (key.rfind(prefix, 0) == 0) key = key.substr(std::string(prefix).size());
    std::string norm;
    for (char ch : key)
        if (ch != '{' && ch != '}' && ch != '_') norm += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (const auto& c : cone_catalog())
        if (c.name == norm) return c;
    throw std::invalid_argument("unknown cone '" + name + "'");
}

int generic_rank(const Cone& c) {
    QMatrix sum = QMatrix::Zero(3, 3);
    for (const auto& l : c.generators)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) sum(i, j) += Rational(l[i] * l[j]);
    return static_cast<int>(exact_rank<Rational>(sum));
}

BoundaryCoords boundary_coords(const Cone& cone, const CMatrix& tau) {
    if (tau.rows() != 3 || tau.cols() != 3) throw std::invalid_argument("boundary coordinates need genus 3");
    Eigen::MatrixXi p = cone.coordinate_map();
    const std::complex<double> two_pi_i(0, 2 * std::numbers::pi);
    auto coord = [&](Eigen::Index row) {
        std::complex<double> x = 0;
        for (std::size_t j = 0; j < cone.entries.size(); ++j) {
            auto [r, c] = kQEntries[cone.entries[j]];
            x += static_cast<double>(p(row, static_cast<Eigen::Index>(j))) * tau(r, c);
        }
        return std::exp(two_pi_i * x);
    };
    BoundaryCoords out;
    for (Eigen::Index i = 0; i < cone.unbounded.rows(); ++i) out.T.push_back(coord(i));
    for (Eigen::Index i = 0; i < cone.bounded.rows(); ++i) out.S.push_back(coord(cone.unbounded.rows() + i));
    for (int e = 0; e < 6; ++e) {
        bool used = false;
        for (int u : cone.entries) used = used || u == e;
        if (!used) out.moduli.push_back(tau(kQEntries[e].first, kQEntries[e].second));
    }
    return out;
}

QMatrix inverse_coordinate_map(const Cone& cone) {
    return exact_inverse<Rational>(to_rational(Eigen::MatrixXi(cone.coordinate_map())));
}

CMatrix tau_from_log_coords(const Cone& cone, const std::vector<std::complex<double>>& log_coords,
                            const std::vector<std::complex<double>>& moduli) {
    const std::size_t n = cone.entries.size();
    if (log_coords.size() != n) throw std::invalid_argument("wrong number of log-coordinates");
    if (moduli.size() != 6 - n) throw std::invalid_argument("wrong number of moduli entries");
    Eigen::MatrixXd pinv = to_double(inverse_coordinate_map(cone));
    CMatrix tau = CMatrix::Zero(3, 3);
    std::vector<bool> used(6, false);
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> v = 0;
        for (std::size_t k = 0; k < n; ++k)
            v += pinv(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) * log_coords[k];
        auto [r, c] = kQEntries[cone.entries[j]];
        tau(r, c) = tau(c, r) = v;
        used[cone.entries[j]] = true;
    }
    std::size_t m = 0;
    for (int e = 0; e < 6; ++e) {
        if (used[e]) continue;
        auto [r, c] = kQEntries[e];
        tau(r, c) = tau(c, r) = moduli[m++];
    }
    return tau;
}

std::array<Rational, 6> MonomialExponents::q_exponents() const { return {a[0], a[1], a[2], b[2], b[1], b[0]}; }

MonomialExponents monomial_exponents(const Characteristic& c, const std::array<int, 3>& n) {
    if (c.genus() != 3) throw std::invalid_argument("monomial exponents are defined for genus 3");
    std::array<Rational, 3> m;
    for (int i = 0; i < 3; ++i) m[i] = Rational(n[i]) + Rational(c.eps[i], 2);
    MonomialExponents out;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        out.a[i] = m[i] * m[i] / 2;
        out.b[i] = m[j] * m[k];
    }
    return out;
}

std::vector<Rational> cone_valuation(const Cone& cone, const Characteristic& c, const std::array<int, 3>& n) {
    // If x = P log(q) then q^v = exp(v . log q) = exp((P^{-T} v) . x).
    static thread_local std::string cached_name;
    static thread_local QMatrix cached_pinv_t;
    if (cached_name != cone.name) {
        cached_pinv_t = inverse_coordinate_map(cone).transpose();
        cached_name = cone.name;
    }
    auto q = monomial_exponents(c, n).q_exponents();
    QVector v(static_cast<Eigen::Index>(cone.entries.size()));
    for (std::size_t j = 0; j < cone.entries.size(); ++j) v(static_cast<Eigen::Index>(j)) = q[cone.entries[j]];
    std::vector<Rational> out(cone.unbounded.rows());
    for (Eigen::Index i = 0; i < cone.unbounded.rows(); ++i) {
        Rational s = 0;
        for (Eigen::Index k = 0; k < v.size(); ++k) s += cached_pinv_t(i, k) * v(k);
        out[i] = s;
    }
    return out;
}

MinimalValuation minimal_valuations(const Cone& cone, const Characteristic& c, int box) {
    if (box < 2) throw std::invalid_argument("box must be at least 2");
    std::vector<std::pair<std::array<int, 3>, std::vector<Rational>>> all;
    for (int a = -box; a <= box; ++a)
        for (int b = -box; b <= box; ++b)
            for (int d = -box; d <= box; ++d) {
                std::array<int, 3> n{a, b, d};
                all.emplace_back(n, cone_valuation(cone, c, n));
            }
    MinimalValuation out;
    out.minimum = all.front().second;
    for (const auto& [n, v] : all)
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] < out.minimum[i]) out.minimum[i] = v[i];
    for (const auto& [n, v] : all)
        if (v == out.minimum) out.argmin.push_back(n);
    return out;
}

ThetaNullLot theta_null_lowest_exponents(const Cone& cone, int box) {
    ThetaNullLot out;
    out.exponents.assign(cone.unbounded.rows(), Rational(0));
    for (const auto& c : even_characteristics(3)) {
        auto mv = minimal_valuations(cone, c, box);
        out.unique = out.unique && mv.unique_lowest_term();
        for (std::size_t i = 0; i < mv.minimum.size(); ++i) out.exponents[i] += mv.minimum[i];
    }
    return out;
}

}  // namespace kuga
