#include "kuga/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace kuga {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

std::vector<Integer> poly_divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    // den is monic; exact division is guaranteed by the caller.
    std::size_t dn = den.size() - 1;
    std::vector<Integer> q(num.size() - dn, Integer(0));
    for (std::size_t k = num.size(); k-- > dn;) {
        Integer c = num[k];
        q[k - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
    }
    return q;
}

void check_conductor(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
    if (n > Cyclotomic::kMaxConductor)
        throw std::domain_error("cyclotomic conductor " + std::to_string(n) + " exceeds cap of " +
                                std::to_string(Cyclotomic::kMaxConductor));
}

// Reduce a rational polynomial modulo the monic Phi_n in place and trim it to phi(n) entries.
void reduce_mod_phi(std::vector<Rational>& p, int n) {
    const auto& phi = cyclotomic_polynomial(n);
    std::size_t d = phi.size() - 1;
    for (std::size_t k = p.size(); k-- > d;) {
        if (p[k] == 0) continue;
        Rational c = p[k];
        for (std::size_t j = 0; j <= d; ++j) p[k - d + j] -= c * Rational(phi[j]);
    }
    p.resize(d, Rational(0));
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Integer>> cache;
    check_conductor(n);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<Integer> p(n + 1, Integer(0));
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs) : conductor_(conductor) {
    check_conductor(conductor);
    coeffs_ = std::move(coeffs);
    reduce_mod_phi(coeffs_, conductor_);
}

Cyclotomic Cyclotomic::zeta(int conductor, long k) {
    check_conductor(conductor);
    long e = ((k % conductor) + conductor) % conductor;
    std::vector<Rational> p(e + 1, Rational(0));
    p[e] = 1;
    return Cyclotomic(conductor, std::move(p));
}

Cyclotomic Cyclotomic::from_root(const RootOfUnity& z) {
    long q = z.order();
    if (q > kMaxConductor) check_conductor(static_cast<int>(std::min<long>(q, kMaxConductor + 1)));
    long p = numerator(z.exponent()).convert_to<long>();
    return zeta(static_cast<int>(q), p);
}

Cyclotomic Cyclotomic::from_gaussian(const GaussianRational& g) {
    if (g.im() == 0) return Cyclotomic(g.re());
    return Cyclotomic(4, {g.re(), g.im()});
}

Cyclotomic Cyclotomic::promoted(int target) const {
    if (target == conductor_) return *this;
    if (target % conductor_ != 0)
        throw std::invalid_argument("promotion target must be a multiple of the conductor");
    int step = target / conductor_;
    std::vector<Rational> p(step * (coeffs_.size() - 1) + 1, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
    return Cyclotomic(target, std::move(p));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        RootOfUnity z(Rational(static_cast<long>(k)) / Rational(conductor_));
        acc += to_double(coeffs_[k]) * z.to_complex();
    }
    return acc;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    int m = std::lcm(conductor_, o.conductor_);
    check_conductor(m);
    Cyclotomic a = promoted(m);
    Cyclotomic b = o.promoted(m);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] += b.coeffs_[k];
    return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    int m = std::lcm(conductor_, o.conductor_);
    check_conductor(m);
    Cyclotomic a = promoted(m);
    Cyclotomic b = o.promoted(m);
    std::vector<Rational> p(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return *this = Cyclotomic(m, std::move(p));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic element");
    // Solve x * c = 1 where multiplication by x is a phi(M) x phi(M) rational matrix.
    const std::size_t n = coeffs_.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        Cyclotomic col = *this * zeta(conductor_, static_cast<long>(j));
        for (std::size_t i = 0; i < n; ++i) a[i][j] = col.coeffs_[i];
    }
    a[0][n] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw std::logic_error("singular multiplication matrix in cyclotomic field");
        std::swap(a[c], a[piv]);
        Rational inv = 1 / a[c][c];
        for (auto& v : a[c]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<Rational> sol(n);
    for (std::size_t i = 0; i < n; ++i) sol[i] = a[i][n];
    return Cyclotomic(conductor_, std::move(sol));
}

Cyclotomic Cyclotomic::conj() const {
    // zeta^k -> zeta^{-k}
    std::vector<Rational> p(conductor_, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        p[(conductor_ - static_cast<int>(k)) % conductor_] += coeffs_[k];
    return Cyclotomic(conductor_, std::move(p));
}

Cyclotomic Cyclotomic::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Cyclotomic result(1), base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

bool cyclotomic_is_zero(const Cyclotomic& x) { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) {
    bool first = true;
    for (std::size_t k = 0; k < x.coefficients().size(); ++k) {
        const Rational& c = x.coefficients()[k];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        if (k > 0) os << "*z" << x.conductor() << "^" << k;
    }
    if (first) os << "0";
    return os;
}

}  // namespace kuga
