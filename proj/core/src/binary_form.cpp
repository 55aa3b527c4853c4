#include "grassbal/binary_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grassbal {

namespace {

std::size_t coeff_count(int degree) { return degree < 0 ? 0 : static_cast<std::size_t>(degree) + 1; }

void require_same_field(const BinaryForm& a, const BinaryForm& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("forms over different fields");
}

// Univariate polynomials over F_p, low degree first, no trailing zeros.
using Univariate = std::vector<Residue>;

void trim(Univariate& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Univariate univariate_mod(Univariate f, const Univariate& g, const PrimeField& F) {
    const Residue lead_inv = F.inv(g.back());
    while (f.size() >= g.size()) {
        const Residue factor = F.mul(f.back(), lead_inv);
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            f[shift + i] = F.sub(f[shift + i], F.mul(factor, g[i]));
        }
        trim(f);
    }
    return f;
}

Univariate univariate_gcd(Univariate f, Univariate g, const PrimeField& F) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        Univariate r = univariate_mod(f, g, F);
        f = std::move(g);
        g = std::move(r);
    }
    return f;
}

}  // namespace

BinaryForm::BinaryForm(PrimeField field, int degree)
    : field_(field), degree_(degree), coeffs_(coeff_count(degree), 0) {}

BinaryForm::BinaryForm(PrimeField field, int degree, std::vector<Residue> coeffs)
    : field_(field), degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != coeff_count(degree)) {
        throw std::invalid_argument("form of degree " + std::to_string(degree) + " needs " +
                                    std::to_string(coeff_count(degree)) + " coefficients");
    }
    for (auto& c : coeffs_) c = field_.reduce(c);
}

BinaryForm BinaryForm::monomial(PrimeField field, int degree, int t_power, Residue c) {
    BinaryForm f(field, degree);
    f.set_coeff(t_power, field.reduce(c));
    return f;
}

BinaryForm BinaryForm::constant(PrimeField field, Residue c) { return monomial(field, 0, 0, c); }

Residue BinaryForm::coeff(int t_power) const {
    if (t_power < 0 || t_power > degree_) return 0;
    return coeffs_[static_cast<std::size_t>(t_power)];
}

void BinaryForm::set_coeff(int t_power, Residue c) {
    if (t_power < 0 || t_power > degree_) throw std::out_of_range("coefficient index");
    coeffs_[static_cast<std::size_t>(t_power)] = field_.reduce(c);
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

BinaryForm BinaryForm::monic() const {
    const auto lead = std::find_if(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c != 0; });
    if (lead == coeffs_.end()) return *this;
    return scaled(field_.inv(*lead));
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& rhs) {
    require_same_field(*this, rhs);
    if (degree_ != rhs.degree_) {
        throw std::invalid_argument("adding forms of degrees " + std::to_string(degree_) + " and " +
                                    std::to_string(rhs.degree_));
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], rhs.coeffs_[i]);
    return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& rhs) {
    return *this += rhs.scaled(field_.neg(1));
}

BinaryForm operator*(const BinaryForm& lhs, const BinaryForm& rhs) {
    require_same_field(lhs, rhs);
    const PrimeField& F = lhs.field();
    BinaryForm out(F, lhs.degree() + rhs.degree());
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out.coeffs_[i + j] = F.add(out.coeffs_[i + j], F.mul(lhs.coeffs_[i], rhs.coeffs_[j]));
        }
    }
    return out;
}

BinaryForm BinaryForm::scaled(Residue c) const {
    BinaryForm out = *this;
    for (auto& x : out.coeffs_) x = field_.mul(x, c);
    return out;
}

BinaryForm BinaryForm::derivative_s() const {
    BinaryForm out(field_, degree_ - 1);
    for (int k = 0; k < degree_; ++k) {
        out.coeffs_[static_cast<std::size_t>(k)] =
            field_.mul(coeff(k), field_.reduce(degree_ - k));
    }
    return out;
}

BinaryForm BinaryForm::derivative_t() const {
    BinaryForm out(field_, degree_ - 1);
    for (int k = 1; k <= degree_; ++k) {
        out.coeffs_[static_cast<std::size_t>(k - 1)] = field_.mul(coeff(k), field_.reduce(k));
    }
    return out;
}

Residue BinaryForm::eval(LinePoint x) const {
    Residue acc = 0;
    for (int k = 0; k <= degree_; ++k) {
        const Residue term = field_.mul(field_.pow(x.s, static_cast<std::uint64_t>(degree_ - k)),
                                        field_.pow(x.t, static_cast<std::uint64_t>(k)));
        acc = field_.add(acc, field_.mul(coeff(k), term));
    }
    return acc;
}

int BinaryForm::s_valuation() const {
    if (is_zero()) throw std::domain_error("valuation of the zero form");
    int v = 0;
    while (coeff(degree_ - v) == 0) ++v;
    return v;
}

int BinaryForm::t_valuation() const {
    if (is_zero()) throw std::domain_error("valuation of the zero form");
    int v = 0;
    while (coeff(v) == 0) ++v;
    return v;
}

std::string BinaryForm::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree_; ++k) {
        const Residue c = coeff(k);
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        const int se = degree_ - k;
        if (c != 1 || (se == 0 && k == 0)) os << c;
        if (se > 0) os << "s" << (se > 1 ? "^" + std::to_string(se) : "");
        if (k > 0) os << "t" << (k > 1 ? "^" + std::to_string(k) : "");
    }
    return os.str();
}

std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g) {
    require_same_field(f, g);
    if (g.is_zero()) throw std::domain_error("division by the zero form");
    const PrimeField& F = f.field();
    const int qdeg = f.degree() - g.degree();
    if (f.is_zero()) {
        if (qdeg < 0) return std::nullopt;
        return BinaryForm(F, qdeg);
    }
    if (qdeg < 0) return std::nullopt;
    const int low = g.t_valuation();
    const Residue pivot_inv = F.inv(g.coeff(low));
    BinaryForm q(F, qdeg);
    // f_{i+low} = sum_l q_l g_{i+low-l}; solve for q_i in increasing order.
    for (int i = 0; i <= qdeg; ++i) {
        Residue acc = f.coeff(i + low);
        for (int l = 0; l < i; ++l) acc = F.sub(acc, F.mul(q.coeff(l), g.coeff(i + low - l)));
        q.set_coeff(i, F.mul(acc, pivot_inv));
    }
    if (q * g == f) return q;
    return std::nullopt;
}

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
    require_same_field(f, g);
    const PrimeField& F = f.field();
    if (f.is_zero() && g.is_zero()) return BinaryForm(F, std::max(f.degree(), g.degree()));
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();

    const int s_pow = std::min(f.s_valuation(), g.s_valuation());
    const int t_pow = std::min(f.t_valuation(), g.t_valuation());

    // Strip s and t factors, then read off f(s, 1) with low s-powers first.
    auto dehomogenize = [](const BinaryForm& h) {
        const int lo = h.t_valuation();
        const int hi = h.degree() - h.s_valuation();
        Univariate u;
        for (int k = hi; k >= lo; --k) u.push_back(h.coeff(k));
        return u;
    };
    const Univariate core = univariate_gcd(dehomogenize(f), dehomogenize(g), F);
    const int core_deg = static_cast<int>(core.size()) - 1;

    BinaryForm out(F, s_pow + t_pow + core_deg);
    // s^s_pow t^t_pow * t^core_deg h(s/t): s^j in h lands at t-power t_pow + core_deg - j.
    for (int j = 0; j <= core_deg; ++j) out.set_coeff(t_pow + core_deg - j, core[static_cast<std::size_t>(j)]);
    return out.monic();
}

BinaryForm gcd(std::span<const BinaryForm> forms) {
    if (forms.empty()) return BinaryForm(PrimeField(), 0);
    BinaryForm acc = forms.front().monic();
    for (std::size_t i = 1; i < forms.size(); ++i) {
        acc = gcd(acc, forms[i]);
        if (acc.is_unit()) break;
    }
    return acc;
}

}  // namespace grassbal
