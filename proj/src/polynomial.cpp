#include <graphphys/polynomial.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include <graphphys/error.hpp>

namespace graphphys {

Coefficient checked_add(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_add_overflow(a, b, &r))
        fail(ErrorCode::TooLarge, "integer coefficient overflow");
    return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_mul_overflow(a, b, &r))
        fail(ErrorCode::TooLarge, "integer coefficient overflow");
    return r;
}

namespace {

Coefficient ipow(Coefficient base, unsigned e) {
    Coefficient r = 1;
    for (unsigned i = 0; i < e; ++i)
        r = checked_mul(r, base);
    return r;
}

void append_term(std::ostringstream &out, bool first, Coefficient c, const std::string &body) {
    const Coefficient mag = c < 0 ? -c : c;
    if (first)
        out << (c < 0 ? "-" : "");
    else
        out << (c < 0 ? " - " : " + ");
    if (body.empty())
        out << mag;
    else if (mag == 1)
        out << body;
    else
        out << mag << '*' << body;
}

std::string power(const std::string &v, unsigned k) {
    if (k == 0)
        return {};
    if (k == 1)
        return v;
    return v + "^" + std::to_string(k);
}

} // namespace

UnivariatePolynomial::UnivariatePolynomial(std::vector<Coefficient> coefficients)
    : c_(std::move(coefficients)) {
    trim();
}

UnivariatePolynomial UnivariatePolynomial::constant(Coefficient c) {
    return UnivariatePolynomial(std::vector<Coefficient>{c});
}

UnivariatePolynomial UnivariatePolynomial::monomial(std::size_t k, Coefficient c) {
    std::vector<Coefficient> v(k + 1, 0);
    v[k] = c;
    return UnivariatePolynomial(std::move(v));
}

void UnivariatePolynomial::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

UnivariatePolynomial &UnivariatePolynomial::operator+=(const UnivariatePolynomial &o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] = checked_add(c_[i], o.c_[i]);
    trim();
    return *this;
}

UnivariatePolynomial &UnivariatePolynomial::operator-=(const UnivariatePolynomial &o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] = checked_add(c_[i], checked_mul(-1, o.c_[i]));
    trim();
    return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial &a, const UnivariatePolynomial &b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Coefficient> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] = checked_add(r[i + j], checked_mul(a.c_[i], b.c_[j]));
    return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::pow(unsigned k) const {
    UnivariatePolynomial r = constant(1);
    for (unsigned i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

UnivariatePolynomial UnivariatePolynomial::substitute_linear(Coefficient a, Coefficient b) const {
    const UnivariatePolynomial lin(std::vector<Coefficient>{b, a});
    UnivariatePolynomial r;
    // Horner in the substituted variable.
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * lin + constant(*it);
    return r;
}

double UnivariatePolynomial::evaluate(double t) const {
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * t + static_cast<double>(*it);
    return r;
}

Coefficient UnivariatePolynomial::evaluate(Coefficient t) const {
    Coefficient r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = checked_add(checked_mul(r, t), *it);
    return r;
}

std::string UnivariatePolynomial::to_string(const std::string &variable) const {
    if (c_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0)
            continue;
        append_term(out, first, c_[k], power(variable, static_cast<unsigned>(k)));
        first = false;
    }
    return out.str();
}

BivariatePolynomial BivariatePolynomial::constant(Coefficient c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(unsigned i, unsigned j, Coefficient c) {
    BivariatePolynomial p;
    p.add_term({i, j}, c);
    return p;
}

void BivariatePolynomial::add_term(Exponents e, Coefficient c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

Coefficient BivariatePolynomial::coefficient(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? 0 : it->second;
}

BivariatePolynomial &BivariatePolynomial::operator+=(const BivariatePolynomial &o) {
    for (const auto &[e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial &a, const BivariatePolynomial &b) {
    BivariatePolynomial r;
    for (const auto &[ea, ca] : a.terms_)
        for (const auto &[eb, cb] : b.terms_)
            r.add_term({ea.first + eb.first, ea.second + eb.second}, checked_mul(ca, cb));
    return r;
}

double BivariatePolynomial::evaluate(double x, double y) const {
    double r = 0.0;
    for (const auto &[e, c] : terms_)
        r += static_cast<double>(c) * std::pow(x, e.first) * std::pow(y, e.second);
    return r;
}

Coefficient BivariatePolynomial::evaluate(Coefficient x, Coefficient y) const {
    Coefficient r = 0;
    for (const auto &[e, c] : terms_)
        r = checked_add(r, checked_mul(c, checked_mul(ipow(x, e.first), ipow(y, e.second))));
    return r;
}

std::string BivariatePolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Exponents, Coefficient>> order(terms_.begin(), terms_.end());
    std::sort(order.begin(), order.end(), [](const auto &a, const auto &b) {
        const unsigned da = a.first.first + a.first.second;
        const unsigned db = b.first.first + b.first.second;
        if (da != db)
            return da > db;
        return a.first.first > b.first.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto &[e, c] : order) {
        std::string body = power("x", e.first);
        const std::string yp = power("y", e.second);
        if (!yp.empty())
            body = body.empty() ? yp : body + "*" + yp;
        append_term(out, first, c, body);
        first = false;
    }
    return out.str();
}

} // namespace graphphys
