#include <graphphys/multipoly.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <sstream>

#include <graphphys/error.hpp>

namespace graphphys {

Variable Variable::s(unsigned a, unsigned b) {
    if (a > b)
        std::swap(a, b);
    return {VarKind::S, static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)};
}

std::string Variable::name() const {
    switch (kind) {
    case VarKind::X: return "x" + std::to_string(i);
    case VarKind::Z: return "z" + std::to_string(i);
    case VarKind::M: return "M" + std::to_string(i);
    case VarKind::S: return "s" + std::to_string(i) + "_" + std::to_string(j);
    }
    return "?";
}

unsigned degree(const Monomial &m) {
    unsigned d = 0;
    for (const auto &[v, e] : m)
        d += e;
    return d;
}

unsigned degree_in(const Monomial &m, VarKind kind) {
    unsigned d = 0;
    for (const auto &[v, e] : m)
        if (v.kind == kind)
            d += e;
    return d;
}

Monomial multiply(const Monomial &a, const Monomial &b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

namespace {

/// a / b when every exponent of b fits in a.
bool divide_monomial(const Monomial &a, const Monomial &b, Monomial &out) {
    out.clear();
    std::size_t j = 0;
    for (const auto &[v, e] : a) {
        if (j < b.size() && b[j].first < v)
            return false;
        if (j < b.size() && b[j].first == v) {
            if (b[j].second > e)
                return false;
            if (e > b[j].second)
                out.emplace_back(v, e - b[j].second);
            ++j;
        } else {
            out.emplace_back(v, e);
        }
    }
    return j == b.size();
}

} // namespace

bool graded_lex_before(const Monomial &a, const Monomial &b) {
    const unsigned da = degree(a), db = degree(b);
    if (da != db)
        return da > db;
    std::size_t i = 0;
    for (; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first)
            return a[i].first < b[i].first;
        if (a[i].second != b[i].second)
            return a[i].second > b[i].second;
    }
    return i < a.size() && i == b.size();
}

MultivariatePolynomial MultivariatePolynomial::constant(Coefficient c) { return monomial({}, c); }

MultivariatePolynomial MultivariatePolynomial::variable(Variable v) { return monomial({{v, 1}}); }

MultivariatePolynomial MultivariatePolynomial::monomial(Monomial m, Coefficient c) {
    MultivariatePolynomial p;
    std::sort(m.begin(), m.end());
    Monomial merged;
    for (const auto &[v, e] : m) {
        if (e == 0)
            continue;
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.emplace_back(v, e);
    }
    p.add_term(merged, c);
    return p;
}

void MultivariatePolynomial::add_term(const Monomial &m, Coefficient c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

Coefficient MultivariatePolynomial::coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

MultivariatePolynomial &MultivariatePolynomial::operator+=(const MultivariatePolynomial &o) {
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MultivariatePolynomial &MultivariatePolynomial::operator-=(const MultivariatePolynomial &o) {
    for (const auto &[m, c] : o.terms_)
        add_term(m, checked_mul(-1, c));
    return *this;
}

MultivariatePolynomial operator*(const MultivariatePolynomial &a, const MultivariatePolynomial &b) {
    MultivariatePolynomial r;
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_)
            r.add_term(multiply(ma, mb), checked_mul(ca, cb));
    return r;
}

MultivariatePolynomial operator*(Coefficient c, const MultivariatePolynomial &a) {
    MultivariatePolynomial r;
    for (const auto &[m, k] : a.terms_)
        r.add_term(m, checked_mul(c, k));
    return r;
}

namespace {

std::pair<Monomial, Coefficient> leading_term(const std::map<Monomial, Coefficient> &terms) {
    auto best = terms.begin();
    for (auto it = terms.begin(); it != terms.end(); ++it)
        if (graded_lex_before(it->first, best->first))
            best = it;
    return *best;
}

} // namespace

MultivariatePolynomial MultivariatePolynomial::exact_divide(const MultivariatePolynomial &d) const {
    if (d.is_zero())
        fail(ErrorCode::InvalidArgument, "division by the zero polynomial");
    const auto [dm, dc] = leading_term(d.terms_);
    MultivariatePolynomial quotient, rest = *this;
    Monomial qm;
    while (!rest.is_zero()) {
        const auto [rm, rc] = leading_term(rest.terms_);
        if (rc % dc != 0 || !divide_monomial(rm, dm, qm))
            fail(ErrorCode::InvalidArgument, "polynomial division is not exact");
        MultivariatePolynomial t = monomial(qm, rc / dc);
        quotient += t;
        rest -= t * d;
    }
    return quotient;
}

MultivariatePolynomial MultivariatePolynomial::part_of_degree(VarKind kind, unsigned d) const {
    MultivariatePolynomial r;
    for (const auto &[m, c] : terms_)
        if (degree_in(m, kind) == d)
            r.add_term(m, c);
    return r;
}

bool MultivariatePolynomial::is_homogeneous(VarKind kind, unsigned d) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto &t) { return degree_in(t.first, kind) == d; });
}

bool MultivariatePolynomial::is_multilinear_unit(VarKind kind) const {
    for (const auto &[m, c] : terms_) {
        if (c != 1)
            return false;
        for (const auto &[v, e] : m)
            if (v.kind == kind && e > 1)
                return false;
    }
    return true;
}

MultivariatePolynomial MultivariatePolynomial::coefficient_of(VarKind kind, const Monomial &m) const {
    MultivariatePolynomial r;
    for (const auto &[t, c] : terms_) {
        Monomial own, other;
        for (const auto &f : t)
            (f.first.kind == kind ? own : other).push_back(f);
        if (own == m)
            r.add_term(other, c);
    }
    return r;
}

MultivariatePolynomial MultivariatePolynomial::substitute(Variable v, const MultivariatePolynomial &value) const {
    MultivariatePolynomial r;
    for (const auto &[m, c] : terms_) {
        Monomial rest;
        unsigned power = 0;
        for (const auto &f : m) {
            if (f.first == v)
                power = f.second;
            else
                rest.push_back(f);
        }
        MultivariatePolynomial term = monomial(rest, c);
        for (unsigned k = 0; k < power; ++k)
            term = term * value;
        r += term;
    }
    return r;
}

MultivariatePolynomial MultivariatePolynomial::invert_x(unsigned m) const {
    MultivariatePolynomial r;
    for (const auto &[t, c] : terms_) {
        Monomial out;
        std::vector<char> present(m + 1, 0);
        for (const auto &[v, e] : t) {
            if (v.kind != VarKind::X) {
                out.emplace_back(v, e);
                continue;
            }
            if (v.i < 1 || v.i > m || e != 1)
                fail(ErrorCode::InvalidArgument, "x-inversion needs a polynomial multilinear in x1..xm");
            present[v.i] = 1;
        }
        for (unsigned i = 1; i <= m; ++i)
            if (!present[i])
                out.emplace_back(Variable::x(i), 1);
        r += monomial(out, c);
    }
    return r;
}

double MultivariatePolynomial::evaluate(const std::function<double(Variable)> &value) const {
    double total = 0.0;
    for (const auto &[m, c] : terms_) {
        double t = static_cast<double>(c);
        for (const auto &[v, e] : m)
            t *= std::pow(value(v), e);
        total += t;
    }
    return total;
}

std::string MultivariatePolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Monomial, Coefficient>> order(terms_.begin(), terms_.end());
    std::sort(order.begin(), order.end(),
              [](const auto &a, const auto &b) { return graded_lex_before(a.first, b.first); });
    std::ostringstream out;
    bool first = true;
    for (const auto &[m, c] : order) {
        const Coefficient mag = c < 0 ? -c : c;
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        std::string body;
        for (const auto &[v, e] : m) {
            if (!body.empty())
                body += '*';
            body += v.name();
            if (e > 1)
                body += "^" + std::to_string(e);
        }
        if (body.empty())
            out << mag;
        else if (mag == 1)
            out << body;
        else
            out << mag << '*' << body;
    }
    return out.str();
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                s_ += ch;
    }

    MultivariatePolynomial run() {
        if (s_.empty() || s_ == "0")
            return {};
        MultivariatePolynomial p;
        while (pos_ < s_.size()) {
            Coefficient sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (pos_ != 0) {
                error();
            }
            p += term(sign);
        }
        return p;
    }

private:
    [[noreturn]] void error() const {
        fail(ErrorCode::ParseError, "bad polynomial near position " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    unsigned number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            error();
        return static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
    }

    MultivariatePolynomial term(Coefficient sign) {
        Coefficient c = sign;
        Monomial m;
        while (true) {
            if (pos_ >= s_.size())
                error();
            char ch = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                c = checked_mul(c, static_cast<Coefficient>(number()));
            } else {
                ++pos_;
                Variable v;
                if (ch == 'x') {
                    v = Variable::x(number());
                } else if (ch == 'z') {
                    v = Variable::z(number());
                } else if (ch == 'M') {
                    v = Variable::mass(number());
                } else if (ch == 's') {
                    unsigned a = number();
                    if (pos_ >= s_.size() || s_[pos_] != '_')
                        error();
                    ++pos_;
                    v = Variable::s(a, number());
                } else {
                    --pos_;
                    error();
                }
                unsigned e = 1;
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    e = number();
                }
                m.emplace_back(v, e);
            }
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        return MultivariatePolynomial::monomial(m, c);
    }

    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace

MultivariatePolynomial MultivariatePolynomial::parse(std::string_view text) { return Parser(text).run(); }

MultivariatePolynomial determinant(const std::vector<std::vector<MultivariatePolynomial>> &m) {
    const std::size_t n = m.size();
    for (const auto &row : m)
        if (row.size() != n)
            fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    if (n > 20)
        fail(ErrorCode::TooLarge, "symbolic determinant limited to 20 rows");
    // minors[mask]: signed sum over assignments of the first popcount(mask) rows to the columns in mask.
    std::vector<MultivariatePolynomial> minors(std::size_t{1} << n);
    minors[0] = MultivariatePolynomial::constant(1);
    for (std::size_t mask = 0; mask + 1 < minors.size(); ++mask) {
        if (minors[mask].is_zero())
            continue;
        const auto row = static_cast<std::size_t>(std::popcount(mask));
        for (std::size_t c = 0; c < n; ++c) {
            if (mask >> c & 1u || m[row][c].is_zero())
                continue;
            const bool odd = std::popcount(mask >> (c + 1)) % 2 != 0;
            const MultivariatePolynomial term = m[row][c] * minors[mask];
            if (odd)
                minors[mask | std::size_t{1} << c] -= term;
            else
                minors[mask | std::size_t{1} << c] += term;
        }
        minors[mask] = {};
    }
    return minors.back();
}

} // namespace graphphys
