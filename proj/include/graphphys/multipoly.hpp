#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <graphphys/polynomial.hpp>

namespace graphphys {

/// Variable families, in the order used for sorting and printing.
enum class VarKind : std::uint8_t {
    S, ///< s_{jk} = p_j.p_k / mu^2, j <= k
    M, ///< M_j = m_j^2 / mu^2
    Z, ///< external-leg parameter z_j
    X, ///< Feynman parameter x_j
};

struct Variable {
    VarKind kind = VarKind::X;
    std::uint16_t i = 0;
    std::uint16_t j = 0;

    static Variable x(unsigned i) { return {VarKind::X, static_cast<std::uint16_t>(i), 0}; }
    static Variable z(unsigned i) { return {VarKind::Z, static_cast<std::uint16_t>(i), 0}; }
    static Variable s(unsigned a, unsigned b);
    static Variable mass(unsigned i) { return {VarKind::M, static_cast<std::uint16_t>(i), 0}; }

    /// x3, z1, s1_2, M4
    std::string name() const;
    auto operator<=>(const Variable &) const = default;
};

/// Sorted (variable, exponent) list with positive exponents.
using Monomial = std::vector<std::pair<Variable, unsigned>>;

unsigned degree(const Monomial &m);
unsigned degree_in(const Monomial &m, VarKind kind);

/// Integer polynomial over Feynman, leg, momentum and mass symbols.
class MultivariatePolynomial {
public:
    MultivariatePolynomial() = default;
    static MultivariatePolynomial constant(Coefficient c);
    static MultivariatePolynomial variable(Variable v);
    static MultivariatePolynomial monomial(Monomial m, Coefficient c = 1);
    /// Reads the printed form back, e.g. "x1*x2 - 2*s1_1*x3^2 + 4".
    static MultivariatePolynomial parse(std::string_view text);

    const std::map<Monomial, Coefficient> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Coefficient coefficient(const Monomial &m) const;

    MultivariatePolynomial &operator+=(const MultivariatePolynomial &o);
    MultivariatePolynomial &operator-=(const MultivariatePolynomial &o);
    friend MultivariatePolynomial operator+(MultivariatePolynomial a, const MultivariatePolynomial &b) { return a += b; }
    friend MultivariatePolynomial operator-(MultivariatePolynomial a, const MultivariatePolynomial &b) { return a -= b; }
    friend MultivariatePolynomial operator*(const MultivariatePolynomial &a, const MultivariatePolynomial &b);
    friend MultivariatePolynomial operator*(Coefficient c, const MultivariatePolynomial &a);
    bool operator==(const MultivariatePolynomial &o) const = default;

    /// Quotient of an exact division; InvalidArgument when a remainder is left.
    MultivariatePolynomial exact_divide(const MultivariatePolynomial &d) const;

    /// Terms whose degree in kind equals d.
    MultivariatePolynomial part_of_degree(VarKind kind, unsigned d) const;
    /// Every term has degree d in kind.
    bool is_homogeneous(VarKind kind, unsigned d) const;
    /// Every term has all exponents of this kind <= 1 and unit coefficient.
    bool is_multilinear_unit(VarKind kind) const;
    /// Coefficient polynomial of the given monomial in one kind (e.g. of z1*z2).
    MultivariatePolynomial coefficient_of(VarKind kind, const Monomial &m) const;

    MultivariatePolynomial substitute(Variable v, const MultivariatePolynomial &value) const;
    /// x_1...x_m P(1/x_1, ..., 1/x_m) for P multilinear in x_1..x_m.
    MultivariatePolynomial invert_x(unsigned m) const;

    double evaluate(const std::function<double(Variable)> &value) const;
    /// Graded lexicographic, kinds ordered s, M, z, x and indices ascending.
    std::string to_string() const;

private:
    void add_term(const Monomial &m, Coefficient c);
    std::map<Monomial, Coefficient> terms_;
};

/// Graded lexicographic "comes first" ordering used by to_string.
bool graded_lex_before(const Monomial &a, const Monomial &b);
Monomial multiply(const Monomial &a, const Monomial &b);

/// Exact determinant by Laplace expansion memoised over column subsets (no division).
MultivariatePolynomial determinant(const std::vector<std::vector<MultivariatePolynomial>> &m);

} // namespace graphphys
