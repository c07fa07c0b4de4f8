#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace graphphys {

using Coefficient = std::int64_t;

/// Checked integer arithmetic; TooLarge on overflow.
Coefficient checked_add(Coefficient a, Coefficient b);
Coefficient checked_mul(Coefficient a, Coefficient b);

/// Dense integer polynomial in one variable; coefficient i multiplies t^i.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Coefficient> coefficients);
    static UnivariatePolynomial constant(Coefficient c);
    /// c t^k
    static UnivariatePolynomial monomial(std::size_t k, Coefficient c = 1);

    const std::vector<Coefficient> &coefficients() const noexcept { return c_; }
    Coefficient coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    UnivariatePolynomial &operator+=(const UnivariatePolynomial &o);
    UnivariatePolynomial &operator-=(const UnivariatePolynomial &o);
    friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial &b) { return a += b; }
    friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial &b) { return a -= b; }
    friend UnivariatePolynomial operator*(const UnivariatePolynomial &a, const UnivariatePolynomial &b);
    bool operator==(const UnivariatePolynomial &o) const = default;

    UnivariatePolynomial pow(unsigned k) const;
    /// p(a t + b)
    UnivariatePolynomial substitute_linear(Coefficient a, Coefficient b) const;

    double evaluate(double t) const;
    Coefficient evaluate(Coefficient t) const;
    /// Highest degree first, e.g. "q^2 - q".
    std::string to_string(const std::string &variable) const;

private:
    void trim();
    std::vector<Coefficient> c_;
};

/// Sparse integer polynomial Σ c_ij x^i y^j.
class BivariatePolynomial {
public:
    using Exponents = std::pair<unsigned, unsigned>;

    BivariatePolynomial() = default;
    static BivariatePolynomial constant(Coefficient c);
    static BivariatePolynomial monomial(unsigned i, unsigned j, Coefficient c = 1);

    const std::map<Exponents, Coefficient> &terms() const noexcept { return terms_; }
    Coefficient coefficient(unsigned i, unsigned j) const;
    bool is_zero() const noexcept { return terms_.empty(); }

    BivariatePolynomial &operator+=(const BivariatePolynomial &o);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial &b) { return a += b; }
    friend BivariatePolynomial operator*(const BivariatePolynomial &a, const BivariatePolynomial &b);
    bool operator==(const BivariatePolynomial &o) const = default;

    double evaluate(double x, double y) const;
    Coefficient evaluate(Coefficient x, Coefficient y) const;
    /// Graded lexicographic, x before y: "x^3 + x^2 + x + y".
    std::string to_string() const;

private:
    void add_term(Exponents e, Coefficient c);
    std::map<Exponents, Coefficient> terms_;
};

} // namespace graphphys
