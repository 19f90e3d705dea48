#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace parafield {

using BigInt = boost::multiprecision::cpp_int;

/// Exact polynomial in the parastatistics order p.
///
/// Coefficients are stored in ascending powers with trailing zeros stripped,
/// so the zero polynomial has no coefficients and equality is structural.
class PPolynomial {
public:
    PPolynomial() = default;
    explicit PPolynomial(std::vector<BigInt> ascending);
    PPolynomial(std::initializer_list<long long> ascending);

    static PPolynomial constant(const BigInt& c);
    static PPolynomial monomial(const BigInt& c, std::size_t degree);
    /// p (p-1) ... (p-k+1); the empty product for k = 0.
    static PPolynomial falling_factorial(std::size_t k);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(std::size_t power) const;
    BigInt leading() const;

    BigInt operator()(const BigInt& p) const;

    PPolynomial& operator+=(const PPolynomial& rhs);
    PPolynomial& operator-=(const PPolynomial& rhs);
    PPolynomial& operator*=(const PPolynomial& rhs);
    PPolynomial& operator*=(const BigInt& scalar);

    friend PPolynomial operator+(PPolynomial lhs, const PPolynomial& rhs) { return lhs += rhs; }
    friend PPolynomial operator-(PPolynomial lhs, const PPolynomial& rhs) { return lhs -= rhs; }
    friend PPolynomial operator*(PPolynomial lhs, const PPolynomial& rhs) { return lhs *= rhs; }
    friend PPolynomial operator*(PPolynomial lhs, const BigInt& rhs) { return lhs *= rhs; }
    friend PPolynomial operator*(const BigInt& lhs, PPolynomial rhs) { return rhs *= lhs; }
    PPolynomial operator-() const;

    friend bool operator==(const PPolynomial&, const PPolynomial&) = default;

    /// Expanded form in descending powers, e.g. "-p^3+6p^2-4p". Zero renders as "0".
    std::string to_string() const;

    /// LaTeX form with the lowest power of p pulled out and the remaining
    /// factor in ascending powers, e.g. "p(2-p)" or "-p(4-6p+p^2)".
    std::string to_latex() const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

} // namespace parafield
