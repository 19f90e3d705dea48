#include "parafield/polynomial.hpp"

#include <algorithm>

namespace parafield {

namespace {

std::string power_of_p(std::size_t power, bool latex) {
    if (power == 0) {
        return {};
    }
    if (power == 1) {
        return "p";
    }
    const auto exponent = std::to_string(power);
    if (latex && exponent.size() > 1) {
        return "p^{" + exponent + "}";
    }
    return "p^" + exponent;
}

// One signed monomial: "+6p^2", "-p", "-4". `first` suppresses a leading '+'.
std::string monomial_text(const BigInt& c, std::size_t power, bool first, bool latex) {
    std::string out;
    if (c < 0) {
        out += '-';
    } else if (!first) {
        out += '+';
    }
    const BigInt magnitude = boost::multiprecision::abs(c);
    if (power == 0 || magnitude != 1) {
        out += magnitude.str();
    }
    out += power_of_p(power, latex);
    return out;
}

} // namespace

PPolynomial::PPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
    normalize();
}

PPolynomial::PPolynomial(std::initializer_list<long long> ascending) {
    coeffs_.reserve(ascending.size());
    for (long long c : ascending) {
        coeffs_.emplace_back(c);
    }
    normalize();
}

PPolynomial PPolynomial::constant(const BigInt& c) {
    return PPolynomial(std::vector<BigInt>{c});
}

PPolynomial PPolynomial::monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> coeffs(degree + 1);
    coeffs[degree] = c;
    return PPolynomial(std::move(coeffs));
}

PPolynomial PPolynomial::falling_factorial(std::size_t k) {
    PPolynomial result = constant(1);
    for (std::size_t i = 0; i < k; ++i) {
        result *= PPolynomial(std::vector<BigInt>{-BigInt(i), 1});
    }
    return result;
}

BigInt PPolynomial::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

BigInt PPolynomial::leading() const {
    return coeffs_.empty() ? BigInt(0) : coeffs_.back();
}

BigInt PPolynomial::operator()(const BigInt& p) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * p + *it;
    }
    return acc;
}

PPolynomial& PPolynomial::operator+=(const PPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

PPolynomial& PPolynomial::operator-=(const PPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

PPolynomial& PPolynomial::operator*=(const PPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> product(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            product[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(product);
    normalize();
    return *this;
}

PPolynomial& PPolynomial::operator*=(const BigInt& scalar) {
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    normalize();
    return *this;
}

PPolynomial PPolynomial::operator-() const {
    PPolynomial out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

std::string PPolynomial::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t power = coeffs_.size(); power-- > 0;) {
        if (coeffs_[power] != 0) {
            out += monomial_text(coeffs_[power], power, out.empty(), false);
        }
    }
    return out;
}

std::string PPolynomial::to_latex() const {
    if (is_zero()) {
        return "0";
    }
    const auto lowest = static_cast<std::size_t>(
        std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }) -
        coeffs_.begin());
    std::vector<BigInt> rest(coeffs_.begin() + static_cast<std::ptrdiff_t>(lowest), coeffs_.end());

    std::string out;
    if (rest.front() < 0) {
        out += '-';
        for (auto& c : rest) {
            c = -c;
        }
    }
    out += power_of_p(lowest, true);

    if (rest.size() == 1) {
        if (rest.front() != 1 || lowest == 0) {
            // Bare integer factor, e.g. "3p^2" or "5".
            out.insert(out.size() - power_of_p(lowest, true).size(), rest.front().str());
        }
        return out;
    }
    std::string factor;
    for (std::size_t power = 0; power < rest.size(); ++power) {
        if (rest[power] != 0) {
            factor += monomial_text(rest[power], power, factor.empty(), true);
        }
    }
    return out + "(" + factor + ")";
}

void PPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

} // namespace parafield
