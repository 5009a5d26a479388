#pragma once

#include <vector>

#include "chebseq/integer.hpp"

namespace chebseq {

/// Dense univariate polynomial over Integer, coefficients lowest degree
/// first.  The highest-degree coefficient is nonzero unless the polynomial
/// is zero (empty coefficient list).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static IntPolynomial constant(Integer v);
    static IntPolynomial variable();  // x

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Integer>& coefficients() const { return c_; }
    const Integer& operator[](std::size_t i) const;  // 0 beyond degree

    Integer eval(const Integer& x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    /// this(inner), evaluated by Horner's rule over polynomials.
    IntPolynomial compose(const IntPolynomial& inner) const;

    /// Exact division by a monic divisor; throws std::domain_error if the
    /// remainder is nonzero or the divisor is not monic.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    /// Division with remainder by a monic divisor.
    std::pair<IntPolynomial, IntPolynomial> div_rem(const IntPolynomial& divisor) const;

    std::string str(const std::string& var = "n") const;

private:
    void normalize();
    std::vector<Integer> c_;
};

/// Power-series long division num/den to the given number of coefficients.
/// Requires den[0] == 1 or -1 so the quotient stays integral.
std::vector<Integer> series_divide(const std::vector<Integer>& num,
                                   const std::vector<Integer>& den,
                                   std::size_t order);

}  // namespace chebseq
