#include "chebseq/poly.hpp"

#include <sstream>

namespace chebseq {

IntPolynomial IntPolynomial::constant(Integer v) {
    IntPolynomial p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

IntPolynomial IntPolynomial::variable() {
    IntPolynomial p;
    p.c_ = {Integer(0), Integer(1)};
    return p;
}

const Integer& IntPolynomial::operator[](std::size_t i) const {
    static const Integer zero(0);
    return i < c_.size() ? c_[i] : zero;
}

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPolynomial::eval(const Integer& x) const {
    Integer acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Integer> r(c_.size() + o.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& inner) const {
    IntPolynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + IntPolynomial::constant(*it);
    return acc;
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::div_rem(const IntPolynomial& divisor) const {
    if (divisor.is_zero() || divisor.c_.back() != 1)
        throw std::domain_error("div_rem: divisor must be monic");
    std::vector<Integer> rem = c_;
    const long dd = divisor.degree();
    std::vector<Integer> quot;
    if (degree() >= dd) quot.assign(degree() - dd + 1, Integer(0));
    for (long i = degree(); i >= dd; --i) {
        Integer coeff = rem[i];
        if (coeff == 0) continue;
        quot[i - dd] = coeff;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= coeff * divisor.c_[j];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    auto [q, r] = div_rem(divisor);
    if (!r.is_zero()) throw std::domain_error("divide_exact: nonzero remainder");
    return q;
}

std::string IntPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Integer& a = c_[i];
        if (a == 0) continue;
        if (!first) out << (a > 0 ? " + " : " - ");
        else if (a < 0) out << "-";
        Integer mag = abs(a);
        if (mag != 1 || i == 0) out << mag.get_str();
        if (i > 0) {
            if (mag != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

std::vector<Integer> series_divide(const std::vector<Integer>& num,
                                   const std::vector<Integer>& den,
                                   std::size_t order) {
    if (den.empty() || (den[0] != 1 && den[0] != -1))
        throw std::domain_error("series_divide: denominator must have constant term +-1");
    std::vector<Integer> q(order, Integer(0));
    for (std::size_t j = 0; j < order; ++j) {
        Integer acc = j < num.size() ? num[j] : Integer(0);
        for (std::size_t i = 1; i < den.size() && i <= j; ++i) acc -= den[i] * q[j - i];
        q[j] = den[0] == 1 ? acc : -acc;
    }
    return q;
}

}  // namespace chebseq
