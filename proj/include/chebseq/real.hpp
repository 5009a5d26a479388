#pragma once

#include <mpfr.h>

#include <string>

#include "chebseq/integer.hpp"

namespace chebseq {

/// Thin RAII wrapper over an mpfr_t at fixed 256-bit precision (roughly
/// 77 significant decimal digits); just the operations the statistics
/// module needs.
class Real {
public:
    static constexpr mpfr_prec_t kPrecision = 256;

    Real() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }
    explicit Real(long x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }
    explicit Real(double x) : Real() { mpfr_set_d(v_, x, MPFR_RNDN); }
    explicit Real(const Integer& x) : Real() { mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    Real(const Real& o) : Real() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept : Real() { mpfr_swap(v_, o.v_); }
    Real& operator=(Real o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real euler_gamma() {
        Real r;
        mpfr_const_euler(r.v_, MPFR_RNDN);
        return r;
    }

    Real operator+(const Real& o) const { return binop(mpfr_add, o); }
    Real operator-(const Real& o) const { return binop(mpfr_sub, o); }
    Real operator*(const Real& o) const { return binop(mpfr_mul, o); }
    Real operator/(const Real& o) const { return binop(mpfr_div, o); }
    Real operator-() const {
        Real r;
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real sqrt() const { return unop(mpfr_sqrt); }
    Real log() const { return unop(mpfr_log); }
    Real exp() const { return unop(mpfr_exp); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Decimal string with the given number of significant digits.
    std::string str(int digits = 30) const;

    const mpfr_t& raw() const { return v_; }

private:
    using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using UnOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
    Real binop(BinOp f, const Real& o) const {
        Real r;
        f(r.v_, v_, o.v_, MPFR_RNDN);
        return r;
    }
    Real unop(UnOp f) const {
        Real r;
        f(r.v_, v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

inline std::string Real::str(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace chebseq
