#include "hspoly/rational.hpp"

#include "hspoly/errors.hpp"

#include <cstdlib>

namespace hspoly {

Rational make_rational(Int num, Int den) {
    if (den == 0)
        throw error("make_rational: zero denominator");
    Rational q;
    mpq_set_num(q.backend().data(), num.backend().data());
    mpq_set_den(q.backend().data(), den.backend().data());
    mpq_canonicalize(q.backend().data());
    return q;
}

Rational parse_rational(std::string_view s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string_view::npos)
        throw parse_error("empty rational literal");
    s = s.substr(b, e - b + 1);
    const size_t slash = s.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(Int(std::string(s)));
        Int num{std::string(s.substr(0, slash))};
        Int den{std::string(s.substr(slash + 1))};
        if (den == 0)
            throw parse_error("rational literal with zero denominator: " + std::string(s));
        return make_rational(num, den);
    } catch (const std::runtime_error& ex) {
        throw parse_error("bad rational literal '" + std::string(s) + "': " + ex.what());
    }
}

std::string to_string(const Rational& q) {
    return q.str();
}

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

Int floor_int(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.backend().data(), mpq_numref(q.backend().data()), mpq_denref(q.backend().data()));
    return r;
}

Int ceil_int(const Rational& q) {
    Int r;
    mpz_cdiv_q(r.backend().data(), mpq_numref(q.backend().data()), mpq_denref(q.backend().data()));
    return r;
}

std::optional<Int> integer_ratio(const Rational& a, const Rational& b) {
    if (b == 0)
        throw error("integer_ratio: zero divisor");
    const Rational q = a / b;
    if (!is_integer(q))
        return std::nullopt;
    return numerator(q);
}

Real to_real(const Rational& q) {
    return Real(q);
}

namespace {
int g_default_digits = [] {
    if (const char* env = std::getenv("HSPOLY_DIGITS")) {
        const int d = std::atoi(env);
        if (d >= 8)
            return d;
    }
    return 64;
}();
}  // namespace

int default_digits() {
    return g_default_digits;
}

void set_default_digits(int digits) {
    if (digits < 8)
        throw error("set_default_digits: need at least 8 digits");
    g_default_digits = digits;
    Real::default_precision(static_cast<unsigned>(digits));
}

PrecisionGuard::PrecisionGuard(int digits) : saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(digits));
}

PrecisionGuard::~PrecisionGuard() {
    Real::default_precision(saved_);
}

Real euler_gamma() {
    Real g(0);
    mpfr_const_euler(g.backend().data(), MPFR_RNDN);
    return g;
}

Real pi_value() {
    Real g(0);
    mpfr_const_pi(g.backend().data(), MPFR_RNDN);
    return g;
}

std::string real_to_string(const Real& v, int digits) {
    const unsigned d = digits > 0 ? static_cast<unsigned>(digits) : Real::default_precision();
    return v.str(d);
}

}  // namespace hspoly
