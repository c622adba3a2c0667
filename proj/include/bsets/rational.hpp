#pragma once

// Exact rationals backed by GMP. mpq_class keeps results canonical
// (lowest terms, positive denominator) after every arithmetic operation;
// the helpers here make sure values built from literals are canonical too.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bsets {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat abs(const Rat& r)
{
    return r < 0 ? Rat(-r) : r;
}

// 2^e for any integer e
inline Rat pow2(long e)
{
    Rat r = 1;
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned e)
{
    Rat r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= base;
    return r;
}

// Exact value of a finite double.
inline Rat from_double(double v)
{
    if (!std::isfinite(v))
        throw std::domain_error("non-finite double has no rational value");
    Rat r(v);
    r.canonicalize();
    return r;
}

inline double to_double(const Rat& r) { return r.get_d(); }

// `p/q`, or just `p` when the denominator is 1.
inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

class RatParseError : public std::invalid_argument {
public:
    RatParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what), offset_(offset) {}
    // character offset inside the literal where parsing failed
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

inline std::size_t scan_digits(std::string_view s, std::size_t i)
{
    while (i < s.size() && s[i] >= '0' && s[i] <= '9')
        ++i;
    return i;
}

} // namespace detail

// Accepts an integer (`-12`), a decimal (`3.25`, `-.5`, `1e-3`) converted
// exactly, or a fraction `p/q`. Anything else throws RatParseError.
inline Rat parse_rat(std::string_view s)
{
    using detail::scan_digits;
    if (s.empty())
        throw RatParseError("empty number", 0);

    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }

    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::size_t e = scan_digits(s, i);
        if (e == i || e != slash)
            throw RatParseError("malformed numerator in '" + std::string(s) + "'", e);
        std::size_t d0 = slash + 1;
        std::size_t d1 = scan_digits(s, d0);
        if (d1 == d0 || d1 != s.size())
            throw RatParseError("malformed denominator in '" + std::string(s) + "'", d1);
        Int num(std::string(s.substr(i, e - i)), 10);
        Int den(std::string(s.substr(d0, d1 - d0)), 10);
        if (den == 0)
            throw RatParseError("zero denominator in '" + std::string(s) + "'", d0);
        Rat r(neg ? Int(-num) : num, den);
        r.canonicalize();
        return r;
    }

    std::size_t int_end = scan_digits(s, i);
    std::string digits(s.substr(i, int_end - i));
    std::size_t frac_digits = 0;
    std::size_t j = int_end;
    if (j < s.size() && s[j] == '.') {
        std::size_t f1 = scan_digits(s, j + 1);
        digits += s.substr(j + 1, f1 - j - 1);
        frac_digits = f1 - j - 1;
        j = f1;
    }
    if (digits.empty())
        throw RatParseError("not a number: '" + std::string(s) + "'", i);

    long exponent = 0;
    if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
        std::size_t k = j + 1;
        bool eneg = false;
        if (k < s.size() && (s[k] == '+' || s[k] == '-')) {
            eneg = s[k] == '-';
            ++k;
        }
        std::size_t k1 = scan_digits(s, k);
        if (k1 == k || k1 - k > 6)
            throw RatParseError("malformed exponent in '" + std::string(s) + "'", k);
        exponent = std::stol(std::string(s.substr(k, k1 - k)));
        if (eneg)
            exponent = -exponent;
        j = k1;
    }
    if (j != s.size())
        throw RatParseError("unexpected character in '" + std::string(s) + "'", j);

    Int mant(digits, 10);
    long scale = exponent - static_cast<long>(frac_digits);
    Int ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rat r = scale >= 0 ? Rat(mant * ten_pow) : Rat(mant, ten_pow);
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

} // namespace bsets
