#include "zerogeom/rational.hpp"

#include <cctype>
#include <cmath>

namespace zerogeom {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

BigRational parse_rational(const std::string& token, std::size_t offset) {
    if (token.empty()) throw ParseError("empty rational token", offset);

    std::size_t start = 0;
    if (token[0] == '+' || token[0] == '-') start = 1;

    const std::size_t slash = token.find('/');
    if (slash == std::string::npos) {
        if (!all_digits(token, start, token.size()))
            throw ParseError("malformed rational '" + token + "'", offset);
    } else {
        if (!all_digits(token, start, slash) || !all_digits(token, slash + 1, token.size()))
            throw ParseError("malformed rational '" + token + "'", offset);
    }

    BigRational q;
    // mpq_set_str does not understand a leading '+'.
    const char* body = token[0] == '+' ? token.c_str() + 1 : token.c_str();
    if (mpq_set_str(q.get_mpq_t(), body, 10) != 0)
        throw ParseError("malformed rational '" + token + "'", offset);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw ParseError("zero denominator in '" + token + "'", offset);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const BigRational& q) {
    return q.get_str();
}

BigRational binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return BigRational(b);
}

BigRational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return BigRational(f);
}

double log_abs(const BigRational& q) {
    if (q == 0) throw std::domain_error("log_abs of zero");
    // |q| = num/den; log via mantissa-exponent split of each integer part.
    auto log_mpz = [](const mpz_class& z) {
        signed long exp2 = 0;
        const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
        return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
    };
    const mpz_class num = q.get_num();
    const mpz_class den = q.get_den();
    return log_mpz(num) - log_mpz(den);
}

}  // namespace zerogeom
