#include "hookforge/numeric.hpp"

#include "hookforge/errors.hpp"

namespace hookforge {

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigRat rat_pow(const BigRat& q, unsigned k) {
    BigRat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q.get_mpq_t()), k);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q.get_mpq_t()), k);
    // num/den of a canonical rational stay coprime under powers
    return r;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const BigRat& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_str();
}

BigRat rat_from_string(const std::string& text) {
    if (text.empty())
        throw ParseError("empty rational literal");
    BigRat q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw ParseError("bad rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

} // namespace hookforge
