#include "clh/decimal.hpp"

namespace clh {

std::string to_decimal_half_even(const Rat& v, unsigned digits) {
    const bool neg = v < 0;
    Rat a = neg ? Rat(-v) : v;
    Int scale = pow_int(Int(10), digits);
    Int num = a.get_num() * scale;
    const Int& den = a.get_den();
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int twice = r * 2;
    if (twice > den || (twice == den && mpz_odd_p(q.get_mpz_t()))) q += 1;
    Int ip = q / scale;
    Int fp = q % scale;
    std::string out = (neg && q != 0 ? "-" : "") + ip.get_str();
    if (digits > 0) {
        std::string frac = fp.get_str();
        out += "." + std::string(digits - frac.size(), '0') + frac;
    }
    return out;
}

}  // namespace clh
