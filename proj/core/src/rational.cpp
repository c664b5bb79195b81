#include "clh/rational.hpp"

#include <stdexcept>

namespace clh {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_rat: 0 to negative power");
        return pow_rat(make_rat(base.get_den(), base.get_num()), -e);
    }
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return r;  // powers of a canonical rational stay canonical
}

Rat inv_of(std::int64_t p) {
    if (p == 0) throw std::domain_error("inv_of: zero");
    return make_rat(Int(1), Int(static_cast<long>(p)));
}

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    Int z(static_cast<long>(n));
    // 2-certain for this range per GMP's Baillie-PSW + Miller-Rabin rounds
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

double to_double(const Rat& v) { return v.get_d(); }

Rat tail_poly_geometric(const Rat& x, unsigned degree, unsigned long n_from) {
    if (x <= 0 || x >= 1) throw std::domain_error("tail_poly_geometric: need 0 < x < 1");
    const unsigned long n1 = n_from + 1;
    // terms a_n = n^degree x^n satisfy a_{m+1}/a_m <= rho for m >= n1
    Rat step = make_rat(Int(static_cast<unsigned long>(n1 + 1)), Int(n1));
    Rat rho = pow_rat(step, static_cast<long>(degree)) * x;
    if (rho >= 1) throw std::domain_error("tail_poly_geometric: ratio >= 1, increase n_from");
    Rat first = pow_rat(Rat(Int(static_cast<unsigned long>(n1))), static_cast<long>(degree)) * pow_rat(x, static_cast<long>(n1));
    return first / (Rat(1) - rho);
}

std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace clh
