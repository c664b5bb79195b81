#include "clh/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace clh {

QSeries QSeries::constant(const Rat& value, unsigned trunc) {
    QSeries s(trunc);
    s.c_[0] = value;
    return s;
}

QSeries QSeries::monomial(const Rat& coeff, unsigned k, unsigned trunc) {
    QSeries s(trunc);
    if (k <= trunc) s.c_[k] = coeff;
    return s;
}

QSeries QSeries::truncated(unsigned t) const {
    if (t > trunc()) throw std::invalid_argument("QSeries::truncated: cannot extend");
    QSeries s(t);
    std::copy(c_.begin(), c_.begin() + t + 1, s.c_.begin());
    return s;
}

QSeries QSeries::operator+(const QSeries& o) const {
    unsigned t = std::min(trunc(), o.trunc());
    QSeries s(t);
    for (unsigned j = 0; j <= t; ++j) s.c_[j] = c_[j] + o.c_[j];
    return s;
}

QSeries QSeries::operator-(const QSeries& o) const {
    unsigned t = std::min(trunc(), o.trunc());
    QSeries s(t);
    for (unsigned j = 0; j <= t; ++j) s.c_[j] = c_[j] - o.c_[j];
    return s;
}

QSeries QSeries::operator*(const QSeries& o) const {
    unsigned t = std::min(trunc(), o.trunc());
    QSeries s(t);
    for (unsigned i = 0; i <= t; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; i + j <= t; ++j) {
            if (o.c_[j] == 0) continue;
            s.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return s;
}

QSeries QSeries::operator*(const Rat& s) const {
    QSeries r(trunc());
    for (unsigned j = 0; j <= trunc(); ++j) r.c_[j] = c_[j] * s;
    return r;
}

QSeries QSeries::invert_unit() const {
    if (c_[0] == 0) throw std::domain_error("QSeries::invert_unit: zero constant term");
    QSeries b(trunc());
    Rat inv0 = Rat(1) / c_[0];
    b.c_[0] = inv0;
    for (unsigned n = 1; n <= trunc(); ++n) {
        Rat acc(0);
        for (unsigned j = 1; j <= n; ++j) acc += c_[j] * b.c_[n - j];
        b.c_[n] = -acc * inv0;
    }
    return b;
}

void QSeries::mul_one_minus_qpow(unsigned i) {
    if (i == 0) throw std::invalid_argument("mul_one_minus_qpow: exponent must be positive");
    if (i > trunc()) return;
    for (unsigned n = trunc(); n >= i; --n) c_[n] -= c_[n - i];
}

QSeries euler_product(unsigned trunc, const std::function<bool(unsigned)>& keep) {
    QSeries s = QSeries::one(trunc);
    for (unsigned i = 1; i <= trunc; ++i)
        if (keep(i)) s.mul_one_minus_qpow(i);
    return s;
}

QSeries euler_product(unsigned trunc) {
    return euler_product(trunc, [](unsigned) { return true; });
}

QSeries eisenstein(unsigned k, unsigned trunc) {
    if (k < 1) throw std::invalid_argument("eisenstein: k must be >= 1");
    QSeries s(trunc);
    for (unsigned long d = 1; d <= trunc; ++d) {
        Rat dk(pow_int(Int(d), k - 1));
        for (unsigned long n = d; n <= trunc; n += d) s.set_coeff(static_cast<unsigned>(n), s.coeff(static_cast<unsigned>(n)) + dk);
    }
    return s;
}

EvalResult EvalResult::from_bounds(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw std::invalid_argument("EvalResult::from_bounds: lo > hi");
    return {(lo + hi) / 2, (hi - lo) / 2};
}

Rat EvalResult::gap(const EvalResult& o) const {
    if (overlaps(o)) return Rat(0);
    return lo() > o.hi() ? lo() - o.hi() : o.lo() - hi();
}

EvalResult EvalResult::operator+(const EvalResult& o) const {
    return {value + o.value, tail_bound + o.tail_bound};
}

EvalResult EvalResult::operator-(const EvalResult& o) const {
    return {value - o.value, tail_bound + o.tail_bound};
}

EvalResult EvalResult::operator*(const EvalResult& o) const {
    Rat cands[4] = {lo() * o.lo(), lo() * o.hi(), hi() * o.lo(), hi() * o.hi()};
    Rat mn = cands[0], mx = cands[0];
    for (const Rat& c : cands) {
        if (c < mn) mn = c;
        if (c > mx) mx = c;
    }
    return from_bounds(mn, mx);
}

EvalResult EvalResult::operator*(const Rat& s) const {
    Rat b = tail_bound * s;
    if (b < 0) b = -b;
    return {value * s, b};
}

EvalResult EvalResult::reciprocal() const {
    if (lo() <= 0 && hi() >= 0) throw std::domain_error("EvalResult::reciprocal: enclosure contains 0");
    return from_bounds(Rat(1) / hi(), Rat(1) / lo());
}

EvalResult eval_poly_growth(const QSeries& s, std::int64_t p, unsigned degree, const Rat& scale) {
    if (p < 2) throw std::domain_error("eval_poly_growth: p must be >= 2");
    if (scale < 0) throw std::invalid_argument("eval_poly_growth: negative scale");
    Rat q = inv_of(p);
    Rat qn(1), acc(0);
    for (unsigned j = 0; j <= s.trunc(); ++j) {
        acc += s.coeff(j) * qn;
        qn *= q;
    }
    Rat tail = scale == 0 ? Rat(0) : scale * tail_poly_geometric(q, degree, s.trunc());
    return {acc, tail};
}

EvalResult eval_euler_product(std::int64_t p, unsigned trunc,
                              const std::function<bool(unsigned)>& keep) {
    if (p < 2) throw std::domain_error("eval_euler_product: p must be >= 2");
    Rat q = inv_of(p);
    Rat partial(1);
    Rat qi = q;
    for (unsigned i = 1; i <= trunc; ++i) {
        if (keep(i)) partial *= Rat(1) - qi;
        qi *= q;
    }
    // the dropped factors F satisfy 1 - eps <= F <= 1
    Rat eps = pow_rat(q, trunc) * make_rat(Int(static_cast<long>(p)),
                                           Int(static_cast<long>(p - 1)) * Int(static_cast<long>(p - 1)));
    if (eps > 1) eps = 1;
    return EvalResult::from_bounds(partial * (Rat(1) - eps), partial);
}

EvalResult eval_euler_product(std::int64_t p, unsigned trunc) {
    return eval_euler_product(p, trunc, [](unsigned) { return true; });
}

}  // namespace clh
