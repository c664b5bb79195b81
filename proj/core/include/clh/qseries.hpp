#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "clh/rational.hpp"

namespace clh {

/// Truncated formal power series in q with exact rational coefficients.
/// A series of truncation T knows the coefficients of q^0..q^T; higher
/// terms are unknown.  Arithmetic never claims coefficients beyond the
/// smaller operand truncation.
class QSeries {
public:
    /// Zero series at the given truncation.
    explicit QSeries(unsigned trunc) : c_(trunc + 1u, Rat(0)) {}
    static QSeries constant(const Rat& value, unsigned trunc);
    static QSeries one(unsigned trunc) { return constant(Rat(1), trunc); }
    /// c * q^k, zero when k exceeds the truncation.
    static QSeries monomial(const Rat& coeff, unsigned k, unsigned trunc);

    unsigned trunc() const { return static_cast<unsigned>(c_.size() - 1); }
    const Rat& coeff(unsigned j) const { return c_.at(j); }
    void set_coeff(unsigned j, const Rat& v) { c_.at(j) = v; }

    QSeries truncated(unsigned t) const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
    QSeries operator*(const Rat& s) const;

    /// Multiplicative inverse; requires a nonzero constant term.
    QSeries invert_unit() const;

    /// In-place multiplication by the two-term factor (1 - q^i).
    void mul_one_minus_qpow(unsigned i);

    bool operator==(const QSeries&) const = default;

private:
    std::vector<Rat> c_;
};

/// prod_{i >= 1, keep(i)} (1 - q^i) truncated at T.  Factors with i > T do
/// not affect the known coefficients and are skipped.
QSeries euler_product(unsigned trunc, const std::function<bool(unsigned)>& keep);
QSeries euler_product(unsigned trunc);

/// E_k without its constant term: sum_{n>=1} sigma_{k-1}(n) q^n, where
/// sigma_i(n) is the i-th divisor power sum.
QSeries eisenstein(unsigned k, unsigned trunc);

/// A certified enclosure: the target value lies in
/// [value - tail_bound, value + tail_bound].
struct EvalResult {
    Rat value;
    Rat tail_bound;

    Rat lo() const { return value - tail_bound; }
    Rat hi() const { return value + tail_bound; }
    static EvalResult exact(const Rat& v) { return {v, Rat(0)}; }
    static EvalResult from_bounds(const Rat& lo, const Rat& hi);

    bool contains(const Rat& x) const { return lo() <= x && x <= hi(); }
    bool overlaps(const EvalResult& o) const { return lo() <= o.hi() && o.lo() <= hi(); }
    /// 0 when the enclosures overlap, otherwise the distance between them.
    Rat gap(const EvalResult& o) const;

    EvalResult operator+(const EvalResult& o) const;
    EvalResult operator-(const EvalResult& o) const;
    EvalResult operator*(const EvalResult& o) const;
    EvalResult operator*(const Rat& s) const;
    /// Interval reciprocal; requires the enclosure to exclude 0.
    EvalResult reciprocal() const;
};

/// Substitutes q = 1/p into the known coefficients and certifies the
/// discarded tail from a caller-supplied growth bound
/// |c_n| <= scale * n^degree for all n beyond the truncation.
EvalResult eval_poly_growth(const QSeries& s, std::int64_t p, unsigned degree, const Rat& scale);

/// Certified value of the infinite product prod_{i>=1, keep(i)} (1 - p^-i),
/// evaluated through the partial product up to T.  The discarded factors
/// are bracketed via |log prod_{i>T} (1-p^-i)| <= p^-T * p / (p-1)^2.
EvalResult eval_euler_product(std::int64_t p, unsigned trunc,
                              const std::function<bool(unsigned)>& keep);
EvalResult eval_euler_product(std::int64_t p, unsigned trunc);

}  // namespace clh
