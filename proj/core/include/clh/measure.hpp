#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "clh/partition.hpp"
#include "clh/qseries.hpp"

namespace clh {

/// Shared parameters for measure computations: the prime p, the series
/// truncation order T used for certified evaluations, and the order bound B
/// for truncated sums over groups (all partitions with size <= B).
struct MeasureContext {
    std::int64_t p;
    unsigned T = 64;
    unsigned long B = 30;

    MeasureContext(std::int64_t p_, unsigned T_ = 64, unsigned long B_ = 30);
    Rat q() const { return inv_of(p); }
};

/// The weight 1/|Aut| of the group attached to lam.
Rat cl_weight(const Partition& lam, std::int64_t p);
Rat weight(const Partition& lam, const MeasureContext& ctx);

/// Total weight of all finite abelian p-groups, prod_{i>=1} (1-p^-i)^-1.
EvalResult total_weight(const MeasureContext& ctx);

/// Normalized probability of lam: weight(lam) * prod_{i>=1} (1-p^-i).
EvalResult cl_prob(const Partition& lam, const MeasureContext& ctx);

/// Number of surjections Z^k -> G counted by exhaustive enumeration of
/// k-tuples of group elements (a tuple surjects iff it generates).
/// Throws std::length_error when |G|^k exceeds the tuple budget.
Int surjection_count(const GroupShape& shape, unsigned k, const MeasureContext& ctx,
                     std::uint64_t tuple_budget = (1u << 24));

/// w_k(lam) = weight(lam) * prod_{i=k-r+1..k} (1 - q^i) for k >= r = rank,
/// and 0 otherwise.  Equals s_k/|G|^k * weight exactly.
Rat twisted_weight_wk(const Partition& lam, unsigned k, const MeasureContext& ctx);

/// zeta_k at integer s: prod_{i=1..k} 1/(1 - p^{-s-i}), exact.
/// Throws std::domain_error at a pole (some s + i = 0).
Rat zeta_k(unsigned k, long s, std::int64_t p);
/// Floating-point evaluation for non-integer s.
double zeta_k_real(unsigned k, double s, std::int64_t p);

/// A functional on groups together with a growth certificate
/// |f(lam)| <= scale * p^(rank_power * rank(lam)), which makes the
/// discarded tail of the expectation summable in closed form.
struct GroupFunctional {
    std::function<Rat(const Partition&)> f;
    Rat scale;
    unsigned rank_power = 0;

    static GroupFunctional bounded(std::function<Rat(const Partition&)> fn, const Rat& bound);
    static GroupFunctional rank_power_bounded(std::function<Rat(const Partition&)> fn,
                                              unsigned power, const Rat& factor);
};

/// E_u(f): expectation of f under the measure twisted by |G|^-u,
///   sum_G w(G) f(G) p^{-u ord_p(G)} * prod_{i>u} (1 - p^-i),
/// evaluated by summing groups of order <= B with a certified tail.
EvalResult expected_value(const GroupFunctional& f, unsigned u, const MeasureContext& ctx);

/// P(order = p^n) = q^n prod_{i>n} (1 - q^i).
EvalResult prob_order(unsigned long n, const MeasureContext& ctx);

/// P(rank = r) = prod_{i>=1}(1-q^i) * q^{r^2} / (prod_{i=1..r}(1-q^i))^2.
///
/// The cyclic case is prob_rank(0) + prob_rank(1).  Beware the tempting
/// geometric-series shortcut sum_{e>=0} q^e/(1-q): it assigns the trivial
/// group weight 1/(1-q) instead of 1 and evaluates above 1 at p = 2.
EvalResult prob_rank(unsigned r, const MeasureContext& ctx);

/// P(order = p^n and rank = r); zero when r > n or (r = 0, n > 0).
EvalResult prob_rank_order(unsigned long n, unsigned r, const MeasureContext& ctx);

/// P(exponent_p <= e): the product over i = 0, +-(e+1) mod (2e+3) of (1-q^i).
EvalResult prob_exponent_le(unsigned e, const MeasureContext& ctx);

/// k-th moment of p^rank, a finite exact sum:
///   sum_{i=0..k} q^{-i(k-i)} Phi_k / (Phi_i Phi_{k-i}), Phi_j = prod_{i=1..j}(1-q^i).
/// The summands are q-analogues of the Stirling numbers of the second kind.
Rat moment_p_rank(unsigned k, const MeasureContext& ctx);

/// The weighted monomial sum f_k: each partition of k with distinct values
/// e_i of multiplicity r_i stands for the monomial prod X_{e_i}^{r_i} with
/// coefficient k! / prod(r_i! (e_i!)^{r_i}).
std::map<Partition, Rat> order_moment_poly(unsigned k);

/// k-th moment of the p-adic order as a q-series: f_k(E_1, ..., E_k).
QSeries order_moment_series(unsigned k, unsigned trunc);

/// Sum of the absolute coefficients of f_k; with coefficient growth
/// n^(2k-1) of the substituted series this certifies order-moment tails.
Rat order_moment_scale(unsigned k);

/// Certified numeric value of the k-th local-order moment at q = 1/p.
EvalResult order_moment_value(unsigned k, std::int64_t p, unsigned trunc);

/// P_u(lam) = p^{-u ord} * weight(lam) * prod_{i>u} (1 - p^-i), u >= 1.
EvalResult u_prob(const Partition& lam, unsigned u, const MeasureContext& ctx);

}  // namespace clh
