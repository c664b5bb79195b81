#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "clh/measure.hpp"
#include "clh/partition.hpp"
#include "clh/qseries.hpp"

namespace clh {

/// Monic polynomial over F_p, coefficients stored ascending (constant
/// first, leading coefficient 1 last).  Degree >= 1.
class PolyFp {
public:
    PolyFp(std::vector<std::uint32_t> coeffs, std::int64_t p);
    static PolyFp x_minus(std::uint64_t a, std::int64_t p);  // X - a

    unsigned degree() const { return static_cast<unsigned>(c_.size() - 1); }
    std::uint32_t coeff(unsigned i) const { return c_.at(i); }
    std::int64_t p() const { return p_; }
    bool is_x() const { return c_.size() == 2 && c_[0] == 0 && c_[1] == 1; }

    /// "x^2+2x+1" style rendering with descending powers.
    std::string to_string() const;

    /// Ordered by degree, then lexicographically on the coefficient list.
    bool operator<(const PolyFp& o) const;
    bool operator==(const PolyFp&) const = default;

private:
    std::vector<std::uint32_t> c_;
    std::int64_t p_;
};

bool poly_is_irreducible(const PolyFp& f);

/// All monic irreducible polynomials of degree exactly d over F_p, found by
/// exhaustive generation and trial division; ordered as PolyFp.  Rejects
/// searches with p^d beyond the budget.
std::vector<PolyFp> irreducible_polys(std::int64_t p, unsigned d,
                                      std::uint64_t budget = 1000000);

/// A conjugacy class of GL(n,p): a partition attached to each monic
/// irreducible polynomial other than X (absent polynomials carry the empty
/// partition), with the degree-weighted sizes summing to n.
struct ClassLabel {
    unsigned n;
    std::vector<std::pair<PolyFp, Partition>> blocks;  // nonempty partitions, sorted by poly

    const Partition* partition_of(const PolyFp& f) const;
};

/// Streams every conjugacy class of GL(n,p) exactly once, deterministically
/// (polynomials ordered by degree then coefficients, partitions in graded
/// order).
void for_each_class(unsigned n, std::int64_t p, const std::function<void(const ClassLabel&)>& fn);
std::vector<ClassLabel> enumerate_classes(unsigned n, std::int64_t p);

/// Centralizer order of a class: the product over its polynomials of the
/// automorphism-order formula evaluated at base p^{deg phi}.
Int centralizer_order(const ClassLabel& label, std::int64_t p);
Int class_size(const ClassLabel& label, std::int64_t p);

/// Wire form of a class label:
///   {"n":2,"p":2,"blocks":[{"poly":"x^2+x+1","partition":[1]}]}
std::string class_label_to_json(const ClassLabel& label, std::int64_t p);

/// Exact distribution of the partition attached to X - a over a uniform
/// element of GL(n,p): lam -> sum of class sizes with that partition over
/// |GL(n,p)|.  Values sum to exactly 1.
std::map<Partition, Rat> exact_marginal(unsigned n, std::int64_t p, std::uint64_t a);

/// Independent class count from the generating function
///   prod_{d} (sum_lam x^{d |lam|})^{N_d - [d=1]}  (X excluded).
Int class_count_by_genfun(unsigned n, std::int64_t p);

struct CycleIndexReport {
    unsigned n;
    std::int64_t p;
    Int class_sum;           // sum of class sizes
    Int group_order;         // |GL(n,p)|
    bool class_sum_ok;       // class_sum == group_order
    Rat marginal_sum;        // sum of exact_marginal values
    bool marginal_sum_ok;    // == 1
    EvalResult tv_to_cl;     // total variation against the limiting measure
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Consistency checks at a fixed n: the class sizes sum to |GL(n,p)|, the
/// marginal is a probability vector, and the total-variation distance to
/// the limiting measure is reported for convergence monitoring.
CycleIndexReport cycle_index_check(unsigned n, const MeasureContext& ctx);

/// Total variation between an exactly known distribution supported on
/// partitions of size <= support_bound and the limiting measure, as a
/// certified enclosure.
EvalResult tv_to_cl(const std::map<Partition, Rat>& dist, unsigned long support_bound,
                    const MeasureContext& ctx);

}  // namespace clh
