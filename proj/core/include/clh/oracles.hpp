#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "clh/measure.hpp"
#include "clh/partition.hpp"
#include "clh/qseries.hpp"

namespace clh {

/// Counts the automorphisms of the group with the given shape by exhaustive
/// search: images are assigned to the canonical generators depth-first, an
/// assignment surviving to the last generator exactly when the partial map
/// stays injective.  Entirely independent of the closed-form product.
/// Returns nullopt when the search would exceed work_budget elementary
/// steps.
std::optional<Int> brute_force_aut_count(const GroupShape& shape, std::int64_t p,
                                         std::uint64_t work_budget = 200000000);

/// Truncated-sum enclosure of the measure of {lam : pred(lam)}: sums the
/// weights of all partitions with size <= ctx.B satisfying pred, brackets
/// the unseen tail by the total mass of orders beyond B, and normalizes.
EvalResult oracle_prob(const std::function<bool(const Partition&)>& pred,
                       const MeasureContext& ctx);

/// Enclosure of P_u(lam) from truncated weight sums: the weight
/// w(lam) p^{-u ord} against the truncated normalizer
/// sum_{|mu| <= B} w(mu) p^{-u ord(mu)} plus a certified tail.
EvalResult oracle_u_prob(const Partition& lam, unsigned u, const MeasureContext& ctx);

/// Exact distribution of the quotient of the fixed group H by u uniform
/// random elements, by enumerating all |H|^u tuples.  Throws
/// std::length_error past the tuple budget.
std::map<Partition, Rat> quotient_law_exact(const GroupShape& h, unsigned u, std::int64_t p,
                                            std::uint64_t tuple_budget = (1u << 22));

/// Exact cokernel-shape distribution of a uniform n x n matrix over Z/p^K
/// restricted to shapes with all parts < K (saturated draws are pooled
/// under the flag key), by enumerating all p^(K n^2) matrices.
struct CokernelLaw {
    std::map<Partition, Rat> shapes;  // parts < K only: these masses are exact
    Rat saturated;                    // mass of draws with some part = K
};
CokernelLaw cokernel_law_exact(unsigned n, std::int64_t p, unsigned K,
                               std::uint64_t matrix_budget = (1u << 24));

}  // namespace clh
