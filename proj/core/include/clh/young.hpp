#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "clh/partition.hpp"
#include "clh/random.hpp"

namespace clh {

/// Internal state of the growth chain: the un-conjugated partition and the
/// current coin level N >= 1.  The first row never exceeds the level.
struct ChainState {
    Partition lam;
    unsigned level = 1;

    ChainState() = default;
    ChainState(Partition lam_, unsigned level_);
};

/// Row-insertion distribution at the current level: probabilities for
/// inserting a box into row s = 1..m+1 (m = number of parts), including
/// rows of probability zero.  Row 1 gets (p^{N-lam_1} - 1)/(p^N - 1); row
/// s > 1 gets (p^{N-lam_s} - p^{N-lam_{s-1}})/(p^N - 1).  The entries sum
/// to exactly 1.
std::vector<std::pair<unsigned, Rat>> ytab_step2_distribution(const ChainState& state,
                                                              std::int64_t p);

struct YtabDraw {
    Partition out;        // the conjugate of the final internal state
    unsigned levels;      // coin levels simulated
    Rat residual_bound;   // certified bound on expected additions never simulated
};

/// Runs the growth chain level by level; at level N the number of heads is
/// drawn from its geometric law (tails probability 1 - p^-N) and each head
/// inserts one box.  Levels stop once the expected number of future
/// additions falls below eps.  Returns the conjugate of the internal state.
YtabDraw ytab_sample_info(std::int64_t p, RandomSource& rng, const Rat& eps);
Partition ytab_sample(std::int64_t p, RandomSource& rng, const Rat& eps);

/// Exact probability that the internal chain state equals lam at the moment
/// coin N first comes up tails:
///   (prod_{i=N-lam_1+1..N} (1-p^-i)) (prod_{i=1..N} (1-p^-i)) w(lam')
/// for lam_1 <= N, else 0.  The weight is taken at the conjugate partition,
/// which is what exhaustive chain enumeration confirms.
Rat p_alg_n(const Partition& lam, unsigned N, std::int64_t p);

/// Exhaustive-enumeration oracle: the exact distribution of the internal
/// state when coin N comes up tails, over all states of size <= size_bound.
/// Mass that would grow past the bound is dropped, which leaves the
/// retained probabilities exact.
std::map<Partition, Rat> chain_law_distribution(unsigned N, std::int64_t p,
                                                unsigned long size_bound);

/// Weight of the covering edge from_conj -> to_conj in the conjugate-indexed
/// Young lattice.  Row 1 growth: 1/(p^{a}(p^{a+1}-1)) with a the first row;
/// row s > 1 growth: (p^{-lam'_s} - p^{-lam'_{s-1}})/(p^{lam'_1}-1).
Rat lattice_edge_weight(const Partition& from_conj, const Partition& to_conj, std::int64_t p);

/// Sum of outgoing edge weights at a vertex: p/(p^{lam'_1+1}-1) for a
/// nonempty vertex and 1/(p-1) at the empty partition.
Rat lattice_out_weight(const Partition& conj, std::int64_t p);

/// Sum over all saturated paths from the empty partition to conjugate(lam)
/// of the product of edge weights; equals the weight 1/|Aut| of lam.
/// Memoized over intermediate shapes; sizes beyond max_boxes are rejected.
Rat lattice_path_weight_sum(const Partition& lam, std::int64_t p, unsigned long max_boxes = 16);

/// Halting random walk on the conjugate-indexed lattice: follow an edge with
/// probability equal to its weight and halt with the residual probability.
/// Returns the partition whose conjugate is the final vertex.
Partition lattice_walk_sample(std::int64_t p, RandomSource& rng);

}  // namespace clh
