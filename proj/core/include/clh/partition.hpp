#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clh/rational.hpp"

namespace clh {

/// An integer partition: weakly decreasing positive parts.  The empty
/// partition is allowed.  Under the correspondence with finite abelian
/// p-groups, a part of value e contributes one cyclic factor Z/p^e, so
/// the number of parts is the group rank, the size is the p-adic order
/// and the largest part is the p-adic exponent.
class Partition {
public:
    Partition() = default;
    /// parts must be weakly decreasing and positive; throws otherwise.
    explicit Partition(std::vector<unsigned> parts);
    /// Sorts the given parts; zero entries are rejected.
    static Partition from_unsorted(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned long size() const;                 // sum of parts
    unsigned num_parts() const { return static_cast<unsigned>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// 1-based part access; rows past the end read as 0.
    unsigned part1(unsigned s) const { return s >= 1 && s <= parts_.size() ? parts_[s - 1] : 0; }

    Partition conjugate() const;

    /// "4+2+1" for (4,2,1); "()" for the empty partition.
    std::string to_string() const;
    /// JSON array form: "[4,2,1]", "[]" for empty.
    std::string to_json_array() const;
    /// Accepts "4+2+1" or "[4,2,1]" (any order), "()", "[]" or "0" for empty.
    static Partition parse(std::string_view text);

    bool operator==(const Partition&) const = default;
    /// Graded order: by size, then lexicographically decreasing parts.
    /// This is also the order in which enumerate_partitions emits.
    bool operator<(const Partition& o) const;

private:
    std::vector<unsigned> parts_;
};

/// Elementary-divisor view of a partition: (exponent, multiplicity) blocks
/// with strictly decreasing exponents.  (Z/p^2)x(Z/p) is [(2,1),(1,1)].
struct GroupShape {
    std::vector<std::pair<unsigned, unsigned>> blocks;  // (e, r), e strictly decreasing

    unsigned long order_p() const;   // sum e_i r_i
    unsigned rank() const;           // sum r_i
    unsigned exponent_p() const;     // e_1, or 0 for the trivial shape
    bool operator==(const GroupShape&) const = default;
};

GroupShape to_group_shape(const Partition& lam);
Partition from_group_shape(const GroupShape& shape);

/// |Aut| of the abelian p-group with the given shape:
///   (prod_i prod_{s=1..r_i} (1 - p^-s)) * (prod_{i,j} p^{min(e_i,e_j) r_i r_j}).
/// The two factors combine to an integer.  p must be prime.
Int aut_order(const GroupShape& shape, std::int64_t p);
Int aut_order(const Partition& lam, std::int64_t p);

/// Same product formula with the prime replaced by an arbitrary base q >= 2;
/// used for centralizer orders over extension fields F_{p^d}.
Int aut_order_base(const GroupShape& shape, const Int& q);

/// Calls fn for every partition with size <= max_size, parts <= max_part and
/// at most max_parts parts, in graded order (by size, then lexicographically
/// decreasing).  Each partition is produced exactly once.
void for_each_partition(unsigned long max_size,
                        std::optional<unsigned> max_part,
                        std::optional<unsigned> max_parts,
                        const std::function<void(const Partition&)>& fn);

std::vector<Partition> enumerate_partitions(unsigned long max_size,
                                            std::optional<unsigned> max_part = std::nullopt,
                                            std::optional<unsigned> max_parts = std::nullopt);

}  // namespace clh
