#include "clh/young.hpp"

#include <algorithm>
#include <stdexcept>

#include "clh/measure.hpp"

namespace clh {

namespace {

Partition with_box_at_row(const Partition& lam, unsigned s) {
    std::vector<unsigned> parts = lam.parts();
    if (s == parts.size() + 1) parts.push_back(1);
    else parts.at(s - 1) += 1;
    return Partition(std::move(parts));
}

Rat qpoch_range(const Rat& q, unsigned long a, unsigned long b) {
    Rat out(1);
    Rat qi = pow_rat(q, static_cast<long>(a));
    for (unsigned long i = a; i <= b; ++i) {
        out *= Rat(1) - qi;
        qi *= q;
    }
    return out;
}

}  // namespace

ChainState::ChainState(Partition lam_, unsigned level_) : lam(std::move(lam_)), level(level_) {
    if (level < 1) throw std::invalid_argument("ChainState: level must be >= 1");
    if (lam.part1(1) > level)
        throw std::invalid_argument("ChainState: first row exceeds the coin level");
}

std::vector<std::pair<unsigned, Rat>> ytab_step2_distribution(const ChainState& state,
                                                              std::int64_t p) {
    const unsigned N = state.level;
    const unsigned m = state.lam.num_parts();
    Int pz(static_cast<long>(p));
    Int denom = pow_int(pz, N) - 1;
    std::vector<std::pair<unsigned, Rat>> out;
    out.reserve(m + 1);
    for (unsigned s = 1; s <= m + 1; ++s) {
        Int numer;
        if (s == 1) numer = pow_int(pz, N - state.lam.part1(1)) - 1;
        else numer = pow_int(pz, N - state.lam.part1(s)) - pow_int(pz, N - state.lam.part1(s - 1));
        out.emplace_back(s, make_rat(numer, denom));
    }
    return out;
}

YtabDraw ytab_sample_info(std::int64_t p, RandomSource& rng, const Rat& eps) {
    if (eps <= 0 || eps >= 1) throw std::invalid_argument("ytab_sample: eps must be in (0,1)");
    const Rat q = inv_of(p);
    Partition lam;
    unsigned N = 1;
    for (;;) {
        // heads count at this level is geometric with tails probability 1 - q^N
        Rat head_prob = pow_rat(q, N);
        unsigned heads = 0;
        while (rng.bernoulli(head_prob)) ++heads;
        for (unsigned h = 0; h < heads; ++h) {
            ChainState state(lam, N);
            auto dist = ytab_step2_distribution(state, p);
            std::vector<Rat> probs;
            probs.reserve(dist.size());
            for (auto& [s, pr] : dist) probs.push_back(pr);
            std::size_t idx = rng.categorical(probs);
            if (idx >= dist.size()) throw std::logic_error("ytab_sample: row choice out of range");
            lam = with_box_at_row(lam, dist[idx].first);
        }
        // expected additions past level N: sum_{M>N} q^M/(1-q^M)
        //   <= q^{N+1} / ((1-q)(1-q^{N+1}))
        Rat qn1 = pow_rat(q, static_cast<long>(N) + 1);
        Rat residual = qn1 / ((Rat(1) - q) * (Rat(1) - qn1));
        if (residual < eps) return {lam.conjugate(), N, residual};
        ++N;
    }
}

Partition ytab_sample(std::int64_t p, RandomSource& rng, const Rat& eps) {
    return ytab_sample_info(p, rng, eps).out;
}

Rat p_alg_n(const Partition& lam, unsigned N, std::int64_t p) {
    if (lam.part1(1) > N) return Rat(0);
    const Rat q = inv_of(p);
    Rat run = qpoch_range(q, N - lam.part1(1) + 1, N);
    Rat full = qpoch_range(q, 1, N);
    return run * full * cl_weight(lam.conjugate(), p);
}

std::map<Partition, Rat> chain_law_distribution(unsigned N, std::int64_t p,
                                                unsigned long size_bound) {
    const Rat q = inv_of(p);
    std::map<Partition, Rat> entering;  // state distribution entering the level
    entering[Partition()] = Rat(1);
    for (unsigned level = 1; level <= N; ++level) {
        Rat head = pow_rat(q, level);
        Rat tails = Rat(1) - head;
        // the map is graded by size and insertions add boxes, so new states
        // always land ahead of the iterator and get processed in this pass
        std::map<Partition, Rat> arrive = entering;
        std::map<Partition, Rat> after;
        for (auto it = arrive.begin(); it != arrive.end(); ++it) {
            const Partition& lam = it->first;
            const Rat mass = it->second;
            after[lam] += mass * tails;
            if (lam.size() >= size_bound) continue;  // drop growth past the bound
            ChainState state(lam, level);
            for (auto& [s, pr] : ytab_step2_distribution(state, p)) {
                if (pr == 0) continue;
                arrive[with_box_at_row(lam, s)] += mass * head * pr;
            }
        }
        entering = std::move(after);
    }
    return entering;
}

Rat lattice_edge_weight(const Partition& from_conj, const Partition& to_conj, std::int64_t p) {
    // locate the single growing row
    unsigned grown = 0;
    const unsigned m = std::max(from_conj.num_parts(), to_conj.num_parts());
    for (unsigned s = 1; s <= m; ++s) {
        unsigned a = from_conj.part1(s), b = to_conj.part1(s);
        if (b == a + 1 && grown == 0) grown = s;
        else if (b != a) grown = static_cast<unsigned>(-1);
    }
    if (grown == 0 || grown == static_cast<unsigned>(-1))
        throw std::invalid_argument("lattice_edge_weight: vertices are not a covering pair");
    Int pz(static_cast<long>(p));
    const Rat q = inv_of(p);
    if (grown == 1) {
        unsigned a = from_conj.part1(1);
        return make_rat(Int(1), pow_int(pz, a) * (pow_int(pz, a + 1) - 1));
    }
    Rat numer = pow_rat(q, from_conj.part1(grown)) - pow_rat(q, from_conj.part1(grown - 1));
    return numer / Rat(pow_int(pz, from_conj.part1(1)) - 1);
}

Rat lattice_out_weight(const Partition& conj, std::int64_t p) {
    Int pz(static_cast<long>(p));
    if (conj.empty()) return make_rat(Int(1), pz - 1);
    return make_rat(pz, pow_int(pz, conj.part1(1) + 1) - 1);
}

namespace {

Rat path_sum_memo(const Partition& vertex, std::int64_t p, std::map<Partition, Rat>& memo) {
    if (vertex.empty()) return Rat(1);
    auto it = memo.find(vertex);
    if (it != memo.end()) return it->second;
    Rat acc(0);
    const auto& parts = vertex.parts();
    for (unsigned s = 1; s <= parts.size(); ++s) {
        // a box is removable from row s if the result is still a partition
        if (s < parts.size() && parts[s - 1] == parts[s]) continue;
        std::vector<unsigned> prev = parts;
        if (prev[s - 1] == 1) prev.pop_back();
        else prev[s - 1] -= 1;
        Partition below{std::move(prev)};
        acc += path_sum_memo(below, p, memo) * lattice_edge_weight(below, vertex, p);
    }
    memo.emplace(vertex, acc);
    return acc;
}

}  // namespace

Rat lattice_path_weight_sum(const Partition& lam, std::int64_t p, unsigned long max_boxes) {
    if (lam.size() > max_boxes)
        throw std::length_error("lattice_path_weight_sum: box budget exceeded");
    std::map<Partition, Rat> memo;
    return path_sum_memo(lam.conjugate(), p, memo);
}

Partition lattice_walk_sample(std::int64_t p, RandomSource& rng) {
    Partition cur;  // conjugate-indexed vertex
    for (;;) {
        const unsigned m = cur.num_parts();
        std::vector<unsigned> rows;
        std::vector<Rat> probs;
        for (unsigned s = 1; s <= m + 1; ++s) {
            if (s > 1 && cur.part1(s) >= cur.part1(s - 1)) continue;  // not a cover
            Partition next = with_box_at_row(cur, s);
            Rat w = lattice_edge_weight(cur, next, p);
            if (w == 0) continue;
            rows.push_back(s);
            probs.push_back(w);
        }
        std::size_t idx = rng.categorical(probs);
        if (idx >= rows.size()) return cur.conjugate();  // halted
        cur = with_box_at_row(cur, rows[idx]);
        if (cur.size() > 1000000) throw std::runtime_error("lattice_walk_sample: walk did not halt");
    }
}

}  // namespace clh
