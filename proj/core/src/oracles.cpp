#include "clh/oracles.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "clh/fplinalg.hpp"

namespace clh {

namespace {

// weight tables are reused heavily across oracle calls
const std::vector<std::pair<Partition, Rat>>& weight_table(std::int64_t p, unsigned long bound) {
    static std::mutex mu;
    static std::map<std::pair<std::int64_t, unsigned long>,
                    std::unique_ptr<std::vector<std::pair<Partition, Rat>>>>
        cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, bound}];
    if (!slot) {
        slot = std::make_unique<std::vector<std::pair<Partition, Rat>>>();
        for_each_partition(bound, std::nullopt, std::nullopt, [&](const Partition& lam) {
            slot->emplace_back(lam, cl_weight(lam, p));
        });
    }
    return *slot;
}

struct AbelianGroup {
    std::vector<std::uint64_t> mod;  // cyclic factor orders p^{e_i}, exponents descending
    std::vector<unsigned> exps;
    std::uint64_t size = 1;

    explicit AbelianGroup(const GroupShape& shape, std::int64_t p) {
        for (auto [e, r] : shape.blocks)
            for (unsigned i = 0; i < r; ++i) {
                std::uint64_t pe = 1;
                for (unsigned t = 0; t < e; ++t) pe *= static_cast<std::uint64_t>(p);
                mod.push_back(pe);
                exps.push_back(e);
                size *= pe;
            }
    }
    std::size_t rank() const { return mod.size(); }
    void decode(std::uint64_t idx, std::vector<std::uint64_t>& el) const {
        for (std::size_t t = 0; t < mod.size(); ++t) {
            el[t] = idx % mod[t];
            idx /= mod[t];
        }
    }
    std::uint64_t encode(const std::vector<std::uint64_t>& el) const {
        std::uint64_t idx = 0;
        for (std::size_t t = mod.size(); t-- > 0;) idx = idx * mod[t] + el[t];
        return idx;
    }
};

}  // namespace

std::optional<Int> brute_force_aut_count(const GroupShape& shape, std::int64_t p,
                                         std::uint64_t work_budget) {
    if (!is_prime_i64(p)) throw std::domain_error("brute_force_aut_count: p must be prime");
    if (shape.blocks.empty()) return Int(1);
    AbelianGroup g(shape, p);
    const std::size_t rank = g.rank();
    const auto size = static_cast<std::uint32_t>(g.size);
    if (g.size > 4096) return std::nullopt;  // the addition table is size^2 entries

    // element tables: addition, multiplication by p, and exact order exponent
    std::vector<std::uint32_t> add(static_cast<std::size_t>(size) * size);
    std::vector<std::uint32_t> pmul(size);
    std::vector<std::uint8_t> ordexp(size);
    {
        std::vector<std::uint64_t> xa(rank), xb(rank);
        for (std::uint32_t a = 0; a < size; ++a) {
            g.decode(a, xa);
            unsigned oe = 0;
            for (std::size_t d = 0; d < rank; ++d) {
                std::uint64_t c = xa[d];
                unsigned v = g.exps[d];
                while (c != 0) {  // v = e_d - valuation, the cyclic order exponent
                    if (c % static_cast<std::uint64_t>(p)) break;
                    c /= static_cast<std::uint64_t>(p);
                    --v;
                }
                if (xa[d] == 0) v = 0;
                oe = std::max(oe, v);
            }
            ordexp[a] = static_cast<std::uint8_t>(oe);
            for (std::size_t d = 0; d < rank; ++d) xb[d] = (xa[d] * static_cast<std::uint64_t>(p)) % g.mod[d];
            pmul[a] = static_cast<std::uint32_t>(g.encode(xb));
            for (std::uint32_t b = 0; b <= a; ++b) {
                g.decode(b, xb);
                for (std::size_t d = 0; d < rank; ++d) xb[d] = (xb[d] + xa[d]) % g.mod[d];
                std::uint32_t s = static_cast<std::uint32_t>(g.encode(xb));
                add[static_cast<std::size_t>(a) * size + b] = s;
                add[static_cast<std::size_t>(b) * size + a] = s;
            }
        }
    }

    // image subgroup of the first t generators, as a bitmap plus element list
    std::vector<char> in_span(size, 0);
    std::vector<std::uint32_t> span_elems;
    in_span[0] = 1;
    span_elems.push_back(0);

    std::uint64_t work = 0;
    bool exceeded = false;
    Int count(0);

    std::function<void(std::size_t)> dfs = [&](std::size_t t) {
        if (exceeded) return;
        if (t == rank) {
            count += 1;
            return;
        }
        const unsigned e = g.exps[t];
        const std::uint64_t gen_order = g.mod[t];
        if ((work += size) > work_budget) {
            exceeded = true;
            return;
        }
        for (std::uint32_t x = 0; x < size; ++x) {
            // the image must have order exactly p^e and its minimal subgroup
            // (generated by p^{e-1} x) must avoid the current span
            if (ordexp[x] != e) continue;
            std::uint32_t minimal = x;
            for (unsigned i = 0; i + 1 < e; ++i) minimal = pmul[minimal];
            if (in_span[minimal]) continue;

            if (t + 1 == rank) {
                count += 1;  // injective on all of G by order counting
                continue;
            }
            // extend the span by the cosets span + c*x, c = 1..p^e-1
            std::size_t base_count = span_elems.size();
            std::size_t added = 0;
            std::uint32_t cx = 0;
            work += (gen_order - 1) * base_count;
            if (work > work_budget) {
                exceeded = true;
                return;
            }
            for (std::uint64_t c = 1; c < gen_order; ++c) {
                cx = add[static_cast<std::size_t>(cx) * size + x];
                const std::uint32_t* row = &add[static_cast<std::size_t>(cx) * size];
                for (std::size_t s = 0; s < base_count; ++s) {
                    std::uint32_t y = row[span_elems[s]];
                    if (in_span[y]) throw std::logic_error("brute_force_aut_count: span collision");
                    in_span[y] = 1;
                    span_elems.push_back(y);
                    ++added;
                }
            }
            dfs(t + 1);
            for (std::size_t s = 0; s < added; ++s) in_span[span_elems[base_count + s]] = 0;
            span_elems.resize(base_count);
            if (exceeded) return;
        }
    };
    dfs(0);
    if (exceeded) return std::nullopt;
    return count;
}

EvalResult oracle_prob(const std::function<bool(const Partition&)>& pred,
                       const MeasureContext& ctx) {
    Rat hit(0), all(0);
    for (const auto& [lam, w] : weight_table(ctx.p, ctx.B)) {
        all += w;
        if (pred(lam)) hit += w;
    }
    // mass of orders beyond B: sum_{n>B} q^n / prod_{i=1..n} (1-q^i)
    //   <= q^{B+1} / ((1-q) * LB)
    const Rat q = ctx.q();
    Rat lb = eval_euler_product(ctx.p, std::max(ctx.T, 20u)).lo();
    Rat tail = pow_rat(q, static_cast<long>(ctx.B) + 1) / ((Rat(1) - q) * lb);
    // P = (hit + [0,tail]) / (all + [0,tail])
    Rat lo = hit / (all + tail);
    Rat hi = (hit + tail) / all;
    if (hi > 1) hi = 1;
    return EvalResult::from_bounds(lo, hi);
}

EvalResult oracle_u_prob(const Partition& lam, unsigned u, const MeasureContext& ctx) {
    const Rat q = ctx.q();
    Rat numer = cl_weight(lam, ctx.p) * pow_rat(q, static_cast<long>(u * lam.size()));
    Rat denom(0);
    for (const auto& [mu, w] : weight_table(ctx.p, ctx.B))
        denom += w * pow_rat(q, static_cast<long>(u * mu.size()));
    // tail of the normalizer: sum_{n>B} q^{(1+u)n} / prod_{i<=n}(1-q^i)
    Rat lb = eval_euler_product(ctx.p, std::max(ctx.T, 20u)).lo();
    Rat x = pow_rat(q, static_cast<long>(u) + 1);
    Rat tail = pow_rat(x, static_cast<long>(ctx.B) + 1) / ((Rat(1) - x) * lb);
    return EvalResult::from_bounds(numer / (denom + tail), numer / denom);
}

std::map<Partition, Rat> quotient_law_exact(const GroupShape& h, unsigned u, std::int64_t p,
                                            std::uint64_t tuple_budget) {
    if (u < 1) throw std::invalid_argument("quotient_law_exact: u must be >= 1");
    if (h.blocks.empty()) return {{Partition(), Rat(1)}};
    AbelianGroup g(h, p);
    const std::size_t rank = g.rank();
    unsigned __int128 tuples = 1;
    for (unsigned j = 0; j < u; ++j) {
        tuples *= g.size;
        if (tuples > tuple_budget) throw std::length_error("quotient_law_exact: tuple budget exceeded");
    }
    const unsigned K = h.exponent_p() + 1;
    std::map<Partition, unsigned long> tally;
    std::vector<std::uint64_t> el(rank);
    const auto total = static_cast<std::uint64_t>(tuples);
    for (std::uint64_t tup = 0; tup < total; ++tup) {
        MatrixModP rel(static_cast<unsigned>(rank), static_cast<unsigned>(rank) + u, p, K);
        for (std::size_t i = 0; i < rank; ++i) rel.set(static_cast<unsigned>(i), static_cast<unsigned>(i), g.mod[i]);
        std::uint64_t t = tup;
        for (unsigned j = 0; j < u; ++j) {
            g.decode(t % g.size, el);
            t /= g.size;
            for (std::size_t i = 0; i < rank; ++i)
                rel.set(static_cast<unsigned>(i), static_cast<unsigned>(rank) + j, el[i]);
        }
        std::vector<unsigned> vals = smith_normal_form_p(std::move(rel));
        std::vector<unsigned> parts;
        for (unsigned v : vals)
            if (v > 0) parts.push_back(v);
        ++tally[Partition(std::move(parts))];
    }
    std::map<Partition, Rat> law;
    for (const auto& [lam, cnt] : tally)
        law[lam] = make_rat(Int(static_cast<unsigned long>(cnt)), Int(static_cast<unsigned long>(total)));
    return law;
}

CokernelLaw cokernel_law_exact(unsigned n, std::int64_t p, unsigned K,
                               std::uint64_t matrix_budget) {
    std::uint64_t mod = 1;
    for (unsigned i = 0; i < K; ++i) mod *= static_cast<std::uint64_t>(p);
    unsigned __int128 total = 1;
    for (unsigned i = 0; i < n * n; ++i) {
        total *= mod;
        if (total > matrix_budget) throw std::length_error("cokernel_law_exact: matrix budget exceeded");
    }
    std::map<Partition, unsigned long> tally;
    unsigned long saturated = 0;
    const auto count = static_cast<std::uint64_t>(total);
    for (std::uint64_t m = 0; m < count; ++m) {
        MatrixModP a(n, n, p, K);
        std::uint64_t t = m;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                a.set(i, j, t % mod);
                t /= mod;
            }
        std::vector<unsigned> vals = smith_normal_form_p(std::move(a));
        if (!vals.empty() && vals.front() >= K) {
            ++saturated;
            continue;
        }
        std::vector<unsigned> parts;
        for (unsigned v : vals)
            if (v > 0) parts.push_back(v);
        ++tally[Partition(std::move(parts))];
    }
    CokernelLaw law;
    for (const auto& [lam, cnt] : tally)
        law.shapes[lam] = make_rat(Int(static_cast<unsigned long>(cnt)), Int(count));
    law.saturated = make_rat(Int(static_cast<unsigned long>(saturated)), Int(count));
    return law;
}

}  // namespace clh
