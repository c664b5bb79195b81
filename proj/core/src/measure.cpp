#include "clh/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace clh {

namespace {

// prod_{i=a..b} (1 - q^i); empty product for b < a
Rat qpoch(const Rat& q, unsigned long a, unsigned long b) {
    Rat out(1);
    Rat qi = pow_rat(q, static_cast<long>(a));
    for (unsigned long i = a; i <= b; ++i) {
        out *= Rat(1) - qi;
        qi *= q;
    }
    return out;
}

Int gl_order_int(unsigned long r, std::int64_t p) {
    Int pn = pow_int(Int(static_cast<long>(p)), r);
    Int out(1);
    Int pi(1);
    for (unsigned long i = 0; i < r; ++i) {
        out *= pn - pi;
        pi *= static_cast<long>(p);
    }
    return out;
}

}  // namespace

MeasureContext::MeasureContext(std::int64_t p_, unsigned T_, unsigned long B_)
    : p(p_), T(T_), B(B_) {
    if (!is_prime_i64(p)) throw std::domain_error("MeasureContext: p must be prime");
}

Rat cl_weight(const Partition& lam, std::int64_t p) {
    return make_rat(Int(1), aut_order(lam, p));
}

Rat weight(const Partition& lam, const MeasureContext& ctx) { return cl_weight(lam, ctx.p); }

EvalResult total_weight(const MeasureContext& ctx) {
    return eval_euler_product(ctx.p, ctx.T).reciprocal();
}

EvalResult cl_prob(const Partition& lam, const MeasureContext& ctx) {
    return eval_euler_product(ctx.p, ctx.T) * weight(lam, ctx);
}

Int surjection_count(const GroupShape& shape, unsigned k, const MeasureContext& ctx,
                     std::uint64_t tuple_budget) {
    const unsigned long ord = shape.order_p();
    if (k == 0) return ord == 0 ? Int(1) : Int(0);
    Int tuples = pow_int(Int(static_cast<long>(ctx.p)), ord * k);
    if (tuples > Int(static_cast<unsigned long>(tuple_budget)))
        throw std::length_error("surjection_count: tuple budget exceeded");

    // cyclic factor moduli p^{e_i}, one per copy
    std::vector<std::uint64_t> mod;
    for (auto [e, r] : shape.blocks)
        for (unsigned i = 0; i < r; ++i)
            mod.push_back(static_cast<std::uint64_t>(pow_int(Int(static_cast<long>(ctx.p)), e).get_ui()));
    const std::size_t rank = mod.size();
    const std::uint64_t gsize = pow_int(Int(static_cast<long>(ctx.p)), ord).get_ui();

    auto decode = [&](std::uint64_t idx, std::vector<std::uint64_t>& el) {
        for (std::size_t t = 0; t < rank; ++t) {
            el[t] = idx % mod[t];
            idx /= mod[t];
        }
    };
    auto encode = [&](const std::vector<std::uint64_t>& el) {
        std::uint64_t idx = 0;
        for (std::size_t t = rank; t-- > 0;) idx = idx * mod[t] + el[t];
        return idx;
    };

    const std::uint64_t total = tuples.get_ui();
    std::vector<std::uint64_t> gen_idx(k, 0);
    std::vector<std::vector<std::uint64_t>> gens(k, std::vector<std::uint64_t>(rank));
    std::vector<char> seen(gsize);
    std::vector<std::uint64_t> stack;
    std::vector<std::uint64_t> cur(rank), nxt(rank);

    Int count(0);
    for (std::uint64_t tup = 0; tup < total; ++tup) {
        std::uint64_t t = tup;
        for (unsigned j = 0; j < k; ++j) {
            gen_idx[j] = t % gsize;
            t /= gsize;
            decode(gen_idx[j], gens[j]);
        }
        // subgroup closure from the k chosen elements
        std::fill(seen.begin(), seen.end(), 0);
        stack.clear();
        seen[0] = 1;
        stack.push_back(0);
        std::uint64_t reached = 1;
        while (!stack.empty() && reached < gsize) {
            std::uint64_t x = stack.back();
            stack.pop_back();
            decode(x, cur);
            for (unsigned j = 0; j < k; ++j) {
                for (std::size_t d = 0; d < rank; ++d) nxt[d] = (cur[d] + gens[j][d]) % mod[d];
                std::uint64_t y = encode(nxt);
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
        if (reached == gsize) count += 1;
    }
    return count;
}

Rat twisted_weight_wk(const Partition& lam, unsigned k, const MeasureContext& ctx) {
    unsigned r = lam.num_parts();
    if (k < r) return Rat(0);
    return weight(lam, ctx) * qpoch(ctx.q(), k - r + 1, k);
}

Rat zeta_k(unsigned k, long s, std::int64_t p) {
    if (!is_prime_i64(p)) throw std::domain_error("zeta_k: p must be prime");
    Rat q = inv_of(p);
    Rat out(1);
    for (unsigned i = 1; i <= k; ++i) {
        long e = s + static_cast<long>(i);
        if (e == 0) throw std::domain_error("zeta_k: pole at s + i = 0");
        out /= Rat(1) - pow_rat(q, e);
    }
    return out;
}

double zeta_k_real(unsigned k, double s, std::int64_t p) {
    double out = 1.0;
    for (unsigned i = 1; i <= k; ++i) {
        double f = 1.0 - std::pow(static_cast<double>(p), -(s + i));
        if (f == 0.0) throw std::domain_error("zeta_k_real: pole");
        out /= f;
    }
    return out;
}

GroupFunctional GroupFunctional::bounded(std::function<Rat(const Partition&)> fn, const Rat& bound) {
    return {std::move(fn), bound, 0};
}

GroupFunctional GroupFunctional::rank_power_bounded(std::function<Rat(const Partition&)> fn,
                                                    unsigned power, const Rat& factor) {
    return {std::move(fn), factor, power};
}

EvalResult expected_value(const GroupFunctional& f, unsigned u, const MeasureContext& ctx) {
    if (!f.f) throw std::invalid_argument("expected_value: functional without a growth certificate");
    const Rat q = ctx.q();

    Rat partial(0);
    for_each_partition(ctx.B, std::nullopt, std::nullopt, [&](const Partition& lam) {
        Rat term = weight(lam, ctx) * f.f(lam);
        if (term != 0) partial += term * pow_rat(q, static_cast<long>(u * lam.size()));
    });

    // Tail of the weighted sum beyond order B.  The mass of groups with
    // order p^n and rank r is q^{n-r+r^2} / (|GL(r,p)|/p^{r^2} * ...) and is
    // bounded by q^{n-r+r^2} / LB^3 with LB a certified lower bound of
    // prod_{i>=1}(1-q^i); combining with |f| <= scale * p^{g r} leaves a
    // geometric-with-linear-factor series in n.
    Rat lb = eval_euler_product(ctx.p, std::max(ctx.T, 20u)).lo();
    unsigned g = f.rank_power;
    Int mg = pow_int(Int(static_cast<long>(ctx.p)),
                     static_cast<unsigned long>(g + 1) * (g + 1) / 4);
    Rat x = pow_rat(q, static_cast<long>(u) + 1);
    Rat series_tail = tail_poly_geometric(x, 1, ctx.B) +
                      pow_rat(x, static_cast<long>(ctx.B) + 1) / (Rat(1) - x);
    Rat tail = f.scale * Rat(mg) * series_tail / (lb * lb * lb);

    EvalResult numerator{partial, tail};
    EvalResult normalizer = eval_euler_product(
        ctx.p, std::max<unsigned>(ctx.T, u + 10), [&](unsigned i) { return i > u; });
    return numerator * normalizer;
}

EvalResult prob_order(unsigned long n, const MeasureContext& ctx) {
    EvalResult prod = eval_euler_product(ctx.p, std::max<unsigned>(ctx.T, static_cast<unsigned>(n) + 10),
                                         [&](unsigned i) { return i > n; });
    return prod * pow_rat(ctx.q(), static_cast<long>(n));
}

EvalResult prob_rank(unsigned r, const MeasureContext& ctx) {
    const Rat q = ctx.q();
    Rat factor = pow_rat(q, static_cast<long>(r) * r);
    Rat denom = qpoch(q, 1, r);
    factor /= denom * denom;
    return eval_euler_product(ctx.p, ctx.T) * factor;
}

EvalResult prob_rank_order(unsigned long n, unsigned r, const MeasureContext& ctx) {
    if (r > n || (r == 0 && n > 0)) return EvalResult::exact(Rat(0));
    const Rat q = ctx.q();
    Rat numer = pow_rat(q, static_cast<long>(n - r)) * qpoch(q, 1, n == 0 ? 0 : n - 1);
    Rat denom = Rat(gl_order_int(r, ctx.p)) * qpoch(q, 1, r == 0 ? 0 : r - 1) * qpoch(q, 1, n - r);
    return eval_euler_product(ctx.p, ctx.T) * (numer / denom);
}

EvalResult prob_exponent_le(unsigned e, const MeasureContext& ctx) {
    const unsigned m = 2 * e + 3;
    auto keep = [&](unsigned i) {
        unsigned rem = i % m;
        return rem == 0 || rem == e + 1 || rem == e + 2;
    };
    return eval_euler_product(ctx.p, ctx.T, keep);
}

Rat moment_p_rank(unsigned k, const MeasureContext& ctx) {
    const Rat q = ctx.q();
    Rat phi_k = qpoch(q, 1, k);
    Rat acc(0);
    for (unsigned i = 0; i <= k; ++i) {
        Rat term = pow_rat(q, -static_cast<long>(i) * static_cast<long>(k - i)) * phi_k;
        term /= qpoch(q, 1, i) * qpoch(q, 1, k - i);
        acc += term;
    }
    return acc;
}

std::map<Partition, Rat> order_moment_poly(unsigned k) {
    if (k < 1) throw std::invalid_argument("order_moment_poly: k must be >= 1");
    std::map<Partition, Rat> poly;
    Int kfact;
    mpz_fac_ui(kfact.get_mpz_t(), k);
    for (const Partition& lam : enumerate_partitions(k)) {
        if (lam.size() != k) continue;
        Int denom(1);
        for (auto [e, r] : to_group_shape(lam).blocks) {
            Int rf, ef;
            mpz_fac_ui(rf.get_mpz_t(), r);
            mpz_fac_ui(ef.get_mpz_t(), e);
            denom *= rf * pow_int(ef, r);
        }
        poly[lam] = make_rat(kfact, denom);
    }
    return poly;
}

QSeries order_moment_series(unsigned k, unsigned trunc) {
    std::vector<QSeries> eis;
    eis.reserve(k);
    for (unsigned e = 1; e <= k; ++e) eis.push_back(eisenstein(e, trunc));
    QSeries acc(trunc);
    for (const auto& [lam, coeff] : order_moment_poly(k)) {
        QSeries mono = QSeries::one(trunc);
        for (unsigned part : lam.parts()) mono *= eis[part - 1];
        acc = acc + mono * coeff;
    }
    return acc;
}

Rat order_moment_scale(unsigned k) {
    Rat s(0);
    for (const auto& [lam, coeff] : order_moment_poly(k)) s += coeff;
    return s;
}

EvalResult order_moment_value(unsigned k, std::int64_t p, unsigned trunc) {
    // coefficient n of f_k(E_1..E_k) is at most scale * n^{2k-1}: each factor
    // E_e has coefficients sigma_{e-1}(n) <= n^e, and a product of m <= k
    // series of total weight k contributes at most n^{k+m-1} per monomial
    return eval_poly_growth(order_moment_series(k, trunc), p, 2 * k - 1, order_moment_scale(k));
}

EvalResult u_prob(const Partition& lam, unsigned u, const MeasureContext& ctx) {
    if (u < 1) throw std::invalid_argument("u_prob: u must be >= 1");
    EvalResult prod = eval_euler_product(ctx.p, std::max<unsigned>(ctx.T, u + 10),
                                         [&](unsigned i) { return i > u; });
    Rat factor = pow_rat(ctx.q(), static_cast<long>(u * lam.size())) * weight(lam, ctx);
    return prod * factor;
}

}  // namespace clh
