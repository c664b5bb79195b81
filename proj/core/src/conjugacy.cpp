#include "clh/conjugacy.hpp"

#include <algorithm>
#include <stdexcept>

#include "clh/fplinalg.hpp"

namespace clh {

namespace {

// remainder of a mod b over F_p, coefficients ascending, b monic
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b, std::int64_t p) {
    const auto pm = static_cast<std::uint64_t>(p);
    while (a.size() >= b.size()) {
        std::uint64_t lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t sub = (lead * b[i]) % pm;
                std::uint64_t cur = a[shift + i];
                a[shift + i] = static_cast<std::uint32_t>((cur + pm - sub) % pm);
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

void all_monic_of_degree(std::int64_t p, unsigned d, const std::function<void(std::vector<std::uint32_t>&)>& fn) {
    std::vector<std::uint32_t> c(d + 1, 0);
    c[d] = 1;
    for (;;) {
        fn(c);
        unsigned i = 0;
        while (i < d && c[i] + 1u == static_cast<std::uint32_t>(p)) c[i++] = 0;
        if (i == d) break;
        ++c[i];
    }
}

}  // namespace

PolyFp::PolyFp(std::vector<std::uint32_t> coeffs, std::int64_t p) : c_(std::move(coeffs)), p_(p) {
    if (!is_prime_i64(p)) throw std::domain_error("PolyFp: p must be prime");
    if (c_.size() < 2) throw std::invalid_argument("PolyFp: degree must be >= 1");
    if (c_.back() != 1) throw std::invalid_argument("PolyFp: must be monic");
    for (auto v : c_)
        if (v >= static_cast<std::uint32_t>(p)) throw std::invalid_argument("PolyFp: coefficient not reduced");
}

PolyFp PolyFp::x_minus(std::uint64_t a, std::int64_t p) {
    auto neg = static_cast<std::uint32_t>((static_cast<std::uint64_t>(p) - a % p) % p);
    return PolyFp({neg, 1}, p);
}

std::string PolyFp::to_string() const {
    std::string out;
    for (unsigned i = degree() + 1; i-- > 0;) {
        std::uint32_t v = c_[i];
        if (v == 0 && !(i == 0 && out.empty())) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(v);
        } else {
            if (v != 1) out += std::to_string(v);
            out += 'x';
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

bool PolyFp::operator<(const PolyFp& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return c_ < o.c_;
}

bool poly_is_irreducible(const PolyFp& f) {
    const unsigned d = f.degree();
    if (d == 1) return true;
    std::vector<std::uint32_t> fc(f.degree() + 1);
    for (unsigned i = 0; i <= d; ++i) fc[i] = f.coeff(i);
    bool reducible = false;
    for (unsigned dd = 1; dd <= d / 2 && !reducible; ++dd)
        all_monic_of_degree(f.p(), dd, [&](std::vector<std::uint32_t>& g) {
            if (!reducible && poly_mod(fc, g, f.p()).empty()) reducible = true;
        });
    return !reducible;
}

std::vector<PolyFp> irreducible_polys(std::int64_t p, unsigned d, std::uint64_t budget) {
    if (d < 1) throw std::invalid_argument("irreducible_polys: degree must be >= 1");
    unsigned __int128 total = 1;
    for (unsigned i = 0; i < d; ++i) total *= static_cast<unsigned>(p);
    if (total > budget) throw std::length_error("irreducible_polys: search budget exceeded");
    std::vector<PolyFp> out;
    all_monic_of_degree(p, d, [&](std::vector<std::uint32_t>& c) {
        PolyFp f(c, p);
        if (poly_is_irreducible(f)) out.push_back(std::move(f));
    });
    std::sort(out.begin(), out.end());
    return out;
}

const Partition* ClassLabel::partition_of(const PolyFp& f) const {
    for (const auto& [poly, lam] : blocks)
        if (poly == f) return &lam;
    return nullptr;
}

void for_each_class(unsigned n, std::int64_t p, const std::function<void(const ClassLabel&)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_class: n must be >= 1");
    std::vector<PolyFp> polys;
    for (unsigned d = 1; d <= n; ++d)
        for (PolyFp& f : irreducible_polys(p, d))
            if (!f.is_x()) polys.push_back(std::move(f));
    std::sort(polys.begin(), polys.end());

    // partitions indexed by exact size
    std::vector<std::vector<Partition>> by_size(n + 1);
    for (const Partition& lam : enumerate_partitions(n)) by_size[lam.size()].push_back(lam);

    ClassLabel label{n, {}};
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t idx, unsigned remaining) {
        if (remaining == 0) {
            fn(label);
            return;
        }
        if (idx >= polys.size()) return;
        const unsigned deg = polys[idx].degree();
        if (deg > remaining) return;  // polys sorted by degree; nothing further fits
        rec(idx + 1, remaining);      // this polynomial absent
        for (unsigned k = 1; k * deg <= remaining; ++k)
            for (const Partition& lam : by_size[k]) {
                label.blocks.emplace_back(polys[idx], lam);
                rec(idx + 1, remaining - k * deg);
                label.blocks.pop_back();
            }
    };
    rec(0, n);
}

std::vector<ClassLabel> enumerate_classes(unsigned n, std::int64_t p) {
    std::vector<ClassLabel> out;
    for_each_class(n, p, [&](const ClassLabel& c) { out.push_back(c); });
    return out;
}

Int centralizer_order(const ClassLabel& label, std::int64_t p) {
    Int out(1);
    for (const auto& [poly, lam] : label.blocks)
        out *= aut_order_base(to_group_shape(lam), pow_int(Int(static_cast<long>(p)), poly.degree()));
    return out;
}

Int class_size(const ClassLabel& label, std::int64_t p) {
    Int g = gl_order(label.n, p);
    Int c = centralizer_order(label, p);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (r != 0) throw std::logic_error("class_size: centralizer order does not divide the group order");
    return q;
}

std::string class_label_to_json(const ClassLabel& label, std::int64_t p) {
    std::string out = "{\"n\":" + std::to_string(label.n) + ",\"p\":" + std::to_string(p) +
                      ",\"blocks\":[";
    for (std::size_t i = 0; i < label.blocks.size(); ++i) {
        if (i) out += ',';
        out += "{\"poly\":\"" + label.blocks[i].first.to_string() + "\",\"partition\":" +
               label.blocks[i].second.to_json_array() + "}";
    }
    return out + "]}";
}

std::map<Partition, Rat> exact_marginal(unsigned n, std::int64_t p, std::uint64_t a) {
    if (a % static_cast<std::uint64_t>(p) == 0)
        throw std::invalid_argument("exact_marginal: a must be a unit");
    PolyFp target = PolyFp::x_minus(a, p);
    Int g = gl_order(n, p);
    std::map<Partition, Int> sizes;
    for_each_class(n, p, [&](const ClassLabel& label) {
        const Partition* lam = label.partition_of(target);
        sizes[lam ? *lam : Partition()] += class_size(label, p);
    });
    std::map<Partition, Rat> out;
    for (const auto& [lam, sz] : sizes) out[lam] = make_rat(sz, g);
    return out;
}

Int class_count_by_genfun(unsigned n, std::int64_t p) {
    // partition counts up to n
    std::vector<unsigned long> pc(n + 1, 0);
    for_each_partition(n, std::nullopt, std::nullopt, [&](const Partition& lam) { ++pc[lam.size()]; });
    QSeries acc = QSeries::one(n);
    for (unsigned d = 1; d <= n; ++d) {
        std::size_t nd = irreducible_polys(p, d).size() - (d == 1 ? 1 : 0);  // X excluded
        QSeries factor(n);
        for (unsigned k = 0; d * k <= n; ++k) factor.set_coeff(d * k, Rat(static_cast<unsigned long>(pc[k])));
        for (std::size_t i = 0; i < nd; ++i) acc *= factor;
    }
    const Rat& c = acc.coeff(n);
    if (c.get_den() != 1) throw std::logic_error("class_count_by_genfun: non-integer count");
    return c.get_num();
}

EvalResult tv_to_cl(const std::map<Partition, Rat>& dist, unsigned long support_bound,
                    const MeasureContext& ctx) {
    // sum |dist - P| over partitions up to the bound, plus the limiting
    // measure's mass beyond it (where dist vanishes); halve at the end
    EvalResult acc = EvalResult::exact(Rat(0));
    EvalResult seen = EvalResult::exact(Rat(0));
    for_each_partition(support_bound, std::nullopt, std::nullopt, [&](const Partition& lam) {
        EvalResult prob = cl_prob(lam, ctx);
        seen = seen + prob;
        auto it = dist.find(lam);
        Rat d = it == dist.end() ? Rat(0) : it->second;
        // |d - prob| as an enclosure
        Rat lo = prob.lo() - d, hi = prob.hi() - d;
        Rat alo, ahi;
        if (lo >= 0) {
            alo = lo;
            ahi = hi;
        } else if (hi <= 0) {
            alo = -hi;
            ahi = -lo;
        } else {
            alo = 0;
            ahi = std::max(Rat(-lo), hi);
        }
        acc = acc + EvalResult::from_bounds(alo, ahi);
    });
    EvalResult rest = EvalResult::exact(Rat(1)) - seen;
    if (rest.lo() < 0) rest = EvalResult::from_bounds(Rat(0), rest.hi() > 0 ? rest.hi() : Rat(0));
    acc = acc + rest;
    return acc * make_rat(Int(1), Int(2));
}

CycleIndexReport cycle_index_check(unsigned n, const MeasureContext& ctx) {
    CycleIndexReport rep{n, ctx.p, Int(0), gl_order(n, ctx.p), false, Rat(0), false,
                         EvalResult::exact(Rat(0)), {}};
    for_each_class(n, ctx.p, [&](const ClassLabel& label) {
        unsigned long degsum = 0;
        for (const auto& [poly, lam] : label.blocks) degsum += poly.degree() * lam.size();
        if (degsum != n) rep.failures.push_back("degree sum violated for a class label");
        rep.class_sum += class_size(label, ctx.p);
    });
    rep.class_sum_ok = rep.class_sum == rep.group_order;
    if (!rep.class_sum_ok) rep.failures.push_back("class sizes do not sum to |GL(n,p)|");

    std::map<Partition, Rat> marginal = exact_marginal(n, ctx.p, 1);
    for (const auto& [lam, v] : marginal) rep.marginal_sum += v;
    rep.marginal_sum_ok = rep.marginal_sum == 1;
    if (!rep.marginal_sum_ok) rep.failures.push_back("marginal does not sum to 1");

    rep.tv_to_cl = tv_to_cl(marginal, n, ctx);
    return rep;
}

}  // namespace clh
