#include "thetakit/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "thetakit/guard.hpp"

namespace thetakit {

namespace {

bool next_combo(std::vector<int>& digits, int base) {
    for (auto& d : digits) {
        if (++d < base) return true;
        d = 0;
    }
    return false;
}

// Propagates candidate generator values to a full cochain along the Cayley
// graph; returns the table, or nullopt when the propagation is inconsistent
// on first contact (full verification happens in the Cocycle1 constructor).
std::optional<std::vector<int>> extend_from_generators(const ModulePtr& M,
                                                       const std::vector<int>& gens,
                                                       const std::vector<int>& images) {
    const auto& gamma = *M->group();
    const auto& m = M->module();
    int n = gamma.order();
    std::vector<int> values(n, -1);
    values[gamma.identity()] = 0;
    std::vector<int> frontier{gamma.identity()};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int s : frontier) {
            for (std::size_t i = 0; i < gens.size(); ++i) {
                int t = gamma.compose(s, gens[i]);
                int v = m.add(values[s], M->act(s, images[i]));
                if (values[t] < 0) {
                    values[t] = v;
                    next.push_back(t);
                } else if (values[t] != v) {
                    return std::nullopt;
                }
            }
        }
        frontier = std::move(next);
    }
    for (int v : values)
        if (v < 0) return std::nullopt;
    return values;
}

std::vector<int> prime_factor_list(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

std::vector<Cocycle1> z1(const ModulePtr& M) {
    const auto& gamma = *M->group();
    const auto& m = M->module();
    std::vector<int> gens = gamma.generating_set();
    check_guard(std::pow(static_cast<double>(m.size()), static_cast<double>(gens.size())),
                "z1 enumeration over generator images");
    std::set<std::vector<int>> tables;
    if (gens.empty()) {
        tables.insert(std::vector<int>{0});
    } else {
        std::vector<int> images(gens.size(), 0);
        do {
            auto table = extend_from_generators(M, gens, images);
            if (!table) continue;
            try {
                Cocycle1 xi(M, *table);
                tables.insert(xi.values());
            } catch (const std::invalid_argument&) {
                // candidate failed the full cocycle identity
            }
        } while (next_combo(images, m.size()));
    }
    std::vector<Cocycle1> out;
    out.reserve(tables.size());
    for (const auto& t : tables) out.emplace_back(M, t);
    return out;
}

std::vector<CohClass> h1(const ModulePtr& M) {
    std::set<std::vector<int>> reps;
    for (const Cocycle1& xi : z1(M)) reps.insert(CohClass::of(xi).representative());
    std::vector<CohClass> out;
    out.reserve(reps.size());
    for (const auto& r : reps) out.push_back(CohClass::of(Cocycle1(M, r)));
    return out;
}

std::vector<CohClass> h2(const ModulePtr& M) {
    const auto& gamma = *M->group();
    const auto& m = M->module();
    int n = gamma.order();
    int free_slots = (n - 1) * (n - 1);
    check_guard(std::pow(static_cast<double>(m.size()), static_cast<double>(free_slots)),
                "h2 enumeration over normalized two-cochains");
    std::set<std::vector<int>> reps;
    std::vector<int> free(std::max(free_slots, 1), 0);
    if (free_slots == 0) free.clear();
    auto identity_holds = [&](const std::vector<int>& table) {
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                for (int u = 0; u < n; ++u) {
                    int lhs = m.add(M->act(s, table[static_cast<std::size_t>(t) * n + u]),
                                    table[static_cast<std::size_t>(s) * n + gamma.compose(t, u)]);
                    int rhs = m.add(table[static_cast<std::size_t>(gamma.compose(s, t)) * n + u],
                                    table[static_cast<std::size_t>(s) * n + t]);
                    if (lhs != rhs) return false;
                }
        return true;
    };
    do {
        std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
        int k = 0;
        for (int s = 1; s < n; ++s)
            for (int t = 1; t < n; ++t) table[static_cast<std::size_t>(s) * n + t] = free[k++];
        if (!identity_holds(table)) continue;
        reps.insert(CohClass::of(Cocycle2(M, table)).representative());
    } while (!free.empty() && next_combo(free, m.size()));
    if (free.empty()) {
        std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
        reps.insert(CohClass::of(Cocycle2(M, table)).representative());
    }
    std::vector<CohClass> out;
    out.reserve(reps.size());
    for (const auto& r : reps) out.push_back(CohClass::of(Cocycle2(M, r)));
    return out;
}

CohClass restrict_class(const CohClass& x, const std::vector<int>& subgroup) {
    const auto& gamma = x.module()->group();
    if (!gamma->is_subgroup(subgroup)) throw std::invalid_argument("not a subgroup");
    auto [sub, to_parent] = FiniteGroup::subgroup_as_group(gamma, subgroup, "H");
    if (x.degree() == 1) return CohClass::of(x.representative1().restricted(sub, to_parent));
    return CohClass::of(x.representative2().restricted(sub, to_parent));
}

int period(const CohClass& x) {
    int bound = x.module()->module().exponent();
    for (int k = 1; k <= bound; ++k)
        if (x.scale(k).is_trivial()) return k;
    throw std::logic_error("class order does not divide the module exponent");
}

namespace {

// Restricted-triviality of a degree-1 class on a subgroup, without building
// the subgroup group: exists m with xi(h) = h.m - m for all h in H.
bool splits_on(const Cocycle1& xi, const std::vector<int>& H) {
    const auto& M = xi.module();
    const auto& m = M->module();
    for (int cand = 0; cand < m.size(); ++cand) {
        bool ok = true;
        for (int h : H) {
            if (xi.value(h) != m.subtract(M->act(h, cand), cand)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

} // namespace

PeriodIndexReport index_report(const CohClass& x) {
    if (x.degree() != 1) throw std::invalid_argument("index is defined for degree-1 classes only");
    const auto& gamma = x.module()->group();
    Cocycle1 xi = x.representative1();
    PeriodIndexReport rep;
    rep.period = period(x);
    auto subs = gamma->subgroups();
    // Scan largest subgroups first so the mindex witness is the first hit.
    std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    int gcd_all = 0, gcd_normal = 0, min_index = 0;
    for (const auto& H : subs) {
        if (!splits_on(xi, H)) continue;
        int idx = gamma->order() / static_cast<int>(H.size());
        gcd_all = std::gcd(gcd_all, idx);
        if (min_index == 0) {
            min_index = idx;
            rep.witnesses["mindex"] = H;
        }
        if (gamma->is_normal(H)) gcd_normal = std::gcd(gcd_normal, idx);
    }
    rep.index = gcd_all;
    rep.mindex = min_index;
    rep.galois_index = gcd_normal;
    // Witnesses for the gcd invariants are recorded only when attained.
    for (const auto& H : subs) {
        if (!splits_on(xi, H)) continue;
        int idx = gamma->order() / static_cast<int>(H.size());
        if (idx == rep.index && rep.witnesses.find("index") == rep.witnesses.end()) {
            rep.index_attained = true;
            rep.witnesses["index"] = H;
        }
        if (idx == rep.galois_index && gamma->is_normal(H) &&
            rep.witnesses.find("galois_index") == rep.witnesses.end())
            rep.witnesses["galois_index"] = H;
    }
    return rep;
}

PrimaryDecompositionCheck primary_decomposition_check(const CohClass& x) {
    if (x.degree() != 1) throw std::invalid_argument("degree-1 classes only");
    PrimaryDecompositionCheck out;
    PeriodIndexReport base = index_report(x);
    out.period = base.period;
    out.index = base.index;
    out.primes = prime_factor_list(out.period);
    out.period_divides_index = out.index % out.period == 0;
    out.same_prime_support = prime_factor_list(out.index) == out.primes;

    // CRT coefficients e_p with sum 1 mod period, e_p = 1 mod p^a, 0 elsewhere.
    int n = out.period;
    std::vector<CohClass> parts;
    CohClass sum = x.scale(0);
    long long product = 1;
    for (int p : out.primes) {
        int pa = 1;
        int rest = n;
        while (rest % p == 0) {
            pa *= p;
            rest /= p;
        }
        int cofactor = n / pa; // rest
        // e = cofactor * (cofactor^{-1} mod pa)
        int inv = 1;
        for (int cand = 1; cand < pa; ++cand)
            if ((cofactor % pa) * cand % pa == 1) {
                inv = cand;
                break;
            }
        int e = cofactor * inv % n;
        CohClass part = x.scale(e);
        out.part_periods.push_back(period(part));
        out.part_indices.push_back(index_report(part).index);
        product *= out.part_indices.back();
        sum = sum.add(part);
        parts.push_back(std::move(part));
    }
    if (out.primes.empty()) product = 1; // trivial class
    out.parts_sum_to_class = sum == x;
    out.product_formula = product == out.index;
    return out;
}

VanishingSubgroupResult vanishing_subgroup(const Cocycle1& xi) {
    const auto& gamma = xi.module()->group();
    const auto& m = xi.module()->module();
    VanishingSubgroupResult out;
    for (int s = 0; s < gamma->order(); ++s)
        if (xi.value(s) == 0) out.subgroup.push_back(s);
    if (!gamma->is_subgroup(out.subgroup))
        throw std::logic_error("vanishing set of a one-cocycle failed to be a subgroup");
    // xi is constant on cosets sH and injective across them.
    std::set<int> coset_values;
    std::set<int> seen;
    for (int s = 0; s < gamma->order(); ++s) {
        if (seen.count(s)) continue;
        int v = xi.value(s);
        for (int h : out.subgroup) {
            int sh = gamma->compose(s, h);
            seen.insert(sh);
            if (xi.value(sh) != v)
                throw std::logic_error("one-cocycle not constant on cosets of its vanishing set");
        }
        if (!coset_values.insert(v).second)
            throw std::logic_error("coset map of a one-cocycle failed to be injective");
    }
    out.coset_count = static_cast<int>(coset_values.size());
    if (out.coset_count > m.size())
        throw std::logic_error("coset map cannot inject into M");
    out.restriction_trivial = splits_on(xi, out.subgroup);
    return out;
}

Cocycle2 cup(const Cocycle1& a, const Cocycle1& b, const BilinearPairing& pairing) {
    const auto& gamma = *a.module()->group();
    if (b.module()->group()->order() != gamma.order())
        throw std::invalid_argument("cup product inputs over different groups");
    int n = gamma.order();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            table[static_cast<std::size_t>(s) * n + t] =
                pairing.value(a.value(s), b.module()->act(s, b.value(t)));
    return Cocycle2(pairing.c(), std::move(table));
}

ShortExactSequence::ShortExactSequence(ModulePtr a_, ModulePtr b_, ModulePtr c_,
                                       std::vector<int> incl_, std::vector<int> proj_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)),
      incl(std::move(incl_)), proj(std::move(proj_)) {
    const auto& A = a->module();
    const auto& B = b->module();
    const auto& C = c->module();
    int gamma_order = a->group()->order();
    if (b->group()->order() != gamma_order || c->group()->order() != gamma_order)
        throw std::invalid_argument("sequence modules over different groups");
    if (static_cast<int>(incl.size()) != A.size() || static_cast<int>(proj.size()) != B.size())
        throw std::invalid_argument("sequence maps have wrong sizes");
    std::set<int> image;
    for (int x = 0; x < A.size(); ++x) {
        if (!image.insert(incl[x]).second) throw std::invalid_argument("inclusion not injective");
        for (int y = 0; y < A.size(); ++y)
            if (incl[A.add(x, y)] != B.add(incl[x], incl[y]))
                throw std::invalid_argument("inclusion not additive");
    }
    std::set<int> proj_image;
    for (int x = 0; x < B.size(); ++x) {
        proj_image.insert(proj[x]);
        for (int y = 0; y < B.size(); ++y)
            if (proj[B.add(x, y)] != C.add(proj[x], proj[y]))
                throw std::invalid_argument("projection not additive");
    }
    if (static_cast<int>(proj_image.size()) != C.size())
        throw std::invalid_argument("projection not surjective");
    for (int x = 0; x < B.size(); ++x) {
        bool in_kernel = proj[x] == 0;
        bool in_image = image.count(x) > 0;
        if (in_kernel != in_image) throw std::invalid_argument("sequence not exact in the middle");
    }
    for (int s = 0; s < gamma_order; ++s) {
        for (int x = 0; x < A.size(); ++x)
            if (incl[a->act(s, x)] != b->act(s, incl[x]))
                throw std::invalid_argument("inclusion not equivariant");
        for (int x = 0; x < B.size(); ++x)
            if (proj[b->act(s, x)] != c->act(s, proj[x]))
                throw std::invalid_argument("projection not equivariant");
    }
}

int ShortExactSequence::section_least(int c_elem) const {
    for (int x = 0; x < b->module().size(); ++x)
        if (proj[x] == c_elem) return x;
    throw std::logic_error("projection misses an element");
}

int ShortExactSequence::section_greatest(int c_elem) const {
    if (c_elem == 0) return 0; // sections stay normalized so the cocycle is
    for (int x = b->module().size() - 1; x >= 0; --x)
        if (proj[x] == c_elem) return x;
    throw std::logic_error("projection misses an element");
}

int ShortExactSequence::pullback_to_a(int b_elem) const {
    for (int x = 0; x < a->module().size(); ++x)
        if (incl[x] == b_elem) return x;
    throw std::logic_error("element is not in the image of the inclusion");
}

Cocycle2 connecting2_cocycle(const ShortExactSequence& ses, const Cocycle1& x,
                             SectionChoice section) {
    const auto& gamma = *ses.c->group();
    const auto& B = ses.b->module();
    int n = gamma.order();
    auto lift = [&](int c_elem) {
        return section == SectionChoice::Least ? ses.section_least(c_elem)
                                               : ses.section_greatest(c_elem);
    };
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            int bs = lift(x.value(s));
            int bt = lift(x.value(t));
            int bst = lift(x.value(gamma.compose(s, t)));
            int v = B.subtract(B.add(bs, ses.b->act(s, bt)), bst);
            table[static_cast<std::size_t>(s) * n + t] = ses.pullback_to_a(v);
        }
    return Cocycle2(ses.a, std::move(table));
}

CohClass connecting2(const ShortExactSequence& ses, const CohClass& x, SectionChoice section) {
    if (x.degree() != 1) throw std::invalid_argument("connecting map takes degree-1 classes");
    return CohClass::of(connecting2_cocycle(ses, x.representative1(), section));
}

CohClass push_through_inclusion(const ShortExactSequence& ses, const CohClass& x) {
    if (x.degree() != 2) throw std::invalid_argument("degree-2 classes only");
    Cocycle2 c = x.representative2();
    const auto& gamma = *ses.a->group();
    int n = gamma.order();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            table[static_cast<std::size_t>(s) * n + t] = ses.incl[c.value(s, t)];
    return CohClass::of(Cocycle2(ses.b, std::move(table)));
}

} // namespace thetakit
