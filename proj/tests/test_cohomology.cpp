#include "doctest.h"

#include <numeric>

#include "thetakit/catalog.hpp"
#include "thetakit/cohomology.hpp"

using namespace thetakit;

namespace {

ModulePtr trivial_mod(const GroupPtr& g, std::vector<int> div) {
    return GammaModule::trivial(g, FiniteAbelianGroup(std::move(div)));
}

} // namespace

TEST_CASE("coboundaries") {
    auto c2 = FiniteGroup::cyclic(2);
    auto m = GammaModule::by_units(c2, FiniteAbelianGroup({3}), {1, 2});
    CHECK(Cocycle1::coboundary(m, 0).is_zero());
    auto trivial = trivial_mod(c2, {3});
    for (int x = 0; x < 3; ++x) CHECK(Cocycle1::coboundary(trivial, x).is_zero());
    // sigma.1 - 1 = -2 = 1 under negation.
    CHECK(Cocycle1::coboundary(m, 1).value(1) == 1);
}

TEST_CASE("h1 counts") {
    CHECK(h1(trivial_mod(FiniteGroup::cyclic(2), {2})).size() == 2);
    CHECK(h1(trivial_mod(FiniteGroup::cyclic(3), {2})).size() == 1);
    auto neg = GammaModule::by_units(FiniteGroup::cyclic(2), FiniteAbelianGroup({3}), {1, 2});
    CHECK(z1(neg).size() == 3);
    CHECK(h1(neg).size() == 1);
}

TEST_CASE("h2 counts") {
    CHECK(h2(trivial_mod(FiniteGroup::cyclic(2), {2})).size() == 2);
    for (int n : {2, 3, 4})
        CHECK(h2(trivial_mod(FiniteGroup::cyclic(n), {n})).size() == static_cast<std::size_t>(n));
    CHECK(h2(trivial_mod(FiniteGroup::cyclic(3), {2})).size() == 1);
}

TEST_CASE("h2 with a nontrivial action") {
    // H^2(C2, Z/3 with negation) vanishes: the fixed module is 0.
    auto neg = GammaModule::by_units(FiniteGroup::cyclic(2), FiniteAbelianGroup({3}), {1, 2});
    auto classes = h2(neg);
    CHECK(classes.size() == 1);
    CHECK(classes.front().is_trivial());
}

TEST_CASE("degree-2 restriction stays inside the subgroup's class list") {
    auto c4 = FiniteGroup::cyclic(4);
    auto m = GammaModule::trivial(c4, FiniteAbelianGroup({4}));
    auto classes = h2(m);
    REQUIRE(classes.size() == 4);
    std::vector<int> half{0, 2};
    auto [sub, to_parent] = FiniteGroup::subgroup_as_group(c4, half, "C2");
    auto sub_classes = h2(m->restricted(sub, to_parent));
    for (const CohClass& cls : classes) {
        CHECK(restrict_class(cls, {0}).is_trivial());
        CHECK(restrict_class(cls, {0, 1, 2, 3}) == cls);
        CohClass res = restrict_class(cls, half);
        bool member = false;
        for (const CohClass& s : sub_classes) member |= s == res;
        CHECK(member);
        CHECK(period(res) <= 2); // H^2(C2, Z/4) has exponent 2
    }
}

TEST_CASE("restriction") {
    auto s3 = FiniteGroup::symmetric3();
    auto m = trivial_mod(s3, {2});
    // Sign character: odd permutations are indices 1, 2, 5.
    Cocycle1 sign(m, {0, 1, 1, 0, 0, 1});
    CohClass cls = CohClass::of(sign);
    CHECK(restrict_class(cls, {0, 1, 2, 3, 4, 5}) == cls);
    CHECK(restrict_class(cls, {0}).is_trivial());
    CHECK(restrict_class(cls, {0, 3, 4}).is_trivial()); // A3
    CHECK_FALSE(restrict_class(cls, {0, 1}).is_trivial());
    CHECK_THROWS_AS(restrict_class(cls, {0, 3}), std::invalid_argument);
}

TEST_CASE("period") {
    auto c6 = FiniteGroup::cyclic(6);
    auto m6 = trivial_mod(c6, {6});
    CHECK(period(CohClass::of(Cocycle1(m6, {0, 0, 0, 0, 0, 0}))) == 1);
    auto c2 = FiniteGroup::cyclic(2);
    CHECK(period(CohClass::of(Cocycle1(trivial_mod(c2, {2}), {0, 1}))) == 2);
    // Identity character of C6 = sum of its order-2 and order-3 parts.
    Cocycle1 order2(m6, {0, 3, 0, 3, 0, 3});
    Cocycle1 order3(m6, {0, 4, 2, 0, 4, 2});
    Cocycle1 full = order2.add(order3);
    CHECK(full.values() == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(period(CohClass::of(full)) == 6);
    CHECK(period(CohClass::of(order2)) == 2);
    CHECK(period(CohClass::of(order3)) == 3);
}

TEST_CASE("index report") {
    auto c2 = FiniteGroup::cyclic(2);
    auto trivial_cls = CohClass::of(Cocycle1(trivial_mod(c2, {2}), {0, 0}));
    PeriodIndexReport rep = index_report(trivial_cls);
    CHECK(rep.period == 1);
    CHECK(rep.index == 1);
    CHECK(rep.mindex == 1);

    auto s3 = FiniteGroup::symmetric3();
    Cocycle1 sign(trivial_mod(s3, {2}), {0, 1, 1, 0, 0, 1});
    rep = index_report(CohClass::of(sign));
    CHECK(rep.index == 2);
    CHECK(rep.mindex == 2);
    CHECK(rep.galois_index == 2);
    CHECK(rep.witnesses.at("mindex") == std::vector<int>{0, 3, 4}); // A3
    CHECK(rep.index_attained);

    auto v4 = FiniteGroup::klein_four();
    Cocycle1 chi(trivial_mod(v4, {2}), {0, 1, 0, 1});
    rep = index_report(CohClass::of(chi));
    CHECK(rep.index == 2);
    CHECK(rep.mindex == 2);

    CHECK_THROWS_AS(index_report(h2(trivial_mod(c2, {2})).front()),
                    std::invalid_argument);
}

TEST_CASE("primary decomposition product formula") {
    auto c6 = FiniteGroup::cyclic(6);
    auto m6 = trivial_mod(c6, {6});
    Cocycle1 full(m6, {0, 1, 2, 3, 4, 5});
    PrimaryDecompositionCheck dec = primary_decomposition_check(CohClass::of(full));
    CHECK(dec.period == 6);
    CHECK(dec.primes == std::vector<int>{2, 3});
    CHECK(dec.part_periods == std::vector<int>{2, 3});
    CHECK(dec.part_indices == std::vector<int>{2, 3});
    CHECK(dec.index == 6);
    CHECK(dec.ok());

    // Prime order: the decomposition is the class itself.
    auto c3 = FiniteGroup::cyclic(3);
    Cocycle1 chi(trivial_mod(c3, {3}), {0, 1, 2});
    dec = primary_decomposition_check(CohClass::of(chi));
    CHECK(dec.primes == std::vector<int>{3});
    CHECK(dec.part_indices == std::vector<int>{3});
    CHECK(dec.ok());

    dec = primary_decomposition_check(CohClass::of(Cocycle1(m6, std::vector<int>(6, 0))));
    CHECK(dec.primes.empty());
    CHECK(dec.index == 1);
    CHECK(dec.ok());
}

TEST_CASE("vanishing subgroup of a one-cocycle") {
    auto c2 = FiniteGroup::cyclic(2);
    auto m2 = trivial_mod(c2, {2});
    auto res = vanishing_subgroup(Cocycle1(m2, {0, 0}));
    CHECK(res.subgroup == std::vector<int>{0, 1});
    CHECK(res.coset_count == 1);
    CHECK(res.restriction_trivial);

    res = vanishing_subgroup(Cocycle1(m2, {0, 1}));
    CHECK(res.subgroup == std::vector<int>{0});
    CHECK(res.coset_count == 2);

    auto neg = GammaModule::by_units(c2, FiniteAbelianGroup({3}), {1, 2});
    res = vanishing_subgroup(Cocycle1(neg, {0, 1}));
    CHECK(res.subgroup == std::vector<int>{0});
    CHECK(res.coset_count == 2); // two cosets inject into three elements
    CHECK(res.restriction_trivial);
}

TEST_CASE("catalog sweep: period-index laws and coprime restriction") {
    for (const auto& inst : catalog_modules()) {
        for (const CohClass& cls : h1(inst.module)) {
            PrimaryDecompositionCheck dec = primary_decomposition_check(cls);
            CHECK(dec.ok());
            PeriodIndexReport rep = index_report(cls);
            CHECK(rep.galois_index % rep.index == 0);
            if (inst.module->group()->is_abelian()) CHECK(rep.galois_index == rep.index);
            CHECK(rep.mindex % rep.index == 0);
            CHECK(inst.module->module().exponent() % rep.period == 0);
            // The index divides every splitting-subgroup index.
            for (const auto& H : inst.module->group()->subgroups())
                if (restrict_class(cls, H).is_trivial())
                    CHECK((inst.module->group()->order() / static_cast<int>(H.size())) %
                              rep.index ==
                          0);
            // Observational: restriction to subgroups of index prime to the
            // period preserves period and index.
            for (const auto& H : inst.module->group()->subgroups()) {
                int idx = inst.module->group()->order() / static_cast<int>(H.size());
                if (std::gcd(idx, rep.period) != 1) continue;
                CohClass restricted = restrict_class(cls, H);
                CHECK(period(restricted) == rep.period);
                if (restricted.degree() == 1)
                    CHECK(index_report(restricted).index == rep.index);
            }
        }
        for (const Cocycle1& xi : z1(inst.module)) {
            auto res = vanishing_subgroup(xi);
            CHECK(res.coset_count <= inst.module->module().size());
            CHECK(res.restriction_trivial);
        }
    }
}

TEST_CASE("cup products") {
    auto c2 = FiniteGroup::cyclic(2);
    auto m2 = trivial_mod(c2, {2});
    std::vector<int> mult_table = {0, 0, 0, 1}; // multiplication Z/2 x Z/2 -> Z/2
    BilinearPairing mult(m2, m2, m2, mult_table);

    Cocycle1 zero(m2, {0, 0});
    Cocycle1 chi(m2, {0, 1});
    CHECK(cup(zero, chi, mult).is_zero());

    // chi cup chi is the nontrivial class of H^2(C2, Z/2).
    Cocycle2 c = cup(chi, chi, mult);
    auto classes = h2(m2);
    REQUIRE(classes.size() == 2);
    CohClass cupped = CohClass::of(c);
    CHECK(cupped == classes[1]);
    CHECK_FALSE(cupped.is_trivial());

    // Bilinearity in the first argument, up to coboundary.
    for (const Cocycle1& a : z1(m2))
        for (const Cocycle1& a2 : z1(m2))
            for (const Cocycle1& b : z1(m2)) {
                Cocycle2 lhs = cup(a.add(a2), b, mult);
                Cocycle2 rhs = cup(a, b, mult).add(cup(a2, b, mult));
                CHECK(lhs.add(rhs.negate()).is_coboundary());
            }
}

TEST_CASE("cup products across the catalog: multiplication pairings") {
    // Trivial-action cyclic modules with the multiplication pairing, plus
    // the negation module, whose squares land in the trivial module.
    for (const auto& gamma : catalog_groups()) {
        for (int n : {2, 3}) {
            auto m = GammaModule::trivial(gamma, FiniteAbelianGroup({n}));
            std::vector<int> table(static_cast<std::size_t>(n) * n);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) table[static_cast<std::size_t>(x) * n + y] = x * y % n;
            BilinearPairing mult(m, m, m, table);
            auto cocycles = z1(m);
            for (const Cocycle1& a : cocycles)
                for (const Cocycle1& b : cocycles) {
                    Cocycle2 c = cup(a, b, mult); // construction verifies the identity
                    if (a.is_zero() || b.is_zero()) CHECK(c.is_zero());
                    for (const Cocycle1& a2 : cocycles) {
                        Cocycle2 lhs = cup(a.add(a2), b, mult);
                        Cocycle2 rhs = cup(a, b, mult).add(cup(a2, b, mult));
                        CHECK(lhs.add(rhs.negate()).is_coboundary());
                    }
                }
        }
    }
    // Negation x negation -> trivial is equivariant: (-a)(-b) = ab.
    auto c2 = FiniteGroup::cyclic(2);
    auto neg = GammaModule::by_units(c2, FiniteAbelianGroup({3}), {1, 2});
    auto triv = GammaModule::trivial(c2, FiniteAbelianGroup({3}));
    std::vector<int> table(9);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) table[static_cast<std::size_t>(x) * 3 + y] = x * y % 3;
    BilinearPairing mult(neg, neg, triv, table);
    for (const Cocycle1& a : z1(neg))
        for (const Cocycle1& b : z1(neg)) {
            Cocycle2 c = cup(a, b, mult);
            CHECK(c.scale(3).is_zero());
        }
}

TEST_CASE("connecting map: Bockstein and section independence") {
    for (const auto& seq : catalog_sequences()) {
        const auto& ses = *seq.ses;
        for (const CohClass& x : h1(ses.c)) {
            CohClass least = connecting2(ses, x, SectionChoice::Least);
            CohClass greatest = connecting2(ses, x, SectionChoice::Greatest);
            CHECK(least == greatest);
            if (x.is_trivial()) CHECK(least.is_trivial());
            // Exactness: the image in H^2(B) dies.
            CHECK(push_through_inclusion(ses, least).is_trivial());
            // Natural in restriction.
            for (const auto& H : ses.c->group()->subgroups()) {
                auto [sub, to_parent] = FiniteGroup::subgroup_as_group(ses.c->group(), H, "H");
                ShortExactSequence restricted(ses.a->restricted(sub, to_parent),
                                              ses.b->restricted(sub, to_parent),
                                              ses.c->restricted(sub, to_parent), ses.incl,
                                              ses.proj);
                CHECK(connecting2(restricted, restrict_class(x, H)) ==
                      restrict_class(least, H));
            }
        }
    }

    // Bockstein of the nontrivial character is the nontrivial class.
    auto seq = catalog_sequences().front(); // C2: Z2 -> Z4 -> Z2
    auto chi = CohClass::of(Cocycle1(seq.ses->c, {0, 1}));
    CohClass image = connecting2(*seq.ses, chi);
    CHECK_FALSE(image.is_trivial());
    CHECK(period(image) == 2);

    // The split sequence has zero connecting map.
    for (const auto& s : catalog_sequences()) {
        if (s.name != "C2:Z3-Z3xZ3-Z3") continue;
        for (const CohClass& x : h1(s.ses->c)) CHECK(connecting2(*s.ses, x).is_trivial());
    }

    // Broken exactness is rejected.
    auto c2 = FiniteGroup::cyclic(2);
    auto A = trivial_mod(c2, {2});
    auto B = trivial_mod(c2, {4});
    auto C = trivial_mod(c2, {2});
    CHECK_THROWS_AS(ShortExactSequence(A, B, C, std::vector<int>{0, 1}, // not into kernel
                                       std::vector<int>{0, 1, 0, 1}),
                    std::invalid_argument);
}
