// Acceptance suite: one pass/fail line per criterion, each with its stated
// time budget; exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thetakit/catalog.hpp"
#include "thetakit/experiment.hpp"
#include "thetakit/localfield.hpp"

using namespace thetakit;

namespace {

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool check(bool ok, std::string& log, const std::string& what) {
    if (!ok) log += "    FAILED: " + what + "\n";
    return ok;
}

// --------------------------------------------------------------------- 1 --

bool criterion_period_index(std::string& log) {
    bool ok = true;
    int classes = 0;
    for (const auto& inst : catalog_modules()) {
        if (inst.module->group()->order() > 12 || inst.module->module().size() > 16) continue;
        for (const CohClass& cls : h1(inst.module)) {
            ++classes;
            PrimaryDecompositionCheck dec = primary_decomposition_check(cls);
            ok &= check(dec.period_divides_index, log, inst.name + ": period | index");
            ok &= check(dec.same_prime_support, log, inst.name + ": prime support");
            ok &= check(dec.parts_sum_to_class, log, inst.name + ": primary parts sum");
            ok &= check(dec.product_formula, log, inst.name + ": index product formula");
        }
    }
    log += "    " + std::to_string(classes) + " degree-1 classes checked\n";
    return ok && classes > 0;
}

// --------------------------------------------------------------------- 2 --

bool criterion_splitting_subgroups(std::string& log) {
    bool ok = true;
    int cocycles = 0;
    for (const auto& inst : catalog_modules()) {
        if (inst.module->group()->order() > 12 || inst.module->module().size() > 16) continue;
        for (const Cocycle1& xi : z1(inst.module)) {
            ++cocycles;
            VanishingSubgroupResult res = vanishing_subgroup(xi); // throws on violation
            ok &= check(res.coset_count <= inst.module->module().size(), log,
                        inst.name + ": coset bound");
            ok &= check(res.restriction_trivial, log, inst.name + ": restriction splits");
        }
        if (inst.module->trivial_action()) {
            for (const CohClass& cls : h1(inst.module)) {
                PeriodIndexReport rep = index_report(cls);
                std::set<int> image(cls.representative().begin(), cls.representative().end());
                ok &= check(rep.mindex == rep.index &&
                                rep.index == static_cast<int>(image.size()),
                            log, inst.name + ": mindex = index = image order");
            }
        }
    }
    log += "    " + std::to_string(cocycles) + " one-cocycles checked\n";
    return ok && cocycles > 0;
}

// --------------------------------------------------------------------- 3 --

bool criterion_heisenberg_structure(std::string& log) {
    bool ok = true;
    for (int n : {2, 3, 4, 5})
        for (int g : {1, 2}) {
            HeisenbergGroup h(std::vector<int>(g, n));
            long long expected = 1;
            for (int i = 0; i < 2 * g + 1; ++i) expected *= n;
            ok &= check(h.order() == expected, log,
                        "order at n=" + std::to_string(n) + " g=" + std::to_string(g));
            ok &= check(h.center_points() == std::vector<int>{0}, log,
                        "center = mu_n at n=" + std::to_string(n) + " g=" + std::to_string(g));
        }
    for (auto [n, g] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 1}, {3, 2}}) {
        HeisenbergGroup h(std::vector<int>(g, n));
        bool table_ok = true;
        try {
            SymplecticPairing e = h.commutator_pairing(); // verifies every pair vs lifts
            table_ok = e.alternating() && e.nondegenerate();
        } catch (const std::logic_error&) {
            table_ok = false;
        }
        ok &= check(table_ok, log,
                    "commutator table at n=" + std::to_string(n) + " g=" + std::to_string(g));
    }
    return ok;
}

// --------------------------------------------------------------------- 4 --

bool criterion_automorphisms(std::string& log) {
    bool ok = true;
    {
        HeisenbergGroup h({2});
        G1Enumeration g1 = enumerate_g1(h);
        ok &= check(g1.autos.size() == 8, log, "(2,1): |G1| = 8");
        ok &= check(g1.quotient_image.size() == 2, log, "(2,1): quotient image order 2");
    }
    {
        HeisenbergGroup h({3});
        G1Enumeration g1 = enumerate_g1(h);
        ok &= check(g1.autos.size() == 216, log, "(3,1): |G1| = 216");
        ok &= check(g1.g2_indices.size() == 9, log, "(3,1): |G2| = 9");
        ok &= check(g1.quotient_image.size() == 24, log, "(3,1): image = Sp, order 24");

        // Split: the companion-conjugation section lands in G1, induces the
        // right matrix, and is multiplicative.
        auto hp = std::make_shared<const HeisenbergGroup>(std::vector<int>{3});
        PhiYu phi(hp);
        const ThetaGroup& tg = hp->group();
        auto sp = sp_group(1, 3);
        auto section_perm = [&](const std::vector<int>& mat) {
            std::vector<int> perm(tg.order());
            for (int i = 0; i < static_cast<int>(tg.order()); ++i) {
                ThetaGroup::Elem e = phi.apply(tg.elem_at(i));
                e.point = apply_matrix_point(tg, mat, e.point);
                perm[i] = tg.elem_index(phi.apply_inverse(e));
            }
            return perm;
        };
        std::set<std::vector<int>> enumerated;
        for (const auto& aut : g1.autos) enumerated.insert(aut.perm);
        std::map<std::vector<int>, std::vector<int>> section;
        for (const auto& mat : sp) {
            section[mat] = section_perm(mat);
            ok &= check(enumerated.count(section[mat]) == 1, log, "section image in G1");
        }
        auto matmul = [&](const std::vector<int>& A, const std::vector<int>& B) {
            std::vector<int> C(4, 0);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    C[2 * r + c] = (A[2 * r] * B[c] + A[2 * r + 1] * B[2 + c]) % 3;
            return C;
        };
        bool multiplicative = true;
        for (const auto& a : sp)
            for (const auto& b : sp) {
                std::vector<int> composite(tg.order());
                for (int i = 0; i < static_cast<int>(tg.order()); ++i)
                    composite[i] = section[a][section[b][i]];
                multiplicative &= composite == section[matmul(a, b)];
            }
        ok &= check(multiplicative, log, "(3,1): section is a homomorphism");
    }
    return ok;
}

// --------------------------------------------------------------------- 5 --

bool criterion_phi_yu(std::string& log) {
    bool ok = true;
    for (int n : {3, 5, 7})
        for (int g : {1, 2}) {
            auto h = std::make_shared<const HeisenbergGroup>(std::vector<int>(g, n));
            PhiYu phi(h);
            const ThetaGroup& src = h->group();
            const ThetaGroup& dst = phi.target();
            long long total = src.order();
            std::string at = " at n=" + std::to_string(n) + " g=" + std::to_string(g);
            ok &= check(phi.verify_isomorphism(), log, "isomorphism sweep" + at);
            bool bijective = true, trivial_parts = true;
            std::vector<char> seen(total, 0);
            for (long long i = 0; i < total; ++i) {
                ThetaGroup::Elem a = src.elem_at(static_cast<int>(i));
                ThetaGroup::Elem fa = phi.apply(a);
                trivial_parts &= fa.point == a.point;
                if (a.point == 0) trivial_parts &= fa.alpha == a.alpha;
                int idx = dst.elem_index(fa);
                if (seen[idx]) bijective = false;
                seen[idx] = 1;
            }
            ok &= check(bijective, log, "bijective" + at);
            ok &= check(trivial_parts, log, "center/quotient triviality" + at);
            // Second, element-level homomorphism loop at the modest sizes.
            if (total <= 3200) {
                bool hom = true;
                for (long long i = 0; i < total && hom; ++i) {
                    ThetaGroup::Elem a = src.elem_at(static_cast<int>(i));
                    for (long long j = 0; j < total; ++j) {
                        ThetaGroup::Elem b = src.elem_at(static_cast<int>(j));
                        if (!(phi.apply(src.mul(a, b)) ==
                              dst.mul(phi.apply(a), phi.apply(b)))) {
                            hom = false;
                            break;
                        }
                    }
                }
                ok &= check(hom, log, "elementwise homomorphism" + at);
            }
        }
    for (int n : {2, 4, 6}) {
        bool rejected = false;
        try {
            auto h = std::make_shared<const HeisenbergGroup>(std::vector<int>{n});
            PhiYu phi(h);
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        ok &= check(rejected, log, "even n rejected: n=" + std::to_string(n));
    }
    return ok;
}

// --------------------------------------------------------------------- 6 --

bool criterion_delta_equivalence(std::string& log) {
    bool ok = true;
    int pairs = 0;
    for (const auto& inst : catalog_lagrangian()) {
        bool has_nonzero_chi = inst.chis.size() > 1;
        ok &= check(!inst.chis.empty(), log, inst.name + ": chi sweep nonempty");
        if (inst.name != "C2.n3cyclo")
            ok &= check(has_nonzero_chi, log, inst.name + ": has a nontrivial chi");
        for (const auto& chi : inst.chis)
            for (const Cocycle1& eta : z1(inst.data->k())) {
                ++pairs;
                ObstructionRecord rec = obstruction_delta(*inst.data, chi, eta);
                Cocycle2 conn = obstruction_delta_via_connecting(*inst.data, chi, eta);
                ok &= check(rec.delta.values() == conn.values(), log,
                            inst.name + ": pointwise agreement");
            }
    }
    log += "    " + std::to_string(pairs) + " (chi, eta) pairs compared\n";
    return ok && pairs > 0;
}

// --------------------------------------------------------------------- 7 --

bool criterion_quadratic_structure(std::string& log) {
    bool ok = true;
    for (const auto& inst : catalog_lagrangian()) {
        auto etas = z1(inst.data->k());
        for (const auto& chi : inst.chis) {
            for (const Cocycle1& eta : etas) {
                ObstructionRecord rec = obstruction_delta(*inst.data, chi, eta);
                ok &= check(torsion_check(rec, inst.data->n()), log,
                            inst.name + ": image class n-torsion");
                for (const Cocycle1& eta2 : etas) {
                    QuadraticityReport q = quadraticity_report(*inst.data, chi, eta, eta2);
                    ok &= check(q.ok(), log, inst.name + ": linear/quadratic split laws");
                    for (const Cocycle1& eta3 : etas) {
                        QuadraticityReport q13 =
                            quadraticity_report(*inst.data, chi, eta.add(eta3), eta2);
                        QuadraticityReport q3 =
                            quadraticity_report(*inst.data, chi, eta3, eta2);
                        Cocycle2 diff = q13.cross_term.add(q.cross_term.negate())
                                            .add(q3.cross_term.negate());
                        ok &= check(diff.is_coboundary(), log,
                                    inst.name + ": cross term biadditive");
                    }
                }
            }
        }
    }
    return ok;
}

// --------------------------------------------------------------------- 8 --

bool criterion_tame_symbol(std::string& log) {
    bool ok = true;
    for (auto [p, n] : std::vector<std::pair<int, int>>{{7, 3}, {13, 3}, {13, 4}, {11, 5}}) {
        TameLocalModel model(p, n);
        auto classes = all_classes(model);
        bool laws = true;
        for (const auto& a : classes) {
            for (const auto& b : classes) {
                laws &= (tame_symbol(a, b, model) + tame_symbol(b, a, model)) % n == 0;
                for (const auto& c : classes)
                    laws &= tame_symbol(class_add(a, c, model), b, model) ==
                            (tame_symbol(a, b, model) + tame_symbol(c, b, model)) % n;
            }
            laws &= tame_symbol(a, class_add(a, reduce(-1, model), model), model) == 0;
            if (!(a == UnitClass{0, 0})) {
                bool hit = false;
                for (const auto& b : classes) hit |= tame_symbol(a, b, model) != 0;
                laws &= hit;
            }
        }
        ok &= check(laws, log, "symbol laws at (p,n) = (" + std::to_string(p) + "," +
                                   std::to_string(n) + ")");
    }
    for (int p : {3, 7, 11}) {
        TameLocalModel model(p, 2);
        bool agree = true;
        for (const auto& a : all_classes(model))
            for (const auto& b : all_classes(model)) {
                bool solvable = oracles::conic_solvable(class_representative(a, model),
                                                        class_representative(b, model), p);
                agree &= (tame_symbol(a, b, model) == 0) == solvable;
            }
        ok &= check(agree, log, "conic oracle agreement at p = " + std::to_string(p));
    }
    return ok;
}

// --------------------------------------------------------------------- 9 --

bool criterion_character_model(std::string& log) {
    bool ok = true;
    for (auto [p, a] : std::vector<std::pair<int, int>>{{3, 1}, {5, 2}}) {
        int r = a + 2;
        CharacterTuple t;
        t.n = p;
        t.r = r;
        for (int i = 0; i < r; ++i) {
            std::vector<int> chi(r, 0);
            chi[i] = 1;
            t.characters.push_back(chi);
        }
        long long expected = 1;
        for (int i = 0; i < r; ++i) expected *= p;
        CharacterIndexReport rep = character_index(t);
        ok &= check(rep.index == expected && rep.mindex == expected, log,
                    "independent characters give index p^(a+2) at p=" + std::to_string(p));
    }

    // index = mindex across tuples; small ambients are cross-checked with a
    // full subgroup-scan oracle.
    for (int n = 2; n <= 4; ++n)
        for (int r = 1; r <= 4; ++r) {
            long long size = 1;
            for (int i = 0; i < r; ++i) size *= n;
            long long hom_count = size; // characters = coefficient vectors
            bool contract = true;
            for (long long c1 = 0; c1 < hom_count; ++c1) {
                auto unpack = [&](long long v) {
                    std::vector<int> chi(r);
                    for (int i = 0; i < r; ++i) {
                        chi[i] = static_cast<int>(v % n);
                        v /= n;
                    }
                    return chi;
                };
                CharacterTuple single{n, r, {unpack(c1)}};
                CharacterIndexReport rep = character_index(single);
                contract &= rep.index == rep.mindex;
                if (size <= 81) {
                    for (long long c2 = 0; c2 < hom_count; ++c2) {
                        CharacterTuple pair{n, r, {unpack(c1), unpack(c2)}};
                        CharacterIndexReport rp = character_index(pair);
                        contract &= rp.index == rp.mindex;
                    }
                }
            }
            ok &= check(contract, log, "index = mindex over (Z/" + std::to_string(n) + ")^" +
                                           std::to_string(r));
            if (size <= 81) {
                // Oracle: scan every subgroup of the ambient group.
                auto ambient = FiniteGroup::from_abelian(
                    FiniteAbelianGroup(std::vector<int>(r, n)), "ambient");
                auto subgroups = ambient->subgroups();
                FiniteAbelianGroup grp(std::vector<int>(r, n));
                for (long long c1 = 0; c1 < hom_count; ++c1)
                    for (long long c2 = 0; c2 < hom_count; c2 += (size <= 27 ? 1 : 7)) {
                        std::vector<std::vector<int>> chis;
                        auto unpack = [&](long long v) {
                            std::vector<int> chi(r);
                            for (int i = 0; i < r; ++i) {
                                chi[i] = static_cast<int>(v % n);
                                v /= n;
                            }
                            return chi;
                        };
                        chis.push_back(unpack(c1));
                        chis.push_back(unpack(c2));
                        auto vanish = [&](int elem, const std::vector<int>& chi) {
                            auto coords = grp.element(elem);
                            long long total = 0;
                            for (int i = 0; i < r; ++i)
                                total += static_cast<long long>(chi[i]) * coords[i];
                            return total % n == 0;
                        };
                        int gcd_all = 0, min_idx = 0;
                        for (const auto& H : subgroups) {
                            bool splits = true;
                            for (int h : H)
                                for (const auto& chi : chis) splits &= vanish(h, chi);
                            if (!splits) continue;
                            int idx = static_cast<int>(size) / static_cast<int>(H.size());
                            gcd_all = std::gcd(gcd_all, idx);
                            if (min_idx == 0 || idx < min_idx) min_idx = idx;
                        }
                        CharacterTuple t{n, r, chis};
                        CharacterIndexReport rep = character_index(t);
                        ok &= check(gcd_all == rep.index && min_idx == rep.mindex, log,
                                    "oracle agreement over (Z/" + std::to_string(n) + ")^" +
                                        std::to_string(r));
                    }
            }
        }
    return ok;
}

// -------------------------------------------------------------------- 10 --

bool criterion_lang_tate(std::string& log) {
    bool ok = true;
    for (int n : {2, 3})
        for (int g : {1, 2}) {
            LaurentModel model{n, g};
            for (int k = 0; k <= 2 * g; ++k) {
                std::vector<UnitClass> coords(2 * g, UnitClass{0, 0});
                for (int i = 0; i < k; ++i) coords[i].v = 1;
                long long expected = 1;
                for (int i = 0; i < k; ++i) expected *= n;
                ok &= check(lang_tate_index(coords, model) == expected, log,
                            "n=" + std::to_string(n) + " g=" + std::to_string(g) +
                                " k=" + std::to_string(k));
            }
        }
    return ok;
}

// -------------------------------------------------------------------- 11 --

bool criterion_shift_search(std::string& log) {
    bool ok = true;
    TameLocalModel model(7, 3);
    std::vector<std::vector<UnitClass>> zero{{UnitClass{0, 0}, UnitClass{0, 0}}};
    auto found = nonvanishing_shift_search(zero, 1, model);
    ok &= check(found.has_value(), log, "H = {0}: a tuple is found");
    if (found) {
        // Independent full scan in the same lexicographic order.
        std::optional<std::vector<UnitClass>> first;
        for (int v1 = 0; v1 < 3 && !first; ++v1)
            for (int w1 = 0; w1 < 3 && !first; ++w1)
                for (int v2 = 0; v2 < 3 && !first; ++v2)
                    for (int w2 = 0; w2 < 3 && !first; ++w2) {
                        if (v1 == 0 && w1 == 0 && v2 == 0 && w2 == 0) continue;
                        if (tame_symbol(UnitClass{v1, w1}, UnitClass{v2, w2}, model) != 0)
                            first = std::vector<UnitClass>{UnitClass{v1, w1}, UnitClass{v2, w2}};
                    }
        ok &= check(first == found, log, "independent scan confirms the first hit");
    }
    std::vector<std::vector<UnitClass>> full;
    for (int v1 = 0; v1 < 3; ++v1)
        for (int w1 = 0; w1 < 3; ++w1)
            for (int v2 = 0; v2 < 3; ++v2)
                for (int w2 = 0; w2 < 3; ++w2)
                    full.push_back({UnitClass{v1, w1}, UnitClass{v2, w2}});
    ok &= check(!nonvanishing_shift_search(full, 1, model).has_value(), log,
                "H = full group: no tuple exists");
    return ok;
}

// -------------------------------------------------------------------- 12 --

bool criterion_cli_golden(std::string& log) {
    const std::string cli = THETAKIT_CLI_PATH;
    const std::string golden = THETAKIT_GOLDEN_DIR;
    bool ok = true;
    auto slurp = [](const std::string& path) -> std::optional<std::string> {
        std::ifstream in(path, std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    struct Case {
        std::string args;
        std::string file;
    };
    int i = 0;
    for (const Case& c : {
             Case{"--experiment heisenberg-verify --n 2 --g 1", "heisenberg_n2_g1.json"},
             Case{"--experiment heisenberg-verify --n 3 --g 1", "heisenberg_n3_g1.json"},
             Case{"--experiment symbol-table --p 7 --n 3", "symbol_p7_n3.json"},
             Case{"--experiment symbol-table --p 7 --n 3 --format csv", "symbol_p7_n3.csv"},
             Case{"--experiment lang-tate-index --n 3 --g 2 --k 3", "lang_tate_n3_g2_k3.json"},
             Case{"--experiment lang-tate-index --n 2 --g 1 --k 1", "lang_tate_n2_g1_k1.json"},
         }) {
        std::string out = "/tmp/thetakit_acceptance_" + std::to_string(i++) + ".out";
        std::string cmd = cli + " " + c.args + " --no-timestamp --out " + out;
        int status = WEXITSTATUS(std::system(cmd.c_str()));
        ok &= check(status == 0, log, "exit status 0 for: " + c.args);
        auto produced = slurp(out);
        auto expected = slurp(golden + "/" + c.file);
        ok &= check(produced.has_value() && expected.has_value() && *produced == *expected, log,
                    "byte-exact golden: " + c.file);
        std::remove(out.c_str());
    }
    // Exit-status contract: nonzero on config errors; the verdict -> status
    // mapping is checked in-process.
    int bad = WEXITSTATUS(std::system((cli + " --experiment nope 2>/dev/null").c_str()));
    ok &= check(bad == 2, log, "config error exits 2");
    ReportDocument doc;
    doc.verdict("x", true);
    ok &= check(verdict_exit_status(doc) == 0, log, "all-pass maps to 0");
    doc.verdict("y", false);
    ok &= check(verdict_exit_status(doc) == 1, log, "failed verdict maps to 1");
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "period/index laws on the catalog (divisibility, prime support, product)", 30,
         criterion_period_index},
        {2, "splitting subgroups of one-cocycles; trivial-module mindex", 10,
         criterion_splitting_subgroups},
        {3, "Heisenberg order, commutator pairing vs lifts, exact center", 60,
         criterion_heisenberg_structure},
        {4, "centrally trivial automorphisms at (2,1) and (3,1); split sequence", 300,
         criterion_automorphisms},
        {5, "quotient-preserving isomorphism onto the companion group (odd n <= 7, g <= 2)", 60,
         criterion_phi_yu},
        {6, "explicit obstruction formula = connecting coboundary on all of Z^1", 60,
         criterion_delta_equivalence},
        {7, "quadratic-map structure and n-torsion of the obstruction", 60,
         criterion_quadratic_structure},
        {8, "tame symbol laws and the conic solvability oracle", 60, criterion_tame_symbol},
        {9, "character model: indices p^(a+2); index = mindex", 30, criterion_character_model},
        {10, "iterated-Laurent coordinates: index n^k", 5, criterion_lang_tate},
        {11, "nonvanishing shift search with independent confirmation", 10,
         criterion_shift_search},
        {12, "CLI golden files and exit-status contract", 60, criterion_cli_golden},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string log;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log += std::string("    exception: ") + e.what() + "\n";
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = elapsed < c.budget_seconds;
        if (!in_budget)
            log += "    over budget: " + std::to_string(elapsed) + "s > " +
                   std::to_string(c.budget_seconds) + "s\n";
        bool pass = ok && in_budget;
        std::printf("[%s] criterion %2d (%6.2fs / %gs): %s\n", pass ? "PASS" : "FAIL", c.number,
                    elapsed, c.budget_seconds, c.title.c_str());
        if (!log.empty()) std::fputs(log.c_str(), stdout);
        if (!pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
