#include "thetakit/catalog.hpp"

#include <algorithm>
#include <optional>

namespace thetakit {

namespace {

// Units vector of an order-2 character (values +-1 mod m), through the
// first index-2 subgroup in deterministic order; nullopt when none exists.
std::optional<std::vector<int>> order2_units(const GroupPtr& gamma, int m) {
    for (const auto& H : gamma->subgroups()) {
        if (static_cast<int>(H.size()) * 2 != gamma->order()) continue;
        std::vector<int> units(gamma->order(), 1);
        for (int s = 0; s < gamma->order(); ++s)
            if (!std::binary_search(H.begin(), H.end(), s)) units[s] = m - 1;
        return units;
    }
    return std::nullopt;
}

} // namespace

std::vector<GroupPtr> catalog_groups() {
    std::vector<GroupPtr> out;
    for (int n = 2; n <= 8; ++n) out.push_back(FiniteGroup::cyclic(n));
    out.push_back(FiniteGroup::klein_four());
    out.push_back(FiniteGroup::symmetric3());
    return out;
}

std::vector<CatalogModule> catalog_modules_for(const GroupPtr& gamma) {
    std::vector<CatalogModule> out;
    auto add_trivial = [&](FiniteAbelianGroup m, const std::string& label) {
        out.push_back({gamma->name() + "/" + label,
                       GammaModule::trivial(gamma, std::move(m), label + " (trivial)")});
    };
    add_trivial(FiniteAbelianGroup({2}), "Z2");
    add_trivial(FiniteAbelianGroup({3}), "Z3");
    add_trivial(FiniteAbelianGroup({4}), "Z4");
    add_trivial(FiniteAbelianGroup({6}), "Z6");
    add_trivial(FiniteAbelianGroup({2, 2}), "Z2xZ2");
    if (auto units = order2_units(gamma, 3)) {
        out.push_back({gamma->name() + "/Z3neg",
                       GammaModule::by_units(gamma, FiniteAbelianGroup({3}), *units, "Z3 (negation)")});
    }
    return out;
}

std::vector<CatalogModule> catalog_modules() {
    std::vector<CatalogModule> out;
    for (const auto& gamma : catalog_groups())
        for (auto& inst : catalog_modules_for(gamma)) out.push_back(std::move(inst));
    return out;
}

std::vector<CatalogSequence> catalog_sequences() {
    std::vector<CatalogSequence> out;
    auto doubling = [&](const GroupPtr& gamma, int half) {
        // 0 -> Z/half -> Z/half^2 -> Z/half -> 0, trivial actions.
        auto A = GammaModule::trivial(gamma, FiniteAbelianGroup({half}));
        auto B = GammaModule::trivial(gamma, FiniteAbelianGroup({half * half}));
        auto C = GammaModule::trivial(gamma, FiniteAbelianGroup({half}));
        std::vector<int> incl(half), proj(half * half);
        for (int a = 0; a < half; ++a) incl[a] = half * a;
        for (int b = 0; b < half * half; ++b) proj[b] = b % half;
        return std::make_shared<const ShortExactSequence>(A, B, C, std::move(incl),
                                                          std::move(proj));
    };
    out.push_back({"C2:Z2-Z4-Z2", doubling(FiniteGroup::cyclic(2), 2)});
    out.push_back({"V4:Z2-Z4-Z2", doubling(FiniteGroup::klein_four(), 2)});
    out.push_back({"C3:Z3-Z9-Z3", doubling(FiniteGroup::cyclic(3), 3)});
    {
        // Split sequence 0 -> Z/3 -> Z/3 x Z/3 -> Z/3 -> 0 over C2.
        auto gamma = FiniteGroup::cyclic(2);
        auto A = GammaModule::trivial(gamma, FiniteAbelianGroup({3}));
        auto B = GammaModule::trivial(gamma, FiniteAbelianGroup({3, 3}));
        auto C = GammaModule::trivial(gamma, FiniteAbelianGroup({3}));
        std::vector<int> incl(3), proj(9);
        for (int a = 0; a < 3; ++a) incl[a] = a;
        for (int b = 0; b < 9; ++b) proj[b] = b / 3;
        out.push_back({"C2:Z3-Z3xZ3-Z3",
                       std::make_shared<const ShortExactSequence>(A, B, C, std::move(incl),
                                                                  std::move(proj))});
    }
    return out;
}

std::vector<CatalogLagrangian> catalog_lagrangian() {
    std::vector<CatalogLagrangian> out;
    auto add = [&](const std::string& name, const ModulePtr& h, MuN mu) {
        auto data = std::make_shared<const LagrangianThetaData>(h, std::move(mu), name);
        std::vector<Cocycle1> chis{data->zero_chi()};
        for (const Cocycle1& chi : z1(data->k_dual())) {
            if (!chi.is_zero()) {
                chis.push_back(chi);
                break;
            }
        }
        out.push_back({name, std::move(data), std::move(chis)});
    };

    auto c2 = FiniteGroup::cyclic(2);
    auto v4 = FiniteGroup::klein_four();

    add("C2.n2", GammaModule::trivial(c2, FiniteAbelianGroup({2}), "H=Z2"), MuN::trivial(2, c2));
    add("V4.n2", GammaModule::trivial(v4, FiniteAbelianGroup({2}), "H=Z2"), MuN::trivial(2, v4));
    add("C2.n3neg",
        GammaModule::by_units(c2, FiniteAbelianGroup({3}), std::vector<int>{1, 2}, "H=Z3neg"),
        MuN::trivial(3, c2));
    add("V4.n3neg",
        GammaModule::by_units(v4, FiniteAbelianGroup({3}), std::vector<int>{1, 1, 2, 2},
                              "H=Z3neg"),
        MuN::trivial(3, v4));
    // Cyclotomic-style mu-action: H constant, mu twisted by the inversion.
    add("C2.n3cyclo", GammaModule::trivial(c2, FiniteAbelianGroup({3}), "H=Z3"),
        MuN(3, c2, std::vector<int>{1, 2}));
    return out;
}

} // namespace thetakit
