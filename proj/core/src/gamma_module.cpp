#include "thetakit/gamma_module.hpp"

#include <numeric>
#include <stdexcept>

namespace thetakit {

GammaModule::GammaModule(GroupPtr group, FiniteAbelianGroup module,
                         std::vector<std::vector<int>> action_tables, std::string name)
    : group_(std::move(group)), module_(std::move(module)),
      action_(std::move(action_tables)), name_(std::move(name)) {
    int n = group_->order();
    int m = module_.size();
    if (static_cast<int>(action_.size()) != n)
        throw std::invalid_argument("one action table per group element required");
    for (const auto& t : action_) {
        if (static_cast<int>(t.size()) != m)
            throw std::invalid_argument("action table has wrong size");
        std::vector<char> seen(m, 0);
        for (int v : t) {
            if (v < 0 || v >= m || seen[v]) throw std::invalid_argument("action table not bijective");
            seen[v] = 1;
        }
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (t[module_.add(a, b)] != module_.add(t[a], t[b]))
                    throw std::invalid_argument("action table not additive");
    }
    for (int a = 0; a < m; ++a)
        if (action_[group_->identity()][a] != a)
            throw std::invalid_argument("identity must act trivially");
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            int st = group_->compose(s, t);
            for (int a = 0; a < m; ++a)
                if (action_[st][a] != action_[s][action_[t][a]])
                    throw std::invalid_argument("action is not a homomorphism");
        }
}

ModulePtr GammaModule::trivial(GroupPtr group, FiniteAbelianGroup module, std::string name) {
    int m = module.size();
    std::vector<int> id(m);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> tables(group->order(), id);
    if (name.empty()) name = module.describe() + " (trivial)";
    return std::make_shared<GammaModule>(std::move(group), std::move(module), std::move(tables),
                                         std::move(name));
}

ModulePtr GammaModule::by_units(GroupPtr group, FiniteAbelianGroup module,
                                const std::vector<int>& units, std::string name) {
    if (static_cast<int>(units.size()) != group->order())
        throw std::invalid_argument("one unit per group element required");
    int m = module.size();
    std::vector<std::vector<int>> tables(group->order(), std::vector<int>(m));
    for (int s = 0; s < group->order(); ++s)
        for (int a = 0; a < m; ++a) tables[s][a] = module.scale(units[s], a);
    if (name.empty()) name = module.describe() + " (units)";
    return std::make_shared<GammaModule>(std::move(group), std::move(module), std::move(tables),
                                         std::move(name));
}

bool GammaModule::trivial_action() const {
    for (int s = 0; s < group_->order(); ++s)
        for (int a = 0; a < module_.size(); ++a)
            if (action_[s][a] != a) return false;
    return true;
}

ModulePtr GammaModule::restricted(const GroupPtr& subgroup,
                                  const std::vector<int>& to_parent) const {
    std::vector<std::vector<int>> tables(subgroup->order());
    for (int s = 0; s < subgroup->order(); ++s) tables[s] = action_[to_parent[s]];
    return std::make_shared<GammaModule>(subgroup, module_, std::move(tables),
                                         name_ + " | " + subgroup->name());
}

MuN::MuN(int n, GroupPtr group, std::vector<int> units)
    : n_(n), group_(std::move(group)), units_(std::move(units)) {
    if (n_ < 2) throw std::invalid_argument("mu_n requires n >= 2");
    if (static_cast<int>(units_.size()) != group_->order())
        throw std::invalid_argument("one unit per group element required");
    for (int& u : units_) {
        u %= n_;
        if (u < 0) u += n_;
        if (std::gcd(u, n_) != 1) throw std::invalid_argument("action value is not a unit mod n");
    }
    if (units_[group_->identity()] != 1)
        throw std::invalid_argument("identity must act as 1");
    for (int s = 0; s < group_->order(); ++s)
        for (int t = 0; t < group_->order(); ++t)
            if (units_[group_->compose(s, t)] != (units_[s] * units_[t]) % n_)
                throw std::invalid_argument("unit action is not a homomorphism");
}

MuN MuN::trivial(int n, GroupPtr group) {
    std::vector<int> units(group->order(), 1);
    return MuN(n, std::move(group), std::move(units));
}

bool MuN::trivial_action() const {
    for (int u : units_)
        if (u != 1) return false;
    return true;
}

ModulePtr MuN::as_module() const {
    return GammaModule::by_units(group_, FiniteAbelianGroup({n_}), units_,
                                 "mu_" + std::to_string(n_));
}

int dual_eval(const FiniteAbelianGroup& m_group, int mu_n, int ell, int m) {
    long long total = 0;
    const auto& div = m_group.divisors();
    for (int d : div) {
        int li = ell % d; ell /= d;
        int mi = m % d;   m /= d;
        total += static_cast<long long>(li) * mi * (mu_n / d);
    }
    return static_cast<int>(total % mu_n);
}

ModulePtr dual_module(const ModulePtr& M, const MuN& mu) {
    const FiniteAbelianGroup& grp = M->module();
    if (mu.n() % grp.exponent() != 0)
        throw std::invalid_argument("exponent of M must divide mu.n");
    if (M->group() != mu.group() && M->group()->order() != mu.group()->order())
        throw std::invalid_argument("M and mu must share the Gamma group");
    const GroupPtr& gamma = M->group();
    int size = grp.size();
    int n = mu.n();
    const auto& div = grp.divisors();
    std::vector<std::vector<int>> tables(gamma->order(), std::vector<int>(size));
    for (int s = 0; s < gamma->order(); ++s) {
        int sinv = gamma->inverse(s);
        for (int ell = 0; ell < size; ++ell) {
            // (s.l)(e_j) = u_s * l(s^{-1} e_j); recover coefficients from the
            // values on the standard generators.
            std::vector<int> coeffs(div.size());
            std::vector<int> gen(div.size(), 0);
            for (std::size_t j = 0; j < div.size(); ++j) {
                std::fill(gen.begin(), gen.end(), 0);
                gen[j] = 1;
                int ej = grp.index_of(gen);
                int val = dual_eval(grp, n, ell, M->act(sinv, ej));
                val = static_cast<int>((static_cast<long long>(val) * mu.unit(s)) % n);
                int step = n / div[j];
                if (val % step != 0)
                    throw std::logic_error("dual action image is not a homomorphism");
                coeffs[j] = (val / step) % div[j];
            }
            tables[s][ell] = grp.index_of(coeffs);
        }
    }
    return std::make_shared<GammaModule>(gamma, grp, std::move(tables), M->name() + "*");
}

BilinearPairing::BilinearPairing(ModulePtr a, ModulePtr b, ModulePtr c, std::vector<int> table)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), table_(std::move(table)) {
    int na = a_->module().size(), nb = b_->module().size(), nc = c_->module().size();
    if (static_cast<int>(table_.size()) != na * nb)
        throw std::invalid_argument("pairing table has wrong size");
    for (int v : table_)
        if (v < 0 || v >= nc) throw std::invalid_argument("pairing value out of range");
    const auto& A = a_->module();
    const auto& B = b_->module();
    const auto& C = c_->module();
    for (int x1 = 0; x1 < na; ++x1)
        for (int x2 = 0; x2 < na; ++x2)
            for (int y = 0; y < nb; ++y)
                if (value(A.add(x1, x2), y) != C.add(value(x1, y), value(x2, y)))
                    throw std::invalid_argument("pairing not additive in first slot");
    for (int x = 0; x < na; ++x)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int y2 = 0; y2 < nb; ++y2)
                if (value(x, B.add(y1, y2)) != C.add(value(x, y1), value(x, y2)))
                    throw std::invalid_argument("pairing not additive in second slot");
}

SymplecticPairing::SymplecticPairing(ModulePtr space, MuN mu, std::vector<int> table)
    : space_(std::move(space)), mu_(std::move(mu)), table_(std::move(table)) {
    int k = space_->module().size();
    int d = space_->module().exponent();
    if (mu_.n() != d) throw std::invalid_argument("pairing values must live in mu_d, d = exponent");
    if (static_cast<std::size_t>(k) * k != table_.size())
        throw std::invalid_argument("pairing table has wrong size");
    const auto& K = space_->module();
    // Additivity against every generator in each slot implies bilinearity;
    // this keeps validation at O(|K|^2 rank) for the large uniform types.
    int rank = K.rank();
    std::vector<std::vector<int>> add_gen(rank, std::vector<int>(k));
    std::vector<int> gen_index(rank);
    std::vector<int> coords(rank, 0);
    for (int j = 0; j < rank; ++j) {
        std::fill(coords.begin(), coords.end(), 0);
        coords[j] = 1;
        gen_index[j] = K.index_of(coords);
        for (int q = 0; q < k; ++q) add_gen[j][q] = K.add(q, gen_index[j]);
    }
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
            for (int j = 0; j < rank; ++j) {
                if (value(p, add_gen[j][q]) != (value(p, q) + value(p, gen_index[j])) % d)
                    throw std::invalid_argument("pairing not bilinear");
                if (value(add_gen[j][q], p) != (value(q, p) + value(gen_index[j], p)) % d)
                    throw std::invalid_argument("pairing not bilinear");
            }
}

bool SymplecticPairing::alternating() const {
    for (int p = 0; p < space_->module().size(); ++p)
        if (value(p, p) != 0) return false;
    return true;
}

bool SymplecticPairing::nondegenerate() const {
    int k = space_->module().size();
    for (int p = 1; p < k; ++p) {
        bool hit = false;
        for (int q = 0; q < k; ++q)
            if (value(p, q) != 0) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

bool SymplecticPairing::induces_dual_isomorphism() const {
    // P -> e(P,.) must be injective into maps K -> Z/d; by counting it is
    // then bijective onto the dual.
    int k = space_->module().size();
    std::vector<std::vector<int>> rows(k);
    for (int p = 0; p < k; ++p) {
        rows[p].resize(k);
        for (int q = 0; q < k; ++q) rows[p][q] = value(p, q);
    }
    for (int p = 0; p < k; ++p)
        for (int q = p + 1; q < k; ++q)
            if (rows[p] == rows[q]) return false;
    return true;
}

SymplecticPairing standard_symplectic(int g, int n) {
    if (g < 1 || n < 2) throw std::invalid_argument("standard_symplectic requires g >= 1, n >= 2");
    FiniteAbelianGroup K(std::vector<int>(2 * g, n));
    auto space = GammaModule::trivial(FiniteGroup::trivial(), K,
                                      "(Z/" + std::to_string(n) + ")^" + std::to_string(2 * g));
    int k = K.size();
    std::vector<int> table(static_cast<std::size_t>(k) * k);
    for (int p = 0; p < k; ++p) {
        std::vector<int> pv = K.element(p);
        for (int q = 0; q < k; ++q) {
            std::vector<int> qv = K.element(q);
            long long v = 0;
            for (int i = 0; i < g; ++i)
                v += static_cast<long long>(pv[i]) * qv[g + i] -
                     static_cast<long long>(pv[g + i]) * qv[i];
            v %= n;
            if (v < 0) v += n;
            table[static_cast<std::size_t>(p) * k + q] = static_cast<int>(v);
        }
    }
    return SymplecticPairing(space, MuN::trivial(n, FiniteGroup::trivial()), std::move(table));
}

} // namespace thetakit
