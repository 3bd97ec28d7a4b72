#include "thetakit/cocycle.hpp"

#include <cmath>
#include <stdexcept>

#include "thetakit/guard.hpp"

namespace thetakit {

namespace {

// Odometer over `digits` positions with the given base; returns false once
// all combinations have been visited.
bool next_combo(std::vector<int>& digits, int base) {
    for (auto& d : digits) {
        if (++d < base) return true;
        d = 0;
    }
    return false;
}

} // namespace

Cocycle1::Cocycle1(ModulePtr module, std::vector<int> values)
    : module_(std::move(module)), values_(std::move(values)) {
    const auto& gamma = *module_->group();
    const auto& m = module_->module();
    if (static_cast<int>(values_.size()) != gamma.order())
        throw std::invalid_argument("cocycle table has wrong size");
    for (int v : values_)
        if (v < 0 || v >= m.size()) throw std::invalid_argument("cocycle value out of range");
    for (int s = 0; s < gamma.order(); ++s)
        for (int t = 0; t < gamma.order(); ++t)
            if (values_[gamma.compose(s, t)] != m.add(values_[s], module_->act(s, values_[t])))
                throw std::invalid_argument("one-cocycle identity fails");
}

bool Cocycle1::is_zero() const {
    for (int v : values_)
        if (v != 0) return false;
    return true;
}

Cocycle1 Cocycle1::add(const Cocycle1& o) const {
    if (module_->module() != o.module_->module() ||
        module_->group()->order() != o.module_->group()->order())
        throw std::invalid_argument("cocycle addition across different modules");
    std::vector<int> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        out[i] = module_->module().add(values_[i], o.values_[i]);
    return Cocycle1(module_, std::move(out));
}

Cocycle1 Cocycle1::negate() const {
    std::vector<int> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = module_->module().negate(values_[i]);
    return Cocycle1(module_, std::move(out));
}

Cocycle1 Cocycle1::scale(int k) const {
    std::vector<int> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = module_->module().scale(k, values_[i]);
    return Cocycle1(module_, std::move(out));
}

Cocycle1 Cocycle1::coboundary(const ModulePtr& module, int m) {
    const auto& gamma = *module->group();
    std::vector<int> out(gamma.order());
    for (int s = 0; s < gamma.order(); ++s)
        out[s] = module->module().subtract(module->act(s, m), m);
    return Cocycle1(module, std::move(out));
}

std::optional<int> Cocycle1::coboundary_witness() const {
    const auto& gamma = *module_->group();
    const auto& m = module_->module();
    for (int cand = 0; cand < m.size(); ++cand) {
        bool ok = true;
        for (int s = 0; s < gamma.order() && ok; ++s)
            ok = values_[s] == m.subtract(module_->act(s, cand), cand);
        if (ok) return cand;
    }
    return std::nullopt;
}

Cocycle1 Cocycle1::restricted(const GroupPtr& subgroup, const std::vector<int>& to_parent) const {
    std::vector<int> out(subgroup->order());
    for (int s = 0; s < subgroup->order(); ++s) out[s] = values_[to_parent[s]];
    return Cocycle1(module_->restricted(subgroup, to_parent), std::move(out));
}

Cocycle2::Cocycle2(ModulePtr module, std::vector<int> values)
    : module_(std::move(module)), values_(std::move(values)) {
    const auto& gamma = *module_->group();
    const auto& m = module_->module();
    int n = gamma.order();
    if (static_cast<int>(values_.size()) != n * n)
        throw std::invalid_argument("two-cocycle table has wrong size");
    for (int v : values_)
        if (v < 0 || v >= m.size()) throw std::invalid_argument("cocycle value out of range");
    for (int s = 0; s < n; ++s)
        if (value(gamma.identity(), s) != 0 || value(s, gamma.identity()) != 0)
            throw std::invalid_argument("two-cocycle is not normalized");
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (int u = 0; u < n; ++u) {
                int lhs = m.add(module_->act(s, value(t, u)), value(s, gamma.compose(t, u)));
                int rhs = m.add(value(gamma.compose(s, t), u), value(s, t));
                if (lhs != rhs) throw std::invalid_argument("two-cocycle identity fails");
            }
}

bool Cocycle2::is_zero() const {
    for (int v : values_)
        if (v != 0) return false;
    return true;
}

Cocycle2 Cocycle2::add(const Cocycle2& o) const {
    if (module_->module() != o.module_->module() ||
        module_->group()->order() != o.module_->group()->order())
        throw std::invalid_argument("cocycle addition across different modules");
    std::vector<int> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        out[i] = module_->module().add(values_[i], o.values_[i]);
    return Cocycle2(module_, std::move(out));
}

Cocycle2 Cocycle2::negate() const {
    std::vector<int> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = module_->module().negate(values_[i]);
    return Cocycle2(module_, std::move(out));
}

Cocycle2 Cocycle2::scale(int k) const {
    std::vector<int> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = module_->module().scale(k, values_[i]);
    return Cocycle2(module_, std::move(out));
}

Cocycle2 Cocycle2::coboundary(const ModulePtr& module, const std::vector<int>& cochain) {
    const auto& gamma = *module->group();
    const auto& m = module->module();
    int n = gamma.order();
    if (static_cast<int>(cochain.size()) != n)
        throw std::invalid_argument("one-cochain has wrong size");
    if (cochain[gamma.identity()] != 0)
        throw std::invalid_argument("one-cochain must be normalized");
    std::vector<int> out(static_cast<std::size_t>(n) * n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            int v = m.add(module->act(s, cochain[t]),
                          m.subtract(cochain[s], cochain[gamma.compose(s, t)]));
            out[static_cast<std::size_t>(s) * n + t] = v;
        }
    return Cocycle2(module, std::move(out));
}

std::optional<std::vector<int>> Cocycle2::coboundary_witness() const {
    const auto& gamma = *module_->group();
    const auto& m = module_->module();
    int n = gamma.order();
    check_guard(std::pow(static_cast<double>(m.size()), n - 1),
                "degree-2 coboundary search over 1-cochains");
    std::vector<int> free(n - 1, 0); // values at non-identity elements
    do {
        std::vector<int> cochain(n, 0);
        for (int s = 1; s < n; ++s) cochain[s] = free[s - 1];
        bool ok = true;
        for (int s = 0; s < n && ok; ++s)
            for (int t = 0; t < n && ok; ++t) {
                int v = m.add(module_->act(s, cochain[t]),
                              m.subtract(cochain[s], cochain[gamma.compose(s, t)]));
                ok = v == value(s, t);
            }
        if (ok) return cochain;
    } while (next_combo(free, m.size()));
    return std::nullopt;
}

Cocycle2 Cocycle2::restricted(const GroupPtr& subgroup, const std::vector<int>& to_parent) const {
    int k = subgroup->order();
    std::vector<int> out(static_cast<std::size_t>(k) * k);
    for (int s = 0; s < k; ++s)
        for (int t = 0; t < k; ++t)
            out[static_cast<std::size_t>(s) * k + t] = value(to_parent[s], to_parent[t]);
    return Cocycle2(module_->restricted(subgroup, to_parent), std::move(out));
}

CohClass::CohClass(int degree, ModulePtr module, std::vector<int> rep)
    : degree_(degree), module_(std::move(module)), rep_(std::move(rep)) {}

CohClass CohClass::of(const Cocycle1& c) {
    const auto& module = c.module();
    const auto& m = module->module();
    std::vector<int> best = c.values();
    for (int cand = 0; cand < m.size(); ++cand) {
        Cocycle1 shifted = c.add(Cocycle1::coboundary(module, cand));
        if (shifted.values() < best) best = shifted.values();
    }
    return CohClass(1, module, std::move(best));
}

CohClass CohClass::of(const Cocycle2& c) {
    const auto& module = c.module();
    const auto& gamma = *module->group();
    const auto& m = module->module();
    int n = gamma.order();
    check_guard(std::pow(static_cast<double>(m.size()), n - 1),
                "degree-2 class canonicalization over 1-cochains");
    std::vector<int> best = c.values();
    std::vector<int> free(n - 1, 0);
    do {
        std::vector<int> cochain(n, 0);
        for (int s = 1; s < n; ++s) cochain[s] = free[s - 1];
        Cocycle2 shifted = c.add(Cocycle2::coboundary(module, cochain));
        if (shifted.values() < best) best = shifted.values();
    } while (next_combo(free, m.size()));
    return CohClass(2, module, std::move(best));
}

Cocycle1 CohClass::representative1() const {
    if (degree_ != 1) throw std::logic_error("not a degree-1 class");
    return Cocycle1(module_, rep_);
}

Cocycle2 CohClass::representative2() const {
    if (degree_ != 2) throw std::logic_error("not a degree-2 class");
    return Cocycle2(module_, rep_);
}

bool CohClass::is_trivial() const {
    for (int v : rep_)
        if (v != 0) return false;
    return true;
}

CohClass CohClass::add(const CohClass& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
    if (degree_ == 1) return of(representative1().add(o.representative1()));
    return of(representative2().add(o.representative2()));
}

CohClass CohClass::scale(int k) const {
    if (degree_ == 1) return of(representative1().scale(k));
    return of(representative2().scale(k));
}

} // namespace thetakit
