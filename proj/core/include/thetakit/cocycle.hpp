#pragma once

#include <optional>
#include <vector>

#include "thetakit/gamma_module.hpp"

namespace thetakit {

/// One-cocycle xi: Gamma -> M.  The identity xi(st) = xi(s) + s.xi(t) is
/// verified on all pairs at construction (which forces xi(id) = 0).
class Cocycle1 {
public:
    Cocycle1(ModulePtr module, std::vector<int> values);

    const ModulePtr& module() const { return module_; }
    int value(int sigma) const { return values_[sigma]; }
    const std::vector<int>& values() const { return values_; }
    bool is_zero() const;

    Cocycle1 add(const Cocycle1& o) const;
    Cocycle1 negate() const;
    Cocycle1 scale(int k) const;

    /// sigma -> sigma.m - m.
    static Cocycle1 coboundary(const ModulePtr& module, int m);
    /// The element m with xi = coboundary(m), if one exists.
    std::optional<int> coboundary_witness() const;
    bool is_coboundary() const { return coboundary_witness().has_value(); }

    /// Restriction along a subgroup inclusion (see FiniteGroup::subgroup_as_group).
    Cocycle1 restricted(const GroupPtr& subgroup, const std::vector<int>& to_parent) const;

private:
    ModulePtr module_;
    std::vector<int> values_; // indexed by sigma
};

/// Normalized two-cocycle c: Gamma x Gamma -> M, stored row-major.
/// Verified: c(id,t) = c(s,id) = 0 and
/// s.c(t,u) - c(st,u) + c(s,tu) - c(s,t) = 0 for all triples.
class Cocycle2 {
public:
    Cocycle2(ModulePtr module, std::vector<int> values);

    const ModulePtr& module() const { return module_; }
    int value(int s, int t) const {
        return values_[static_cast<std::size_t>(s) * module_->group()->order() + t];
    }
    const std::vector<int>& values() const { return values_; }
    bool is_zero() const;

    Cocycle2 add(const Cocycle2& o) const;
    Cocycle2 negate() const;
    Cocycle2 scale(int k) const;

    /// (df)(s,t) = s.f(t) - f(st) + f(s) for a normalized 1-cochain f.
    static Cocycle2 coboundary(const ModulePtr& module, const std::vector<int>& cochain);
    /// Searches all normalized 1-cochains (guarded) for f with c = df.
    std::optional<std::vector<int>> coboundary_witness() const;
    bool is_coboundary() const { return coboundary_witness().has_value(); }

    Cocycle2 restricted(const GroupPtr& subgroup, const std::vector<int>& to_parent) const;

private:
    ModulePtr module_;
    std::vector<int> values_; // |Gamma|^2, row-major
};

/// A cohomology class: the coboundary-coset of a cocycle, held by its
/// canonical representative (lexicographically least table over the coset).
class CohClass {
public:
    static CohClass of(const Cocycle1& c);
    static CohClass of(const Cocycle2& c);

    int degree() const { return degree_; }
    const ModulePtr& module() const { return module_; }
    const std::vector<int>& representative() const { return rep_; }
    Cocycle1 representative1() const;
    Cocycle2 representative2() const;
    bool is_trivial() const;

    CohClass add(const CohClass& o) const;
    CohClass scale(int k) const;

    bool operator==(const CohClass& o) const {
        return degree_ == o.degree_ && rep_ == o.rep_;
    }
    bool operator!=(const CohClass& o) const { return !(*this == o); }
    bool operator<(const CohClass& o) const { return rep_ < o.rep_; }

private:
    CohClass(int degree, ModulePtr module, std::vector<int> rep);

    int degree_;
    ModulePtr module_;
    std::vector<int> rep_;
};

} // namespace thetakit
