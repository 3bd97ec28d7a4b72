#pragma once

#include <memory>
#include <string>
#include <vector>

#include "thetakit/finite_abelian.hpp"
#include "thetakit/finite_group.hpp"

namespace thetakit {

class GammaModule;
using ModulePtr = std::shared_ptr<const GammaModule>;

/// A finite abelian group M together with an action of a finite group Gamma
/// by additive automorphisms.  The action is stored as one permutation table
/// of M per group element and fully verified on construction:
/// action(id) = id, action(st) = action(s).action(t), each table additive
/// and bijective.
class GammaModule {
public:
    GammaModule(GroupPtr group, FiniteAbelianGroup module,
                std::vector<std::vector<int>> action_tables, std::string name = "");

    static ModulePtr trivial(GroupPtr group, FiniteAbelianGroup module, std::string name = "");
    /// Action by componentwise multiplication with a unit u(sigma) mod each
    /// divisor; `units` gives u(sigma) per group element (a homomorphism into
    /// the units, verified).
    static ModulePtr by_units(GroupPtr group, FiniteAbelianGroup module,
                              const std::vector<int>& units, std::string name = "");

    const GroupPtr& group() const { return group_; }
    const FiniteAbelianGroup& module() const { return module_; }
    const std::string& name() const { return name_; }

    int act(int sigma, int m) const { return action_[sigma][m]; }
    const std::vector<int>& action_table(int sigma) const { return action_[sigma]; }
    bool trivial_action() const;

    /// Module over a subgroup: the action tables restricted along the
    /// inclusion (sub index -> parent index mapping from subgroup_as_group).
    ModulePtr restricted(const GroupPtr& subgroup, const std::vector<int>& to_parent) const;

private:
    GroupPtr group_;
    FiniteAbelianGroup module_;
    std::vector<std::vector<int>> action_;
    std::string name_;
};

/// mu_n in discrete-log coordinates: the module Z/n whose distinguished
/// generator stands for a primitive n-th root of unity.  The optional
/// Gamma-action is a homomorphism into (Z/n)^* acting by multiplication.
class MuN {
public:
    MuN(int n, GroupPtr group, std::vector<int> units);
    static MuN trivial(int n, GroupPtr group);

    int n() const { return n_; }
    const GroupPtr& group() const { return group_; }
    int unit(int sigma) const { return units_[sigma]; }
    bool trivial_action() const;

    ModulePtr as_module() const;

private:
    int n_;
    GroupPtr group_;
    std::vector<int> units_;
};

/// Hom(M, mu) with the contragredient-with-twist action
/// (s.l)(m) = s_mu(l(s^{-1} m)).  Elements are coefficient vectors with the
/// same divisor type as M; the hom for coefficients (a_i) sends m to
/// sum_i a_i (n/d_i) m_i in Z/n.
ModulePtr dual_module(const ModulePtr& M, const MuN& mu);

/// Evaluates the dual element with index `ell` of dual_module(M, mu) at the
/// element of M with index `m`; returns a dlog value in Z/mu.n.
int dual_eval(const FiniteAbelianGroup& m_group, int mu_n, int ell, int m);

/// Bilinear map A x B -> C stored as a full table; bilinearity is verified.
class BilinearPairing {
public:
    BilinearPairing(ModulePtr a, ModulePtr b, ModulePtr c, std::vector<int> table);

    const ModulePtr& a() const { return a_; }
    const ModulePtr& b() const { return b_; }
    const ModulePtr& c() const { return c_; }
    int value(int x, int y) const { return table_[static_cast<std::size_t>(x) * b_->module().size() + y]; }

private:
    ModulePtr a_, b_, c_;
    std::vector<int> table_;
};

/// Alternating bilinear form on a module K of exponent d with values in
/// mu_d, stored in dlog coordinates as a full |K| x |K| table.
class SymplecticPairing {
public:
    SymplecticPairing(ModulePtr space, MuN mu, std::vector<int> table);

    const ModulePtr& space() const { return space_; }
    const MuN& mu() const { return mu_; }
    int value(int p, int q) const { return table_[static_cast<std::size_t>(p) * space_->module().size() + q]; }
    const std::vector<int>& table() const { return table_; }

    bool alternating() const;
    bool nondegenerate() const;
    /// Checks that P -> e(P, .) is a bijection onto the dual coefficient
    /// vectors (nondegeneracy restated as bijectivity).
    bool induces_dual_isomorphism() const;

private:
    ModulePtr space_;
    MuN mu_;
    std::vector<int> table_;
};

/// The standard symplectic pairing on (Z/n)^{2g}: e(x_i, y_j) = delta_ij in
/// dlog coordinates, e(x_i, x_j) = e(y_i, y_j) = 0, with dlog matrix
/// [[0, I], [-I, 0]] in the basis x_1..x_g, y_1..y_g.
SymplecticPairing standard_symplectic(int g, int n);

} // namespace thetakit
