#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "thetakit/cocycle.hpp"
#include "thetakit/cohomology.hpp"
#include "thetakit/heisenberg.hpp"

namespace thetakit {

/// Context for the explicit obstruction map on a split K = H + H^*:
/// the base module H (with its Gamma-action), values mu, the twisting
/// character cocycle chi in Z^1(Gamma, K^*), the form f((x,l),(x',l')) =
/// l'(x) and the Heisenberg group it presents.  Both summands are
/// Gamma-stable by construction; f(P,Q) - f(Q,P) is checked against the
/// group commutator pairing.
class LagrangianThetaData {
public:
    LagrangianThetaData(ModulePtr h_module, MuN mu, std::string name = "");

    const ModulePtr& h() const { return h_; }
    const ModulePtr& k() const { return k_; }
    const ModulePtr& k_dual() const { return k_dual_; }
    const MuN& mu() const { return mu_; }
    const ModulePtr& mu_module() const { return mu_module_; }
    const std::shared_ptr<const HeisenbergGroup>& heisenberg() const { return heis_; }
    const GroupPtr& gamma() const { return h_->group(); }
    int n() const { return mu_.n(); }
    const std::string& name() const { return name_; }

    /// f(P, Q) in dlog coordinates; point indices of K.
    int f_eval(int p, int q) const { return heis_->f_eval(p, q); }
    /// Evaluation of the dual element `ell` of K^* at the K-point `p`.
    int character_eval(int ell, int p) const;

    Cocycle1 zero_chi() const;
    /// Gamma-action on the Heisenberg set twisted by chi (S = identity).
    TwistedAction twist(const Cocycle1& chi) const;

private:
    ModulePtr h_;
    MuN mu_;
    ModulePtr k_;
    ModulePtr k_dual_;
    ModulePtr mu_module_;
    std::shared_ptr<const HeisenbergGroup> heis_;
    std::string name_;
};

/// The obstruction data of one class: the 2-cocycle
///   delta(s,t) = chi_s(s.eta(t)) + f(eta(s), s.eta(t))
/// with its class and its linear/quadratic split.
struct ObstructionRecord {
    Cocycle1 input;
    Cocycle2 delta;
    CohClass delta_class;
    Cocycle2 linear_part;
    Cocycle2 quadratic_part;
};

ObstructionRecord obstruction_delta(const LagrangianThetaData& data, const Cocycle1& chi,
                                    const Cocycle1& eta);

/// Record comparators: the strict one is table equality of the cocycles
/// (catches lift-convention drift that class equality would mask).
bool same_cocycle(const ObstructionRecord& a, const ObstructionRecord& b);
bool same_class(const ObstructionRecord& a, const ObstructionRecord& b);

/// The same map computed as the connecting coboundary through the twisted
/// Heisenberg group with lifts P -> (0, P); equals obstruction_delta's
/// cocycle pointwise (identical lifts).  The optional S-part is accepted
/// here but not by the explicit formula.
Cocycle2 obstruction_delta_via_connecting(const LagrangianThetaData& data, const Cocycle1& chi,
                                          const Cocycle1& eta,
                                          const std::vector<std::vector<int>>* s_matrices = nullptr);

/// B(eta, eta') = delta(eta+eta') - delta(eta) - delta(eta') plus the
/// pointwise structure checks on the split.
struct QuadraticityReport {
    Cocycle2 cross_term;
    bool linear_additive = false;    // delta1(eta+eta') = delta1(eta) + delta1(eta')
    bool linear_scaling = false;     // delta1(a.eta) = a.delta1(eta) for all a
    bool quadratic_scaling = false;  // delta2(a.eta) = a^2.delta2(eta) for all a
    bool ok() const { return linear_additive && linear_scaling && quadratic_scaling; }
};

QuadraticityReport quadraticity_report(const LagrangianThetaData& data, const Cocycle1& chi,
                                       const Cocycle1& eta, const Cocycle1& eta_prime);

/// True iff n times the class of rec.delta is trivial.
bool torsion_check(const ObstructionRecord& rec, int n);

} // namespace thetakit
