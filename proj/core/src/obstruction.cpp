#include "thetakit/obstruction.hpp"

#include <stdexcept>

namespace thetakit {

namespace {

// Block-diagonal module H + H^* over the same Gamma; uniform type so the
// concatenated divisor chain stays valid.
ModulePtr direct_sum_module(const ModulePtr& h, const ModulePtr& hd, const std::string& name) {
    const auto& div = h->module().divisors();
    for (int v : div)
        if (v != div[0])
            throw std::invalid_argument("split theta data requires uniform type");
    std::vector<int> kdiv(div);
    kdiv.insert(kdiv.end(), div.begin(), div.end());
    FiniteAbelianGroup K(kdiv);
    int hs = h->module().size();
    const GroupPtr& gamma = h->group();
    std::vector<std::vector<int>> tables(gamma->order(), std::vector<int>(K.size()));
    for (int s = 0; s < gamma->order(); ++s)
        for (int p = 0; p < K.size(); ++p) {
            int x = p % hs;
            int l = p / hs;
            tables[s][p] = h->act(s, x) + hd->act(s, l) * hs;
        }
    return std::make_shared<GammaModule>(gamma, K, std::move(tables), name);
}

} // namespace

LagrangianThetaData::LagrangianThetaData(ModulePtr h_module, MuN mu, std::string name)
    : h_(std::move(h_module)), mu_(std::move(mu)), name_(std::move(name)) {
    if (mu_.n() != h_->module().exponent())
        throw std::invalid_argument("mu must have n = exponent of H");
    if (mu_.group()->order() != h_->group()->order())
        throw std::invalid_argument("H and mu must share Gamma");
    ModulePtr hd = dual_module(h_, mu_);
    k_ = direct_sum_module(h_, hd, (name_.empty() ? "K" : name_ + ".K"));
    k_dual_ = dual_module(k_, mu_);
    mu_module_ = mu_.as_module();
    heis_ = std::make_shared<HeisenbergGroup>(h_->module().divisors());

    // The point index spaces of K and of the Heisenberg quotient agree
    // ((x, l) little-endian), and f(P,Q) - f(Q,P) is the commutator pairing.
    const ThetaGroup& tg = heis_->group();
    if (tg.point_count() != k_->module().size())
        throw std::logic_error("point space mismatch");
    int d = mu_.n();
    for (int p = 0; p < tg.point_count(); ++p)
        for (int q = 0; q < tg.point_count(); ++q) {
            int e = (f_eval(p, q) - f_eval(q, p)) % d;
            if (e < 0) e += d;
            if (e != tg.commutator_dlog(p, q))
                throw std::logic_error("f does not reproduce the commutator pairing");
        }
    // f is Gamma-equivariant into mu: s.f(P,Q) = f(s.P, s.Q); this is what
    // makes the base action respect the group law.
    for (int s = 0; s < gamma()->order(); ++s)
        for (int p = 0; p < tg.point_count(); ++p)
            for (int q = 0; q < tg.point_count(); ++q) {
                int lhs = static_cast<int>(static_cast<long long>(mu_.unit(s)) * f_eval(p, q) % d);
                int rhs = f_eval(k_->act(s, p), k_->act(s, q));
                if (lhs != rhs) throw std::logic_error("f is not equivariant");
            }
}

int LagrangianThetaData::character_eval(int ell, int p) const {
    return dual_eval(k_->module(), mu_.n(), ell, p);
}

Cocycle1 LagrangianThetaData::zero_chi() const {
    return Cocycle1(k_dual_, std::vector<int>(gamma()->order(), 0));
}

TwistedAction LagrangianThetaData::twist(const Cocycle1& chi) const {
    if (chi.module()->module() != k_dual_->module())
        throw std::invalid_argument("chi must take values in K^*");
    const GroupPtr& g = gamma();
    std::vector<std::vector<int>> base(g->order());
    std::vector<int> units(g->order());
    std::vector<std::vector<int>> chi_coeffs(g->order());
    std::vector<std::vector<int>> s_matrices(g->order()); // identity twists
    for (int s = 0; s < g->order(); ++s) {
        base[s] = k_->action_table(s);
        units[s] = mu_.unit(s);
        chi_coeffs[s] = k_->module().element(chi.value(s));
    }
    return TwistedAction(heis_, g, std::move(base), std::move(units), std::move(chi_coeffs),
                         std::move(s_matrices));
}

ObstructionRecord obstruction_delta(const LagrangianThetaData& data, const Cocycle1& chi,
                                    const Cocycle1& eta) {
    if (eta.module()->module() != data.k()->module())
        throw std::invalid_argument("eta must be a cocycle on K");
    if (chi.module()->module() != data.k_dual()->module())
        throw std::invalid_argument("chi must take values in K^*");
    // The explicit formula is stated for pure character twists, so eta must
    // be a cocycle for this data's own K-action; symplectic-twist cocycles
    // are rejected here (the connecting route accepts them).
    {
        const auto& gamma = *data.gamma();
        const auto& K = data.k()->module();
        for (int s = 0; s < gamma.order(); ++s)
            for (int t = 0; t < gamma.order(); ++t)
                if (eta.value(gamma.compose(s, t)) !=
                    K.add(eta.value(s), data.k()->act(s, eta.value(t))))
                    throw std::invalid_argument("eta is not a cocycle for the base K-action");
    }
    const GroupPtr& gamma = data.gamma();
    int order = gamma->order();
    int n = data.n();
    std::vector<int> lin(static_cast<std::size_t>(order) * order);
    std::vector<int> quad(static_cast<std::size_t>(order) * order);
    std::vector<int> total(static_cast<std::size_t>(order) * order);
    for (int s = 0; s < order; ++s)
        for (int t = 0; t < order; ++t) {
            int moved = data.k()->act(s, eta.value(t));
            int l = data.character_eval(chi.value(s), moved);
            int q = data.f_eval(eta.value(s), moved);
            std::size_t at = static_cast<std::size_t>(s) * order + t;
            lin[at] = l;
            quad[at] = q;
            total[at] = (l + q) % n;
        }
    Cocycle2 delta(data.mu_module(), std::move(total));
    CohClass cls = CohClass::of(delta);
    return ObstructionRecord{eta, std::move(delta), std::move(cls),
                             Cocycle2(data.mu_module(), std::move(lin)),
                             Cocycle2(data.mu_module(), std::move(quad))};
}

bool same_cocycle(const ObstructionRecord& a, const ObstructionRecord& b) {
    return a.delta.values() == b.delta.values();
}

bool same_class(const ObstructionRecord& a, const ObstructionRecord& b) {
    return a.delta_class == b.delta_class;
}

Cocycle2 obstruction_delta_via_connecting(const LagrangianThetaData& data, const Cocycle1& chi,
                                          const Cocycle1& eta,
                                          const std::vector<std::vector<int>>* s_matrices) {
    const GroupPtr& gamma = data.gamma();
    int order = gamma->order();
    const ThetaGroup& tg = data.heisenberg()->group();

    TwistedAction action = [&] {
        if (s_matrices == nullptr) return data.twist(chi);
        std::vector<std::vector<int>> base(order);
        std::vector<int> units(order);
        std::vector<std::vector<int>> chi_coeffs(order);
        for (int s = 0; s < order; ++s) {
            base[s] = data.k()->action_table(s);
            units[s] = data.mu().unit(s);
            chi_coeffs[s] = data.k()->module().element(chi.value(s));
        }
        return TwistedAction(data.heisenberg(), gamma, std::move(base), std::move(units),
                             std::move(chi_coeffs), *s_matrices);
    }();

    std::vector<int> table(static_cast<std::size_t>(order) * order);
    for (int s = 0; s < order; ++s)
        for (int t = 0; t < order; ++t) {
            ThetaGroup::Elem ns{0, eta.value(s)};
            ThetaGroup::Elem nt{0, eta.value(t)};
            ThetaGroup::Elem nst{0, eta.value(gamma->compose(s, t))};
            ThetaGroup::Elem prod = tg.mul(tg.mul(ns, action.act(s, nt)), tg.inverse(nst));
            if (prod.point != 0)
                throw std::logic_error("connecting coboundary is not central");
            table[static_cast<std::size_t>(s) * order + t] = prod.alpha;
        }
    return Cocycle2(data.mu_module(), std::move(table));
}

QuadraticityReport quadraticity_report(const LagrangianThetaData& data, const Cocycle1& chi,
                                       const Cocycle1& eta, const Cocycle1& eta_prime) {
    ObstructionRecord r_sum = obstruction_delta(data, chi, eta.add(eta_prime));
    ObstructionRecord r1 = obstruction_delta(data, chi, eta);
    ObstructionRecord r2 = obstruction_delta(data, chi, eta_prime);
    QuadraticityReport out{
        r_sum.delta.add(r1.delta.negate()).add(r2.delta.negate()),
        true, true, true};
    out.linear_additive =
        r_sum.linear_part.values() == r1.linear_part.add(r2.linear_part).values();
    int n = data.n();
    for (int a = 0; a < n; ++a) {
        ObstructionRecord ra = obstruction_delta(data, chi, eta.scale(a));
        if (ra.linear_part.values() != r1.linear_part.scale(a).values())
            out.linear_scaling = false;
        if (ra.quadratic_part.values() != r1.quadratic_part.scale(a * a).values())
            out.quadratic_scaling = false;
    }
    return out;
}

bool torsion_check(const ObstructionRecord& rec, int n) {
    return rec.delta.scale(n).is_coboundary();
}

} // namespace thetakit
