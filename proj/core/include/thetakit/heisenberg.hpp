#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "thetakit/gamma_module.hpp"

namespace thetakit {

/// Central extension of a finite abelian point group K by mu_d, presented by
/// a normalized 2-cocycle table c: K x K -> Z/d.  Elements are pairs
/// (alpha mod d, point index); the law is
///   (a, P) * (a', P') = (a + a' + c(P, P'), P + P').
/// K is a mixed-radix index space so non-chained divisor sequences are fine.
class ThetaGroup {
public:
    struct Elem {
        int alpha;
        int point;
        bool operator==(const Elem&) const = default;
    };

    ThetaGroup(std::vector<int> radices, int d, std::vector<int> cocycle);

    int d() const { return d_; }
    int point_count() const { return k_; }
    long long order() const { return static_cast<long long>(d_) * k_; }
    const std::vector<int>& radices() const { return radices_; }

    Elem identity() const { return {0, 0}; }
    Elem mul(Elem a, Elem b) const {
        return {reduce(a.alpha + b.alpha + cocycle_at(a.point, b.point)), add_[idx(a.point, b.point)]};
    }
    Elem inverse(Elem a) const {
        int np = neg_[a.point];
        return {reduce(-a.alpha - cocycle_at(a.point, np)), np};
    }
    Elem power(Elem a, int k) const;

    int cocycle_at(int p, int q) const { return cocycle_[idx(p, q)]; }
    int point_add(int p, int q) const { return add_[idx(p, q)]; }
    int point_negate(int p) const { return neg_[p]; }
    std::vector<int> point_coords(int p) const;
    int point_of(const std::vector<int>& coords) const;

    /// dlog of the group commutator [lift(p), lift(q)] (lift-independent).
    int commutator_dlog(int p, int q) const;

    /// K-points of central elements: P with c(P, .) = c(., P).
    std::vector<int> center_points() const;
    long long center_order() const { return static_cast<long long>(d_) * center_points().size(); }

    int elem_index(Elem a) const { return a.alpha * k_ + a.point; }
    Elem elem_at(int i) const { return {i / k_, i % k_}; }

private:
    std::size_t idx(int p, int q) const { return static_cast<std::size_t>(p) * k_ + q; }
    int reduce(int v) const {
        v %= d_;
        return v < 0 ? v + d_ : v;
    }

    std::vector<int> radices_;
    int k_;
    int d_;
    std::vector<int> cocycle_;
    std::vector<int> add_;
    std::vector<int> neg_;
};

/// The Heisenberg group of type delta = (d_1 | ... | d_g): the central
/// extension of K = H + H^* (H = sum Z/d_i, H^* its dual in dlog
/// coordinates) by mu_d with cocycle f((x,l),(x',l')) = l'(x).
class HeisenbergGroup {
public:
    explicit HeisenbergGroup(std::vector<int> divisors);

    const std::vector<int>& divisors() const { return divisors_; }
    int g() const { return static_cast<int>(divisors_.size()); }
    int d() const { return group_.d(); }
    const ThetaGroup& group() const { return group_; }
    long long order() const { return group_.order(); }

    std::vector<int> point_x(int p) const;
    std::vector<int> point_l(int p) const;
    int point_of(const std::vector<int>& x, const std::vector<int>& l) const;

    /// f(P, Q) = l_Q(x_P) in dlog coordinates: the group-law cocycle.
    int f_eval(int p, int q) const { return group_.cocycle_at(p, q); }

    /// e(P, Q) = dlog [lift(P), lift(Q)] = f(P,Q) - f(Q,P); verified against
    /// the group commutator on every pair.  Uniform type only, since the
    /// pairing lives on K as a module of exponent d.
    SymplecticPairing commutator_pairing() const;

    std::vector<int> center_points() const { return group_.center_points(); }

private:
    std::vector<int> divisors_;
    ThetaGroup group_;
};

/// The companion group built from a symplectic pairing: law
/// (a,P)*(a',P') = (a + a' + e(P,P')/2, P+P').  Requires odd d so that 2 is
/// invertible; rejects even d.
ThetaGroup variant_group(const SymplecticPairing& e);

/// The quotient-preserving isomorphism H -> H' (variant of the commutator
/// pairing), trivial on the center and on K.  The additive constant is fixed
/// by the construction-time homomorphism test.
class PhiYu {
public:
    explicit PhiYu(std::shared_ptr<const HeisenbergGroup> h);

    const ThetaGroup& target() const { return target_; }
    ThetaGroup::Elem apply(ThetaGroup::Elem a) const;
    ThetaGroup::Elem apply_inverse(ThetaGroup::Elem a) const;
    int shift_coefficient() const { return shift_; }

    /// Re-verifies bijectivity, the homomorphism law over every element
    /// pair, and center/quotient triviality, with flat table loops.
    bool verify_isomorphism() const;

private:
    std::shared_ptr<const HeisenbergGroup> h_;
    ThetaGroup target_;
    int shift_; // Phi(a, P) = (a + shift * f(P,P), P)
};

/// A centrally trivial automorphism: fixes every central element and is
/// recorded with its induced matrix on the quotient K.
struct CentrallyTrivialAut {
    std::vector<int> perm;            // permutation of element indices
    std::vector<int> quotient_matrix; // 2g x 2g over Z/n, row-major
    std::vector<ThetaGroup::Elem> generator_images;
    bool quotient_trivial = false;
};

struct G1Enumeration {
    std::vector<CentrallyTrivialAut> autos;        // lex order on generator images
    std::vector<int> g2_indices;                   // autos acting trivially on K
    std::vector<std::vector<int>> quotient_image;  // distinct induced matrices
};

/// Exhaustive enumeration of the centrally trivial automorphism group by
/// search over generator images with relation pruning.  Feasible sizes only:
/// uniform type with (n, g) in {(2,1), (3,1), (4,1), (2,2)}.
G1Enumeration enumerate_g1(const HeisenbergGroup& h);

/// All 2g x 2g matrices over Z/n preserving the standard symplectic form,
/// in lexicographic order.  Guarded: n^(4g^2) candidates.
std::vector<std::vector<int>> sp_group(int g, int n);

/// Apply a (2g x 2g) matrix to a point of K = (Z/n)^{2g}.
int apply_matrix_point(const ThetaGroup& tg, const std::vector<int>& matrix, int point);

/// Gamma-action on a Heisenberg group twisted by a character-valued cocycle
/// chi and an optional symplectic part S:
///   sigma*(a,P) = A_sigma(u_sigma a, sigma_0 P),
/// where A_sigma is the centrally trivial automorphism attached to
/// (chi_sigma, S_sigma).  Construction verifies that every sigma* preserves
/// the group law and that (st)* = s* t* — the operational form of the
/// cocycle condition; failures throw invalid_argument.
class TwistedAction {
public:
    TwistedAction(std::shared_ptr<const HeisenbergGroup> h, GroupPtr gamma,
                  std::vector<std::vector<int>> base_point_action, std::vector<int> center_units,
                  std::vector<std::vector<int>> chi_coefficients,
                  std::vector<std::vector<int>> s_matrices);

    const HeisenbergGroup& heisenberg() const { return *h_; }
    const GroupPtr& gamma() const { return gamma_; }
    ThetaGroup::Elem act(int sigma, ThetaGroup::Elem a) const;
    int act_point(int sigma, int p) const;
    int center_unit(int sigma) const { return units_[sigma]; }

private:
    std::shared_ptr<const HeisenbergGroup> h_;
    GroupPtr gamma_;
    std::vector<std::vector<int>> point_maps_; // sigma -> permutation of K
    std::vector<std::vector<int>> alpha_shift_; // sigma -> additive shift per source point
    std::vector<int> units_;
};

} // namespace thetakit
