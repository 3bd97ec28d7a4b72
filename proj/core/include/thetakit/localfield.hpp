#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace thetakit {

/// Tame local model at an odd prime p with n | p-1: classes of k^*/k^{*n}
/// in (valuation mod n, unit dlog mod n) coordinates relative to the least
/// primitive root g_p, with zeta_n = g_p^((p-1)/n).
class TameLocalModel {
public:
    TameLocalModel(int p, int n);

    int p() const { return p_; }
    int n() const { return n_; }
    int primitive_root() const { return root_; }
    /// dlog base g_p of a nonzero residue mod p (full value in [0, p-1)).
    int dlog_mod_p(long long residue) const;
    /// dlog of -1, reduced mod n: (p-1)/2 mod n.
    int minus_one_dlog() const { return static_cast<int>(((p_ - 1) / 2) % n_); }

private:
    int p_;
    int n_;
    int root_;
    std::vector<int> dlog_; // indexed by residue 1..p-1
};

/// An element of k^*/k^{*n}: (valuation mod n, unit dlog mod n).
struct UnitClass {
    int v = 0;
    int w = 0;
    bool operator==(const UnitClass&) const = default;
};

/// Class of the nonzero rational num/den.
UnitClass reduce(long long num, long long den, const TameLocalModel& model);
inline UnitClass reduce(long long a, const TameLocalModel& model) { return reduce(a, 1, model); }

UnitClass class_add(UnitClass a, UnitClass b, const TameLocalModel& model);
UnitClass class_negate(UnitClass a, const TameLocalModel& model);
/// Integer representative p^v * g_p^w of a class.
long long class_representative(UnitClass a, const TameLocalModel& model);

/// Tame norm-residue symbol in dlog coordinates:
///   <a,b> = v_b w_a - v_a w_b + v_a v_b dlog(-1)  (mod n),
/// the coordinate form of omega((-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)})^{(p-1)/n}.
int tame_symbol(UnitClass a, UnitClass b, const TameLocalModel& model);

/// Sum_i <a_i, b_i> + Sum_i (<C1_i, b_i> + <a_i, C2_i>) in Z/n: the symbol
/// form of the obstruction invariant, with the constant lists as free inputs.
int delta_symbols(const std::vector<UnitClass>& a, const std::vector<UnitClass>& b,
                  const std::vector<UnitClass>& c1, const std::vector<UnitClass>& c2,
                  const TameLocalModel& model);

/// Abstract exponent-n character model: Gamma_ab = (Z/n)^r and a list of
/// homomorphisms Gamma_ab -> Z/n given by coefficient vectors.
struct CharacterTuple {
    int n = 2;
    int r = 1;
    std::vector<std::vector<int>> characters;
};

struct CharacterIndexReport {
    int period = 1;
    int index = 1;
    int mindex = 1;
    int galois_index = 1;
    std::vector<int> minimal_splitting_subgroup; // element indices of (Z/n)^r
};

/// Invariants via the unique minimal splitting subgroup = intersection of
/// the character kernels; index = mindex = its index, period = exponent of
/// the subgroup of Hom generated by the tuple.
CharacterIndexReport character_index(const CharacterTuple& t);

/// Free character model on 2g independent uniformizer classes T_1..T_{2g}.
/// Coordinates must be pure uniformizer classes (w = 0); each T_i^{v_i}
/// contributes the character v_i . (dual basis vector i), and the index is
/// computed through character_index.
struct LaurentModel {
    int n = 2;
    int g = 1;
};

long long lang_tate_index(const std::vector<UnitClass>& coords, const LaurentModel& model);

/// Exhaustive first-hit search (lexicographic) for a nonzero tuple t in
/// ((Z/n)^2)^{2g} such that the quadratic symbol sum of h+t is nonzero for
/// every h in H.  The functional is delta_symbols with trivial constants.
std::optional<std::vector<UnitClass>> nonvanishing_shift_search(
    const std::vector<std::vector<UnitClass>>& H, int g, const TameLocalModel& model);

/// All n^2 classes in deterministic order (v-major), for table exports.
std::vector<UnitClass> all_classes(const TameLocalModel& model);

} // namespace thetakit
