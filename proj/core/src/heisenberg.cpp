#include "thetakit/heisenberg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "thetakit/guard.hpp"

namespace thetakit {

ThetaGroup::ThetaGroup(std::vector<int> radices, int d, std::vector<int> cocycle)
    : radices_(std::move(radices)), d_(d), cocycle_(std::move(cocycle)) {
    if (d_ < 2) throw std::invalid_argument("center modulus must be >= 2");
    long long k = 1;
    for (int r : radices_) {
        if (r < 2) throw std::invalid_argument("point radices must be >= 2");
        k *= r;
        // The cocycle and addition tables are |K|^2 entries each.
        if (k > 10'000) throw std::invalid_argument("point group too large for full tables");
    }
    k_ = static_cast<int>(k);
    if (cocycle_.size() != static_cast<std::size_t>(k_) * k_)
        throw std::invalid_argument("cocycle table has wrong size");
    for (int v : cocycle_)
        if (v < 0 || v >= d_) throw std::invalid_argument("cocycle value out of range");
    for (int p = 0; p < k_; ++p)
        if (cocycle_at(0, p) != 0 || cocycle_at(p, 0) != 0)
            throw std::invalid_argument("cocycle is not normalized");

    add_.resize(static_cast<std::size_t>(k_) * k_);
    neg_.resize(k_);
    for (int p = 0; p < k_; ++p) {
        for (int q = 0; q < k_; ++q) {
            int pp = p, qq = q, out = 0, radix = 1;
            for (int r : radices_) {
                out += ((pp % r + qq % r) % r) * radix;
                pp /= r;
                qq /= r;
                radix *= r;
            }
            add_[idx(p, q)] = out;
        }
        int pp = p, out = 0, radix = 1;
        for (int r : radices_) {
            out += ((r - pp % r) % r) * radix;
            pp /= r;
            radix *= r;
        }
        neg_[p] = out;
    }

    // Associativity = the 2-cocycle identity for c over K; full scan when
    // affordable, else the factory formulas carry the burden.
    if (static_cast<double>(k_) * k_ * k_ <= 2e7) {
        for (int p = 0; p < k_; ++p)
            for (int q = 0; q < k_; ++q)
                for (int r = 0; r < k_; ++r) {
                    int lhs = (cocycle_at(p, q) + cocycle_at(add_[idx(p, q)], r)) % d_;
                    int rhs = (cocycle_at(q, r) + cocycle_at(p, add_[idx(q, r)])) % d_;
                    if (lhs != rhs) throw std::invalid_argument("cocycle identity fails");
                }
    }
}

ThetaGroup::Elem ThetaGroup::power(Elem a, int k) const {
    Elem acc = identity();
    if (k < 0) {
        a = inverse(a);
        k = -k;
    }
    for (int i = 0; i < k; ++i) acc = mul(acc, a);
    return acc;
}

std::vector<int> ThetaGroup::point_coords(int p) const {
    std::vector<int> out(radices_.size());
    for (std::size_t i = 0; i < radices_.size(); ++i) {
        out[i] = p % radices_[i];
        p /= radices_[i];
    }
    return out;
}

int ThetaGroup::point_of(const std::vector<int>& coords) const {
    if (coords.size() != radices_.size()) throw std::invalid_argument("wrong coordinate rank");
    int out = 0, radix = 1;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
        int r = coords[i] % radices_[i];
        if (r < 0) r += radices_[i];
        out += r * radix;
        radix *= radices_[i];
    }
    return out;
}

int ThetaGroup::commutator_dlog(int p, int q) const {
    Elem a{0, p}, b{0, q};
    Elem c = mul(mul(a, b), mul(inverse(a), inverse(b)));
    if (c.point != 0) throw std::logic_error("commutator of lifts is not central");
    return c.alpha;
}

std::vector<int> ThetaGroup::center_points() const {
    std::vector<int> out;
    for (int p = 0; p < k_; ++p) {
        bool central = true;
        for (int q = 0; q < k_ && central; ++q) central = cocycle_at(p, q) == cocycle_at(q, p);
        if (central) out.push_back(p);
    }
    return out;
}

namespace {

ThetaGroup build_heisenberg_extension(const std::vector<int>& divisors) {
    if (divisors.empty()) throw std::invalid_argument("type must be nonempty");
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (divisors[i] < 2) throw std::invalid_argument("divisors must be >= 2");
        if (i + 1 < divisors.size() && divisors[i + 1] % divisors[i] != 0)
            throw std::invalid_argument("divisor chain condition violated");
    }
    int g = static_cast<int>(divisors.size());
    int d = 1;
    for (int v : divisors) d = std::lcm(d, v);
    std::vector<int> radices(divisors);
    radices.insert(radices.end(), divisors.begin(), divisors.end());
    long long k = 1;
    for (int r : radices) k *= r;
    std::vector<int> cocycle(static_cast<std::size_t>(k) * k);
    // f((x,l),(x',l')) = l'(x) = sum_i x_i l'_i (d / d_i) mod d.
    std::vector<std::vector<int>> coords(k);
    for (int p = 0; p < k; ++p) {
        std::vector<int> c(radices.size());
        int pp = p;
        for (std::size_t i = 0; i < radices.size(); ++i) {
            c[i] = pp % radices[i];
            pp /= radices[i];
        }
        coords[p] = std::move(c);
    }
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            long long v = 0;
            for (int i = 0; i < g; ++i)
                v += static_cast<long long>(coords[p][i]) * coords[q][g + i] * (d / divisors[i]);
            cocycle[static_cast<std::size_t>(p) * k + q] = static_cast<int>(v % d);
        }
    return ThetaGroup(std::move(radices), d, std::move(cocycle));
}

} // namespace

HeisenbergGroup::HeisenbergGroup(std::vector<int> divisors)
    : divisors_(divisors), group_(build_heisenberg_extension(divisors)) {}

std::vector<int> HeisenbergGroup::point_x(int p) const {
    auto c = group_.point_coords(p);
    return {c.begin(), c.begin() + g()};
}

std::vector<int> HeisenbergGroup::point_l(int p) const {
    auto c = group_.point_coords(p);
    return {c.begin() + g(), c.end()};
}

int HeisenbergGroup::point_of(const std::vector<int>& x, const std::vector<int>& l) const {
    std::vector<int> c(x);
    c.insert(c.end(), l.begin(), l.end());
    return group_.point_of(c);
}

SymplecticPairing HeisenbergGroup::commutator_pairing() const {
    for (int v : divisors_)
        if (v != divisors_[0])
            throw std::invalid_argument("commutator pairing table requires uniform type");
    int k = group_.point_count();
    int d = group_.d();
    std::vector<int> table(static_cast<std::size_t>(k) * k);
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            int e = (f_eval(p, q) - f_eval(q, p)) % d;
            if (e < 0) e += d;
            if (e != group_.commutator_dlog(p, q))
                throw std::logic_error("pairing table disagrees with the lift commutator");
            // Same commutator through lifts with nonzero central parts.
            ThetaGroup::Elem a{1 % d, p}, b{(d - 1) % d, q};
            ThetaGroup::Elem c = group_.mul(group_.mul(a, b),
                                            group_.mul(group_.inverse(a), group_.inverse(b)));
            if (c.point != 0 || c.alpha != e)
                throw std::logic_error("pairing table disagrees for shifted lifts");
            table[static_cast<std::size_t>(p) * k + q] = e;
        }
    FiniteAbelianGroup K((std::vector<int>(group_.radices())));
    auto space = GammaModule::trivial(FiniteGroup::trivial(), K, "K(" + K.describe() + ")");
    return SymplecticPairing(space, MuN::trivial(d, FiniteGroup::trivial()), std::move(table));
}

ThetaGroup variant_group(const SymplecticPairing& e) {
    int d = e.mu().n();
    if (d % 2 == 0)
        throw std::invalid_argument("companion group requires odd exponent (2 must be a unit)");
    int inv2 = (d + 1) / 2;
    const auto& K = e.space()->module();
    int k = K.size();
    std::vector<int> cocycle(static_cast<std::size_t>(k) * k);
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
            cocycle[static_cast<std::size_t>(p) * k + q] =
                static_cast<int>(static_cast<long long>(inv2) * e.value(p, q) % d);
    return ThetaGroup(K.divisors(), d, std::move(cocycle));
}

PhiYu::PhiYu(std::shared_ptr<const HeisenbergGroup> h)
    : h_(std::move(h)), target_(variant_group(h_->commutator_pairing())), shift_(0) {
    const ThetaGroup& src = h_->group();
    int d = src.d();
    int k = src.point_count();
    int inv2 = (d + 1) / 2;
    // Try both sign choices for the additive constant; the homomorphism
    // condition is independent of the central parts, so point pairs suffice.
    for (int cand : {d - inv2, inv2}) {
        bool ok = true;
        for (int p = 0; p < k && ok; ++p)
            for (int q = 0; q < k && ok; ++q) {
                int pq = src.point_add(p, q);
                long long lhs = src.cocycle_at(p, q) +
                                static_cast<long long>(cand) * src.cocycle_at(pq, pq);
                long long rhs = static_cast<long long>(cand) * src.cocycle_at(p, p) +
                                static_cast<long long>(cand) * src.cocycle_at(q, q) +
                                target_.cocycle_at(p, q);
                ok = (lhs - rhs) % d == 0;
            }
        if (ok) {
            shift_ = cand;
            return;
        }
    }
    throw std::logic_error("no additive constant makes the map a homomorphism");
}

ThetaGroup::Elem PhiYu::apply(ThetaGroup::Elem a) const {
    const ThetaGroup& src = h_->group();
    int d = src.d();
    int alpha = static_cast<int>((a.alpha + static_cast<long long>(shift_) *
                                                src.cocycle_at(a.point, a.point)) % d);
    return {alpha, a.point};
}

bool PhiYu::verify_isomorphism() const {
    const ThetaGroup& src = h_->group();
    int k = src.point_count();
    int d = src.d();
    std::vector<int> shift(k);
    for (int p = 0; p < k; ++p)
        shift[p] = static_cast<int>(static_cast<long long>(shift_) * src.cocycle_at(p, p) % d);
    // Bijectivity and triviality on center and quotient: the point part is
    // fixed and alpha -> alpha + shift[p] permutes the fiber; shift[0] = 0.
    if (shift[0] != 0) return false;
    // Homomorphism over every element pair (alpha parts swept explicitly).
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            int pq = src.point_add(p, q);
            int lhs0 = (src.cocycle_at(p, q) + shift[pq]) % d;
            int rhs0 = (shift[p] + shift[q] + target_.cocycle_at(p, q)) % d;
            for (int a1 = 0; a1 < d; ++a1)
                for (int a2 = 0; a2 < d; ++a2) {
                    int lhs = a1 + a2 + lhs0;
                    int rhs = a1 + a2 + rhs0;
                    lhs -= lhs >= d ? d : 0;
                    lhs -= lhs >= d ? d : 0;
                    rhs -= rhs >= d ? d : 0;
                    rhs -= rhs >= d ? d : 0;
                    if (lhs != rhs) return false;
                }
        }
    return true;
}

ThetaGroup::Elem PhiYu::apply_inverse(ThetaGroup::Elem a) const {
    const ThetaGroup& src = h_->group();
    int d = src.d();
    long long alpha = a.alpha - static_cast<long long>(shift_) * src.cocycle_at(a.point, a.point);
    alpha %= d;
    if (alpha < 0) alpha += d;
    return {static_cast<int>(alpha), a.point};
}

namespace {

std::vector<int> basis_points(const ThetaGroup& tg) {
    std::vector<int> out;
    std::vector<int> coords(tg.radices().size(), 0);
    for (std::size_t i = 0; i < tg.radices().size(); ++i) {
        std::fill(coords.begin(), coords.end(), 0);
        coords[i] = 1;
        out.push_back(tg.point_of(coords));
    }
    return out;
}

} // namespace

G1Enumeration enumerate_g1(const HeisenbergGroup& h) {
    int n = h.divisors()[0];
    for (int v : h.divisors())
        if (v != n) throw std::invalid_argument("automorphism enumeration requires uniform type");
    int g = h.g();
    bool feasible = (n == 2 && g == 1) || (n == 3 && g == 1) || (n == 4 && g == 1) ||
                    (n == 2 && g == 2);
    if (!feasible)
        throw GuardExceeded("enumerate_g1 size guard: supported (n,g) are (2,1),(3,1),(4,1),(2,2)");

    const ThetaGroup& tg = h.group();
    int k = tg.point_count();
    int d = tg.d();
    int slots = 2 * g;
    std::vector<int> basis = basis_points(tg);
    int total = static_cast<int>(tg.order());

    // Relation data: required commutators between generators, and the n-th
    // power of every element (alpha-independent central part).
    std::vector<std::vector<int>> com_req(slots, std::vector<int>(slots));
    for (int s = 0; s < slots; ++s)
        for (int t = 0; t < slots; ++t) com_req[s][t] = tg.commutator_dlog(basis[s], basis[t]);
    std::vector<char> nth_power_central_zero(k);
    for (int p = 0; p < k; ++p) {
        ThetaGroup::Elem e = tg.power({0, p}, n);
        nth_power_central_zero[p] = (e.point == 0 && e.alpha == 0) ? 1 : 0;
    }

    G1Enumeration out;
    std::vector<ThetaGroup::Elem> images(slots);

    auto emit = [&](const std::vector<ThetaGroup::Elem>& imgs) {
        // Normal form (beta, P) = z^{beta - f(P,P)} u^x v^l; push through the
        // generator images and verify we end up with an automorphism.
        std::vector<int> perm(total, -1);
        for (int idx = 0; idx < total; ++idx) {
            ThetaGroup::Elem e = tg.elem_at(idx);
            int base = e.alpha - tg.cocycle_at(e.point, e.point);
            base %= d;
            if (base < 0) base += d;
            ThetaGroup::Elem acc{base, 0};
            auto coords = tg.point_coords(e.point);
            for (int s = 0; s < slots; ++s) acc = tg.mul(acc, tg.power(imgs[s], coords[s]));
            perm[idx] = tg.elem_index(acc);
        }
        std::vector<char> seen(total, 0);
        for (int v : perm) {
            if (seen[v]) return;
            seen[v] = 1;
        }
        for (int a = 0; a < total; ++a)
            for (int b = 0; b < total; ++b) {
                ThetaGroup::Elem ea = tg.elem_at(a), eb = tg.elem_at(b);
                int lhs = perm[tg.elem_index(tg.mul(ea, eb))];
                int rhs = tg.elem_index(tg.mul(tg.elem_at(perm[a]), tg.elem_at(perm[b])));
                if (lhs != rhs) return;
            }
        CentrallyTrivialAut aut;
        aut.perm = std::move(perm);
        aut.generator_images = imgs;
        aut.quotient_matrix.assign(static_cast<std::size_t>(slots) * slots, 0);
        bool quotient_trivial = true;
        for (int c = 0; c < slots; ++c) {
            auto coords = tg.point_coords(imgs[c].point);
            for (int r = 0; r < slots; ++r)
                aut.quotient_matrix[static_cast<std::size_t>(r) * slots + c] = coords[r];
            if (imgs[c].point != basis[c]) quotient_trivial = false;
        }
        aut.quotient_trivial = quotient_trivial;
        out.autos.push_back(std::move(aut));
    };

    std::vector<int> stack_points(slots);
    auto dfs = [&](auto&& self, int slot) -> void {
        if (slot == slots) {
            emit(images);
            return;
        }
        for (int alpha = 0; alpha < d; ++alpha)
            for (int p = 0; p < k; ++p) {
                if (!nth_power_central_zero[p]) continue;
                bool ok = true;
                for (int s = 0; s < slot && ok; ++s)
                    ok = tg.commutator_dlog(stack_points[s], p) == com_req[s][slot];
                if (!ok) continue;
                images[slot] = {alpha, p};
                stack_points[slot] = p;
                self(self, slot + 1);
            }
    };
    dfs(dfs, 0);

    std::set<std::vector<int>> matrices;
    for (std::size_t i = 0; i < out.autos.size(); ++i) {
        if (out.autos[i].quotient_trivial) out.g2_indices.push_back(static_cast<int>(i));
        matrices.insert(out.autos[i].quotient_matrix);
    }
    out.quotient_image.assign(matrices.begin(), matrices.end());
    return out;
}

std::vector<std::vector<int>> sp_group(int g, int n) {
    if (g < 1 || n < 2) throw std::invalid_argument("sp_group requires g >= 1, n >= 2");
    int dim = 2 * g;
    int entries = dim * dim;
    check_guard(std::pow(static_cast<double>(n), static_cast<double>(entries)),
                "sp_group matrix enumeration");
    // J in the x_1..x_g, y_1..y_g basis.
    std::vector<int> J(static_cast<std::size_t>(entries), 0);
    for (int i = 0; i < g; ++i) {
        J[static_cast<std::size_t>(i) * dim + g + i] = 1;
        J[static_cast<std::size_t>(g + i) * dim + i] = n - 1;
    }
    auto form = [&](const std::vector<int>& M, int r, int c) {
        // (M^T J M)[r][c] = sum_{a,b} M[a][r] J[a][b] M[b][c]
        long long v = 0;
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
                v += static_cast<long long>(M[static_cast<std::size_t>(a) * dim + r]) *
                     J[static_cast<std::size_t>(a) * dim + b] *
                     M[static_cast<std::size_t>(b) * dim + c];
        v %= n;
        if (v < 0) v += n;
        return static_cast<int>(v);
    };
    std::vector<std::vector<int>> out;
    std::vector<int> M(static_cast<std::size_t>(entries), 0);
    while (true) {
        bool symplectic = true;
        for (int r = 0; r < dim && symplectic; ++r)
            for (int c = 0; c < dim && symplectic; ++c)
                symplectic = form(M, r, c) == J[static_cast<std::size_t>(r) * dim + c];
        if (symplectic) out.push_back(M);
        int i = entries - 1;
        while (i >= 0 && M[i] == n - 1) M[i--] = 0;
        if (i < 0) break;
        ++M[i];
    }
    return out;
}

int apply_matrix_point(const ThetaGroup& tg, const std::vector<int>& matrix, int point) {
    int dim = static_cast<int>(tg.radices().size());
    int n = tg.radices()[0];
    auto coords = tg.point_coords(point);
    std::vector<int> out(dim);
    for (int r = 0; r < dim; ++r) {
        long long v = 0;
        for (int c = 0; c < dim; ++c)
            v += static_cast<long long>(matrix[static_cast<std::size_t>(r) * dim + c]) * coords[c];
        out[r] = static_cast<int>(v % n);
    }
    return tg.point_of(out);
}

TwistedAction::TwistedAction(std::shared_ptr<const HeisenbergGroup> h, GroupPtr gamma,
                             std::vector<std::vector<int>> base_point_action,
                             std::vector<int> center_units,
                             std::vector<std::vector<int>> chi_coefficients,
                             std::vector<std::vector<int>> s_matrices)
    : h_(std::move(h)), gamma_(std::move(gamma)), units_(std::move(center_units)) {
    const ThetaGroup& tg = h_->group();
    int k = tg.point_count();
    int d = tg.d();
    int order = gamma_->order();
    if (static_cast<int>(base_point_action.size()) != order ||
        static_cast<int>(units_.size()) != order ||
        static_cast<int>(chi_coefficients.size()) != order ||
        static_cast<int>(s_matrices.size()) != order)
        throw std::invalid_argument("one table per group element required");
    bool any_s = false;
    for (const auto& m : s_matrices) any_s |= !m.empty();
    if (any_s && d % 2 == 0)
        throw std::invalid_argument("symplectic twists require odd exponent");
    int inv2 = d % 2 == 1 ? (d + 1) / 2 : 0;

    point_maps_.assign(order, std::vector<int>(k));
    alpha_shift_.assign(order, std::vector<int>(k));
    for (int s = 0; s < order; ++s) {
        const auto& base = base_point_action[s];
        if (static_cast<int>(base.size()) != k)
            throw std::invalid_argument("base action table has wrong size");
        const auto& chi = chi_coefficients[s];
        if (static_cast<int>(chi.size()) != static_cast<int>(tg.radices().size()))
            throw std::invalid_argument("character coefficients have wrong rank");
        for (int p = 0; p < k; ++p) {
            int p0 = base[p];
            int p1 = p0;
            long long shift = 0;
            if (!s_matrices[s].empty()) {
                p1 = apply_matrix_point(tg, s_matrices[s], p0);
                shift += static_cast<long long>(inv2) *
                         (tg.cocycle_at(p1, p1) - tg.cocycle_at(p0, p0));
            }
            auto coords = tg.point_coords(p1);
            for (std::size_t i = 0; i < coords.size(); ++i)
                shift += static_cast<long long>(chi[i]) * coords[i] * (d / tg.radices()[i]);
            shift %= d;
            if (shift < 0) shift += d;
            point_maps_[s][p] = p1;
            alpha_shift_[s][p] = static_cast<int>(shift);
        }
    }

    // Operational validation: sigma* is a group automorphism and
    // (st)* = s* t*; the latter is the cocycle condition for the twist data.
    check_guard(static_cast<double>(order) * tg.order() * tg.order(),
                "twisted action validation");
    int id = gamma_->identity();
    for (int i = 0; i < static_cast<int>(tg.order()); ++i) {
        ThetaGroup::Elem e = tg.elem_at(i);
        ThetaGroup::Elem f = act(id, e);
        if (!(f == e)) throw std::invalid_argument("identity does not act trivially");
    }
    for (int s = 0; s < order; ++s)
        for (int a = 0; a < static_cast<int>(tg.order()); ++a) {
            ThetaGroup::Elem ea = tg.elem_at(a);
            for (int b = 0; b < static_cast<int>(tg.order()); ++b) {
                ThetaGroup::Elem eb = tg.elem_at(b);
                if (!(act(s, tg.mul(ea, eb)) == tg.mul(act(s, ea), act(s, eb))))
                    throw std::invalid_argument("twisted action does not preserve the group law");
            }
        }
    for (int s = 0; s < order; ++s)
        for (int t = 0; t < order; ++t) {
            int st = gamma_->compose(s, t);
            for (int a = 0; a < static_cast<int>(tg.order()); ++a) {
                ThetaGroup::Elem e = tg.elem_at(a);
                if (!(act(st, e) == act(s, act(t, e))))
                    throw std::invalid_argument("twist cocycle condition fails");
            }
        }
}

ThetaGroup::Elem TwistedAction::act(int sigma, ThetaGroup::Elem a) const {
    const ThetaGroup& tg = h_->group();
    int d = tg.d();
    long long alpha = static_cast<long long>(units_[sigma]) * a.alpha + alpha_shift_[sigma][a.point];
    alpha %= d;
    if (alpha < 0) alpha += d;
    return {static_cast<int>(alpha), point_maps_[sigma][a.point]};
}

int TwistedAction::act_point(int sigma, int p) const { return point_maps_[sigma][p]; }

} // namespace thetakit
