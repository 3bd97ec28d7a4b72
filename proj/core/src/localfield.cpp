#include "thetakit/localfield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "thetakit/guard.hpp"

namespace thetakit {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

long long pow_mod(long long base, long long exp, long long mod) {
    base %= mod;
    if (base < 0) base += mod;
    long long out = 1;
    while (exp > 0) {
        if (exp & 1) out = out * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return out;
}

} // namespace

TameLocalModel::TameLocalModel(int p, int n) : p_(p), n_(n) {
    if (p_ < 3 || p_ > 10'000 || !is_prime(p_) || p_ % 2 == 0)
        throw std::invalid_argument("model requires an odd prime p <= 10^4");
    if (n_ < 2 || (p_ - 1) % n_ != 0)
        throw std::invalid_argument("tameness requires n >= 2 with n | p-1");
    // Least primitive root.
    std::vector<int> qs;
    int m = p_ - 1;
    for (int q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            qs.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) qs.push_back(m);
    root_ = 0;
    for (int g = 2; g < p_; ++g) {
        bool primitive = true;
        for (int q : qs)
            if (pow_mod(g, (p_ - 1) / q, p_) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            root_ = g;
            break;
        }
    }
    if (root_ == 0) throw std::logic_error("no primitive root found");
    dlog_.assign(p_, -1);
    long long x = 1;
    for (int k = 0; k < p_ - 1; ++k) {
        dlog_[static_cast<int>(x)] = k;
        x = x * root_ % p_;
    }
}

int TameLocalModel::dlog_mod_p(long long residue) const {
    residue %= p_;
    if (residue < 0) residue += p_;
    if (residue == 0) throw std::invalid_argument("dlog of zero residue");
    return dlog_[static_cast<int>(residue)];
}

UnitClass reduce(long long num, long long den, const TameLocalModel& model) {
    if (num == 0 || den == 0) throw std::invalid_argument("reduce requires a nonzero rational");
    int p = model.p();
    int n = model.n();
    long long v = 0;
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    long long unit = (num % p) * pow_mod(den, p - 2, p) % p;
    if (unit < 0) unit += p;
    int w = model.dlog_mod_p(unit) % n;
    int vr = static_cast<int>(((v % n) + n) % n);
    return UnitClass{vr, w};
}

UnitClass class_add(UnitClass a, UnitClass b, const TameLocalModel& model) {
    int n = model.n();
    return UnitClass{(a.v + b.v) % n, (a.w + b.w) % n};
}

UnitClass class_negate(UnitClass a, const TameLocalModel& model) {
    int n = model.n();
    return UnitClass{(n - a.v) % n, (n - a.w) % n};
}

long long class_representative(UnitClass a, const TameLocalModel& model) {
    long long out = 1;
    auto mul_checked = [&out](int factor) {
        if (out > std::numeric_limits<long long>::max() / factor)
            throw std::overflow_error("class representative exceeds 64 bits");
        out *= factor;
    };
    for (int i = 0; i < a.v; ++i) mul_checked(model.p());
    for (int i = 0; i < a.w; ++i) mul_checked(model.primitive_root());
    return out;
}

int tame_symbol(UnitClass a, UnitClass b, const TameLocalModel& model) {
    int n = model.n();
    long long s = model.minus_one_dlog();
    long long v = static_cast<long long>(b.v) * a.w - static_cast<long long>(a.v) * b.w +
                  static_cast<long long>(a.v) * b.v * s;
    v %= n;
    if (v < 0) v += n;
    return static_cast<int>(v);
}

int delta_symbols(const std::vector<UnitClass>& a, const std::vector<UnitClass>& b,
                  const std::vector<UnitClass>& c1, const std::vector<UnitClass>& c2,
                  const TameLocalModel& model) {
    if (a.size() != b.size() || c1.size() != a.size() || c2.size() != a.size())
        throw std::invalid_argument("delta_symbols requires four lists of equal length");
    int n = model.n();
    long long total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += tame_symbol(a[i], b[i], model);
        total += tame_symbol(c1[i], b[i], model);
        total += tame_symbol(a[i], c2[i], model);
    }
    return static_cast<int>(total % n);
}

namespace {

long long int_pow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

} // namespace

CharacterIndexReport character_index(const CharacterTuple& t) {
    if (t.n < 2 || t.r < 1) throw std::invalid_argument("character model requires n >= 2, r >= 1");
    long long size = int_pow(t.n, t.r);
    check_guard(static_cast<double>(size), "character model kernel scan");
    for (const auto& chi : t.characters)
        if (static_cast<int>(chi.size()) != t.r)
            throw std::invalid_argument("character has wrong rank");

    CharacterIndexReport out;
    // Minimal splitting subgroup = intersection of kernels.
    for (long long x = 0; x < size; ++x) {
        long long xx = x;
        std::vector<int> coords(t.r);
        for (int i = 0; i < t.r; ++i) {
            coords[i] = static_cast<int>(xx % t.n);
            xx /= t.n;
        }
        bool in_all_kernels = true;
        for (const auto& chi : t.characters) {
            long long val = 0;
            for (int i = 0; i < t.r; ++i) val += static_cast<long long>(chi[i]) * coords[i];
            if (val % t.n != 0) {
                in_all_kernels = false;
                break;
            }
        }
        if (in_all_kernels) out.minimal_splitting_subgroup.push_back(static_cast<int>(x));
    }
    long long idx = size / static_cast<long long>(out.minimal_splitting_subgroup.size());
    out.index = static_cast<int>(idx);
    out.mindex = out.index;
    out.galois_index = out.index;

    // Period: exponent of the subgroup of Hom generated by the tuple.
    std::vector<std::vector<int>> generated{std::vector<int>(t.r, 0)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t count = generated.size();
        for (std::size_t i = 0; i < count; ++i)
            for (const auto& chi : t.characters) {
                std::vector<int> sum(t.r);
                for (int j = 0; j < t.r; ++j) sum[j] = (generated[i][j] + chi[j]) % t.n;
                bool known = false;
                for (const auto& g : generated)
                    if (g == sum) {
                        known = true;
                        break;
                    }
                if (!known) {
                    generated.push_back(sum);
                    grew = true;
                }
            }
    }
    int period = 1;
    for (const auto& g : generated) {
        int ord = 1;
        std::vector<int> acc = g;
        while (std::any_of(acc.begin(), acc.end(), [](int v) { return v != 0; })) {
            for (int j = 0; j < t.r; ++j) acc[j] = (acc[j] + g[j]) % t.n;
            ++ord;
        }
        period = std::lcm(period, ord);
    }
    out.period = period;
    return out;
}

long long lang_tate_index(const std::vector<UnitClass>& coords, const LaurentModel& model) {
    if (static_cast<int>(coords.size()) != 2 * model.g)
        throw std::invalid_argument("expected 2g coordinates");
    CharacterTuple t;
    t.n = model.n;
    t.r = 2 * model.g;
    for (int i = 0; i < t.r; ++i) {
        if (coords[i].w != 0)
            throw std::invalid_argument(
                "coordinate outside the designated uniformizer subgroup (unit part must vanish)");
        if (coords[i].v % model.n == 0) continue;
        std::vector<int> chi(t.r, 0);
        chi[i] = coords[i].v % model.n;
        t.characters.push_back(std::move(chi));
    }
    return character_index(t).index;
}

std::vector<UnitClass> all_classes(const TameLocalModel& model) {
    std::vector<UnitClass> out;
    for (int v = 0; v < model.n(); ++v)
        for (int w = 0; w < model.n(); ++w) out.push_back(UnitClass{v, w});
    return out;
}

std::optional<std::vector<UnitClass>> nonvanishing_shift_search(
    const std::vector<std::vector<UnitClass>>& H, int g, const TameLocalModel& model) {
    if (g < 1) throw std::invalid_argument("g >= 1 required");
    int n = model.n();
    int slots = 2 * g;
    for (const auto& h : H)
        if (static_cast<int>(h.size()) != slots)
            throw std::invalid_argument("H tuple has wrong length");
    check_guard(std::pow(static_cast<double>(n) * n, static_cast<double>(slots)),
                "nonvanishing shift search");
    std::vector<UnitClass> trivial(g, UnitClass{0, 0});
    // Lexicographic odometer over (v_1, w_1, ..., v_{2g}, w_{2g}).
    std::vector<int> digits(static_cast<std::size_t>(slots) * 2, 0);
    auto advance = [&]() {
        for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
            if (++digits[i] < n) return true;
            digits[i] = 0;
        }
        return false;
    };
    while (advance()) { // skips the zero tuple
        std::vector<UnitClass> t(slots);
        for (int i = 0; i < slots; ++i)
            t[i] = UnitClass{digits[static_cast<std::size_t>(i) * 2],
                             digits[static_cast<std::size_t>(i) * 2 + 1]};
        bool good = true;
        for (const auto& h : H) {
            std::vector<UnitClass> sum(slots);
            for (int i = 0; i < slots; ++i) sum[i] = class_add(h[i], t[i], model);
            std::vector<UnitClass> a(sum.begin(), sum.begin() + g);
            std::vector<UnitClass> b(sum.begin() + g, sum.end());
            if (delta_symbols(a, b, trivial, trivial, model) == 0) {
                good = false;
                break;
            }
        }
        if (good) return t;
    }
    return std::nullopt;
}

} // namespace thetakit
