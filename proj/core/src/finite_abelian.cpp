#include "thetakit/finite_abelian.hpp"

#include <numeric>
#include <stdexcept>

namespace thetakit {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> divisors)
    : divisors_(std::move(divisors)) {
    if (divisors_.empty()) throw std::invalid_argument("divisor list must be nonempty");
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
        if (divisors_[i] < 2) throw std::invalid_argument("each divisor must be >= 2");
        if (i + 1 < divisors_.size() && divisors_[i + 1] % divisors_[i] != 0)
            throw std::invalid_argument("divisor chain condition d_i | d_{i+1} violated");
    }
    for (int d : divisors_) {
        if (size_ > 1'000'000 / d) throw std::invalid_argument("group order too large");
        size_ *= d;
        exponent_ = std::lcm(exponent_, d);
    }
}

std::vector<int> FiniteAbelianGroup::element(int index) const {
    std::vector<int> out(divisors_.size());
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
        out[i] = index % divisors_[i];
        index /= divisors_[i];
    }
    return out;
}

int FiniteAbelianGroup::index_of(const std::vector<int>& residues) const {
    if (residues.size() != divisors_.size())
        throw std::invalid_argument("residue vector has wrong rank");
    int index = 0;
    int radix = 1;
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
        int r = residues[i] % divisors_[i];
        if (r < 0) r += divisors_[i];
        index += r * radix;
        radix *= divisors_[i];
    }
    return index;
}

int FiniteAbelianGroup::add(int a, int b) const {
    int out = 0;
    int radix = 1;
    for (int d : divisors_) {
        int ra = a % d; a /= d;
        int rb = b % d; b /= d;
        out += ((ra + rb) % d) * radix;
        radix *= d;
    }
    return out;
}

int FiniteAbelianGroup::negate(int a) const {
    int out = 0;
    int radix = 1;
    for (int d : divisors_) {
        int ra = a % d; a /= d;
        out += ((d - ra) % d) * radix;
        radix *= d;
    }
    return out;
}

int FiniteAbelianGroup::scale(int k, int a) const {
    int out = 0;
    int radix = 1;
    for (int d : divisors_) {
        int ra = a % d; a /= d;
        long long v = (static_cast<long long>(k) % d) * ra % d;
        if (v < 0) v += d;
        out += static_cast<int>(v) * radix;
        radix *= d;
    }
    return out;
}

int FiniteAbelianGroup::order_of(int a) const {
    int k = 1;
    int x = a;
    while (x != 0) {
        x = add(x, a);
        ++k;
    }
    return k;
}

std::string FiniteAbelianGroup::describe() const {
    std::string s = "Z/" + std::to_string(divisors_[0]);
    for (std::size_t i = 1; i < divisors_.size(); ++i)
        s += " x Z/" + std::to_string(divisors_[i]);
    return s;
}

FiniteAbelianGroup make_group(const std::vector<int>& divisors) {
    return FiniteAbelianGroup(divisors);
}

} // namespace thetakit
