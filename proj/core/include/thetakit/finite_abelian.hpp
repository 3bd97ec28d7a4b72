#pragma once

#include <string>
#include <vector>

namespace thetakit {

/// Finite abelian group of elementary-divisor type (d1 | d2 | ... | dg).
/// Elements are residue vectors (x1 mod d1, ..., xg mod dg), addressed by a
/// mixed-radix index (x1 least significant).  Addition is componentwise.
class FiniteAbelianGroup {
public:
    /// Requires a nonempty chain d1 | d2 | ... | dg with every di >= 2.
    explicit FiniteAbelianGroup(std::vector<int> divisors);

    const std::vector<int>& divisors() const { return divisors_; }
    int rank() const { return static_cast<int>(divisors_.size()); }
    int size() const { return size_; }
    int exponent() const { return exponent_; }

    std::vector<int> element(int index) const;
    int index_of(const std::vector<int>& residues) const;

    int zero() const { return 0; }
    int add(int a, int b) const;
    int negate(int a) const;
    int subtract(int a, int b) const { return add(a, negate(b)); }
    int scale(int k, int a) const;
    int order_of(int a) const;

    std::string describe() const;

    bool operator==(const FiniteAbelianGroup& o) const { return divisors_ == o.divisors_; }
    bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

private:
    std::vector<int> divisors_;
    int size_ = 1;
    int exponent_ = 1;
};

/// Validating constructor matching the library's narrow contract; rejects
/// empty lists, entries < 2, and broken divisor chains.
FiniteAbelianGroup make_group(const std::vector<int>& divisors);

} // namespace thetakit
