#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace thetakit {

class FiniteAbelianGroup;
class FiniteGroup;

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Finite group given by its full multiplication table; element 0 is the
/// identity.  Immutable after construction; all laws are verified on the
/// whole table.  Sized for |G| <= a few dozen.
class FiniteGroup {
public:
    static GroupPtr from_table(std::vector<std::vector<int>> table, std::string name);
    static GroupPtr cyclic(int n);
    static GroupPtr klein_four();
    static GroupPtr symmetric3();
    static GroupPtr trivial();
    /// Additive group of a finite abelian group, as a multiplication table.
    static GroupPtr from_abelian(const FiniteAbelianGroup& m, std::string name);

    int order() const { return n_; }
    int identity() const { return 0; }
    int compose(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inverse_[a]; }
    int element_order(int a) const;
    bool is_abelian() const;
    const std::string& name() const { return name_; }

    /// All subgroups as sorted element lists, ordered by (size, lexicographic).
    std::vector<std::vector<int>> subgroups() const;
    bool is_subgroup(const std::vector<int>& sorted_elems) const;
    bool is_normal(const std::vector<int>& sorted_elems) const;
    std::vector<int> closure(std::vector<int> seed) const;

    /// Smallest generating set found by deterministic search (size <= 3 for
    /// the catalog groups).
    std::vector<int> generating_set() const;

    /// Subgroup realized as a FiniteGroup of its own; second component maps
    /// sub-element indices to parent element indices (identity stays first).
    static std::pair<GroupPtr, std::vector<int>> subgroup_as_group(
        const GroupPtr& parent, const std::vector<int>& sorted_elems, std::string name);

private:
    FiniteGroup(std::vector<std::vector<int>> table, std::string name);

    int n_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::string name_;
};

} // namespace thetakit
