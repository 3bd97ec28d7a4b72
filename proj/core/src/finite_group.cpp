#include "thetakit/finite_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "thetakit/finite_abelian.hpp"

namespace thetakit {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name)
    : n_(static_cast<int>(table.size())), table_(std::move(table)), name_(std::move(name)) {
    if (n_ == 0) throw std::invalid_argument("empty multiplication table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= n_) throw std::invalid_argument("table entry out of range");
    }
    for (int a = 0; a < n_; ++a)
        if (table_[0][a] != a || table_[a][0] != a)
            throw std::invalid_argument("element 0 is not an identity");
    inverse_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (table_[a][b] == 0 && table_[b][a] == 0) {
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] < 0) throw std::invalid_argument("element without two-sided inverse");
    }
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("multiplication table is not associative");
}

GroupPtr FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
    return GroupPtr(new FiniteGroup(std::move(table), std::move(name)));
}

GroupPtr FiniteGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(std::move(t), "C" + std::to_string(n));
}

GroupPtr FiniteGroup::trivial() { return cyclic(1); }

GroupPtr FiniteGroup::klein_four() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return from_table(std::move(t), "V4");
}

GroupPtr FiniteGroup::symmetric3() {
    // Permutations of {0,1,2} in lexicographic one-line order:
    // 0:id 1:(12) 2:(01) 3:(0 1 2) 4:(0 2 1) 5:(02)
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [&](const int p[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
            t[a][b] = find(comp);
        }
    }
    return from_table(std::move(t), "S3");
}

GroupPtr FiniteGroup::from_abelian(const FiniteAbelianGroup& m, std::string name) {
    int n = m.size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = m.add(a, b);
    return from_table(std::move(t), std::move(name));
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    int x = a;
    while (x != 0) {
        x = compose(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

std::vector<int> FiniteGroup::closure(std::vector<int> seed) const {
    std::vector<char> in(n_, 0);
    in[0] = 1;
    std::vector<int> elems{0};
    for (int s : seed)
        if (!in[s]) {
            in[s] = 1;
            elems.push_back(s);
        }
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (std::size_t j = 0; j < elems.size(); ++j) {
                int p = table_[elems[i]][elems[j]];
                if (!in[p]) {
                    in[p] = 1;
                    elems.push_back(p);
                    grew = true;
                }
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& sorted_elems) const {
    if (sorted_elems.empty() || sorted_elems.front() != 0) return false;
    for (int a : sorted_elems) {
        if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), inverse_[a]))
            return false;
        for (int b : sorted_elems)
            if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), table_[a][b]))
                return false;
    }
    return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& sorted_elems) const {
    for (int g = 0; g < n_; ++g) {
        int gi = inverse_[g];
        for (int h : sorted_elems) {
            int c = table_[table_[g][h]][gi];
            if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), c)) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> queue;
    std::vector<int> base = closure({});
    found.insert(base);
    queue.push_back(base);
    while (!queue.empty()) {
        std::vector<int> s = queue.back();
        queue.pop_back();
        for (int g = 1; g < n_; ++g) {
            if (std::binary_search(s.begin(), s.end(), g)) continue;
            std::vector<int> seed = s;
            seed.push_back(g);
            std::vector<int> t = closure(std::move(seed));
            if (found.insert(t).second) queue.push_back(t);
        }
    }
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<int> FiniteGroup::generating_set() const {
    if (n_ == 1) return {};
    for (int a = 1; a < n_; ++a)
        if (static_cast<int>(closure({a}).size()) == n_) return {a};
    for (int a = 1; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (static_cast<int>(closure({a, b}).size()) == n_) return {a, b};
    for (int a = 1; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            for (int c = b + 1; c < n_; ++c)
                if (static_cast<int>(closure({a, b, c}).size()) == n_) return {a, b, c};
    throw std::logic_error("no generating set of size <= 3 found");
}

std::pair<GroupPtr, std::vector<int>> FiniteGroup::subgroup_as_group(
    const GroupPtr& parent, const std::vector<int>& sorted_elems, std::string name) {
    if (!parent->is_subgroup(sorted_elems))
        throw std::invalid_argument("element set is not a subgroup");
    // sorted_elems starts with the identity 0, so indices line up.
    std::vector<int> to_parent = sorted_elems;
    std::vector<int> to_sub(parent->order(), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) to_sub[to_parent[i]] = static_cast<int>(i);
    int m = static_cast<int>(to_parent.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            t[a][b] = to_sub[parent->compose(to_parent[a], to_parent[b])];
    return {from_table(std::move(t), std::move(name)), to_parent};
}

} // namespace thetakit
