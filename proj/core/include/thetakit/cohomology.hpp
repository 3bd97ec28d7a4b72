#pragma once

#include <map>
#include <string>
#include <vector>

#include "thetakit/cocycle.hpp"

namespace thetakit {

/// Complete list of degree-1 classes, one canonical representative each, in
/// deterministic (lexicographic) order.  Enumeration runs over generator
/// images and is guarded.
std::vector<CohClass> h1(const ModulePtr& M);

/// Every one-cocycle (not just one per class), lexicographic on tables.
std::vector<Cocycle1> z1(const ModulePtr& M);

/// Complete list of degree-2 classes via normalized-cochain enumeration.
std::vector<CohClass> h2(const ModulePtr& M);

/// Class over the subgroup H (sorted parent element indices).
CohClass restrict_class(const CohClass& x, const std::vector<int>& subgroup);

/// Least k >= 1 with k.x trivial.
int period(const CohClass& x);

/// Splitting-subgroup invariants of a degree-1 class.  `witnesses` maps an
/// invariant name to a subgroup achieving it (element lists over Gamma);
/// the "index" witness is present only when the gcd is attained.
struct PeriodIndexReport {
    int period = 1;
    int index = 1;
    int mindex = 1;
    int galois_index = 1;
    bool index_attained = false;
    std::map<std::string, std::vector<int>> witnesses;
};

PeriodIndexReport index_report(const CohClass& x);

/// Data of the primary-decomposition product check on a degree-1 class:
/// x = sum of its p-primary parts and index(x) = prod index(part).
struct PrimaryDecompositionCheck {
    int period = 1;
    int index = 1;
    std::vector<int> primes;
    std::vector<int> part_periods;
    std::vector<int> part_indices;
    bool period_divides_index = false;
    bool same_prime_support = false;
    bool parts_sum_to_class = false;
    bool product_formula = false;
    bool ok() const {
        return period_divides_index && same_prime_support && parts_sum_to_class && product_formula;
    }
};

PrimaryDecompositionCheck primary_decomposition_check(const CohClass& x);

/// H = { sigma : xi(sigma) = 0 } for a 1-cocycle xi.  The subgroup property
/// and the injectivity of the induced coset map Gamma/H -> M are facts of
/// the construction; their failure throws logic_error.
struct VanishingSubgroupResult {
    std::vector<int> subgroup;
    int coset_count = 1;   // [Gamma : H], at most |M|
    bool restriction_trivial = false;
};

VanishingSubgroupResult vanishing_subgroup(const Cocycle1& xi);

/// Cup product c(s,t) = pairing(a(s), s.b(t)); the result is validated as a
/// two-cocycle (which requires the pairing to be equivariant on the inputs).
Cocycle2 cup(const Cocycle1& a, const Cocycle1& b, const BilinearPairing& pairing);

/// 0 -> A -> B -> C -> 0 of modules over the same Gamma; `incl` maps A
/// indices into B, `proj` maps B indices onto C.  Exactness and
/// equivariance are verified.
struct ShortExactSequence {
    ShortExactSequence(ModulePtr a, ModulePtr b, ModulePtr c,
                       std::vector<int> incl, std::vector<int> proj);

    ModulePtr a, b, c;
    std::vector<int> incl;
    std::vector<int> proj;

    int section_least(int c_elem) const;    // least b with proj(b) = c
    int section_greatest(int c_elem) const; // greatest such b (for tests)
    int pullback_to_a(int b_elem) const;    // preimage under incl (must exist)
};

enum class SectionChoice { Least, Greatest };

/// Connecting map H^1(C) -> H^2(A) through set-theoretic lifts along the
/// chosen section; the class is independent of the section choice.
Cocycle2 connecting2_cocycle(const ShortExactSequence& ses, const Cocycle1& x,
                             SectionChoice section = SectionChoice::Least);
CohClass connecting2(const ShortExactSequence& ses, const CohClass& x,
                     SectionChoice section = SectionChoice::Least);

/// Image of a degree-2 class under the map induced by the inclusion A -> B.
CohClass push_through_inclusion(const ShortExactSequence& ses, const CohClass& x);

} // namespace thetakit
