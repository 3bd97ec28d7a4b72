#pragma once

#include <memory>
#include <string>
#include <vector>

#include "thetakit/cohomology.hpp"
#include "thetakit/obstruction.hpp"

namespace thetakit {

/// Standard fixtures shared by the property suites: cyclic groups up to
/// order 8, the Klein four group and S3, paired with small modules
/// (Z/2, Z/3, Z/4, Z/6, (Z/2)^2 with trivial action; Z/3 with negation
/// through an order-2 character where one exists).

std::vector<GroupPtr> catalog_groups();

struct CatalogModule {
    std::string name;
    ModulePtr module;
};

std::vector<CatalogModule> catalog_modules();
std::vector<CatalogModule> catalog_modules_for(const GroupPtr& gamma);

struct CatalogSequence {
    std::string name;
    std::shared_ptr<const ShortExactSequence> ses;
};

std::vector<CatalogSequence> catalog_sequences();

/// Split theta data for the obstruction sweeps: Gamma in {C2, V4},
/// n in {2, 3} (negation-type K-action for n = 3 so nonzero chi exist),
/// plus one instance with a nontrivial cyclotomic-style mu-action.
/// Each entry carries the chi cocycles to sweep: zero and, where one
/// exists, one fixed nonzero cocycle.
struct CatalogLagrangian {
    std::string name;
    std::shared_ptr<const LagrangianThetaData> data;
    std::vector<Cocycle1> chis;
};

std::vector<CatalogLagrangian> catalog_lagrangian();

} // namespace thetakit
