#pragma once

#include <string>

#include "gitsolve/gitsolver.hpp"
#include "gitsolve/rootdata.hpp"
#include "json.hpp"

namespace gitsolve::cli {

// Display forms: type A with a known highest weight uses L-coordinates for
// characters and H-coordinates for one-parameter subgroups; everything else
// uses fundamental (co)weight coefficients.
IntVector display_weight(const rootdata::SimpleGroup& g, const solver::GITSolution& sol,
                         const rootdata::Weight& w);
IntVector display_witness(const rootdata::SimpleGroup& g, const solver::GITSolution& sol,
                          const rootdata::OneParameterSubgroup& lam);
std::string representation_label(const rootdata::SimpleGroup& g, const solver::GITSolution& sol);

std::string text_report(const rootdata::SimpleGroup& g, const solver::GITSolution& sol,
                        bool timing = false);

nlohmann::ordered_json json_report(const rootdata::SimpleGroup& g, const solver::GITSolution& sol);

}  // namespace gitsolve::cli
