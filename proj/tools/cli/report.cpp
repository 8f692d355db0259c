#include "report.hpp"

#include <sstream>

namespace gitsolve::cli {
namespace {

using rootdata::SimpleGroup;
using solver::GITSolution;
using solver::State;
using solver::StateKind;

bool uses_l_form(const SimpleGroup& g, const GITSolution& sol) {
  return g.group_type() == 'A' && sol.metadata.highest_weight.has_value();
}

std::string join_tuple(const IntVector& v) { return to_string(v); }

std::string banner(const std::string& title) {
  const std::string stars(title.size(), '*');
  return stars + "\n" + title + "\n" + stars + "\n";
}

void write_section(std::ostringstream& os, const SimpleGroup& g, const GITSolution& sol,
                   const std::vector<State>& states, StateKind kind) {
  const char* title = "";
  const char* heading = "";
  const char* label = "";
  switch (kind) {
    case StateKind::NonStable:
      title = "SOLUTION TO GIT PROBLEM: NONSTABLE LOCI";
      heading = "Set of maximal non-stable states:";
      label = "Maximal nonstable state";
      break;
    case StateKind::Unstable:
      title = "SOLUTION TO GIT PROBLEM: UNSTABLE LOCI";
      heading = "Set of maximal unstable states:";
      label = "Maximal unstable state";
      break;
    case StateKind::StrictlyPolystable:
      title = "SOLUTION TO GIT PROBLEM: STRICTLY POLYSTABLE LOCI";
      heading = "Set of strictly polystable states:";
      label = "Strictly polystable state";
      break;
  }
  os << "\n" << banner(title);
  os << "Group: " << g.name() << "\n";
  os << "Representation " << representation_label(g, sol) << "\n";
  if (uses_l_form(g, sol)) {
    os << "Coordinates: characters in L-coordinates, 1-PS in H-coordinates\n";
  } else {
    os << "Coordinates: characters in fundamental-weight coordinates, 1-PS in "
          "fundamental-coweight coordinates\n";
  }
  for (const auto& w : sol.metadata.warnings) os << "Warning: " << w << "\n";
  os << heading << "\n";
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& s = states[i];
    os << "(" << i + 1 << ") ";
    if (kind == StateKind::StrictlyPolystable || !s.witness) {
      os << "A state with " << s.weights.size() << " characters\n";
    } else {
      os << "1-PS = " << join_tuple(display_witness(g, sol, *s.witness)) << " yields a state with "
         << s.weights.size() << " characters\n";
    }
    os << label << "={";
    for (std::size_t k = 0; k < s.weights.size(); ++k) {
      if (k) os << ", ";
      os << join_tuple(display_weight(g, sol, s.weights[k]));
    }
    os << "}\n";
  }
}

nlohmann::ordered_json states_json(const SimpleGroup& g, const GITSolution& sol,
                                   const std::vector<State>& states) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : states) {
    nlohmann::ordered_json js;
    js["kind"] = std::string(solver::to_string(s.kind));
    if (s.witness) {
      nlohmann::ordered_json wj;
      wj["coweight"] = s.witness->coeffs();
      if (g.group_type() == 'A') wj["h_form"] = rootdata::to_h_form(g, *s.witness);
      js["witness"] = std::move(wj);
    } else {
      js["witness"] = nullptr;
    }
    js["size"] = s.weights.size();
    auto ws = nlohmann::ordered_json::array();
    for (const auto& w : s.weights) ws.push_back(display_weight(g, sol, w));
    js["weights"] = std::move(ws);
    arr.push_back(std::move(js));
  }
  return arr;
}

}  // namespace

IntVector display_weight(const SimpleGroup& g, const GITSolution& sol, const rootdata::Weight& w) {
  if (!uses_l_form(g, sol)) return w.coeffs;
  const auto l = rootdata::to_l_form(g, w, sol.metadata.highest_weight->l_degree());
  IntVector out;
  out.reserve(l.size());
  for (const auto& q : l) out.push_back(to_int64(q));
  return out;
}

IntVector display_witness(const SimpleGroup& g, const GITSolution& sol,
                          const rootdata::OneParameterSubgroup& lam) {
  if (!uses_l_form(g, sol)) return lam.coeffs();
  return rootdata::to_h_form(g, lam);
}

std::string representation_label(const SimpleGroup& g, const GITSolution& sol) {
  if (!sol.metadata.highest_weight) {
    return "custom weight list (" + std::to_string(sol.metadata.support_size) + " weights)";
  }
  const auto shown = display_weight(g, sol, sol.metadata.highest_weight->weight());
  std::string s = g.name() + "(";
  for (std::size_t i = 0; i < shown.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(shown[i]);
  }
  return s + ")";
}

std::string text_report(const SimpleGroup& g, const GITSolution& sol, bool timing) {
  std::ostringstream os;
  if (sol.nonstable) write_section(os, g, sol, *sol.nonstable, StateKind::NonStable);
  if (sol.unstable) write_section(os, g, sol, *sol.unstable, StateKind::Unstable);
  if (sol.strictly_polystable) {
    write_section(os, g, sol, *sol.strictly_polystable, StateKind::StrictlyPolystable);
  }
  if (timing) {
    os << "\nTiming (s): nonstable " << sol.metadata.seconds_nonstable << ", unstable "
       << sol.metadata.seconds_unstable << ", polystable " << sol.metadata.seconds_polystable
       << "\n";
  }
  return os.str();
}

nlohmann::ordered_json json_report(const SimpleGroup& g, const GITSolution& sol) {
  nlohmann::ordered_json j;
  j["group"] = g.name();
  j["type"] = std::string(1, g.group_type());
  j["rank"] = g.rnk();
  if (sol.metadata.highest_weight) {
    nlohmann::ordered_json hw;
    hw["fundamental"] = sol.metadata.highest_weight->weight().coeffs;
    if (g.group_type() == 'A') {
      hw["l_form"] = display_weight(g, sol, sol.metadata.highest_weight->weight());
    }
    j["highest_weight"] = std::move(hw);
  } else {
    j["highest_weight"] = nullptr;
  }
  j["support_size"] = sol.metadata.support_size;
  j["weight_coordinates"] = uses_l_form(g, sol) ? "L" : "fundamental-weight";
  j["options"] = {{"weyl_optimisation", sol.metadata.weyl_optimisation},
                  {"polystable_all_faces", sol.metadata.polystable_all_faces}};
  j["warnings"] = sol.metadata.warnings;
  nlohmann::ordered_json loci = nlohmann::ordered_json::object();
  if (sol.nonstable) loci["nonstable"] = states_json(g, sol, *sol.nonstable);
  if (sol.unstable) loci["unstable"] = states_json(g, sol, *sol.unstable);
  if (sol.strictly_polystable) {
    loci["strictly_polystable"] = states_json(g, sol, *sol.strictly_polystable);
  }
  j["loci"] = std::move(loci);
  return j;
}

}  // namespace gitsolve::cli
