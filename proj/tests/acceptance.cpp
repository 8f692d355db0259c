// Acceptance checks. One PASS/FAIL line per criterion; criterion 8 is
// informational and never fails the run.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "gitsolve/exactgeom.hpp"
#include "gitsolve/gitsolver.hpp"
#include "oracles.hpp"

using namespace gitsolve;
using namespace gitsolve::solver;
using rootdata::make_group;

namespace {

using Triple = std::vector<std::int64_t>;
using TripleSet = std::set<Triple>;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why << msg;
    }
  }
};

GITProblem problem(const std::string& group, const std::string& hw, bool weyl_opt = false) {
  const auto g = make_group(group);
  return new_problem(g, repsupport::parse_highest_weight(g, hw), weyl_opt);
}

TripleSet l_forms(const GITProblem& p, const State& s) {
  TripleSet out;
  const auto deg = p.support().highest->l_degree();
  for (const auto& w : s.weights) {
    Triple t;
    for (const auto& q : rootdata::to_l_form(p.group(), w, deg)) t.push_back(to_int64(q));
    out.insert(t);
  }
  return out;
}

bool positively_proportional(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) return false;
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == 0) != (b[i] == 0)) return false;
    if (a[i] == 0) continue;
    const Rational r = a[i] / b[i];
    if (r <= 0 || (ratio && *ratio != r)) return false;
    ratio = r;
  }
  return ratio.has_value();
}

RationalVector h_witness(const GITProblem& p, const State& s) {
  return to_rational(rootdata::to_h_form(p.group(), *s.witness));
}

Check criterion_plane_cubics() {
  Check c;
  const auto p = problem("A2", "3,0,0");
  const auto ns = solve_non_stable(p);
  const auto un = solve_unstable(p);
  const auto ps = solve_strictly_polystable(p);

  const TripleSet ns1{{1, 2, 0}, {2, 1, 0}, {1, 1, 1}, {0, 2, 1}, {0, 3, 0}, {2, 0, 1}, {3, 0, 0}};
  const TripleSet ns2{{1, 2, 0}, {1, 0, 2}, {2, 1, 0}, {1, 1, 1}, {2, 0, 1}, {3, 0, 0}};
  const TripleSet un1{{1, 2, 0}, {2, 1, 0}, {0, 3, 0}, {2, 0, 1}, {3, 0, 0}};
  const TripleSet ps1{{1, 1, 1}};
  const TripleSet ps2{{0, 2, 1}, {2, 0, 1}, {1, 1, 1}};

  c.require(ns.size() == 2, "expected 2 non-stable states, got " + std::to_string(ns.size()));
  c.require(un.size() == 1, "expected 1 unstable state, got " + std::to_string(un.size()));
  c.require(ps.size() == 2, "expected 2 polystable states, got " + std::to_string(ps.size()));
  if (!c.ok) return c;

  const RationalVector w1{1, 1, -2};
  const RationalVector w2{1, Rational(-1, 2), Rational(-1, 2)};
  bool matched = false;
  for (int swap = 0; swap < 2 && !matched; ++swap) {
    const auto& a = ns[swap];
    const auto& b = ns[1 - swap];
    matched = l_forms(p, a) == ns1 && l_forms(p, b) == ns2 &&
              positively_proportional(h_witness(p, a), w1) &&
              positively_proportional(h_witness(p, b), w2);
  }
  c.require(matched, "non-stable states or witnesses differ from the reference output");

  c.require(l_forms(p, un[0]) == un1, "unstable state differs from the reference output");
  // The witness must lie in the open cell containing H = (1, 1/4, -5/4).
  const RationalVector ref_h{1, Rational(1, 4), Rational(-5, 4)};
  const auto ref = rootdata::convert_coordinates(p.group(), ref_h, rootdata::CoordSystem::H,
                                                 rootdata::CoordSystem::FundamentalCoweight);
  const auto wit = to_rational(un[0].witness->coeffs());
  for (const auto& w : p.support().weights) {
    const auto a = rootdata::pairing(p.group(), w, ref);
    const auto b = rootdata::pairing(p.group(), w, wit);
    c.require(sgn(a) == sgn(b), "unstable witness is not in the cell of (1,1/4,-5/4)");
  }

  std::set<TripleSet> got;
  for (const auto& s : ps) got.insert(l_forms(p, s));
  c.require(got == std::set<TripleSet>{ps1, ps2}, "polystable states differ from the reference output");
  return c;
}

Check criterion_b2_table() {
  Check c;
  const std::size_t sizes[] = {25, 41, 61, 85, 113, 145};
  const std::size_t counts[][3] = {{3, 2, 4}, {4, 3, 5}, {6, 5, 7}, {7, 6, 8}, {10, 9, 11}, {12, 11, 13}};
  for (int d = 3; d <= 8; ++d) {
    for (bool opt : {false, true}) {
      const auto p = problem("B2", std::to_string(d) + "*w1", opt);
      const std::size_t got[] = {solve_non_stable(p).size(), solve_unstable(p).size(),
                                 solve_strictly_polystable(p).size()};
      const auto& want = counts[d - 3];
      std::ostringstream msg;
      msg << "d=" << d << (opt ? " (Weyl dedup on)" : " (Weyl dedup off)") << ": support "
          << p.support().size() << ", counts (" << got[0] << "," << got[1] << "," << got[2] << ")";
      c.require(p.support().size() == sizes[d - 3] && got[0] == want[0] && got[1] == want[1] &&
                    got[2] == want[2],
                msg.str());
    }
  }
  if (c.ok) c.why << "convention: maximal states without Weyl dedup (dedup on also matches)";
  return c;
}

Check criterion_weyl_orders() {
  Check c;
  const std::vector<std::pair<char, int>> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2},
                                                   {'B', 3}, {'B', 4}, {'C', 3}, {'D', 3}, {'D', 4},
                                                   {'F', 4}, {'G', 2}};
  for (auto [letter, rank] : types) {
    const auto g = make_group(letter, rank);
    const auto formula = rootdata::weyl_group_order_formula(g.dynkin());
    const auto counted = rootdata::enumerate_weyl_group_order(g, 10'000'000);
    c.require(formula == counted, g.name() + ": enumerated " + std::to_string(counted) +
                                      " vs formula " + std::to_string(formula));
  }
  c.require(rootdata::enumerate_weyl_group_order(make_group('G', 2), 1000) == 12, "|W(G2)| != 12");
  return c;
}

Check criterion_support_law() {
  Check c;
  for (int r = 1; r <= 3; ++r) {
    const auto g = make_group('A', r);
    for (int d = 0; d <= 6; ++d) {
      rootdata::Weight hw;
      hw.coeffs.assign(static_cast<std::size_t>(r), 0);
      hw.coeffs[0] = d;
      const auto s = repsupport::weight_support(g, repsupport::HighestWeight(hw));
      std::set<rootdata::Weight> monomials;
      for (const auto& e : oracles::monomials(r + 1, d)) {
        rootdata::Weight w;
        for (int i = 0; i < r; ++i) w.coeffs.push_back(e[i] - e[i + 1]);
        monomials.insert(w);
      }
      const auto law = oracles::binomial(static_cast<std::uint64_t>(d + r),
                                         static_cast<std::uint64_t>(r));
      const bool same = std::set<rootdata::Weight>(s.weights.begin(), s.weights.end()) == monomials;
      c.require(s.size() == law && monomials.size() == law && same,
                "A" + std::to_string(r) + " d=" + std::to_string(d));
    }
  }
  return c;
}

Check criterion_dense_sampling() {
  Check c;
  for (const auto& [grp, hw] : std::vector<std::pair<std::string, std::string>>{
           {"A2", "3,0,0"}, {"B2", "3*w1"}, {"G2", "w1"}}) {
    const auto p = problem(grp, hw);
    const auto ns = solve_non_stable(p);
    const auto un = solve_unstable(p);
    for (const auto& s : ns)
      c.require(state_of(p, *s.witness, Relation::NonNegative).weights == s.weights,
                grp + ": non-stable witness does not realise its state");
    for (const auto& s : un)
      c.require(state_of(p, *s.witness, Relation::Positive).weights == s.weights,
                grp + ": unstable witness does not realise its state");
    for (int a = 0; a <= 6; ++a) {
      for (int b = 0; b <= 6; ++b) {
        if (a == 0 && b == 0) continue;
        const rootdata::OneParameterSubgroup lam({a, b});
        const auto ge = state_of(p, lam, Relation::NonNegative).weights;
        const auto gt = state_of(p, lam, Relation::Positive).weights;
        auto covered = [](const std::vector<State>& states, const std::vector<rootdata::Weight>& x) {
          return std::any_of(states.begin(), states.end(), [&](const State& s) {
            return std::includes(s.weights.begin(), s.weights.end(), x.begin(), x.end());
          });
        };
        const std::string at = grp + " lambda=(" + std::to_string(a) + "," + std::to_string(b) + ")";
        c.require(covered(ns, ge), at + ": >=0 set not covered");
        c.require(gt.empty() || covered(un, gt), at + ": >0 set not covered");
      }
    }
  }
  return c;
}

Check criterion_relint_oracle() {
  Check c;
  std::mt19937 rng(20240601);
  int positives = 0;
  for (int i = 0; i < 500; ++i) {
    const auto pts = oracles::random_point_set(rng);
    const bool expected = oracles::zero_in_relint_by_facets(pts);
    positives += expected;
    c.require(exactgeom::zero_in_relative_interior(pts) == expected,
              "disagreement on random set " + std::to_string(i));
  }
  if (c.ok) c.why << positives << " of 500 sets contain the origin in the relative interior";
  return c;
}

Check criterion_determinism() {
  Check c;
  std::vector<cli::RunConfig> configs;
  auto add = [&](const std::string& g, const std::string& hw, unsigned threads) {
    cli::RunConfig cfg;
    cfg.group = rootdata::DynkinType::parse(g);
    cfg.weight_text = hw;
    cfg.format = cli::Format::Json;
    cfg.threads = threads;
    configs.push_back(cfg);
  };
  add("A2", "3,0,0", 1);
  for (int d = 3; d <= 8; ++d) add("B2", std::to_string(d) + "*w1", 1);
  for (const auto& cfg : configs) {
    const auto first = cli::run(cfg, Limits{});
    const auto second = cli::run(cfg, Limits{});
    auto threaded = cfg;
    threaded.threads = 4;
    const auto third = cli::run(threaded, Limits{});
    c.require(first.exit_code == 0 && first.report == second.report && first.report == third.report,
              cfg.group.name() + " " + cfg.weight_text + ": JSON differs between runs");
  }
  return c;
}

void stretch_c3() {
  const auto p = problem("C3", "w3");
  const auto ns = solve_non_stable(p).size();
  const auto un = solve_unstable(p).size();
  const auto ps = solve_strictly_polystable(p).size();
  std::cout << "INFO criterion 8 (stretch, not gating): C3 omega3 on P^13: support " << p.support().size()
            << ", non-stable " << ns << ", unstable " << un << ", strictly polystable " << ps
            << "; expected 142 non-stable / 186 unstable: "
            << (ns == 142 && un == 186 ? "agreement" : "DIVERGENCE") << "\n";
  if (ns != 142 || un != 186) {
    std::cout << "     the expected counts concern the Grassmannian Gr(9, V) of 9-planes in the "
                 "14-dimensional representation, not P(V) itself; this solver handles P(V) only\n";
  }
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "A2 plane cubics golden output", 1, criterion_plane_cubics},
      {2, "B2 d*omega1 counts, d = 3..8", 60, criterion_b2_table},
      {3, "Weyl group orders", 10, criterion_weyl_orders},
      {4, "type A support-size law", 60, criterion_support_law},
      {5, "dense sampling of [0,6]^r", 60, criterion_dense_sampling},
      {6, "relative interior vs facet oracle", 60, criterion_relint_oracle},
      {7, "byte-identical structured output", 60, criterion_determinism},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    const auto t0 = Clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.why << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_budget = secs < cr.budget_seconds;
    const bool pass = c.ok && in_budget;
    failures += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.name << " ("
              << secs << " s, target < " << cr.budget_seconds << " s)";
    const auto why = c.why.str();
    if (!why.empty()) std::cout << " - " << why;
    if (!in_budget) std::cout << " - over time budget";
    std::cout << "\n";
  }
  try {
    stretch_c3();
  } catch (const std::exception& e) {
    std::cout << "INFO criterion 8 (stretch, not gating): error " << e.what() << "\n";
  }
  return failures == 0 ? 0 : 1;
}
