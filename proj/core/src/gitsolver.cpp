#include "gitsolve/gitsolver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "gitsolve/errors.hpp"

namespace gitsolve::solver {

using exactgeom::ArrangementFaceWitness;

struct GITProblem::Cache {
  std::once_flag rays_once;
  std::once_flag cells_once;
  std::once_flag faces_once;
  std::vector<ArrangementFaceWitness> rays;
  std::vector<ArrangementFaceWitness> cells;
  std::vector<ArrangementFaceWitness> faces;
};

namespace {

// Runs fn(i) for i in [0, n) on up to `threads` workers. Callers write into
// per-index slots so the result does not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += workers) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

RationalMatrix identity(std::size_t r) {
  RationalMatrix m(r, RationalVector(r, 0));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

bool holds(const Rational& value, Relation mode) {
  switch (mode) {
    case Relation::NonNegative: return value >= 0;
    case Relation::Positive: return value > 0;
    case Relation::Zero: return value == 0;
  }
  return false;
}

StateKind kind_of(Relation mode) {
  switch (mode) {
    case Relation::NonNegative: return StateKind::NonStable;
    case Relation::Positive: return StateKind::Unstable;
    case Relation::Zero: return StateKind::StrictlyPolystable;
  }
  return StateKind::NonStable;
}

std::vector<Weight> cut(const GITProblem& p, std::span<const Rational> coweight, Relation mode) {
  std::vector<Weight> out;
  const auto& weights = p.support().weights;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (holds(dot(p.normals()[i], coweight), mode)) out.push_back(weights[i]);
  }
  return out;
}

bool size_desc_then_lex(const State& a, const State& b) {
  if (a.weights.size() != b.weights.size()) return a.weights.size() > b.weights.size();
  if (a.weights != b.weights) return a.weights < b.weights;
  return a.witness < b.witness;
}

bool strict_subset(const std::vector<Weight>& a, const std::vector<Weight>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<State> maximal_states(const GITProblem& p,
                                  const std::vector<ArrangementFaceWitness>& candidates,
                                  Relation mode) {
  std::vector<State> raw(candidates.size());
  parallel_for(candidates.size(), p.options().threads, [&](std::size_t i) {
    raw[i].kind = kind_of(mode);
    raw[i].weights = cut(p, candidates[i].point, mode);
    raw[i].witness = OneParameterSubgroup::from_rational(candidates[i].point);
  });
  std::erase_if(raw, [](const State& s) { return s.weights.empty(); });
  std::sort(raw.begin(), raw.end(), size_desc_then_lex);
  raw.erase(std::unique(raw.begin(), raw.end(),
                        [](const State& a, const State& b) { return a.weights == b.weights; }),
            raw.end());

  std::vector<State> kept;
  for (auto& s : raw) {
    // Sorted by descending size, so any strict superset is already in `kept`
    // or was itself dominated by something in `kept`.
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const State& t) {
      return strict_subset(s.weights, t.weights);
    });
    if (!dominated) kept.push_back(std::move(s));
  }

  if (p.options().weyl_optimisation && !kept.empty()) {
    std::vector<std::vector<Weight>> forms(kept.size());
    const auto guard = p.options().limits.weyl_enumeration;
    parallel_for(kept.size(), p.options().threads, [&](std::size_t i) {
      forms[i] = weyl_canonical_form(p.group(), kept[i].weights, guard);
    });
    std::set<std::vector<Weight>> seen;
    std::vector<State> reduced;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (seen.insert(forms[i]).second) reduced.push_back(std::move(kept[i]));
    }
    kept = std::move(reduced);
  }
  return kept;
}

std::vector<Weight> apply(const SimpleGroup& g, int i, const std::vector<Weight>& ws) {
  std::vector<Weight> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(g.reflect(i, w));
  std::sort(out.begin(), out.end());
  return out;
}

// Searches the Weyl orbit of (state weights, witness) for an image containing
// `target`; returns the conjugated witness.
std::optional<OneParameterSubgroup> conjugate_containing(const SimpleGroup& g, const State& s,
                                                         const std::vector<Weight>& target,
                                                         std::uint64_t guard) {
  using Node = std::pair<std::vector<Weight>, IntVector>;
  std::set<Node> seen;
  std::deque<Node> queue;
  Node start{s.weights, s.witness->coeffs()};
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    Node n = std::move(queue.front());
    queue.pop_front();
    if (std::includes(n.first.begin(), n.first.end(), target.begin(), target.end())) {
      return OneParameterSubgroup(n.second);
    }
    for (int i = 0; i < g.rnk(); ++i) {
      Node next{apply(g, i, n.first), g.reflect_coweight(i, n.second)};
      if (seen.insert(next).second) {
        if (seen.size() > guard) {
          throw ResourceGuardError("classify_torus: Weyl orbit exceeds " + std::to_string(guard));
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(StateKind k) {
  switch (k) {
    case StateKind::NonStable: return "nonstable";
    case StateKind::Unstable: return "unstable";
    case StateKind::StrictlyPolystable: return "strictly_polystable";
  }
  return "?";
}

std::string_view to_string(TorusStability s) {
  switch (s) {
    case TorusStability::Stable: return "T-stable";
    case TorusStability::NonStableSemistable: return "T-non-stable-semistable";
    case TorusStability::Unstable: return "T-unstable";
  }
  return "?";
}

// --- GITProblem -------------------------------------------------------------

GITProblem::GITProblem(SimpleGroup group, repsupport::RepresentationSupport support,
                       SolverOptions options)
    : group_(std::move(group)),
      support_(std::move(support)),
      options_(options),
      cache_(std::make_shared<Cache>()) {
  normals_.reserve(support_.weights.size());
  for (const auto& w : support_.weights) normals_.push_back(group_.root_coordinates(w));
}

const std::vector<ArrangementFaceWitness>& GITProblem::rays() const {
  std::call_once(cache_->rays_once, [this] {
    const auto r = static_cast<std::size_t>(group_.rnk());
    cache_->rays = exactgeom::arrangement_rays(normals_, identity(r), r);
  });
  return cache_->rays;
}

const std::vector<ArrangementFaceWitness>& GITProblem::cells() const {
  std::call_once(cache_->cells_once, [this] {
    const auto r = static_cast<std::size_t>(group_.rnk());
    cache_->cells = exactgeom::arrangement_cells(normals_, identity(r), r, options_.limits.max_cells);
  });
  return cache_->cells;
}

const std::vector<ArrangementFaceWitness>& GITProblem::faces() const {
  std::call_once(cache_->faces_once, [this] {
    const auto r = static_cast<std::size_t>(group_.rnk());
    cache_->faces = exactgeom::arrangement_faces(normals_, identity(r), r, options_.limits.max_cells);
  });
  return cache_->faces;
}

GITProblem new_problem(const SimpleGroup& g, const repsupport::HighestWeight& hw, bool weyl_opt,
                       const Limits& limits) {
  SolverOptions opts;
  opts.weyl_optimisation = weyl_opt;
  opts.limits = limits;
  return GITProblem(g, repsupport::weight_support(g, hw, limits.max_support), opts);
}

// --- operations -------------------------------------------------------------

State state_of(const GITProblem& p, const OneParameterSubgroup& lam, Relation mode) {
  if (lam.rank() != static_cast<std::size_t>(p.group().rnk())) {
    throw DomainError("state_of: one-parameter subgroup has wrong rank");
  }
  if (lam.is_zero()) throw DomainError("state_of: the trivial one-parameter subgroup");
  const RationalVector m = to_rational(lam.coeffs());
  return State{kind_of(mode), cut(p, m, mode), lam};
}

std::vector<State> solve_non_stable(const GITProblem& p) {
  return maximal_states(p, p.rays(), Relation::NonNegative);
}

std::vector<State> solve_unstable(const GITProblem& p) {
  return maximal_states(p, p.cells(), Relation::Positive);
}

std::vector<State> solve_strictly_polystable(const GITProblem& p) {
  std::vector<const ArrangementFaceWitness*> candidates;
  if (p.options().polystable_all_faces) {
    for (const auto& f : p.faces()) candidates.push_back(&f);
  } else {
    for (const auto& r : p.rays()) candidates.push_back(&r);
    for (const auto& c : p.cells()) candidates.push_back(&c);
  }

  // Distinct zero sets in first-seen order with their first witness.
  std::vector<State> distinct;
  std::set<std::vector<Weight>> seen_sets;
  for (const auto* c : candidates) {
    auto zero = cut(p, c->point, Relation::Zero);
    if (zero.empty() || !seen_sets.insert(zero).second) continue;
    distinct.push_back(State{StateKind::StrictlyPolystable, std::move(zero),
                             OneParameterSubgroup::from_rational(c->point)});
  }

  std::vector<char> interior(distinct.size(), 0);
  std::vector<std::vector<Weight>> forms(distinct.size());
  const auto guard = p.options().limits.weyl_enumeration;
  parallel_for(distinct.size(), p.options().threads, [&](std::size_t i) {
    std::vector<RationalVector> pts;
    pts.reserve(distinct[i].weights.size());
    for (const auto& w : distinct[i].weights) pts.push_back(to_rational(w.coeffs));
    interior[i] = exactgeom::zero_in_relative_interior(pts) ? 1 : 0;
    if (interior[i]) forms[i] = weyl_canonical_form(p.group(), distinct[i].weights, guard);
  });

  std::set<std::vector<Weight>> seen_classes;
  std::vector<State> out;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    if (interior[i] && seen_classes.insert(forms[i]).second) out.push_back(std::move(distinct[i]));
  }
  std::stable_sort(out.begin(), out.end(), [](const State& a, const State& b) {
    if (a.weights.size() != b.weights.size()) return a.weights.size() < b.weights.size();
    return a.weights < b.weights;
  });
  return out;
}

Rational hm_mu(const GITProblem& p, const std::vector<Weight>& point_support,
               const OneParameterSubgroup& lam) {
  if (point_support.empty()) throw DomainError("hm_mu: empty support");
  const RationalVector m = to_rational(lam.coeffs());
  std::optional<Rational> best;
  for (const auto& chi : point_support) {
    Rational v = rootdata::pairing(p.group(), chi, m);
    if (!best || v < *best) best = std::move(v);
  }
  return *best;
}

std::vector<Weight> weyl_canonical_form(const SimpleGroup& g, const std::vector<Weight>& weights,
                                        std::uint64_t guard) {
  std::vector<Weight> start = weights;
  std::sort(start.begin(), start.end());
  std::set<std::vector<Weight>> seen{start};
  std::deque<std::vector<Weight>> queue{start};
  while (!queue.empty()) {
    auto s = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < g.rnk(); ++i) {
      auto t = apply(g, i, s);
      if (seen.insert(t).second) {
        if (seen.size() > guard) {
          throw ResourceGuardError("Weyl orbit of a weight set exceeds " + std::to_string(guard));
        }
        queue.push_back(std::move(t));
      }
    }
  }
  return *seen.begin();
}

TorusClassification classify_torus(const GITProblem& p, const std::vector<Weight>& point_support) {
  if (point_support.empty()) throw DomainError("classify_torus: empty support");
  std::vector<Weight> target = point_support;
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  for (const auto& w : target) {
    if (!p.support().contains(w)) {
      throw DomainError("classify_torus: weight " + gitsolve::to_string(w.coeffs) +
                        " is not a weight of the representation");
    }
  }
  const auto guard = p.options().limits.weyl_enumeration;
  for (const auto& s : solve_unstable(p)) {
    if (auto cert = conjugate_containing(p.group(), s, target, guard)) {
      return {TorusStability::Unstable, cert};
    }
  }
  for (const auto& s : solve_non_stable(p)) {
    if (auto cert = conjugate_containing(p.group(), s, target, guard)) {
      return {TorusStability::NonStableSemistable, cert};
    }
  }
  return {TorusStability::Stable, std::nullopt};
}

GITSolution solve(const GITProblem& p, const Loci& loci) {
  using Clock = std::chrono::steady_clock;
  auto seconds_since = [](Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  };
  GITSolution sol;
  sol.metadata.group = p.group().name();
  sol.metadata.highest_weight = p.support().highest;
  sol.metadata.support_size = p.support().size();
  sol.metadata.weyl_optimisation = p.options().weyl_optimisation;
  sol.metadata.polystable_all_faces = p.options().polystable_all_faces;
  sol.metadata.warnings = p.group().warnings();
  if (loci.nonstable) {
    const auto t0 = Clock::now();
    sol.nonstable = solve_non_stable(p);
    sol.metadata.seconds_nonstable = seconds_since(t0);
  }
  if (loci.unstable) {
    const auto t0 = Clock::now();
    sol.unstable = solve_unstable(p);
    sol.metadata.seconds_unstable = seconds_since(t0);
  }
  if (loci.polystable) {
    const auto t0 = Clock::now();
    sol.strictly_polystable = solve_strictly_polystable(p);
    sol.metadata.seconds_polystable = seconds_since(t0);
  }
  return sol;
}

}  // namespace gitsolve::solver
