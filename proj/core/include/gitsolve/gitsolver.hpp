#pragma once

// GIT stability engine for a simple group acting on P(V).
//
// A one-parameter subgroup lam cuts the weights Xi of V into
//   Xi_{lam>=0}, Xi_{lam>0}, Xi_{lam=0}.
// Maximal sets of the first two kinds describe, up to conjugation, the
// non-stable and unstable loci; sets of the third kind whose convex hull
// has the origin in its relative interior describe strictly T-polystable
// points. Only lam in the closed fundamental chamber need be considered.
//
// Candidates. The nonzero weights define a central hyperplane arrangement
// in N_R. Moving lam onto more hyperplanes (specialising to a face of its
// closure) can only turn strict signs into zeros, so Xi_{lam>=0} weakly
// grows; hence every maximal >=0 set is realised on a ray of the arrangement
// restricted to the chamber. Dually, moving lam off hyperplanes into an
// adjacent open cell turns zeros into strict signs of either side, and a
// suitable cell keeps every positive weight positive, so maximal >0 sets are
// realised on open cells. The =0 candidates are taken over rays and cells.
// From rank 3 on, a lambda on an intermediate face can have an =0 set that
// no ray or cell produces (for quadrics in P^3 the support of the smooth
// quadric is one); such sets are always contained in the =0 set of a ray in
// the face's closure. polystable_all_faces switches to every face.
//
// Sign convention: mu(x, lam) = min over the support of x of <chi, lam>;
// x is non-stable for lam when mu >= 0 and unstable when mu > 0.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gitsolve/exactgeom.hpp"
#include "gitsolve/limits.hpp"
#include "gitsolve/repsupport.hpp"
#include "gitsolve/rootdata.hpp"

namespace gitsolve::solver {

using rootdata::OneParameterSubgroup;
using rootdata::SimpleGroup;
using rootdata::Weight;

enum class StateKind { NonStable, Unstable, StrictlyPolystable };
enum class Relation { NonNegative, Positive, Zero };

std::string_view to_string(StateKind k);

struct State {
  StateKind kind = StateKind::NonStable;
  std::vector<Weight> weights;  // sorted ascending
  std::optional<OneParameterSubgroup> witness;

  bool operator==(const State&) const = default;
};

struct SolverOptions {
  bool weyl_optimisation = false;
  bool polystable_all_faces = false;  // =0 candidates from every face, not rays and cells
  unsigned threads = 1;  // candidate evaluation workers; output does not depend on it
  Limits limits;
};

class GITProblem {
 public:
  GITProblem(SimpleGroup group, repsupport::RepresentationSupport support,
             SolverOptions options = {});

  const SimpleGroup& group() const { return group_; }
  const repsupport::RepresentationSupport& support() const { return support_; }
  const SolverOptions& options() const { return options_; }

  // Simple-root coordinates of support()[i]; pairing normals for the arrangement.
  const RationalMatrix& normals() const { return normals_; }

  // Computed on first use; safe to call concurrently.
  const std::vector<exactgeom::ArrangementFaceWitness>& rays() const;
  const std::vector<exactgeom::ArrangementFaceWitness>& cells() const;
  const std::vector<exactgeom::ArrangementFaceWitness>& faces() const;

 private:
  struct Cache;

  SimpleGroup group_;
  repsupport::RepresentationSupport support_;
  SolverOptions options_;
  RationalMatrix normals_;
  std::shared_ptr<Cache> cache_;
};

GITProblem new_problem(const SimpleGroup& g, const repsupport::HighestWeight& hw, bool weyl_opt,
                       const Limits& limits = {});

// Throws DomainError when lam is zero or has the wrong rank.
State state_of(const GITProblem& p, const OneParameterSubgroup& lam, Relation mode);

// Inclusion-maximal Xi_{lam>=0} over the chamber rays. Descending size, then
// lexicographic.
std::vector<State> solve_non_stable(const GITProblem& p);

// Inclusion-maximal Xi_{lam>0} over the chamber cells. Same ordering.
std::vector<State> solve_unstable(const GITProblem& p);

// Xi_{lam=0} with the origin in the relative interior of its hull, one per
// Weyl class, nested states kept. Ascending size, then lexicographic.
std::vector<State> solve_strictly_polystable(const GITProblem& p);

// min over the support of <chi, lam>. Throws DomainError on an empty support.
Rational hm_mu(const GITProblem& p, const std::vector<Weight>& point_support,
               const OneParameterSubgroup& lam);

enum class TorusStability { Stable, NonStableSemistable, Unstable };
std::string_view to_string(TorusStability s);

struct TorusClassification {
  TorusStability verdict = TorusStability::Stable;
  // For non-stable verdicts: a 1-PS (not necessarily in the chamber) with
  // all pairings >= 0 (resp. > 0) on the support.
  std::optional<OneParameterSubgroup> certificate;
};

// Stability of a point with the given weight support with respect to the
// maximal torus only. Throws DomainError if the support is empty or not
// contained in the representation's weights.
TorusClassification classify_torus(const GITProblem& p, const std::vector<Weight>& point_support);

// Lexicographically smallest Weyl image of a sorted weight set.
std::vector<Weight> weyl_canonical_form(const SimpleGroup& g, const std::vector<Weight>& weights,
                                        std::uint64_t guard = 1'000'000);

struct Loci {
  bool nonstable = true;
  bool unstable = true;
  bool polystable = true;
};

struct GITSolution {
  std::optional<std::vector<State>> nonstable;
  std::optional<std::vector<State>> unstable;
  std::optional<std::vector<State>> strictly_polystable;

  struct Metadata {
    std::string group;
    std::optional<repsupport::HighestWeight> highest_weight;
    std::size_t support_size = 0;
    bool weyl_optimisation = false;
    bool polystable_all_faces = false;
    std::vector<std::string> warnings;
    double seconds_nonstable = 0;
    double seconds_unstable = 0;
    double seconds_polystable = 0;
  } metadata;
};

GITSolution solve(const GITProblem& p, const Loci& loci = {});

}  // namespace gitsolve::solver
