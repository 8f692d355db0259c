#pragma once

// Weight supports of irreducible representations and the user-facing weight
// notation.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gitsolve/rootdata.hpp"

namespace gitsolve::repsupport {

using rootdata::SimpleGroup;
using rootdata::Weight;

class HighestWeight {
 public:
  // Throws DomainError unless every coefficient is >= 0.
  explicit HighestWeight(Weight w);
  HighestWeight(Weight w, std::int64_t l_degree);

  const Weight& weight() const { return weight_; }
  // Coordinate sum of the L-form the weight was written in (type A display).
  // Defaults to the form whose last entry is zero.
  std::int64_t l_degree() const { return l_degree_; }

 private:
  Weight weight_;
  std::int64_t l_degree_ = 0;
};

// Accepts
//   "a1,...,ar"        fundamental-weight coefficients
//   "l1,...,l(r+1)"    type A only: weakly decreasing L-coordinates
//   "d*w<i>"           d times the i-th fundamental weight; terms may be
//                      joined with '+', and "w<i>" means "1*w<i>".
// Throws ParseError on malformed text and DomainError on non-dominant input.
HighestWeight parse_highest_weight(const SimpleGroup& g, std::string_view text);

struct RepresentationSupport {
  std::optional<HighestWeight> highest;  // absent for user-supplied weight lists
  std::vector<Weight> weights;           // sorted ascending, no repeats

  std::size_t size() const { return weights.size(); }
  bool contains(const Weight& w) const;
};

// All weights of the irreducible module with the given highest weight:
// Weyl images of the dominant mu with hw - mu in the positive root cone.
// Throws ResourceGuardError past `max_support` weights.
RepresentationSupport weight_support(const SimpleGroup& g, const HighestWeight& hw,
                                     std::uint64_t max_support = 1'000'000);

// Dominant weights of the module, sorted ascending.
std::vector<Weight> dominant_weights(const SimpleGroup& g, const HighestWeight& hw,
                                     std::uint64_t max_support = 1'000'000);

// Wraps an arbitrary list (duplicates removed). Throws DomainError if the
// set is not closed under the simple reflections or has wrong-length entries.
RepresentationSupport support_from_weights(const SimpleGroup& g, std::vector<Weight> weights);

bool is_weyl_closed(const SimpleGroup& g, const std::vector<Weight>& sorted_weights);

// True iff hw - mu is a non-negative integral combination of simple roots.
bool dominates(const SimpleGroup& g, const Weight& hw, const Weight& mu);

}  // namespace gitsolve::repsupport
