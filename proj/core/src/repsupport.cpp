#include "gitsolve/repsupport.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>
#include <string>

#include "gitsolve/errors.hpp"

namespace gitsolve::repsupport {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("malformed weight '" + std::string(whole) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::int64_t default_l_degree(const Weight& w) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < w.coeffs.size(); ++i) d += static_cast<std::int64_t>(i + 1) * w.coeffs[i];
  return d;
}

HighestWeight parse_fundamental_terms(const SimpleGroup& g, std::string_view text) {
  Weight w{IntVector(static_cast<std::size_t>(g.rnk()), 0)};
  for (auto term : split(text, '+')) {
    term = trim(term);
    std::int64_t mult = 1;
    if (const auto star = term.find('*'); star != std::string_view::npos) {
      mult = parse_int(term.substr(0, star), text);
      term = trim(term.substr(star + 1));
    }
    if (term.size() < 2 || (term.front() != 'w' && term.front() != 'W')) {
      throw ParseError("malformed weight '" + std::string(text) + "'");
    }
    const auto index = parse_int(term.substr(1), text);
    if (index < 1 || index > g.rnk()) {
      throw ParseError("fundamental weight index " + std::to_string(index) + " out of range for " +
                       g.name());
    }
    w.coeffs[static_cast<std::size_t>(index - 1)] += mult;
  }
  return HighestWeight(std::move(w));
}

}  // namespace

HighestWeight::HighestWeight(Weight w) : HighestWeight(w, default_l_degree(w)) {}

HighestWeight::HighestWeight(Weight w, std::int64_t l_degree)
    : weight_(std::move(w)), l_degree_(l_degree) {
  if (!rootdata::is_dominant(weight_)) {
    throw DomainError("highest weight " + to_string(weight_.coeffs) + " is not dominant");
  }
}

HighestWeight parse_highest_weight(const SimpleGroup& g, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty weight");
  if (text.find('w') != std::string_view::npos || text.find('W') != std::string_view::npos) {
    return parse_fundamental_terms(g, text);
  }

  std::string_view body = text;
  if (body.front() == '(' && body.back() == ')') body = trim(body.substr(1, body.size() - 2));
  IntVector values;
  for (auto part : split(body, ',')) values.push_back(parse_int(part, text));

  const auto r = static_cast<std::size_t>(g.rnk());
  if (values.size() == r) return HighestWeight(Weight{std::move(values)});
  if (values.size() == r + 1) {
    if (g.group_type() != 'A') {
      throw ParseError("L-coordinate weights (" + std::to_string(r + 1) +
                       " entries) are only accepted for type A, not " + g.name());
    }
    if (!std::is_sorted(values.rbegin(), values.rend())) {
      throw DomainError("L-coordinates '" + std::string(text) +
                        "' are not weakly decreasing, so the weight is not dominant");
    }
    Weight w{IntVector(r)};
    std::int64_t degree = 0;
    for (std::size_t i = 0; i < r; ++i) w.coeffs[i] = values[i] - values[i + 1];
    for (auto v : values) degree += v;
    return HighestWeight(std::move(w), degree);
  }
  throw ParseError("weight '" + std::string(text) + "' has " + std::to_string(values.size()) +
                   " entries; " + g.name() + " expects " + std::to_string(r) +
                   (g.group_type() == 'A' ? " or " + std::to_string(r + 1) : std::string()));
}

bool RepresentationSupport::contains(const Weight& w) const {
  return std::binary_search(weights.begin(), weights.end(), w);
}

bool dominates(const SimpleGroup& g, const Weight& hw, const Weight& mu) {
  Weight diff = hw;
  for (std::size_t i = 0; i < diff.coeffs.size(); ++i) diff.coeffs[i] -= mu.coeffs[i];
  for (const auto& x : g.root_coordinates(diff)) {
    if (x < 0 || x.get_den() != 1) return false;
  }
  return true;
}

std::vector<Weight> dominant_weights(const SimpleGroup& g, const HighestWeight& hw,
                                     std::uint64_t max_support) {
  const Weight& top = hw.weight();
  if (top.rank() != static_cast<std::size_t>(g.rnk())) {
    throw DomainError("highest weight has length " + std::to_string(top.rank()) + ", " + g.name() +
                      " has rank " + std::to_string(g.rnk()));
  }
  // Any two dominant weights mu < lambda of the module are joined by a chain
  // of dominant weights whose steps are positive roots.
  std::set<Weight> seen{top};
  std::deque<Weight> queue{top};
  while (!queue.empty()) {
    Weight mu = std::move(queue.front());
    queue.pop_front();
    for (const auto& beta : g.positive_roots()) {
      Weight nu = mu;
      for (std::size_t i = 0; i < nu.coeffs.size(); ++i) nu.coeffs[i] -= beta.coeffs[i];
      if (!rootdata::is_dominant(nu)) continue;
      if (seen.insert(nu).second) {
        if (seen.size() > max_support) {
          throw ResourceGuardError("weight_support: more than " + std::to_string(max_support) +
                                   " dominant weights");
        }
        queue.push_back(std::move(nu));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

RepresentationSupport weight_support(const SimpleGroup& g, const HighestWeight& hw,
                                     std::uint64_t max_support) {
  std::set<Weight> all;
  for (const auto& mu : dominant_weights(g, hw, max_support)) {
    const std::uint64_t room = max_support - std::min<std::uint64_t>(all.size(), max_support);
    std::vector<Weight> orbit;
    try {
      orbit = rootdata::weyl_orbit(g, mu, room);
    } catch (const ResourceGuardError&) {
      throw ResourceGuardError("weight_support: more than " + std::to_string(max_support) +
                               " weights");
    }
    all.insert(orbit.begin(), orbit.end());
    if (all.size() > max_support) {
      throw ResourceGuardError("weight_support: more than " + std::to_string(max_support) +
                               " weights");
    }
  }
  return RepresentationSupport{hw, {all.begin(), all.end()}};
}

bool is_weyl_closed(const SimpleGroup& g, const std::vector<Weight>& sorted_weights) {
  for (const auto& w : sorted_weights) {
    for (int i = 0; i < g.rnk(); ++i) {
      if (!std::binary_search(sorted_weights.begin(), sorted_weights.end(), g.reflect(i, w))) {
        return false;
      }
    }
  }
  return true;
}

RepresentationSupport support_from_weights(const SimpleGroup& g, std::vector<Weight> weights) {
  for (const auto& w : weights) {
    if (w.rank() != static_cast<std::size_t>(g.rnk())) {
      throw DomainError("weight " + to_string(w.coeffs) + " has wrong length for " + g.name());
    }
  }
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  if (weights.empty()) throw DomainError("empty weight list");
  if (!is_weyl_closed(g, weights)) {
    throw DomainError("weight list is not closed under the Weyl group of " + g.name());
  }
  return RepresentationSupport{std::nullopt, std::move(weights)};
}

}  // namespace gitsolve::repsupport
