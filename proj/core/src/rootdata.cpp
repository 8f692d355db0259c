#include "gitsolve/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>

#include "gitsolve/errors.hpp"
#include "gitsolve/exactgeom.hpp"

namespace gitsolve::rootdata {
namespace {

void require_rank(const SimpleGroup& g, std::size_t n, const char* what) {
  if (n != static_cast<std::size_t>(g.rnk())) {
    throw DomainError(std::string(what) + ": expected length " + std::to_string(g.rnk()) +
                      " for " + g.name() + ", got " + std::to_string(n));
  }
}

// Bourbaki numbering; E-types hang node 2 off node 4.
IntMatrix build_cartan(const DynkinType& t) {
  const int r = t.rank;
  IntMatrix c(r, IntVector(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  auto link = [&](int i, int j, int cij = -1, int cji = -1) {
    c[i][j] = cij;
    c[j][i] = cji;
  };
  switch (t.letter) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 2, r - 1, -2, -1);  // a_r = e_r is short
      break;
    case 'C':
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 2, r - 1, -1, -2);  // a_r = 2 e_r is long
      break;
    case 'D':
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      if (r >= 3) link(r - 3, r - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2, -2, -1);
      link(2, 3);
      break;
    case 'G':
      link(0, 1, -1, -3);  // a_1 short
      break;
  }
  return c;
}

RationalVector unit_difference(std::size_t dim, std::size_t i, std::size_t j, int sj = -1) {
  RationalVector v(dim, 0);
  v[i] = 1;
  v[j] = sj;
  return v;
}

std::vector<RationalVector> build_display_roots(const DynkinType& t, const IntMatrix& cartan,
                                                CoordSystem& coords) {
  const std::size_t r = static_cast<std::size_t>(t.rank);
  std::vector<RationalVector> roots;
  coords = CoordSystem::L;  // Euclidean e_i coordinates; L for type A
  switch (t.letter) {
    case 'A':
      for (std::size_t i = 0; i < r; ++i) roots.push_back(unit_difference(r + 1, i, i + 1));
      return roots;
    case 'B':
    case 'C':
    case 'D':
      for (std::size_t i = 0; i + 1 < r; ++i) roots.push_back(unit_difference(r, i, i + 1));
      if (t.letter == 'B') {
        roots.emplace_back(r, 0);
        roots.back()[r - 1] = 1;
      } else if (t.letter == 'C') {
        roots.emplace_back(r, 0);
        roots.back()[r - 1] = 2;
      } else {
        roots.push_back(unit_difference(r, r - 2, r - 1, 1));
      }
      return roots;
    case 'F':
      roots.push_back(unit_difference(4, 1, 2));
      roots.push_back(unit_difference(4, 2, 3));
      roots.push_back(RationalVector{0, 0, 0, 1});
      roots.push_back(RationalVector{Rational(1, 2), Rational(-1, 2), Rational(-1, 2),
                                     Rational(-1, 2)});
      return roots;
    default:
      coords = CoordSystem::FundamentalWeight;
      for (const auto& row : cartan) roots.push_back(to_rational(row));
      return roots;
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

// --- DynkinType -------------------------------------------------------------

void validate(const DynkinType& t) {
  const int r = t.rank;
  bool ok = false;
  switch (t.letter) {
    case 'A': ok = r >= 1; break;
    case 'B':
    case 'C':
    case 'D': ok = r >= 2; break;
    case 'E': ok = r >= 6 && r <= 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default:
      throw ParseError(std::string("unknown Dynkin letter '") + t.letter + "'");
  }
  if (!ok) throw ParseError("invalid rank: " + t.name() + " is not a Dynkin type");
}

DynkinType DynkinType::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.size() < 2) throw ParseError("malformed group name '" + std::string(text) + "'");
  DynkinType t;
  t.letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  const auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("malformed group name '" + std::string(text) + "'");
  }
  validate(t);
  return t;
}

// --- OneParameterSubgroup ---------------------------------------------------

OneParameterSubgroup::OneParameterSubgroup(IntVector coweight_coeffs)
    : coeffs_(std::move(coweight_coeffs)) {
  std::int64_t g = 0;
  for (auto x : coeffs_) g = std::gcd(g, x);
  if (g > 1) {
    for (auto& x : coeffs_) x /= g;
  }
}

OneParameterSubgroup OneParameterSubgroup::from_rational(std::span<const Rational> coweight_coeffs) {
  return OneParameterSubgroup(primitive_integer(coweight_coeffs));
}

bool OneParameterSubgroup::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto x) { return x == 0; });
}

bool OneParameterSubgroup::in_fundamental_chamber() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto x) { return x >= 0; });
}

std::string_view to_string(CoordSystem c) {
  switch (c) {
    case CoordSystem::FundamentalWeight: return "fundamental-weight";
    case CoordSystem::SimpleRoot: return "simple-root";
    case CoordSystem::L: return "L";
    case CoordSystem::FundamentalCoweight: return "fundamental-coweight";
    case CoordSystem::Coroot: return "coroot";
    case CoordSystem::H: return "H";
    case CoordSystem::T: return "T";
  }
  return "?";
}

// --- SimpleGroup ------------------------------------------------------------

IntMatrix cartan_matrix(const DynkinType& t) {
  validate(t);
  return build_cartan(t);
}

SimpleGroup::SimpleGroup(char letter, int rank) {
  type_.letter = static_cast<char>(std::toupper(static_cast<unsigned char>(letter)));
  type_.rank = rank;
  validate(type_);
  const std::size_t r = static_cast<std::size_t>(rank);

  cartan_ = build_cartan(type_);
  RationalMatrix cq;
  for (const auto& row : cartan_) cq.push_back(to_rational(row));
  cartan_inv_ = exactgeom::inverse(cq);

  display_roots_ = build_display_roots(type_, cartan_, display_coords_);

  for (std::size_t j = 0; j < r; ++j) {
    RationalVector col(r);
    for (std::size_t k = 0; k < r; ++k) col[k] = cartan_inv_[k][j];
    chamber_gens_.push_back(primitive_integer(col));
  }

  for (std::size_t i = 0; i < r; ++i) {
    IntMatrix s(r, IntVector(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
      s[j][j] = 1;
      s[j][i] -= cartan_[i][j];
    }
    weyl_gens_.push_back(std::move(s));
  }

  // Roots are the Weyl orbit of the simple roots.
  std::set<Weight> roots;
  std::deque<Weight> queue;
  for (const auto& row : cartan_) {
    if (roots.insert(Weight{row}).second) queue.push_back(Weight{row});
  }
  while (!queue.empty()) {
    Weight w = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      Weight v = reflect(i, w);
      if (roots.insert(v).second) queue.push_back(std::move(v));
    }
  }
  std::vector<std::pair<Rational, Weight>> positive;
  for (const auto& w : roots) {
    const RationalVector x = root_coordinates(w);
    if (std::all_of(x.begin(), x.end(), [](const Rational& q) { return q >= 0; })) {
      Rational height = 0;
      for (const auto& q : x) height += q;
      positive.emplace_back(height, w);
    }
  }
  std::sort(positive.begin(), positive.end());
  for (auto& [h, w] : positive) positive_roots_.push_back(std::move(w));

  if (type_.letter == 'D' && rank == 2) {
    warnings_.push_back("D2 is semisimple of type A1xA1, not simple");
  }
}

Weight SimpleGroup::reflect(int i, const Weight& w) const {
  Weight out = w;
  const auto ci = w.coeffs[static_cast<std::size_t>(i)];
  if (ci == 0) return out;
  for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] -= ci * cartan_[i][j];
  return out;
}

IntVector SimpleGroup::reflect_coweight(int i, std::span<const std::int64_t> m) const {
  IntVector out(m.begin(), m.end());
  const auto mi = m[static_cast<std::size_t>(i)];
  if (mi == 0) return out;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= mi * cartan_[j][i];
  return out;
}

OneParameterSubgroup SimpleGroup::reflect(int i, const OneParameterSubgroup& lam) const {
  return OneParameterSubgroup(reflect_coweight(i, lam.coeffs()));
}

RationalVector SimpleGroup::root_coordinates(const Weight& w) const {
  require_rank(*this, w.rank(), "root_coordinates");
  const std::size_t r = w.rank();
  RationalVector x(r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      if (w.coeffs[k] != 0) x[j] += cartan_inv_[k][j] * static_cast<long>(w.coeffs[k]);
    }
  }
  return x;
}

SimpleGroup make_group(char letter, int rank) { return SimpleGroup(letter, rank); }

SimpleGroup make_group(std::string_view name) {
  const DynkinType t = DynkinType::parse(name);
  return SimpleGroup(t.letter, t.rank);
}

const IntMatrix& fundamental_chamber_generators(const SimpleGroup& g) {
  return g.chamber_generators();
}

// --- pairing and Weyl actions ----------------------------------------------

Rational pairing(const SimpleGroup& g, const Weight& chi, std::span<const Rational> coweight) {
  require_rank(g, chi.rank(), "pairing (character)");
  require_rank(g, coweight.size(), "pairing (one-parameter subgroup)");
  return dot(g.root_coordinates(chi), coweight);
}

Rational pairing(const SimpleGroup& g, const Weight& chi, const OneParameterSubgroup& lam) {
  const RationalVector m = to_rational(lam.coeffs());
  return pairing(g, chi, m);
}

std::vector<Weight> weyl_orbit(const SimpleGroup& g, const Weight& w, std::uint64_t guard) {
  require_rank(g, w.rank(), "weyl_orbit");
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight x = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < g.rnk(); ++i) {
      Weight y = g.reflect(i, x);
      if (seen.insert(y).second) {
        if (seen.size() > guard) {
          throw ResourceGuardError("weyl_orbit: orbit exceeds " + std::to_string(guard));
        }
        queue.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::uint64_t weyl_group_order_formula(const DynkinType& t) {
  validate(t);
  const int n = t.rank;
  switch (t.letter) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << n) * factorial(n);
    case 'D': return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51'840 : (n == 7 ? 2'903'040 : 696'729'600);
    case 'F': return 1'152;
    case 'G': return 12;
  }
  return 0;
}

std::uint64_t enumerate_weyl_group_order(const SimpleGroup& g, std::uint64_t guard) {
  const Weight rho{IntVector(static_cast<std::size_t>(g.rnk()), 1)};
  return weyl_orbit(g, rho, guard).size();
}

std::uint64_t weyl_group_order(const SimpleGroup& g, std::uint64_t guard) {
  const std::uint64_t closed_form = weyl_group_order_formula(g.dynkin());
  if (closed_form > guard) return closed_form;
  return enumerate_weyl_group_order(g, guard);
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.coeffs.begin(), w.coeffs.end(), [](auto x) { return x >= 0; });
}

Weight dominant_representative(const SimpleGroup& g, Weight w) {
  require_rank(g, w.rank(), "dominant_representative");
  for (;;) {
    auto it = std::find_if(w.coeffs.begin(), w.coeffs.end(), [](auto x) { return x < 0; });
    if (it == w.coeffs.end()) return w;
    w = g.reflect(static_cast<int>(it - w.coeffs.begin()), w);
  }
}

// --- coordinates ------------------------------------------------------------

namespace {

bool on_characters(CoordSystem c) {
  return c == CoordSystem::FundamentalWeight || c == CoordSystem::SimpleRoot ||
         c == CoordSystem::L;
}

std::size_t expected_length(const SimpleGroup& g, CoordSystem c) {
  const auto r = static_cast<std::size_t>(g.rnk());
  if (c == CoordSystem::L || c == CoordSystem::H || c == CoordSystem::T) {
    if (g.group_type() != 'A') {
      throw DomainError(std::string(to_string(c)) + "-coordinates are only defined for type A, not " +
                        g.name());
    }
  }
  return (c == CoordSystem::L || c == CoordSystem::H) ? r + 1 : r;
}

RationalVector to_fundamental_weight(const SimpleGroup& g, std::span<const Rational> v,
                                     CoordSystem from) {
  const auto r = static_cast<std::size_t>(g.rnk());
  RationalVector w(r, 0);
  switch (from) {
    case CoordSystem::FundamentalWeight:
      return {v.begin(), v.end()};
    case CoordSystem::SimpleRoot:
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < r; ++i) w[j] += v[i] * static_cast<long>(g.cartan()[i][j]);
      }
      return w;
    case CoordSystem::L:
      for (std::size_t i = 0; i < r; ++i) w[i] = v[i] - v[i + 1];
      return w;
    default:
      break;
  }
  throw DomainError("not a character coordinate system");
}

RationalVector from_fundamental_weight(const SimpleGroup& g, const RationalVector& w,
                                       CoordSystem to) {
  const auto r = static_cast<std::size_t>(g.rnk());
  switch (to) {
    case CoordSystem::FundamentalWeight:
      return w;
    case CoordSystem::SimpleRoot: {
      RationalVector x(r, 0);
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < r; ++k) x[j] += g.cartan_inverse()[k][j] * w[k];
      }
      return x;
    }
    case CoordSystem::L: {
      // Trace-zero representative.
      Rational weighted = 0;
      for (std::size_t i = 0; i < r; ++i) weighted += w[i] * static_cast<long>(i + 1);
      RationalVector l(r + 1);
      l[r] = -weighted / static_cast<long>(r + 1);
      for (std::size_t i = r; i-- > 0;) l[i] = l[i + 1] + w[i];
      return l;
    }
    default:
      break;
  }
  throw DomainError("not a character coordinate system");
}

RationalVector to_fundamental_coweight(const SimpleGroup& g, std::span<const Rational> v,
                                       CoordSystem from) {
  const auto r = static_cast<std::size_t>(g.rnk());
  RationalVector m(r, 0);
  switch (from) {
    case CoordSystem::FundamentalCoweight:
      return {v.begin(), v.end()};
    case CoordSystem::Coroot:
    case CoordSystem::T:
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < r; ++k) m[i] += v[k] * static_cast<long>(g.cartan()[i][k]);
      }
      return m;
    case CoordSystem::H: {
      Rational sum = 0;
      for (const auto& h : v) sum += h;
      if (sum != 0) throw DomainError("H-coordinates of a one-parameter subgroup must sum to zero");
      for (std::size_t i = 0; i < r; ++i) m[i] = v[i] - v[i + 1];
      return m;
    }
    default:
      break;
  }
  throw DomainError("not a one-parameter-subgroup coordinate system");
}

RationalVector from_fundamental_coweight(const SimpleGroup& g, const RationalVector& m,
                                         CoordSystem to) {
  const auto r = static_cast<std::size_t>(g.rnk());
  if (to == CoordSystem::FundamentalCoweight) return m;
  RationalVector t = exactgeom::multiply(g.cartan_inverse(), m);
  if (to == CoordSystem::Coroot || to == CoordSystem::T) return t;
  if (to == CoordSystem::H) {
    RationalVector h(r + 1, 0);
    for (std::size_t i = 0; i <= r; ++i) {
      h[i] = (i < r ? t[i] : Rational(0)) - (i > 0 ? t[i - 1] : Rational(0));
    }
    return h;
  }
  throw DomainError("not a one-parameter-subgroup coordinate system");
}

}  // namespace

RationalVector convert_coordinates(const SimpleGroup& g, std::span<const Rational> v,
                                   CoordSystem from, CoordSystem to) {
  if (on_characters(from) != on_characters(to)) {
    throw DomainError("cannot convert " + std::string(to_string(from)) + " to " +
                      std::string(to_string(to)) + ": they describe different lattices");
  }
  if (v.size() != expected_length(g, from)) {
    throw DomainError("convert_coordinates: " + std::string(to_string(from)) +
                      " vector has wrong length for " + g.name());
  }
  expected_length(g, to);
  if (on_characters(from)) {
    return from_fundamental_weight(g, to_fundamental_weight(g, v, from), to);
  }
  return from_fundamental_coweight(g, to_fundamental_coweight(g, v, from), to);
}

RationalVector to_l_form(const SimpleGroup& g, const Weight& w, std::int64_t degree) {
  require_rank(g, w.rank(), "to_l_form");
  RationalVector l = convert_coordinates(g, to_rational(w.coeffs), CoordSystem::FundamentalWeight,
                                         CoordSystem::L);
  const Rational shift = Rational(static_cast<long>(degree)) / static_cast<long>(l.size());
  for (auto& x : l) x += shift;
  return l;
}

IntVector to_h_form(const SimpleGroup& g, const OneParameterSubgroup& lam) {
  require_rank(g, lam.rank(), "to_h_form");
  return primitive_integer(convert_coordinates(g, to_rational(lam.coeffs()),
                                               CoordSystem::FundamentalCoweight, CoordSystem::H));
}

}  // namespace gitsolve::rootdata
