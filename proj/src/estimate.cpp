#include "stdiam/estimate.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace stdiam {

namespace {

__extension__ typedef __int128 i128;

// Floor/ceil of a/b for b > 0 and any sign of a.
i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && (a > 0)) ++q;
  return q;
}

Dist clamp_dist(i128 x) {
  if (x < 0) return 0;
  if (x >= static_cast<i128>(kUnreachable)) return kUnreachable - 1;
  return static_cast<Dist>(x);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) {
    throw std::invalid_argument("rational must be nonnegative with den > 0");
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  auto to_int = [&text](std::string_view part) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || p != part.data() + part.size() || part.empty()) {
      throw std::invalid_argument("bad rational '" + text + "'");
    }
    return v;
  };
  const std::string_view sv(text);
  if (auto slash = sv.find('/'); slash != std::string_view::npos) {
    return Rational(to_int(sv.substr(0, slash)), to_int(sv.substr(slash + 1)));
  }
  if (auto dot = sv.find('.'); dot != std::string_view::npos) {
    const auto whole = sv.substr(0, dot);
    const auto frac = sv.substr(dot + 1);
    if (frac.size() > 12) throw std::invalid_argument("too many decimals");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t w = whole.empty() ? 0 : to_int(whole);
    const std::int64_t f = frac.empty() ? 0 : to_int(frac);
    return Rational(w * den + f, den);
  }
  return Rational(to_int(sv));
}

const char* to_string(Side side) noexcept {
  return side == Side::lower ? "lower" : "upper";
}

const char* to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::diameter:
      return "diameter";
    case Quantity::radius:
      return "radius";
    case Quantity::eccentricities:
      return "eccentricities";
  }
  return "?";
}

std::pair<Dist, Dist> Guarantee::interval(Dist truth) const {
  if (truth == kUnreachable) return {kUnreachable, kUnreachable};
  // f*truth -/+ a over the common denominator fd*ad.
  const i128 fn = factor.num();
  const i128 fd = factor.den();
  const i128 an = additive.num();
  const i128 ad = additive.den();
  const i128 t = static_cast<i128>(truth);
  if (side == Side::lower) {
    const Dist lo = clamp_dist(ceil_div(fn * t * ad - an * fd, fd * ad));
    return {std::min(lo, truth), truth};
  }
  const Dist hi = clamp_dist(floor_div(fn * t * ad + an * fd, fd * ad));
  return {truth, std::max(hi, truth)};
}

bool Guarantee::admits(Dist truth, Dist estimate) const {
  if (truth == kUnreachable || estimate == kUnreachable) {
    return truth == estimate;
  }
  const auto [lo, hi] = interval(truth);
  return lo <= estimate && estimate <= hi;
}

std::optional<Dist> Trace::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e.value;
  }
  return std::nullopt;
}

std::vector<Dist> Trace::candidates() const {
  std::vector<Dist> out;
  for (const auto& e : entries) {
    if (e.candidate) out.push_back(e.value);
  }
  return out;
}

Dist EccentricityEstimates::at(Vertex v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in S");
  }
  return values[static_cast<std::size_t>(it - vertices.begin())];
}

const char* to_string(Tier tier) noexcept {
  switch (tier) {
    case Tier::linear:
      return "linear";
    case Tier::sqrtn:
      return "sqrtn";
    case Tier::m32:
      return "m32";
  }
  return "?";
}

Tier parse_tier(const std::string& text) {
  if (text == "linear") return Tier::linear;
  if (text == "sqrtn") return Tier::sqrtn;
  if (text == "m32") return Tier::m32;
  throw std::invalid_argument("unknown tier '" + text + "'");
}

}  // namespace stdiam
