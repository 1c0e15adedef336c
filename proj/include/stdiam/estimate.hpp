// Estimates, their guarantee descriptors, and the interval predicate used by
// tests and `verify`.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stdiam/graph.hpp"

namespace stdiam {

/// Exact nonnegative rational num/den, kept reduced.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string str() const;

  /// Parses "p/q", an integer, or a finite decimal such as "0.1".
  static Rational parse(const std::string& text);

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

enum class Side {
  /// f*truth - a <= estimate <= truth
  lower,
  /// truth <= estimate <= f*truth + a
  upper,
};

const char* to_string(Side side) noexcept;

struct Guarantee {
  Side side = Side::lower;
  Rational factor{1};
  Rational additive{0};

  /// Closed integer interval the estimate must lie in for an integer truth.
  /// Lower side: [max(0, ceil(f*truth - a)), truth].
  /// Upper side: [truth, floor(f*truth + a)].
  std::pair<Dist, Dist> interval(Dist truth) const;

  /// Interval membership. An unreachable truth admits only an unreachable
  /// estimate and vice versa.
  bool admits(Dist truth, Dist estimate) const;
};

enum class Quantity { diameter, radius, eccentricities };

const char* to_string(Quantity q) noexcept;

struct TraceEntry {
  std::string name;
  Dist value;
  /// Candidates are the values the estimate is the max/min of.
  bool candidate;
};

struct Trace {
  std::vector<TraceEntry> entries;

  void candidate(std::string name, Dist value) {
    entries.push_back({std::move(name), value, true});
  }
  void note(std::string name, Dist value) {
    entries.push_back({std::move(name), value, false});
  }
  std::optional<Dist> find(const std::string& name) const;
  std::vector<Dist> candidates() const;
};

struct Estimate {
  Dist value = kUnreachable;
  Quantity quantity = Quantity::diameter;
  Guarantee guarantee;
  Trace trace;
  std::uint64_t seed = 0;
  /// Single- or multi-source searches run, each counted once.
  std::size_t searches = 0;
  /// Center for radius estimates, endpoint pair for diameter estimates when
  /// the algorithm knows one.
  std::optional<Vertex> witness;
  std::optional<Vertex> witness_partner;
};

struct EccentricityEstimates {
  /// Exactly the S set, ascending.
  std::vector<Vertex> vertices;
  std::vector<Dist> values;
  Guarantee guarantee;
  Trace trace;
  std::uint64_t seed = 0;
  std::size_t searches = 0;

  Dist at(Vertex v) const;
};

/// Which input property an algorithm rejected.
enum class Mismatch { mode, direction, weight };

class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(Mismatch kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  Mismatch kind() const noexcept { return kind_; }

 private:
  Mismatch kind_;
};

/// Accuracy tier shared by the eccentricity and radius entry points.
enum class Tier { linear, sqrtn, m32 };

const char* to_string(Tier tier) noexcept;
Tier parse_tier(const std::string& text);

}  // namespace stdiam
