#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oblab {

/// Nesting depth of a satellite curve in the pattern complement; omega means
/// the curve is null-homotopic, which absorbs any finite level.
struct EtaDepth {
  bool omega = false;
  long k = 0;

  static EtaDepth of(long k) { return EtaDepth{false, k}; }
  static EtaDepth null_homotopic() { return EtaDepth{true, 0}; }
};

/// A claim level: a concrete n, or "for all k".
struct Level {
  bool forall = false;
  long n = 0;

  static Level at(long n) { return Level{false, n}; }
  static Level all() { return Level{true, 0}; }

  bool operator==(const Level& o) const {
    return forall == o.forall && (forall || n == o.n);
  }
  std::string str() const { return forall ? "forall" : std::to_string(n); }
};

inline Level level_plus(const Level& l, const EtaDepth& d) {
  if (l.forall || d.omega) return Level::all();
  return Level::at(l.n + d.k);
}

inline Level level_min(const Level& a, const Level& b) {
  if (a.forall) return b;
  if (b.forall) return a;
  return Level::at(std::min(a.n, b.n));
}

enum class Polarity { negative, positive };

inline Polarity flip(Polarity p) {
  return p == Polarity::negative ? Polarity::positive : Polarity::negative;
}

inline std::string polarity_str(Polarity p) {
  return p == Polarity::negative ? "negative" : "positive";
}

/// Declared geometric attributes per base knot or pattern; these are inputs,
/// never inferred.
using FactBase = std::map<std::string, std::set<std::string>>;

inline const char* kSliceAttr = "slice";
inline const char* kPositiveUnknotAttr =
    "unknots-by-changing-positive-crossings";
inline const char* kNegativeUnknotAttr =
    "unknots-by-changing-negative-crossings";
inline const char* kZeroNegativeAttr = "0-negative";
inline const char* kZeroPositiveAttr = "0-positive";

/// A derivation node: the rule applied, the resulting claim, and premises.
struct Certificate {
  std::string rule;  // axiom | crossing_change | satellite | mirror | sum
  std::string knot;
  Polarity polarity = Polarity::negative;
  Level level;
  std::string attribute;  // axiom / crossing_change: fact consumed
  std::string pattern;    // satellite: pattern name (must be declared slice)
  EtaDepth depth;         // satellite
  std::vector<Certificate> premises;

  std::size_t node_count() const {
    std::size_t c = 1;
    for (const auto& p : premises) c += p.node_count();
    return c;
  }
  std::size_t depth_count() const {
    std::size_t d = 0;
    for (const auto& p : premises) d = std::max(d, p.depth_count());
    return d + 1;
  }
};

namespace detail {

inline bool has_fact(const FactBase& facts, const std::string& knot,
                     const std::string& attr) {
  auto it = facts.find(knot);
  return it != facts.end() && it->second.count(attr) > 0;
}

}  // namespace detail

/// Axiom: a declared level-0 attribute.
inline Certificate rule_axiom(const FactBase& facts, const std::string& knot,
                              Polarity polarity) {
  const char* attr = polarity == Polarity::negative ? kZeroNegativeAttr
                                                    : kZeroPositiveAttr;
  if (!detail::has_fact(facts, knot, attr))
    throw std::invalid_argument("missing attribute " + std::string(attr) +
                                " for " + knot);
  Certificate c;
  c.rule = "axiom";
  c.knot = knot;
  c.polarity = polarity;
  c.level = Level::at(0);
  c.attribute = attr;
  return c;
}

/// A declared slice knot is at every level of both polarities.
inline Certificate rule_slice(const FactBase& facts, const std::string& knot,
                              Polarity polarity) {
  if (!detail::has_fact(facts, knot, kSliceAttr))
    throw std::invalid_argument("missing attribute slice for " + knot);
  Certificate c;
  c.rule = "slice";
  c.knot = knot;
  c.polarity = polarity;
  c.level = Level::all();
  c.attribute = kSliceAttr;
  return c;
}

/// A knot undone by switching positive crossings is 0-positive (and the
/// mirrored statement gives 0-negative).
inline Certificate rule_crossing_change(const FactBase& facts,
                                        const std::string& knot,
                                        Polarity polarity) {
  const char* attr = polarity == Polarity::positive ? kPositiveUnknotAttr
                                                    : kNegativeUnknotAttr;
  if (!detail::has_fact(facts, knot, attr))
    throw std::invalid_argument("missing attribute " + std::string(attr) +
                                " for " + knot);
  Certificate c;
  c.rule = "crossing_change";
  c.knot = knot;
  c.polarity = polarity;
  c.level = Level::at(0);
  c.attribute = attr;
  return c;
}

/// Satellite with a slice pattern: the companion's level increases by the
/// curve depth, keeping polarity; a null-homotopic curve yields "forall".
inline Certificate rule_satellite(const FactBase& facts,
                                  const std::string& pattern,
                                  const EtaDepth& depth,
                                  Certificate companion,
                                  const std::string& result_name) {
  if (!detail::has_fact(facts, pattern, kSliceAttr))
    throw std::invalid_argument("missing attribute slice for pattern " +
                                pattern);
  Certificate c;
  c.rule = "satellite";
  c.knot = result_name;
  c.polarity = companion.polarity;
  c.level = level_plus(companion.level, depth);
  c.pattern = pattern;
  c.depth = depth;
  c.premises.push_back(std::move(companion));
  return c;
}

inline Certificate rule_mirror(Certificate base) {
  Certificate c;
  c.rule = "mirror";
  c.knot = "mirror(" + base.knot + ")";
  c.polarity = flip(base.polarity);
  c.level = base.level;
  c.premises.push_back(std::move(base));
  return c;
}

/// Connected sum of same-polarity certificates: the minimum level.
inline Certificate rule_connected_sum(std::vector<Certificate> parts) {
  if (parts.empty()) throw std::invalid_argument("empty connected sum");
  Certificate c;
  c.rule = "sum";
  c.polarity = parts.front().polarity;
  c.level = Level::all();
  std::string name;
  for (const auto& p : parts) {
    if (p.polarity != c.polarity)
      throw std::invalid_argument("mixed polarities in connected sum");
    c.level = level_min(c.level, p.level);
    name += (name.empty() ? "" : " # ") + p.knot;
  }
  c.knot = name;
  c.premises = std::move(parts);
  return c;
}

/// Re-derive every node of a certificate from its premises and the fact
/// base; returns false when any step does not follow.
inline bool replay(const Certificate& c, const FactBase& facts) {
  for (const auto& p : c.premises)
    if (!replay(p, facts)) return false;
  try {
    if (c.rule == "axiom") {
      Certificate r = rule_axiom(facts, c.knot, c.polarity);
      return r.level == c.level && r.attribute == c.attribute;
    }
    if (c.rule == "slice") {
      Certificate r = rule_slice(facts, c.knot, c.polarity);
      return r.level == c.level;
    }
    if (c.rule == "crossing_change") {
      Certificate r = rule_crossing_change(facts, c.knot, c.polarity);
      return r.level == c.level && r.attribute == c.attribute;
    }
    if (c.rule == "satellite") {
      if (c.premises.size() != 1) return false;
      Certificate r = rule_satellite(facts, c.pattern, c.depth, c.premises[0],
                                     c.knot);
      return r.level == c.level && r.polarity == c.polarity;
    }
    if (c.rule == "mirror") {
      if (c.premises.size() != 1) return false;
      return c.polarity == flip(c.premises[0].polarity) &&
             c.level == c.premises[0].level;
    }
    if (c.rule == "sum") {
      if (c.premises.empty()) return false;
      Level lv = Level::all();
      for (const auto& p : c.premises) {
        if (p.polarity != c.polarity) return false;
        lv = level_min(lv, p.level);
      }
      return lv == c.level;
    }
  } catch (const std::invalid_argument&) {
    return false;
  }
  return false;  // unknown rule
}

/// Declared geometric inputs for the example family: slice patterns, the
/// crossing-change fact for the right-handed trefoil, and the level-0 seed.
inline FactBase example_fact_base(long i) {
  std::string seed = "J[" + std::to_string(i) + ",0]";
  FactBase f;
  f["stevedore"] = {kSliceAttr};
  f["Wh"] = {kSliceAttr};
  f["R(U,D)"] = {kSliceAttr};
  f["R(J,U)"] = {kSliceAttr};
  f["T"] = {kPositiveUnknotAttr};
  f[seed] = {kZeroNegativeAttr};
  return f;
}

struct ExampleCertificates {
  Certificate negative;  // K_i is n-negative
  Certificate positive;  // K_i is k-positive for every k
};

/// The derivation for the level-n example knots: the negative chain climbs
/// through n-1 depth-1 satellite steps and one final slice-pattern step; the
/// positive chain factors through the null-homotopic double of the trefoil.
inline ExampleCertificates certify_example_knots(long n, long i,
                                                 const FactBase& facts) {
  if (n < 2) throw std::invalid_argument("level must be at least 2");
  std::string tag = std::to_string(i);
  std::string ki = "K[" + tag + "]";

  Certificate neg =
      rule_axiom(facts, "J[" + tag + ",0]", Polarity::negative);
  for (long k = 1; k <= n - 1; ++k)
    neg = rule_satellite(facts, "stevedore", EtaDepth::of(1), std::move(neg),
                         "J[" + tag + "," + std::to_string(k) + "]");
  neg = rule_satellite(facts, "R(U,D)", EtaDepth::of(1), std::move(neg), ki);
  if (!(neg.level == Level::at(n)))
    throw std::logic_error("negative derivation level mismatch");

  Certificate pos = rule_crossing_change(facts, "T", Polarity::positive);
  pos = rule_satellite(facts, "Wh", EtaDepth::null_homotopic(), std::move(pos),
                       "D");
  pos = rule_satellite(facts, "R(J,U)", EtaDepth::of(1), std::move(pos), ki);
  if (!pos.level.forall)
    throw std::logic_error("positive derivation level mismatch");
  return ExampleCertificates{std::move(neg), std::move(pos)};
}

inline ExampleCertificates certify_example_knots(long n, long i) {
  return certify_example_knots(n, i, example_fact_base(i));
}

}  // namespace oblab
