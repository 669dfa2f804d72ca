#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace p1kit {

/// Connectivity level k in N u {inf}; meet is min.
class Level {
 public:
  Level() = default;  // infinity
  static Level infinity() { return Level(); }
  static Level of(std::uint64_t k) {
    Level l;
    l.value_ = k;
    return l;
  }

  bool is_infinite() const { return !value_.has_value(); }
  std::uint64_t value() const { return value_.value(); }

  friend bool operator==(const Level&, const Level&) = default;
  friend std::strong_ordering operator<=>(const Level& a, const Level& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
  }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }

 private:
  std::optional<std::uint64_t> value_;
};

inline Level meet(Level a, Level b) { return a < b ? a : b; }

/// Generating morphisms of the connectivity classes.
struct ConnAtom {
  enum class Kind { AffineBundle, OpenComplementCodim, Declared };

  Kind kind = Kind::Declared;
  std::uint64_t parameter = 0;  // bundle rank, complement codimension, or declared level
  bool nicely = true;           // belongs to the nicely-connected class

  static ConnAtom affine_bundle(std::uint64_t rank) { return {Kind::AffineBundle, rank, true}; }
  /// Open embedding whose complement has codimension c >= 1.
  static ConnAtom open_complement(std::uint64_t codim);
  static ConnAtom declared(std::uint64_t k, bool nicely = false) { return {Kind::Declared, k, nicely}; }

  /// inf for affine bundles, c - 1 for a codimension-c complement, k when declared.
  Level level() const;
  std::string describe() const;
};

/// Pullback along an arbitrary base change. Only nicely-connected atoms are
/// known to be stable; others throw PreconditionError.
ConnAtom pullback(const ConnAtom& atom);

/// Composite of morphisms, or the unknown leg of a commuting triangle whose
/// other two legs are known.
class ConnExpr {
 public:
  enum class Leg { First, Second, Composite };

  static ConnExpr atom(ConnAtom a);
  static ConnExpr compose(std::vector<ConnExpr> parts);
  static ConnExpr two_of_three(ConnExpr known1, ConnExpr known2, Leg unknown = Leg::Composite);

  Level level() const;

 private:
  enum class Node { Atom, Compose, TwoOfThree };

  Node node_ = Node::Atom;
  ConnAtom atom_;
  Leg unknown_ = Leg::Composite;
  std::vector<ConnExpr> children_;
};

/// Composition evaluates to the min of its members; a two-of-three node to the
/// min of its two known legs.
Level eval_level(const ConnExpr& expr);

/// Level of a fibered product of two spatial incarnations: min(k, k').
Level fibered_product_level(Level k, Level kp);

/// Sequence ell -> k(ell), ell = 0, 1, 2, ...: an explicit prefix followed by
/// an affine tail slope * ell + intercept.
class LadderSeq {
 public:
  static LadderSeq affine(long slope, long intercept);
  static LadderSeq constant(long c) { return affine(0, c); }
  /// Prefix values, then the last value repeated.
  static LadderSeq prefix_then_constant(std::vector<long> values);
  /// Prefix values, then continuing from the last value with the given slope.
  static LadderSeq prefix_then_slope(std::vector<long> values, long slope);

  long at(std::size_t ell) const;
  bool weakly_increasing() const;
  bool unbounded() const;
  std::string describe() const;

 private:
  std::vector<long> prefix_;
  long slope_ = 0;
  long intercept_ = 0;
};

/// Weakly increasing and unbounded.
bool check_cauchy(const LadderSeq& seq);
/// Same predicate, applied to the levels b(n) of a morphism of sequences.
bool check_whe(const LadderSeq& b);

struct GridEdges {
  std::uint64_t horizontal = 0;  // U_{r+l,d}(m) -> U_{r+l+1,d}(m)
  std::uint64_t vertical = 0;    // U_{r+l,d}(m) -> U_{r+l,d}(m+1)
  bool hypothesis_ok = false;    // d + m(r+l) >= r+l-1
};

/// Requires r >= 1 and d + m(r+l) >= 0; the hypothesis flag is reported, not enforced.
GridEdges grid_edge_levels(long r, long d, long m, long ell);

struct PFinalReport {
  bool a_unbounded = false;
  bool ladder_unbounded = false;
  std::vector<Level> ladder;  // comparison arrows on the inspected window
  bool passed = false;
};

/// For index sequences (a_i, b_i): compares U_{r+a_i,d}(b_i) with the
/// dominating sequence (max(a_i, i), b_i) by composing grid edges. Passes iff
/// lim a = inf, in which case the comparison levels are unbounded.
PFinalReport verify_p_final(const LadderSeq& a, const LadderSeq& b, long r = 2, long d = 0,
                            std::size_t window = 16);

/// (r+1)(d+m(r+1)) - (r(d+mr) - 1); throws std::logic_error if it differs from
/// m(r+1) + d + mr + 1. Requires d + mr >= 0.
std::uint64_t claim2_codim(long r, long d, long m);

struct ReplayLine {
  std::string label;
  std::string derived;
  std::string claimed;
  bool pass = false;
  bool flagged = false;  // known discrepancy, reported but not judged
};

/// Replays one of the presets claimBGL, gs1, gs2, grid, p-final.
/// `n` is used by claimBGL; the other presets sweep r <= 4, d <= 3, 1 <= m <= 3, l <= 10.
std::vector<ReplayLine> replay_preset(const std::string& preset, long n = 3);

}  // namespace p1kit
