#include "p1kit/conn.hpp"

#include <algorithm>
#include <stdexcept>

#include "p1kit/errors.hpp"

namespace p1kit {

ConnAtom ConnAtom::open_complement(std::uint64_t codim) {
  if (codim == 0) throw PreconditionError("open complement codimension must be >= 1");
  return {Kind::OpenComplementCodim, codim, true};
}

Level ConnAtom::level() const {
  switch (kind) {
    case Kind::AffineBundle:
      return Level::infinity();
    case Kind::OpenComplementCodim:
      return Level::of(parameter - 1);
    case Kind::Declared:
      return Level::of(parameter);
  }
  return Level::of(0);
}

std::string ConnAtom::describe() const {
  switch (kind) {
    case Kind::AffineBundle:
      return "affine-bundle(" + std::to_string(parameter) + ")";
    case Kind::OpenComplementCodim:
      return "open-complement-codim(" + std::to_string(parameter) + ")";
    case Kind::Declared:
      return std::string(nicely ? "nicely-" : "") + std::to_string(parameter) + "-conn";
  }
  return "?";
}

ConnAtom pullback(const ConnAtom& atom) {
  if (!atom.nicely)
    throw PreconditionError("pullback is only defined for nicely-connected morphisms, not " +
                            atom.describe());
  return atom;
}

ConnExpr ConnExpr::atom(ConnAtom a) {
  ConnExpr e;
  e.node_ = Node::Atom;
  e.atom_ = a;
  return e;
}

ConnExpr ConnExpr::compose(std::vector<ConnExpr> parts) {
  ConnExpr e;
  e.node_ = Node::Compose;
  e.children_ = std::move(parts);
  return e;
}

ConnExpr ConnExpr::two_of_three(ConnExpr known1, ConnExpr known2, Leg unknown) {
  ConnExpr e;
  e.node_ = Node::TwoOfThree;
  e.unknown_ = unknown;
  e.children_.push_back(std::move(known1));
  e.children_.push_back(std::move(known2));
  return e;
}

Level ConnExpr::level() const {
  switch (node_) {
    case Node::Atom:
      return atom_.level();
    case Node::Compose:
    case Node::TwoOfThree: {
      // identity composite is infinitely connected
      Level l = Level::infinity();
      for (const auto& c : children_) l = meet(l, c.level());
      return l;
    }
  }
  return Level::infinity();
}

Level eval_level(const ConnExpr& expr) { return expr.level(); }

Level fibered_product_level(Level k, Level kp) { return meet(k, kp); }

// ------------------------------------------------------------------ LadderSeq

LadderSeq LadderSeq::affine(long slope, long intercept) {
  LadderSeq s;
  s.slope_ = slope;
  s.intercept_ = intercept;
  return s;
}

LadderSeq LadderSeq::prefix_then_constant(std::vector<long> values) {
  return prefix_then_slope(std::move(values), 0);
}

LadderSeq LadderSeq::prefix_then_slope(std::vector<long> values, long slope) {
  if (values.empty()) throw PreconditionError("ladder prefix must be nonempty");
  LadderSeq s;
  const long n = static_cast<long>(values.size());
  s.slope_ = slope;
  s.intercept_ = values.back() - slope * (n - 1);
  s.prefix_ = std::move(values);
  return s;
}

long LadderSeq::at(std::size_t ell) const {
  if (ell < prefix_.size()) return prefix_[ell];
  return slope_ * static_cast<long>(ell) + intercept_;
}

bool LadderSeq::weakly_increasing() const {
  for (std::size_t i = 0; i + 1 <= prefix_.size(); ++i)
    if (at(i + 1) < at(i)) return false;
  return slope_ >= 0;
}

bool LadderSeq::unbounded() const { return slope_ > 0; }

std::string LadderSeq::describe() const {
  std::string s;
  if (!prefix_.empty()) {
    s = "[";
    for (std::size_t i = 0; i < prefix_.size(); ++i) s += (i ? "," : "") + std::to_string(prefix_[i]);
    s += "] then ";
  }
  return s + std::to_string(slope_) + "*l + " + std::to_string(intercept_);
}

bool check_cauchy(const LadderSeq& seq) { return seq.weakly_increasing() && seq.unbounded(); }

bool check_whe(const LadderSeq& b) { return check_cauchy(b); }

// ---------------------------------------------------------------------- grid

GridEdges grid_edge_levels(long r, long d, long m, long ell) {
  if (r < 1 || ell < 0 || m < 0) throw PreconditionError("grid_edge_levels: need r >= 1, l >= 0, m >= 0");
  const long vertical = d + m * (r + ell);
  if (vertical < 0) throw PreconditionError("grid_edge_levels: d + m(r+l) < 0");
  GridEdges g;
  g.horizontal = static_cast<std::uint64_t>(r + ell - 1);
  g.vertical = static_cast<std::uint64_t>(vertical);
  g.hypothesis_ok = vertical >= r + ell - 1;
  return g;
}

PFinalReport verify_p_final(const LadderSeq& a, const LadderSeq& b, long r, long d,
                            std::size_t window) {
  if (!a.weakly_increasing() || !b.weakly_increasing())
    throw PreconditionError("verify_p_final: sequences must be weakly increasing");
  for (std::size_t i = 0; i < window; ++i)
    if (b.at(i) < 1 || a.at(i) < 0) throw PreconditionError("verify_p_final: need a_i >= 0, b_i >= 1");

  PFinalReport report;
  report.a_unbounded = a.unbounded();
  // Arrow i runs along row b_i from column a_i to max(a_i, i); each horizontal
  // edge at column l has level r+l-1 (the vertical edges d+m(r+l) never bind
  // here since b is unchanged), so a nontrivial arrow has level r + a_i - 1.
  for (std::size_t i = 0; i < window; ++i) {
    const long ai = a.at(i), target = std::max(ai, static_cast<long>(i));
    Level l = Level::infinity();
    for (long col = ai; col < target; ++col) {
      const GridEdges g = grid_edge_levels(r, d, b.at(i), col);
      l = meet(l, Level::of(g.horizontal));
    }
    report.ladder.push_back(l);
  }
  // Past the window the finite levels are r + a_i - 1, so they grow exactly
  // when the affine tail of a does.
  report.ladder_unbounded = a.unbounded();
  report.passed = report.a_unbounded && report.ladder_unbounded;
  return report;
}

std::uint64_t claim2_codim(long r, long d, long m) {
  if (d + m * r < 0) throw PreconditionError("claim2_codim requires d + m r >= 0");
  const long via_dimensions = (r + 1) * (d + m * (r + 1)) - (r * (d + m * r) - 1);
  const long closed_form = m * (r + 1) + d + m * r + 1;
  if (via_dimensions != closed_form)
    throw std::logic_error("claim2_codim: dimension count and closed form disagree");
  return static_cast<std::uint64_t>(via_dimensions);
}

// ------------------------------------------------------------------- presets

namespace {

std::string conn(Level l) { return l.to_string() + "-conn"; }

ReplayLine line(std::string label, Level derived, Level claimed) {
  return {std::move(label), conn(derived), conn(claimed), derived == claimed, false};
}

ReplayLine bool_line(std::string label, bool derived, bool claimed) {
  auto s = [](bool b) { return std::string(b ? "true" : "false"); };
  return {std::move(label), s(derived), s(claimed), derived == claimed, false};
}

// BGL(n) -> BGL(n+1): rank-n affine bundle, open complement of codimension
// n+1 (the zero section of A^(n+1)), rank-(n+1) vector bundle.
ConnExpr bgl_step(std::uint64_t n) {
  return ConnExpr::compose({ConnExpr::atom(ConnAtom::affine_bundle(n)),
                            ConnExpr::atom(ConnAtom::open_complement(n + 1)),
                            ConnExpr::atom(ConnAtom::affine_bundle(n + 1))});
}

ConnExpr bgl_stabilization(std::uint64_t n, std::uint64_t m) {
  std::vector<ConnExpr> steps;
  for (std::uint64_t k = 0; k < m; ++k) steps.push_back(bgl_step(n + k));
  return ConnExpr::compose(std::move(steps));
}

template <class F>
void sweep(F&& f) {
  for (long r = 1; r <= 4; ++r)
    for (long d = 0; d <= 3; ++d)
      for (long m = 1; m <= 3; ++m)
        for (long ell = 0; ell <= 10; ++ell) f(r, d, m, ell);
}

std::string tag(long r, long d, long m) {
  return "r=" + std::to_string(r) + " d=" + std::to_string(d) + " m=" + std::to_string(m);
}

std::string tag(long r, long d, long m, long ell) { return tag(r, d, m) + " l=" + std::to_string(ell); }

std::vector<ReplayLine> preset_claim_bgl(long n) {
  if (n < 0) throw PreconditionError("claimBGL needs n >= 0");
  const auto un = static_cast<std::uint64_t>(n);
  std::vector<ReplayLine> out;
  out.push_back(line("BGL(" + std::to_string(n) + ")->BGL(" + std::to_string(n + 1) + ")",
                     eval_level(bgl_step(un)), Level::of(un)));
  for (std::uint64_t m = 2; m <= 4; ++m)
    out.push_back(line("BGL(" + std::to_string(n) + ")->BGL(" + std::to_string(n + static_cast<long>(m)) + ")",
                       eval_level(bgl_stabilization(un, m)), Level::of(un)));
  return out;
}

std::vector<ReplayLine> preset_gs1() {
  std::vector<ReplayLine> out;
  sweep([&](long r, long d, long m, long ell) {
    const GridEdges g = grid_edge_levels(r, d, m, ell);
    if (!g.hypothesis_ok) return;
    const auto k = static_cast<std::uint64_t>(r + ell - 1);
    // T_{r+l} -> BGL(d+m(r+l)) -> BGL(d+m(r+l+1)), against T_{r+l+1} -> BGL(...)
    const auto rank = static_cast<std::uint64_t>(d + m * (r + ell));
    ConnExpr vertical = ConnExpr::atom(ConnAtom::declared(k, true));
    ConnExpr vertical_next = ConnExpr::atom(ConnAtom::declared(k + 1, true));
    ConnExpr bottom = bgl_stabilization(rank, static_cast<std::uint64_t>(m));
    ConnExpr composite = ConnExpr::compose({vertical, bottom});
    ConnExpr top = ConnExpr::two_of_three(composite, vertical_next, ConnExpr::Leg::First);
    out.push_back(line("gs1 top " + tag(r, d, m, ell), eval_level(top), Level::of(k)));
  });
  for (long r = 1; r <= 4; ++r)
    out.push_back(bool_line("gs1 verticals WHE b(l)=r+l-1 r=" + std::to_string(r),
                            check_whe(LadderSeq::affine(1, r - 1)), true));
  return out;
}

std::vector<ReplayLine> preset_gs2() {
  std::vector<ReplayLine> out;
  sweep([&](long r, long d, long m, long ell) {
    const GridEdges g = grid_edge_levels(r, d, m, ell);
    const auto rl = static_cast<std::uint64_t>(r + ell);
    // affine bundle of rank (r+l)(d+m(r+l)) then the open U(m) in X, complement codim d+m(r+l)+1
    ConnExpr vertical = ConnExpr::compose(
        {ConnExpr::atom(ConnAtom::affine_bundle(rl * g.vertical)),
         ConnExpr::atom(ConnAtom::open_complement(g.vertical + 1))});
    out.push_back(line("gs2 vertical " + tag(r, d, m, ell), eval_level(vertical), Level::of(g.vertical)));
    if (!g.hypothesis_ok) return;
    const GridEdges next = grid_edge_levels(r, d, m, ell + 1);
    ConnExpr vertical_next = ConnExpr::compose(
        {ConnExpr::atom(ConnAtom::affine_bundle((rl + 1) * next.vertical)),
         ConnExpr::atom(ConnAtom::open_complement(next.vertical + 1))});
    ConnExpr top = ConnExpr::atom(ConnAtom::declared(g.horizontal));
    ConnExpr composite = ConnExpr::compose({top, vertical_next});
    ConnExpr bottom = ConnExpr::two_of_three(vertical, composite, ConnExpr::Leg::Second);
    out.push_back(line("gs2 bottom " + tag(r, d, m, ell), eval_level(bottom), Level::of(g.horizontal)));
  });
  for (long r = 1; r <= 4; ++r)
    for (long d = 0; d <= 3; ++d)
      for (long m = 1; m <= 3; ++m)
        out.push_back(bool_line("gs2 verticals Cauchy k(l)=d+m(r+l) " + tag(r, d, m),
                                check_cauchy(LadderSeq::affine(m, d + m * r)), true));
  // the diagram label on the horizontal arrow reads (r+l)
  ReplayLine variant{"gs2 horizontal label variant (r+l) vs statement (r+l-1)", "r+l-1", "r+l", false, true};
  out.push_back(variant);
  return out;
}

std::vector<ReplayLine> preset_grid() {
  std::vector<ReplayLine> out;
  sweep([&](long r, long d, long m, long ell) {
    const GridEdges g = grid_edge_levels(r, d, m, ell);
    out.push_back(line("grid vertical " + tag(r, d, m, ell), Level::of(g.vertical),
                       Level::of(static_cast<std::uint64_t>(d + m * (r + ell)))));
    if (!g.hypothesis_ok) return;
    // U~_{r+l} -> U~_{r+l+1} -> U_{r+l+1} against U~_{r+l} -> U_{r+l} -> U_{r+l+1}
    ConnExpr tilde_top = ConnExpr::atom(ConnAtom::declared(g.horizontal));
    ConnExpr left = ConnExpr::atom(ConnAtom::affine_bundle(static_cast<std::uint64_t>(r + ell)));
    ConnExpr right = ConnExpr::atom(ConnAtom::affine_bundle(static_cast<std::uint64_t>(r + ell + 1)));
    ConnExpr composite = ConnExpr::compose({tilde_top, right});
    ConnExpr u_level = ConnExpr::two_of_three(left, composite, ConnExpr::Leg::Second);
    out.push_back(line("grid horizontal U " + tag(r, d, m, ell), eval_level(u_level), Level::of(g.horizontal)));
  });
  for (long r = 1; r <= 4; ++r)
    for (long d = 0; d <= 3; ++d)
      for (long m = 0; m <= 3; ++m) {
        if (d + m * r < 0) continue;
        const std::uint64_t c = claim2_codim(r, d, m);
        out.push_back(line("claim2 codim " + tag(r, d, m), Level::of(c),
                           Level::of(static_cast<std::uint64_t>(m * (r + 1) + d + m * r + 1))));
      }
  out.push_back(line("fibered product min(3,5)", fibered_product_level(Level::of(3), Level::of(5)), Level::of(3)));
  out.push_back(line("fibered product min(k,inf)", fibered_product_level(Level::of(7), Level::infinity()), Level::of(7)));
  return out;
}

std::vector<ReplayLine> preset_p_final() {
  std::vector<ReplayLine> out;
  struct Case {
    std::string label;
    LadderSeq a, b;
    bool claimed;
  };
  const std::vector<Case> cases = {
      {"a_i=i b_i=1", LadderSeq::affine(1, 0), LadderSeq::constant(1), true},
      {"a_i=3 b_i=i+1", LadderSeq::constant(3), LadderSeq::affine(1, 1), false},
      {"a_i=i b_i=i+1", LadderSeq::affine(1, 0), LadderSeq::affine(1, 1), true},
      {"a_i=2i b_i=5", LadderSeq::affine(2, 0), LadderSeq::constant(5), true},
      {"a=[0,0,1] then +1 b=2", LadderSeq::prefix_then_slope({0, 0, 1}, 1), LadderSeq::constant(2), true},
      {"a=[1,2,4] then const b_i=i+1", LadderSeq::prefix_then_constant({1, 2, 4}), LadderSeq::affine(1, 1), false},
  };
  for (const auto& c : cases) {
    for (long r = 1; r <= 4; ++r) {
      const PFinalReport rep = verify_p_final(c.a, c.b, r, 0);
      out.push_back(bool_line("p-final " + c.label + " r=" + std::to_string(r), rep.passed, c.claimed));
    }
  }
  return out;
}

}  // namespace

std::vector<ReplayLine> replay_preset(const std::string& preset, long n) {
  if (preset == "claimBGL") return preset_claim_bgl(n);
  if (preset == "gs1") return preset_gs1();
  if (preset == "gs2") return preset_gs2();
  if (preset == "grid") return preset_grid();
  if (preset == "p-final") return preset_p_final();
  throw PreconditionError("unknown preset '" + preset + "'");
}

}  // namespace p1kit
