#pragma once

#include <array>
#include <string>

#include "fzddn/dihedral/dihedral.hpp"

namespace fzddn {

enum class BoundaryKind { periodic, twisted, open, braided };

const char* to_string(BoundaryKind kind);
BoundaryKind parse_boundary(const std::string& text);

/// One of (0,0), (0,inf), (inf,0), (inf,inf).
struct BraidPoint {
  bool z1_infinite = false;
  bool z2_infinite = false;

  static std::array<BraidPoint, 4> all() { return {{{false, false}, {false, true}, {true, false}, {true, true}}}; }
  /// The point whose braid operator is inverse to this one.
  BraidPoint inverse() const { return {!z1_infinite, !z2_infinite}; }
  std::string label() const;

  friend bool operator==(const BraidPoint&, const BraidPoint&) = default;
};

/// Accepts "0,0", "0,inf", "(inf,0)", "inf,inf" and similar spellings.
BraidPoint parse_braid_point(const std::string& text);

struct ChainSpec {
  RootContext ctx;
  int sites = 2;
  BoundaryKind boundary = BoundaryKind::periodic;
  DihedralElement twist = DihedralElement::identity(3);
  BraidPoint braid{};
  double alpha1 = 1.0;
  double alpha2 = -1.0;

  ChainSpec(const RootContext& c, int L, BoundaryKind b)
      : ctx(c), sites(L), boundary(b), twist(DihedralElement::identity(c.n())) {}

  int n() const { return ctx.n(); }
  long dimension() const;
  /// Twist actually applied: the identity unless the chain is twisted.
  DihedralElement effective_twist() const;
  /// Throws invalid-spec on inconsistent fields.
  void validate() const;
};

}  // namespace fzddn
