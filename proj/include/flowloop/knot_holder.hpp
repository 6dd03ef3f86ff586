#pragma once

#include <string>
#include <vector>

#include "flowloop/braid.hpp"
#include "flowloop/xseries.hpp"

namespace flowloop {

struct Strip {
  int id = 0;
  int source = 0;  // branch line
  int target = 0;  // branch line
  bool half_twist = false;
  int degree_mark = 0;  // 1 if the strip crosses a fiber arc
};

struct BranchLine {
  std::vector<int> incoming;
  std::vector<int> outgoing;
};

/// Knot holder carrying the flow of a homogeneous braid closure, plus the
/// elliptic axis loop of degree n.
class Template {
 public:
  Template(std::vector<Strip> strips, int branch_lines, int axis_degree);

  const std::vector<Strip>& strips() const { return strips_; }
  const std::vector<BranchLine>& branch_lines() const { return lines_; }
  int axis_degree() const { return axis_degree_; }
  /// Strips that may follow strip s: those leaving its target line.
  const std::vector<int>& successors(int s) const;

  /// "axis <n>" then one "strip <id> [twist] [mark] : <successor ids>" line
  /// per strip.
  std::string dump() const;

 private:
  std::vector<Strip> strips_;
  std::vector<BranchLine> lines_;
  int axis_degree_;
};

/// One branch line per crossing, holding the flow just after it.  Positive
/// columns flow up the braid, negative columns down.  Out of each crossing
/// runs a half-twisted strip to the next crossing of its column and one
/// untwisted strip to every neighbouring-column crossing met on the way;
/// hopping to the left column crosses a fiber arc.
/// Throws InputError unless the word is a homogeneous knot braid.
Template build_template(const BraidWord& word);

/// Reads the dump format back.  Branch lines are rebuilt from the successor
/// lists, so any transition graph can be loaded.
Template parse_template(const std::string& text);

struct Orbit {
  std::vector<int> cycle;  // lexicographically minimal rotation
  int degree = 0;
  int hyperbolic_sign = 1;  // -1 for an odd number of half twists
  bool primitive = true;
};

/// Primitive admissible cycles of degree <= max_degree, sorted by degree then
/// cycle.  Throws InputError if the template has a cycle of degree 0.
std::vector<Orbit> enumerate_orbits(const Template& t, int max_degree);

/// prod over primitive orbits of 1/(1 - sign x^degree), times (1 - x^axis),
/// truncated at x^order.
XSeries zeta_classical(const Template& t, int order);

/// (1 - x^axis) / det(I - B) with B the signed strip transition matrix.
XSeries zeta_determinant(const Template& t, int order);

/// "degree sign cycle" lines.
std::string orbit_table(const std::vector<Orbit>& orbits);

}  // namespace flowloop
