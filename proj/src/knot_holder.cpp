#include "flowloop/knot_holder.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "flowloop/xpoly.hpp"

namespace flowloop {

Template::Template(std::vector<Strip> strips, int branch_lines, int axis_degree)
    : strips_(std::move(strips)), lines_(static_cast<std::size_t>(branch_lines)),
      axis_degree_(axis_degree) {
  if (axis_degree < 1) throw InputError("axis degree must be positive");
  for (std::size_t k = 0; k < strips_.size(); ++k) {
    const Strip& s = strips_[k];
    if (s.id != static_cast<int>(k)) throw InputError("strip ids must be 0, 1, 2, ...");
    if (s.source < 0 || s.source >= branch_lines || s.target < 0 || s.target >= branch_lines)
      throw InputError("strip " + std::to_string(s.id) + " references a missing branch line");
    if (s.degree_mark != 0 && s.degree_mark != 1)
      throw InputError("degree mark must be 0 or 1");
    lines_[static_cast<std::size_t>(s.source)].outgoing.push_back(s.id);
    lines_[static_cast<std::size_t>(s.target)].incoming.push_back(s.id);
  }
}

const std::vector<int>& Template::successors(int s) const {
  return lines_[static_cast<std::size_t>(strips_.at(static_cast<std::size_t>(s)).target)].outgoing;
}

std::string Template::dump() const {
  std::ostringstream out;
  out << "axis " << axis_degree_ << '\n';
  for (const auto& s : strips_) {
    out << "strip " << s.id;
    if (s.half_twist) out << " twist";
    if (s.degree_mark) out << " mark";
    out << " :";
    for (int t : successors(s.id)) out << ' ' << t;
    out << '\n';
  }
  return out.str();
}

Template build_template(const BraidWord& word) {
  const BraidStats stats = analyze(word);
  require_homogeneous_knot(stats);
  const auto& letters = word.letters();
  const int c = static_cast<int>(letters.size());
  std::vector<Strip> strips;
  auto add = [&](int from, int to, bool twist, int mark) {
    strips.push_back({static_cast<int>(strips.size()), from, to, twist, mark});
  };
  for (int k = 0; k < c; ++k) {
    const int col = letters[static_cast<std::size_t>(k)].column;
    const int dir = stats.column_sign[static_cast<std::size_t>(col - 1)];
    std::vector<int> met;
    int j = k;
    while (true) {
      j = ((j + dir) % c + c) % c;
      if (letters[static_cast<std::size_t>(j)].column == col) break;
      met.push_back(j);
    }
    add(k, j, true, 1);
    for (int m : met) {
      const int mc = letters[static_cast<std::size_t>(m)].column;
      if (mc == col - 1) add(k, m, false, 1);
      if (mc == col + 1) add(k, m, false, 0);
    }
  }
  return Template(std::move(strips), c, word.strands());
}

Template parse_template(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int axis = 0;
  struct Raw {
    bool twist = false;
    int mark = 0;
    std::vector<int> next;
  };
  std::vector<Raw> raw;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    auto fail = [&](const std::string& why) {
      throw InputError("template line " + std::to_string(line_no) + ": " + why);
    };
    if (word == "axis") {
      if (!(ls >> axis)) fail("expected axis degree");
      continue;
    }
    if (word != "strip") fail("unknown keyword '" + word + "'");
    int id = 0;
    if (!(ls >> id) || id != static_cast<int>(raw.size())) fail("strip ids must be 0, 1, 2, ...");
    Raw r;
    bool colon = false;
    while (ls >> word) {
      if (word == "twist") r.twist = true;
      else if (word == "mark") r.mark = 1;
      else if (word == ":") { colon = true; break; }
      else fail("unexpected '" + word + "'");
    }
    if (!colon) fail("missing ':'");
    int t = 0;
    while (ls >> t) r.next.push_back(t);
    if (!ls.eof()) fail("malformed successor list");
    raw.push_back(std::move(r));
  }
  // Strips with the same successor set end on the same branch line; each
  // strip starts on the line whose outgoing set contains it.
  std::map<std::vector<int>, int> line_of;
  for (auto& r : raw) {
    std::sort(r.next.begin(), r.next.end());
    line_of.emplace(r.next, static_cast<int>(line_of.size()));
  }
  const int count = static_cast<int>(raw.size());
  std::vector<int> source(raw.size(), -1);
  for (const auto& [succ, l] : line_of)
    for (int t : succ) {
      if (t < 0 || t >= count) throw InputError("successor " + std::to_string(t) + " out of range");
      if (source[static_cast<std::size_t>(t)] != -1 && source[static_cast<std::size_t>(t)] != l)
        throw InputError("strip " + std::to_string(t) + " follows two different branch lines");
      source[static_cast<std::size_t>(t)] = l;
    }
  int lines = static_cast<int>(line_of.size());
  std::vector<Strip> strips;
  for (int k = 0; k < count; ++k) {
    const Raw& r = raw[static_cast<std::size_t>(k)];
    int src = source[static_cast<std::size_t>(k)];
    if (src == -1) src = lines++;  // never entered: give it its own line
    strips.push_back({k, src, line_of.at(r.next), r.twist, r.mark});
  }
  return Template(std::move(strips), lines, axis);
}

namespace {

bool is_min_rotation(const std::vector<int>& c) {
  std::vector<int> r = c;
  for (std::size_t k = 1; k < c.size(); ++k) {
    std::rotate(r.begin(), r.begin() + 1, r.end());
    if (r < c) return false;
  }
  return true;
}

bool is_primitive(const std::vector<int>& c) {
  const std::size_t len = c.size();
  for (std::size_t p = 1; p < len; ++p) {
    if (len % p) continue;
    bool periodic = true;
    for (std::size_t i = p; i < len && periodic; ++i) periodic = c[i] == c[i - p];
    if (periodic) return false;
  }
  return true;
}

// A cycle made only of unmarked strips would give infinitely many orbits of
// bounded degree.
void require_no_free_cycle(const Template& t) {
  const std::size_t s = t.strips().size();
  std::vector<int> state(s, 0);
  std::function<void(int)> visit = [&](int v) {
    state[static_cast<std::size_t>(v)] = 1;
    for (int w : t.successors(v)) {
      if (t.strips()[static_cast<std::size_t>(v)].degree_mark) continue;
      if (state[static_cast<std::size_t>(w)] == 1)
        throw InputError("template has a cycle of degree 0 through strip " + std::to_string(w));
      if (state[static_cast<std::size_t>(w)] == 0) visit(w);
    }
    state[static_cast<std::size_t>(v)] = 2;
  };
  for (std::size_t v = 0; v < s; ++v)
    if (state[v] == 0) visit(static_cast<int>(v));
}

}  // namespace

std::vector<Orbit> enumerate_orbits(const Template& t, int max_degree) {
  if (max_degree < 0) throw InputError("max degree must be nonnegative");
  require_no_free_cycle(t);
  std::vector<Orbit> out;
  const auto& strips = t.strips();
  std::vector<int> path;
  // Cycles are read starting from their smallest strip id, so only strips
  // with ids >= start are visited.
  std::function<void(int, int, int, int)> walk = [&](int start, int v, int degree, int twists) {
    const Strip& s = strips[static_cast<std::size_t>(v)];
    path.push_back(v);
    degree += s.degree_mark;
    twists += s.half_twist;
    if (degree <= max_degree) {
      for (int w : t.successors(v)) {
        if (w < start) continue;
        if (w == start) {
          if (degree >= 1 && is_min_rotation(path) && is_primitive(path))
            out.push_back({path, degree, twists % 2 ? -1 : 1, true});
        }
        walk(start, w, degree, twists);
      }
    }
    path.pop_back();
  };
  for (const auto& s : strips) walk(s.id, s.id, 0, 0);
  std::sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.cycle < b.cycle;
  });
  return out;
}

XSeries zeta_classical(const Template& t, int order) {
  if (order < 0) throw InputError("order must be nonnegative");
  const int ot = 2 * order;
  XSeries zeta = XSeries::one(ot);
  zeta.add_term(2 * t.axis_degree(), -1);
  for (const auto& o : enumerate_orbits(t, order)) {
    XSeries w = XSeries::one(ot);
    long sign = 1;
    for (int k = o.degree; k <= order; k += o.degree) {
      sign *= o.hyperbolic_sign;
      w.add_term(2 * k, sign);
    }
    zeta *= w;
  }
  return zeta;
}

XSeries zeta_determinant(const Template& t, int order) {
  if (order < 0) throw InputError("order must be nonnegative");
  const auto& strips = t.strips();
  XMatrix b(strips.size(), std::vector<XPoly>(strips.size()));
  for (const auto& s : strips)
    for (int w : t.successors(s.id))
      b[static_cast<std::size_t>(s.id)][static_cast<std::size_t>(w)] +=
          x_power(2 * s.degree_mark).scaled(s.half_twist ? -1 : 1);
  const XPoly det = det_one_minus(b);
  XSeries d(2 * order);
  for (const auto& [e, c] : det.terms()) d.add_term(e, QLaurent::constant(c));
  XSeries axis = XSeries::one(2 * order);
  axis.add_term(2 * t.axis_degree(), -1);
  return axis * d.inverse();
}

std::string orbit_table(const std::vector<Orbit>& orbits) {
  std::ostringstream out;
  for (const auto& o : orbits) {
    out << o.degree << ' ' << (o.hyperbolic_sign > 0 ? '+' : '-');
    for (int s : o.cycle) out << ' ' << s;
    out << '\n';
  }
  return out.str();
}

}  // namespace flowloop
