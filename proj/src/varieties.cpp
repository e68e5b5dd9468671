#include "blcob/varieties.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace blcob {

TracePolynomial TracePolynomial::constant(const Int& c) {
  TracePolynomial p;
  if (c != 0) p.terms[{0, 0, 0, 0, 0}] = c;
  return p;
}

TracePolynomial TracePolynomial::variable(int i) {
  if (i < 1 || i > 5) throw std::invalid_argument("variable index out of range");
  TracePolynomial p;
  std::array<int, 5> e{};
  e[static_cast<size_t>(i - 1)] = 1;
  p.terms[e] = 1;
  return p;
}

TracePolynomial TracePolynomial::operator-() const {
  TracePolynomial out;
  for (const auto& [e, c] : terms) out.terms[e] = -c;
  return out;
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& o) {
  for (const auto& [e, c] : o.terms) {
    Int& slot = terms[e];
    slot += c;
    if (slot == 0) terms.erase(e);
  }
  return *this;
}

TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
  TracePolynomial out;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::array<int, 5> e;
      for (size_t i = 0; i < 5; ++i) e[i] = ea[i] + eb[i];
      out.terms[e] += ca * cb;
    }
  for (auto it = out.terms.begin(); it != out.terms.end();)
    it = it->second == 0 ? out.terms.erase(it) : std::next(it);
  return out;
}

Rat TracePolynomial::evaluate(const VarietyPoint21& p) const {
  const std::array<Rat, 5> z{p.z1, p.z2, p.z3, p.z4, p.z5};
  Rat out(0);
  for (const auto& [e, c] : terms) {
    Rat m(c);
    for (size_t i = 0; i < 5; ++i)
      for (int k = 0; k < e[i]; ++k) m *= z[i];
    out += m;
  }
  return out;
}

std::string TracePolynomial::str() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Int a = c;
    if (first) {
      if (a < 0) {
        out << '-';
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    std::string mono;
    for (size_t i = 0; i < 5; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'z';
      mono += static_cast<char>('1' + i);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty())
      out << int_str(a);
    else {
      if (a != 1) out << int_str(a) << '*';
      out << mono;
    }
    first = false;
  }
  return out.str();
}

VarietyPoint11 invariants_11(const Representation& r) {
  if (r.block_dims != std::vector<int>{1, 1})
    throw std::invalid_argument("dimension vector is not (1,1)");
  return VarietyPoint11{r.rho_s(0, 0), r.rho_s(1, 1),
                        r.rho_s(0, 1) * r.rho_s(1, 0)};
}

VarietyPoint21 invariants_21(const Representation& r) {
  if (r.block_dims != std::vector<int>{2, 1})
    throw std::invalid_argument("dimension vector is not (2,1)");
  const RatMatrix& s = r.rho_s;
  Rat z1 = s(0, 0) + s(1, 1);
  Rat z2 = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
  Rat z3 = s(0, 2) * s(2, 0) + s(1, 2) * s(2, 1);
  Rat z4 = s(2, 0) * (s(0, 0) * s(0, 2) + s(0, 1) * s(1, 2)) +
           s(2, 1) * (s(1, 0) * s(0, 2) + s(1, 1) * s(1, 2));
  return VarietyPoint21{z1, z2, z3, z4, s(2, 2)};
}

bool is_simple_11(const VarietyPoint11& p) { return p.x3 != 0; }

bool is_simple_21(const VarietyPoint21& p) {
  return p.z1 * p.z3 * p.z4 - p.z4 * p.z4 - p.z2 * p.z3 * p.z3 != 0;
}

std::optional<std::array<Rat, 3>> selfdual_coords(const VarietyPoint11& p) {
  const Rat half = rat(1, 2);
  if (p.x1 != half || p.x2 != half) return std::nullopt;
  return std::array<Rat, 3>{Rat(0), Rat(0), p.x3};
}

std::optional<std::array<Rat, 5>> selfdual_coords(const VarietyPoint21& p) {
  if (p.z1 != 1 || p.z5 != rat(1, 2) || p.z3 != 2 * p.z4) return std::nullopt;
  return std::array<Rat, 5>{Rat(0), p.z2, p.z4, Rat(0), Rat(0)};
}

namespace {

// letters of a word in the basic vertex-1 cycles: 1 = c1, 2 = c2
using CycleLetters = std::vector<int>;

// traces of the six words on which no rule fires; the last two fold by
// cyclicity of the trace (tr(c1c2c1) = tr(c1^2 c2), tr(c2c1c2) = tr(c2^2 c1))
TracePolynomial residual_trace(const CycleLetters& w) {
  const TracePolynomial z1 = TracePolynomial::variable(1);
  const TracePolynomial z2 = TracePolynomial::variable(2);
  const TracePolynomial z3 = TracePolynomial::variable(3);
  const TracePolynomial z4 = TracePolynomial::variable(4);
  if (w.empty()) return TracePolynomial::constant(2);  // vertex-1 identity
  if (w == CycleLetters{1}) return z1;
  if (w == CycleLetters{2}) return z3;
  if (w == CycleLetters{1, 2} || w == CycleLetters{2, 1}) return z4;
  if (w == CycleLetters{1, 2, 1}) return z1 * z4 - z2 * z3;
  if (w == CycleLetters{2, 1, 2}) return z3 * z4;
  throw std::logic_error("irreducible word is not a residual");
}

}  // namespace

TracePolynomial reduce_cycle_trace_21(const PathWord& w) {
  if (!w.well_formed(2))
    throw std::invalid_argument("word is not composable in the two-vertex quiver");
  if (w.arrows.empty())
    return TracePolynomial::constant(w.trivial_component == 0 ? 2 : 1);
  if (!w.is_cycle()) throw std::invalid_argument("word is not an oriented cycle");

  const TracePolynomial z1 = TracePolynomial::variable(1);
  const TracePolynomial z2 = TracePolynomial::variable(2);
  const TracePolynomial z3 = TracePolynomial::variable(3);
  const TracePolynomial z4 = TracePolynomial::variable(4);
  const TracePolynomial z5 = TracePolynomial::variable(5);

  // rotate the cycle to base it at vertex 1; a cycle that never touches
  // vertex 1 is a power of the scalar vertex-2 loop
  std::vector<std::pair<int, int>> arrows = w.arrows;
  size_t start = arrows.size();
  for (size_t k = 0; k < arrows.size(); ++k)
    if (arrows[k].first == 0) {
      start = k;
      break;
    }
  if (start == arrows.size()) {
    TracePolynomial out = TracePolynomial::constant(1);
    for (size_t k = 0; k < arrows.size(); ++k) out = out * z5;
    return out;
  }
  std::rotate(arrows.begin(), arrows.begin() + static_cast<ptrdiff_t>(start),
              arrows.end());

  // the vertex-2 loop is a scalar, so each occurrence commutes out as z5
  TracePolynomial scale = TracePolynomial::constant(1);
  std::vector<std::pair<int, int>> core;
  for (const auto& a : arrows) {
    if (a == std::pair<int, int>{1, 1})
      scale = scale * z5;
    else
      core.push_back(a);
  }

  // parse the rest into letters: a loop at vertex 1 is c1, a round trip
  // through vertex 2 is c2
  CycleLetters word;
  for (size_t k = 0; k < core.size();) {
    if (core[k].first != 0) throw std::logic_error("cycle parse lost the base vertex");
    if (core[k].second == 0) {
      word.push_back(1);
      k += 1;
    } else {
      word.push_back(2);
      k += 2;
    }
  }

  // Ordered rewriting: replace the leftmost occurrence of c1c1, c2c2 or
  // c1c2c1c2 by the rule's right-hand side. Every rule output is strictly
  // shorter than its input, so the multiset of pending word lengths
  // decreases and the loop terminates; the rules are matrix identities, so
  // any application order gives the same trace, and leftmost-first makes the
  // run deterministic.
  std::map<CycleLetters, TracePolynomial> pending;
  pending[word] = scale;
  TracePolynomial result;
  auto emit = [&pending](CycleLetters v, const TracePolynomial& c) {
    pending[std::move(v)] += c;
  };
  while (!pending.empty()) {
    auto it = pending.begin();
    CycleLetters v = it->first;
    TracePolynomial c = std::move(it->second);
    pending.erase(it);
    if (c.terms.empty()) continue;

    size_t n = v.size(), pos = n;
    int rule = 0;
    for (size_t k = 0; k < n && rule == 0; ++k) {
      if (k + 1 < n && v[k] == 1 && v[k + 1] == 1) {
        pos = k;
        rule = 1;
      } else if (k + 1 < n && v[k] == 2 && v[k + 1] == 2) {
        pos = k;
        rule = 2;
      } else if (k + 3 < n && v[k] == 1 && v[k + 1] == 2 && v[k + 2] == 1 &&
                 v[k + 3] == 2) {
        pos = k;
        rule = 3;
      }
    }
    const auto cut = [pos](const CycleLetters& from, size_t count) {
      CycleLetters out(from);
      out.erase(out.begin() + static_cast<ptrdiff_t>(pos),
                out.begin() + static_cast<ptrdiff_t>(pos + count));
      return out;
    };
    switch (rule) {
      case 0:
        result += c * residual_trace(v);
        break;
      case 1:  // c1 c1 -> z1 c1 - z2
        emit(cut(v, 1), c * z1);
        emit(cut(v, 2), c * -z2);
        break;
      case 2:  // c2 c2 -> z3 c2
        emit(cut(v, 1), c * z3);
        break;
      default:  // c1 c2 c1 c2 -> z4 c1 c2
        emit(cut(v, 2), c * z4);
        break;
    }
  }
  return result;
}

bool is_integral_point(const VarietyPoint11& p) {
  return is_integer(p.x1) && is_integer(p.x2) && is_integer(p.x3);
}

bool is_integral_point(const VarietyPoint21& p) {
  return is_integer(p.z1) && is_integer(p.z2) && is_integer(p.z3) &&
         is_integer(p.z4) && is_integer(p.z5);
}

}  // namespace blcob
