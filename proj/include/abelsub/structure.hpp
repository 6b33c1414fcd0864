#pragma once

// Word graphs, width, Rauzy graphs, special factors, factor complexity,
// factorization of a shift over a standard pair, and return words.

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "abelsub/abelian.hpp"
#include "abelsub/sturmian.hpp"

namespace abelsub {

/// g(i) = |a_1 ... a_i|_1 for i = 0..N.
struct WordGraph {
  std::vector<long long> g;

  std::size_t size() const { return g.size() - 1; }
  long long operator()(std::size_t i) const { return g[i]; }

  /// Lines "i<TAB>g(i)".
  std::string to_tsv() const {
    std::ostringstream out;
    out << "i\tg\n";
    for (std::size_t i = 0; i < g.size(); ++i) out << i << '\t' << g[i] << '\n';
    return out.str();
  }
};

inline WordGraph word_graph(std::string_view window) {
  WordGraph wg;
  wg.g.resize(window.size() + 1, 0);
  for (std::size_t i = 0; i < window.size(); ++i) wg.g[i + 1] = wg.g[i] + (window[i] == '1');
  return wg;
}
inline WordGraph word_graph(const InfiniteWordSpec& w, std::size_t N) { return word_graph(w.prefix(N).view()); }

/// max - min of g(i) - alpha i over 0 <= i <= |v|, exact.
inline Quadratic width(const FiniteWord& v, const Quadratic& alpha) {
  const WordGraph wg = word_graph(v.view());
  Quadratic lo(0), hi(0);
  for (std::size_t i = 1; i <= v.size(); ++i) {
    const Quadratic d = Quadratic(wg(i)) - alpha * Quadratic(static_cast<long long>(i));
    if (d < lo) lo = d;
    if (d > hi) hi = d;
  }
  return hi - lo;
}

/// Number of strict sign changes of g(i) - alpha i along 1 <= i <= |v| (zeros skipped).
inline std::size_t graph_sign_changes(const FiniteWord& v, const Quadratic& alpha) {
  std::size_t changes = 0;
  int last = 0;
  long long g = 0;
  for (std::size_t i = 1; i <= v.size(); ++i) {
    g += v.bit(i - 1);
    const int s = (Quadratic(g) - alpha * Quadratic(static_cast<long long>(i))).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

struct RauzyEdge {
  std::size_t from;
  std::size_t to;
  /// The length-(n+1) factor ua = bv realizing the edge.
  FiniteWord factor;
};

struct RauzyGraph {
  std::size_t order = 0;
  std::vector<FiniteWord> vertices;  // sorted
  std::vector<RauzyEdge> edges;      // sorted by factor

  std::size_t index_of(const FiniteWord& v) const {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  }
  std::size_t out_degree(std::size_t v) const {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [v](const RauzyEdge& e) { return e.from == v; }));
  }
  std::size_t in_degree(std::size_t v) const {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [v](const RauzyEdge& e) { return e.to == v; }));
  }

  std::string to_dot() const {
    std::ostringstream out;
    out << "digraph rauzy_" << order << " {\n";
    for (std::size_t i = 0; i < vertices.size(); ++i) out << "  v" << i << " [label=\"" << vertices[i].str() << "\"];\n";
    for (const auto& e : edges) {
      out << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.factor[e.factor.size() - 1] << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }
};

/// Rauzy graph of order n of the window: vertices L_n, one edge per factor of length n + 1.
inline RauzyGraph rauzy_graph(std::string_view window, std::size_t n) {
  RauzyGraph rg;
  rg.order = n;
  const auto vs = factors(FiniteWord(std::string(window)), n);
  rg.vertices.assign(vs.begin(), vs.end());
  for (const auto& f : factors(FiniteWord(std::string(window)), n + 1))
    rg.edges.push_back({rg.index_of(f.prefix(n)), rg.index_of(f.suffix(n)), f});
  return rg;
}

inline RauzyGraph rauzy_graph(const InfiniteWordSpec& w, std::size_t n, std::size_t M) {
  if (M < 2 * n) throw ConfigError("sample length must be at least twice the order");
  return rauzy_graph(w.prefix(M).view(), n);
}

struct SpecialFactors {
  std::vector<FiniteWord> left;       // 0u and 1u both occur
  std::vector<FiniteWord> right;      // u0 and u1 both occur
  std::vector<FiniteWord> bispecial;  // both
};

inline SpecialFactors special_factors(std::string_view window, std::size_t n) {
  SpecialFactors sf;
  const auto ext = factor_views(window, n + 1);
  for (const auto& u : factors(FiniteWord(std::string(window)), n)) {
    const bool left = ext.count("0" + u.str()) && ext.count("1" + u.str());
    const bool right = ext.count(u.str() + "0") && ext.count(u.str() + "1");
    if (left) sf.left.push_back(u);
    if (right) sf.right.push_back(u);
    if (left && right) sf.bispecial.push_back(u);
  }
  return sf;
}

inline SpecialFactors special_factors(const InfiniteWordSpec& w, std::size_t n, std::size_t M) {
  if (M < 2 * n) throw ConfigError("sample length must be at least twice the factor length");
  return special_factors(w.prefix(M).view(), n);
}

/// rho(n) = #L_n of the window.
inline std::size_t factor_complexity(std::string_view window, std::size_t n) { return factor_views(window, n).size(); }

inline std::size_t factor_complexity(const InfiniteWordSpec& w, std::size_t n, std::size_t M) {
  if (M < 2 * n) throw ConfigError("sample length must be at least twice the factor length");
  return factor_complexity(w.prefix(M).view(), n);
}

struct WindowPeriodicity {
  /// rho(n) = rho(n+1) for some n < N.
  bool periodic = false;
  std::size_t stall_length = 0;
  /// From the first repeated factor of length stall_length: preperiod and period.
  std::size_t preperiod = 0;
  std::size_t period = 0;
  /// The window from `preperiod` on has period `period`.
  bool extends_periodically = false;
};

/// Morse-Hedlund on a window: a complexity stall rho(n) = rho(n+1) means each
/// length-n factor has one right extension, so the window is eventually
/// periodic from the first repetition of a length-n factor.
inline WindowPeriodicity is_window_periodic(std::string_view window, std::size_t N) {
  WindowPeriodicity res;
  for (std::size_t n = 1; n < N && n + 1 <= window.size(); ++n) {
    if (factor_complexity(window, n) != factor_complexity(window, n + 1)) continue;
    res.periodic = true;
    res.stall_length = n;
    std::map<std::string_view, std::size_t> first;
    for (std::size_t i = 0; i + n <= window.size(); ++i) {
      auto [it, fresh] = first.emplace(window.substr(i, n), i);
      if (!fresh) {
        res.preperiod = it->second;
        res.period = i - it->second;
        res.extends_periodically = has_period(window.substr(res.preperiod), res.period);
        break;
      }
    }
    return res;
  }
  return res;
}

inline WindowPeriodicity is_window_periodic(const InfiniteWordSpec& w, std::size_t N, std::size_t M) {
  if (M < 2 * N) throw ConfigError("sample length must be at least twice the window");
  return is_window_periodic(w.prefix(M).view(), N);
}

/// Tokenization of a word over {x, y}. Token letters: '0' for x, '1' for y.
struct Tokenization {
  std::string tokens;
  /// Letters covered by whole tokens; a proper prefix of a token may follow.
  std::size_t covered = 0;
  /// Letters after the whole tokens (a proper prefix of x or y).
  std::size_t tail = 0;
  bool complete = false;
  /// First position no factorization reaches, when incomplete.
  std::size_t failure_position = 0;
};

/// Factorization of u as a product of x and y followed by a proper prefix of
/// one of them. Feasibility is computed from the end, and the longer component
/// is tried first at each position.
inline Tokenization tokenize(std::string_view u, const FiniteWord& x, const FiniteWord& y) {
  const std::size_t n = u.size();
  if (x.empty() || y.empty()) throw DomainError("tokenization over an empty word");
  auto partial_tail = [&](std::size_t i) {
    const std::string_view rest = u.substr(i);
    return (rest.size() < x.size() && x.view().starts_with(rest)) || (rest.size() < y.size() && y.view().starts_with(rest));
  };
  // ok[i]: u[i..] is a product followed by a proper prefix of x or y.
  std::vector<char> ok(n + 1, 0);
  for (std::size_t i = n + 1; i-- > 0;) {
    if (partial_tail(i)) {
      ok[i] = 1;
      continue;
    }
    for (const FiniteWord* t : {&x, &y})
      if (i + t->size() <= n && ok[i + t->size()] && u.substr(i, t->size()) == t->view()) ok[i] = 1;
  }
  Tokenization tk;
  if (!ok[0]) {
    // Report the furthest position reachable by whole tokens.
    std::vector<char> reach(n + 1, 0);
    reach[0] = 1;
    std::size_t far = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (!reach[i]) continue;
      far = i;
      for (const FiniteWord* t : {&x, &y})
        if (i + t->size() <= n && u.substr(i, t->size()) == t->view()) reach[i + t->size()] = 1;
    }
    tk.failure_position = far;
    return tk;
  }
  const FiniteWord& longer = x.size() >= y.size() ? x : y;
  const FiniteWord& shorter = x.size() >= y.size() ? y : x;
  const char longer_letter = &longer == &x ? '0' : '1';
  const char shorter_letter = &longer == &x ? '1' : '0';
  std::size_t i = 0;
  for (;;) {
    if (i + longer.size() <= n && ok[i + longer.size()] && u.substr(i, longer.size()) == longer.view()) {
      tk.tokens += longer_letter;
      i += longer.size();
    } else if (i + shorter.size() <= n && ok[i + shorter.size()] && u.substr(i, shorter.size()) == shorter.view()) {
      tk.tokens += shorter_letter;
      i += shorter.size();
    } else {
      break;  // the remainder is a proper prefix of a token
    }
  }
  tk.covered = i;
  tk.tail = n - i;
  tk.complete = true;
  return tk;
}

struct ShiftFactorization {
  StandardPair pair;
  /// Middle w' of the shortest unbalanced pair 0w'0 / 1w'1.
  FiniteWord middle;
  std::size_t unbalanced_length = 0;
  std::size_t shift_offset = 0;
  Tokenization tokenization;
  bool has_xx = false;
  bool has_yy = false;
  /// Concatenated tokens equal the shifted window up to the truncated tail.
  bool roundtrip = false;
};

/// Failure of a factorization hypothesis on a window.
class FactorizationError : public DomainError {
 public:
  FactorizationError(const std::string& what, std::string hypothesis_name, std::size_t pos = 0)
      : DomainError(what), hypothesis(std::move(hypothesis_name)), position(pos) {}
  std::string hypothesis;
  std::size_t position;
};

/// Shifts the window to an occurrence of w' (w'1 for 0^n, w'0 for 1^n with
/// n >= 1) and factors it over the standard pair (x, y) with w'01 = xy.
/// `max_pair` bounds the unbalanced-pair search (default: half the window).
inline ShiftFactorization factorize_over_standard_pair(std::string_view window, std::size_t max_pair = 0) {
  if (max_pair == 0) max_pair = window.size() / 2;
  const auto up = shortest_unbalanced_pair(window, max_pair);
  if (!up) throw FactorizationError("window has no unbalanced pair up to length " + std::to_string(max_pair), "unbalanced");
  ShiftFactorization sf;
  sf.middle = up->middle;
  sf.unbalanced_length = up->length;
  if (!is_central(sf.middle))
    throw FactorizationError("middle of the shortest unbalanced pair '" + sf.middle.str() + "' is not central", "central");
  sf.pair = standard_pair_factorization(sf.middle);
  FiniteWord start = sf.middle;
  if (is_letter_power(sf.middle.view())) start += (sf.middle.empty() || sf.middle[0] == '0') ? '1' : '0';
  const std::size_t at = window.find(start.view());
  if (at == std::string_view::npos)
    throw FactorizationError("no occurrence of '" + start.str() + "' in the window", "shift", window.size());
  sf.shift_offset = at;
  const std::string_view shifted = window.substr(at);
  sf.tokenization = tokenize(shifted, sf.pair.x, sf.pair.y);
  if (!sf.tokenization.complete)
    throw FactorizationError("window does not factor over (" + sf.pair.x.str() + ", " + sf.pair.y.str() + ") past position " +
                                 std::to_string(at + sf.tokenization.failure_position),
                             "tokenization", at + sf.tokenization.failure_position);
  const std::string& t = sf.tokenization.tokens;
  sf.has_xx = t.find("00") != std::string::npos;
  sf.has_yy = t.find("11") != std::string::npos;
  std::string rebuilt;
  rebuilt.reserve(sf.tokenization.covered);
  for (char c : t) rebuilt += (c == '0' ? sf.pair.x : sf.pair.y).str();
  sf.roundtrip = rebuilt == shifted.substr(0, sf.tokenization.covered);
  return sf;
}

inline ShiftFactorization factorize_over_standard_pair(const InfiniteWordSpec& w, std::size_t M) {
  const FiniteWord p = w.prefix(M);
  return factorize_over_standard_pair(p.view());
}

/// First return words of u in the window (segments from one occurrence to the next).
inline std::set<FiniteWord> return_words(std::string_view window, const FiniteWord& u) {
  const auto occ = occurrences(window, u.view());
  if (occ.size() < 2)
    throw DomainError("'" + u.str() + "' occurs " + std::to_string(occ.size()) + " time(s) in the window; returns need two");
  std::set<FiniteWord> out;
  for (std::size_t i = 0; i + 1 < occ.size(); ++i)
    out.insert(FiniteWord(std::string(window.substr(occ[i], occ[i + 1] - occ[i]))));
  return out;
}

inline std::set<FiniteWord> return_words(const InfiniteWordSpec& w, const FiniteWord& u, std::size_t M) {
  const FiniteWord p = w.prefix(M);
  return return_words(p.view(), u);
}

struct LineCrossing {
  FiniteWord word;
  std::size_t sign_changes = 0;
  /// |u_1| < |u_2| < ... of the nested construction.
  std::vector<std::size_t> stage_lengths;
};

/// Finite-depth run of the alternating return-word construction: u_1 is the
/// first letter; u_{i+1} is a return to u_i in the window (a second, third, ...
/// return when needed so that it is longer than u_i) whose 1-frequency lies on
/// the opposite side of alpha from u_i. Stops once g(i) - alpha i changes sign
/// `crossings` times along the word.
inline LineCrossing line_crossing_prefix(std::string_view window, const Quadratic& alpha, std::size_t crossings) {
  if (window.empty()) throw BoundaryError("empty window");
  LineCrossing lc;
  FiniteWord u(std::string(window.substr(0, 1)));
  lc.stage_lengths.push_back(u.size());
  auto side = [&](const FiniteWord& v) {
    return (Quadratic(static_cast<long long>(v.weight())) - alpha * Quadratic(static_cast<long long>(v.size()))).sign();
  };
  while (graph_sign_changes(u, alpha) < crossings) {
    const int want = side(u) > 0 ? -1 : 1;  // opposite side of the line
    const auto occ = occurrences(window, u.view());
    std::optional<FiniteWord> next;
    for (std::size_t i = 0; i + 1 < occ.size() && !next; ++i) {
      // Smallest j with the i-th to j-th return longer than u.
      std::size_t j = i + 1;
      while (j < occ.size() && occ[j] - occ[i] <= u.size()) ++j;
      if (j >= occ.size()) break;
      FiniteWord r(std::string(window.substr(occ[i], occ[j] - occ[i])));
      if (side(r) == want) next = std::move(r);
    }
    if (!next)
      throw BoundaryError("window too short: no return to a factor of length " + std::to_string(u.size()) +
                          " on the required side of the line");
    u = std::move(*next);
    lc.stage_lengths.push_back(u.size());
  }
  lc.word = u;
  lc.sign_changes = graph_sign_changes(u, alpha);
  return lc;
}

inline LineCrossing line_crossing_prefix(const InfiniteWordSpec& w, const Quadratic& alpha, std::size_t crossings,
                                         std::size_t M) {
  const FiniteWord p = w.prefix(M);
  return line_crossing_prefix(p.view(), alpha, crossings);
}

}  // namespace abelsub
