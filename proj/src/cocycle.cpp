#include "rfa/cocycle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "rfa/intlin.hpp"

namespace rfa {

namespace {

int md(std::int64_t a, std::int64_t q) {
  a %= q;
  return static_cast<int>(a < 0 ? a + q : a);
}

// multiplication table of N in positions
struct NTable {
  const FinGroup* G;
  std::vector<int> pos;
  int n;
  std::vector<int> mul;  // n x n
  std::vector<int> inv;

  explicit NTable(const Subgroup& N) : G(N.group.get()), pos(positions(N)), n(N.order()) {
    mul.resize(static_cast<std::size_t>(n) * n);
    inv.resize(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) mul[static_cast<std::size_t>(i) * n + j] = pos[G->mul(N.elements[i], N.elements[j])];
      inv[i] = pos[G->inv(N.elements[i])];
    }
  }
  int m(int i, int j) const { return mul[static_cast<std::size_t>(i) * n + j]; }
};

std::string tuple_str(const Subgroup& S, std::initializer_list<int> idx) {
  std::string s = "(";
  bool first = true;
  for (int i : idx) {
    if (!first) s += ",";
    first = false;
    s += S.group->label(i);
  }
  return s + ")";
}

// All homomorphisms N -> Z/q, as values on positions of N.
std::vector<std::vector<int>> homs_to_cyclic(const Subgroup& N, int q) {
  NTable T(N);
  std::vector<int> gens;
  for (int g : N.generators()) gens.push_back(T.pos[g]);
  std::vector<std::vector<int>> out;
  std::vector<int> vals(gens.size(), 0);
  while (true) {
    std::vector<int> h(T.n, -1);
    h[0] = 0;
    std::deque<int> queue{0};
    bool ok = true;
    while (!queue.empty() && ok) {
      int x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        int y = T.m(x, gens[k]);
        int v = md(h[x] + vals[k], q);
        if (h[y] < 0) {
          h[y] = v;
          queue.push_back(y);
        } else if (h[y] != v) {
          ok = false;
        }
      }
    }
    if (ok) out.push_back(std::move(h));
    std::size_t k = 0;
    while (k < vals.size() && ++vals[k] == q) vals[k++] = 0;
    if (k == vals.size()) break;
  }
  return out;
}

// Reduction of normalized cocycle tables modulo coboundaries of the
// algebraically closed field, in exponent coordinates gamma(i,j), i,j >= 1.
class ClassReducer {
 public:
  ClassReducer(const Subgroup& N, int order)
      : N_(N), T_(N), o_(order), k_(static_cast<std::size_t>(T_.n - 1) * (T_.n - 1)), span_(order, k_) {
    const int n = T_.n;
    // coboundaries of mu_order valued b
    for (int u = 1; u < n; ++u) {
      IntVec v(k_, 0);
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
          int c = (i == u) + (j == u) - (T_.m(i, j) == u);
          v[var(i, j)] = c;
        }
      span_.insert(std::move(v));
    }
    // carry cocycles: (phi(n) + phi(m) - phi(nm)) / e for phi: N -> Z/e, which
    // account for b valued in mu_{order * e}
    int e = N.group->order() > 0 ? exponent_of(N) : 1;
    for (const auto& phi : homs_to_cyclic(N, e)) {
      IntVec v(k_, 0);
      bool nz = false;
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
          int c = (phi[i] + phi[j] - phi[T_.m(i, j)]) / e;
          v[var(i, j)] = c;
          nz = nz || c != 0;
        }
      if (nz) span_.insert(std::move(v));
    }
    span_.finalize();
  }

  std::size_t var(int i, int j) const { return static_cast<std::size_t>(i - 1) * (T_.n - 1) + (j - 1); }
  std::size_t width() const { return k_; }

  IntVec to_vec(const TwoCocycle& g) const {
    IntVec v(k_, 0);
    for (int i = 1; i < T_.n; ++i)
      for (int j = 1; j < T_.n; ++j) v[var(i, j)] = g.at(i, j);
    return v;
  }
  TwoCocycle from_vec(const IntVec& v) const {
    TwoCocycle g = trivial_cocycle(N_, o_);
    for (int i = 1; i < T_.n; ++i)
      for (int j = 1; j < T_.n; ++j) g.at(i, j) = static_cast<int>(v[var(i, j)]);
    return g;
  }
  IntVec reduce(const IntVec& v) const { return span_.reduce(v); }

  static int exponent_of(const Subgroup& N) {
    int e = 1;
    for (int x : N.elements) e = std::lcm(e, N.group->element_order(x));
    return e;
  }

 private:
  Subgroup N_;
  NTable T_;
  int o_;
  std::size_t k_;
  HowellSpan span_;
};

}  // namespace

std::vector<int> positions(const Subgroup& S) {
  std::vector<int> pos(S.group->order(), -1);
  for (int i = 0; i < S.order(); ++i) pos[S.elements[i]] = i;
  return pos;
}

Scalar TwoCocycle::value(const FieldSpec& f, int i, int j) const { return root_of_unity(f, order).pow(at(i, j)); }

Scalar EpsilonSystem::value(const FieldSpec& f, int hi, int ni) const {
  return root_of_unity(f, order).pow(at(hi, ni));
}

TwoCocycle trivial_cocycle(const Subgroup& N, int order) {
  if (order < 1) throw Error(ErrorKind::InvalidData, "value order must be positive");
  TwoCocycle g{N, order, std::vector<int>(static_cast<std::size_t>(N.order()) * N.order(), 0)};
  return g;
}

EpsilonSystem trivial_epsilon(const Subgroup& H, const Subgroup& N, int order) {
  if (order < 1) throw Error(ErrorKind::InvalidData, "value order must be positive");
  return EpsilonSystem{H, N, order, std::vector<int>(static_cast<std::size_t>(H.order()) * N.order(), 0)};
}

int effective_value_order(const FieldSpec& f, int requested) {
  if (requested < 1) throw Error(ErrorKind::InvalidData, "value order must be positive");
  return static_cast<int>(std::gcd(static_cast<std::int64_t>(requested), f.root_capacity()));
}

Report check_cocycle(const TwoCocycle& g) {
  Report r;
  const int n = g.size();
  if (g.exps.size() != static_cast<std::size_t>(n) * n) {
    r.fail("table shape", std::to_string(g.exps.size()) + " entries");
    return r;
  }
  NTable T(g.N);
  const int o = g.order;
  std::size_t before = r.count;
  for (int i = 0; i < n; ++i)
    if (md(g.at(i, 0), o) != 0 || md(g.at(0, i), o) != 0)
      r.fail("cocycle normalization", tuple_str(g.N, {g.N.elements[i]}));
  r.close("cocycle normalization", before);
  before = r.count;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int lhs = g.at(i, j) + g.at(T.m(i, j), k);
        int rhs = g.at(i, T.m(j, k)) + g.at(j, k);
        if (md(lhs - rhs, o) != 0)
          r.fail("cocycle identity", tuple_str(g.N, {g.N.elements[i], g.N.elements[j], g.N.elements[k]}));
      }
  r.close("cocycle identity", before);
  return r;
}

Report check_epsilon(const TwoCocycle& g, const EpsilonSystem& e) {
  Report r;
  const Subgroup& H = e.H;
  const Subgroup& N = e.N;
  const FinGroup& G = *H.group;
  const int hn = H.order(), nn = N.order();
  if (!(N == g.N) || e.order != g.order || e.exps.size() != static_cast<std::size_t>(hn) * nn) {
    r.fail("epsilon shape", "tables do not match the cocycle");
    return r;
  }
  auto posH = positions(H);
  auto posN = positions(N);
  for (int x : N.elements)
    for (int h : H.elements)
      if (posN[G.conj(h, x)] < 0) {
        r.fail("N normal in H", tuple_str(H, {h, x}));
        return r;
      }
  const int o = e.order;
  NTable T(N);
  auto cn = [&](int h, int ni) { return posN[G.conj(h, N.elements[ni])]; };

  std::size_t before = r.count;
  for (int ni = 0; ni < nn; ++ni)
    if (md(e.at(0, ni), o) != 0) r.fail("epsilon normalization", tuple_str(H, {0, N.elements[ni]}));
  for (int hi = 0; hi < hn; ++hi)
    if (md(e.at(hi, 0), o) != 0) r.fail("epsilon normalization", tuple_str(H, {H.elements[hi], 0}));
  r.close("epsilon normalization", before);

  before = r.count;
  for (int gi = 0; gi < hn; ++gi)
    for (int hi = 0; hi < hn; ++hi) {
      int gh = posH[G.mul(H.elements[gi], H.elements[hi])];
      for (int ni = 0; ni < nn; ++ni) {
        int lhs = e.at(gh, ni);
        int rhs = e.at(gi, cn(H.elements[hi], ni)) + e.at(hi, ni);
        if (md(lhs - rhs, o) != 0)
          r.fail("epsilon product rule", tuple_str(H, {H.elements[gi], H.elements[hi], N.elements[ni]}));
      }
    }
  r.close("epsilon product rule", before);

  before = r.count;
  for (int hi = 0; hi < hn; ++hi) {
    int h = H.elements[hi];
    for (int ni = 0; ni < nn; ++ni)
      for (int mi = 0; mi < nn; ++mi) {
        int lhs = e.at(hi, T.m(ni, mi)) + g.at(ni, mi);
        int rhs = e.at(hi, ni) + e.at(hi, mi) + g.at(cn(h, ni), cn(h, mi));
        if (md(lhs - rhs, o) != 0)
          r.fail("epsilon-cocycle compatibility", tuple_str(H, {h, N.elements[ni], N.elements[mi]}));
      }
  }
  r.close("epsilon-cocycle compatibility", before);

  before = r.count;
  for (int ni = 0; ni < nn; ++ni) {
    int n = N.elements[ni];
    for (int mi = 0; mi < nn; ++mi) {
      int lhs = g.at(ni, mi);
      int rhs = e.at(posH[n], mi) + g.at(cn(n, mi), ni);
      if (md(lhs - rhs, o) != 0) r.fail("epsilon-cocycle symmetry on N", tuple_str(H, {n, N.elements[mi]}));
    }
  }
  r.close("epsilon-cocycle symmetry on N", before);
  return r;
}

TwoCocycle coboundary(const Subgroup& N, const std::vector<int>& b, int order) {
  if (b.size() != static_cast<std::size_t>(N.order())) throw Error(ErrorKind::ShapeMismatch, "coboundary input");
  if (md(b[0], order) != 0) throw Error(ErrorKind::InvalidData, "coboundary needs b(1) = 1");
  NTable T(N);
  TwoCocycle g = trivial_cocycle(N, order);
  for (int i = 0; i < T.n; ++i)
    for (int j = 0; j < T.n; ++j) g.at(i, j) = md(b[i] + b[j] - b[T.m(i, j)], order);
  return g;
}

std::optional<std::vector<int>> cohomologous(const TwoCocycle& g1, const TwoCocycle& g2, int value_order) {
  if (!(g1.N == g2.N) || g1.order != g2.order) throw Error(ErrorKind::InvalidData, "cocycles live on different data");
  if (value_order < 1) throw Error(ErrorKind::InvalidData, "value order must be positive");
  const int o = g1.order;
  const std::int64_t L = std::lcm(static_cast<std::int64_t>(o), static_cast<std::int64_t>(value_order));
  NTable T(g1.N);
  const int n = T.n;
  if (n == 1) return std::vector<int>{0};
  std::vector<IntVec> M;
  IntVec rhs;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      IntVec row(n - 1, 0);
      for (int u = 1; u < n; ++u)
        row[u - 1] = (L / value_order) * ((i == u) + (j == u) - (T.m(i, j) == u));
      M.push_back(std::move(row));
      rhs.push_back((L / o) * (g1.at(i, j) - g2.at(i, j)));
    }
  for (int i = 0; i < n; ++i)
    if (md(g1.at(i, 0) - g2.at(i, 0), o) != 0 || md(g1.at(0, i) - g2.at(0, i), o) != 0) return std::nullopt;
  auto x = solve_mod(M, static_cast<std::size_t>(n - 1), rhs, L);
  if (!x) return std::nullopt;
  std::vector<int> b(n, 0);
  for (int u = 1; u < n; ++u) b[u] = md((*x)[u - 1], value_order);
  return b;
}

CocycleEnumeration enumerate_cocycles(const Subgroup& N, int order, int max_size) {
  if (N.order() > max_size)
    throw Error(ErrorKind::SizeBound,
                "cocycle enumeration limited to |N| <= " + std::to_string(max_size) + ", got " + std::to_string(N.order()));
  if (order < 1) throw Error(ErrorKind::InvalidData, "value order must be positive");
  CocycleEnumeration out;
  out.value_order = order;
  NTable T(N);
  const int n = T.n;
  if (n == 1) {
    out.classes.push_back(trivial_cocycle(N, order));
    return out;
  }
  ClassReducer red(N, order);
  const std::size_t k = red.width();

  // cocycle identity at (i, j, s) for generators s suffices
  std::vector<int> gens;
  for (int g : N.generators()) gens.push_back(T.pos[g]);
  std::vector<IntVec> eqs;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      for (int s : gens) {
        IntVec row(k, 0);
        auto add = [&](int a, int b, int c) {
          if (a != 0 && b != 0) row[red.var(a, b)] += c;
        };
        add(i, j, 1);
        add(T.m(i, j), s, 1);
        add(i, T.m(j, s), -1);
        add(j, s, -1);
        bool nz = std::any_of(row.begin(), row.end(), [&](std::int64_t x) { return md(x, order) != 0; });
        if (nz) eqs.push_back(std::move(row));
      }
  std::vector<IntVec> z2;
  if (eqs.empty()) {
    for (std::size_t c = 0; c < k; ++c) {
      IntVec v(k, 0);
      v[c] = 1;
      z2.push_back(std::move(v));
    }
  } else {
    z2 = kernel_mod(eqs, k, order);
  }
  out.cocycle_generators = z2.size();

  std::set<IntVec> gens_red;
  for (const auto& z : z2) {
    IntVec r = red.reduce(z);
    if (std::any_of(r.begin(), r.end(), [](std::int64_t x) { return x != 0; })) gens_red.insert(r);
  }
  std::set<IntVec> classes{IntVec(k, 0)};
  std::deque<IntVec> queue{IntVec(k, 0)};
  while (!queue.empty()) {
    IntVec c = queue.front();
    queue.pop_front();
    for (const auto& g : gens_red) {
      IntVec s(k);
      for (std::size_t t = 0; t < k; ++t) s[t] = md(c[t] + g[t], order);
      IntVec r = red.reduce(s);
      if (classes.insert(r).second) queue.push_back(r);
    }
  }
  for (const auto& c : classes) out.classes.push_back(red.from_vec(c));
  return out;
}

TwoCocycle canonical_cocycle(const TwoCocycle& g) {
  if (g.size() == 1) return g;
  ClassReducer red(g.N, g.order);
  TwoCocycle c = red.from_vec(red.reduce(red.to_vec(g)));
  return c;
}

std::vector<int> epsilon_on_N(const TwoCocycle& g) {
  NTable T(g.N);
  const FinGroup& G = *g.N.group;
  std::vector<int> e(static_cast<std::size_t>(T.n) * T.n, 0);
  for (int i = 0; i < T.n; ++i)
    for (int j = 0; j < T.n; ++j) {
      int c = T.pos[G.conj(g.N.elements[i], g.N.elements[j])];
      e[static_cast<std::size_t>(i) * T.n + j] = md(g.at(i, j) - g.at(c, i), g.order);
    }
  return e;
}

EpsilonSystem canonical_epsilon(const EpsilonSystem& e) {
  const FinGroup& G = *e.H.group;
  auto posN = positions(e.N);
  const int hn = e.H.order(), nn = e.N.order();
  EpsilonSystem best = e;
  for (const auto& chi : homs_to_cyclic(e.N, e.order)) {
    EpsilonSystem c = e;
    for (int hi = 0; hi < hn; ++hi)
      for (int ni = 0; ni < nn; ++ni) {
        int cn = posN[G.conj(e.H.elements[hi], e.N.elements[ni])];
        c.at(hi, ni) = md(e.at(hi, ni) + chi[cn] - chi[ni], e.order);
      }
    if (c.exps < best.exps) best = std::move(c);
  }
  return best;
}

EpsilonEnumeration enumerate_epsilons(const Subgroup& H, const Subgroup& N, const TwoCocycle& g) {
  if (!is_normal_in(N, H)) throw Error(ErrorKind::InvalidData, "N not normal in H");
  if (!(g.N == N)) throw Error(ErrorKind::InvalidData, "cocycle lives on a different N");
  const FinGroup& G = *H.group;
  const int o = g.order;
  const int hn = H.order(), nn = N.order();
  auto posH = positions(H);
  auto posN = positions(N);
  NTable T(N);
  EpsilonEnumeration out;

  std::vector<int> forced = epsilon_on_N(g);
  std::vector<int> ngens = N.generators();

  // generating transversal of H/N
  std::vector<int> tgens;
  {
    Subgroup cur = generated_subgroup(H.group, ngens);
    for (int h : H.elements) {
      if (cur.contains(h)) continue;
      tgens.push_back(h);
      std::vector<int> all = ngens;
      all.insert(all.end(), tgens.begin(), tgens.end());
      cur = generated_subgroup(H.group, all);
    }
  }

  // candidate rows for each t, determined by values on generators of N
  std::vector<int> sg;
  for (int s : ngens) sg.push_back(posN[s]);
  std::vector<std::vector<std::vector<int>>> cands(tgens.size());
  for (std::size_t ti = 0; ti < tgens.size(); ++ti) {
    int t = tgens[ti];
    auto cn = [&](int ni) { return posN[G.conj(t, N.elements[ni])]; };
    std::vector<int> vals(sg.size(), 0);
    while (true) {
      std::vector<int> row(nn, -1);
      row[0] = 0;
      bool ok = true;
      for (std::size_t k = 0; k < sg.size() && ok; ++k) {
        if (row[sg[k]] >= 0 && row[sg[k]] != vals[k]) ok = false;
        row[sg[k]] = vals[k];
      }
      std::deque<int> queue{0};
      std::vector<char> seen(nn, 0);
      seen[0] = 1;
      while (!queue.empty() && ok) {
        int x = queue.front();
        queue.pop_front();
        for (int s : sg) {
          int y = T.m(x, s);
          int v = md(row[x] + row[s] + g.at(cn(x), cn(s)) - g.at(x, s), o);
          if (row[y] < 0) {
            row[y] = v;
          } else if (row[y] != v) {
            ok = false;
            break;
          }
          if (!seen[y]) {
            seen[y] = 1;
            queue.push_back(y);
          }
        }
      }
      if (ok) cands[ti].push_back(std::move(row));
      std::size_t k = 0;
      while (k < vals.size() && ++vals[k] == o) vals[k++] = 0;
      if (k == vals.size()) break;
    }
    if (cands[ti].empty()) {
      out.inconsistent = true;
      return out;
    }
  }

  std::vector<int> hgens = ngens;
  hgens.insert(hgens.end(), tgens.begin(), tgens.end());
  std::set<std::vector<int>> seen_canon;
  std::vector<std::size_t> choice(tgens.size(), 0);
  while (true) {
    EpsilonSystem e = trivial_epsilon(H, N, o);
    std::vector<char> known(hn, 0);
    bool ok = true;
    for (int ni = 0; ni < nn; ++ni) {
      int hi = posH[N.elements[ni]];
      for (int mi = 0; mi < nn; ++mi) e.at(hi, mi) = forced[static_cast<std::size_t>(ni) * nn + mi];
      known[hi] = 1;
    }
    for (std::size_t ti = 0; ti < tgens.size(); ++ti) {
      int hi = posH[tgens[ti]];
      for (int mi = 0; mi < nn; ++mi) e.at(hi, mi) = cands[ti][choice[ti]][mi];
      known[hi] = 1;
    }
    std::deque<int> queue;
    for (int hi = 0; hi < hn; ++hi)
      if (known[hi]) queue.push_back(hi);
    std::vector<char> done(hn, 0);
    while (!queue.empty() && ok) {
      int gi = queue.front();
      queue.pop_front();
      if (done[gi]) continue;
      done[gi] = 1;
      for (int s : hgens) {
        int si = posH[s];
        int gs = posH[G.mul(H.elements[gi], s)];
        std::vector<int> row(nn);
        for (int ni = 0; ni < nn; ++ni)
          row[ni] = md(e.at(gi, posN[G.conj(s, N.elements[ni])]) + e.at(si, ni), o);
        if (!known[gs]) {
          for (int ni = 0; ni < nn; ++ni) e.at(gs, ni) = row[ni];
          known[gs] = 1;
          queue.push_back(gs);
        } else {
          for (int ni = 0; ni < nn && ok; ++ni)
            if (e.at(gs, ni) != row[ni]) ok = false;
          if (!done[gs]) queue.push_back(gs);
        }
      }
    }
    if (ok && check_epsilon(g, e).ok()) {
      ++out.raw_candidates;
      EpsilonSystem c = canonical_epsilon(e);
      if (seen_canon.insert(c.exps).second) out.systems.push_back(std::move(c));
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == cands[k].size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  std::sort(out.systems.begin(), out.systems.end(),
            [](const EpsilonSystem& a, const EpsilonSystem& b) { return a.exps < b.exps; });
  out.inconsistent = out.systems.empty();
  return out;
}

TwoCocycle sign_cocycle(const Subgroup& N, int a, int b, int s1, int s2, int order) {
  if (N.order() != 4 || order % 2 != 0) throw Error(ErrorKind::InvalidData, "sign cocycle needs N = C2 x C2 and even order");
  const FinGroup& G = *N.group;
  auto pos = positions(N);
  std::vector<std::pair<int, int>> coord(4, {-1, -1});
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2) {
      int el = G.mul(x1 ? a : 0, x2 ? b : 0);
      if (pos[el] < 0) throw Error(ErrorKind::InvalidData, "sign cocycle generators outside N");
      coord[pos[el]] = {x1, x2};
    }
  for (auto& c : coord)
    if (c.first < 0) throw Error(ErrorKind::InvalidData, "a, b do not generate N");
  TwoCocycle g = trivial_cocycle(N, order);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int bit = (coord[i].first * coord[j].second * s1 + coord[i].second * coord[j].first * s2) % 2;
      g.at(i, j) = bit * (order / 2);
    }
  return g;
}

}  // namespace rfa
