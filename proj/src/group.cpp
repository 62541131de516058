#include "rfa/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <regex>
#include <set>

namespace rfa {

std::string cycle_notation(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  std::string out;
  const bool compact = n <= 9;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || images[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first && !compact) out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = images[j];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

FinGroup::FinGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels,
                   std::vector<std::vector<int>> perms)
    : perms_(std::move(perms)) {
  n_ = static_cast<int>(table.size());
  if (n_ == 0) throw Error(ErrorKind::NotAGroup, "empty table");
  table_.resize(static_cast<std::size_t>(n_) * n_);
  for (int a = 0; a < n_; ++a) {
    if (static_cast<int>(table[a].size()) != n_) throw Error(ErrorKind::NotAGroup, "table is not square");
    for (int b = 0; b < n_; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= n_) throw Error(ErrorKind::NotAGroup, "table entry out of range");
      table_[static_cast<std::size_t>(a) * n_ + b] = v;
    }
  }
  for (int a = 0; a < n_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw Error(ErrorKind::NotAGroup, "element 0 is not a two-sided identity (at " + std::to_string(a) + ")");
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(ErrorKind::NotAGroup, "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                                                "," + std::to_string(c) + ")");
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0) throw Error(ErrorKind::NotAGroup, "element " + std::to_string(a) + " has no inverse");
  }
  if (labels.empty()) {
    labels.resize(n_);
    for (int a = 0; a < n_; ++a) labels[a] = a == 0 ? "e" : "g" + std::to_string(a);
  }
  labels_ = std::move(labels);
}

FinGroup FinGroup::from_permutations(int degree, const std::vector<std::vector<int>>& gens) {
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree) throw Error(ErrorKind::InvalidData, "generator has wrong degree");
    std::vector<int> s = g;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < degree; ++i)
      if (s[i] != i) throw Error(ErrorKind::InvalidData, "generator is not a permutation");
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> elems{id};
  std::queue<std::vector<int>> todo;
  todo.push(id);
  while (!todo.empty()) {
    auto p = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      // composition (g * p)(i) = g(p(i))
      std::vector<int> q(degree);
      for (int i = 0; i < degree; ++i) q[i] = g[p[i]];
      if (elems.insert(q).second) todo.push(q);
    }
  }
  std::vector<std::vector<int>> perms(elems.begin(), elems.end());  // lexicographic, identity first
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const std::size_t n = perms.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<int> tmp(degree);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (int i = 0; i < degree; ++i) tmp[i] = perms[a][perms[b][i]];
      table[a][b] = index[tmp];
    }
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(cycle_notation(p));
  return FinGroup(std::move(table), std::move(labels), std::move(perms));
}

FinGroup FinGroup::cyclic(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidData, "cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = a == 0 ? "e" : (a == 1 ? "c" : "c^" + std::to_string(a));
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  FinGroup g(std::move(t), std::move(labels));
  g.set_name("C" + std::to_string(n));
  return g;
}

FinGroup FinGroup::symmetric(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidData, "symmetric group degree must be positive");
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> t(n), c(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens = {t, c};
  }
  FinGroup g = from_permutations(n, gens);
  g.set_name("S" + std::to_string(n));
  return g;
}

FinGroup FinGroup::alternating(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidData, "alternating group degree must be positive");
  std::vector<std::vector<int>> gens;
  for (int k = 2; k < n; ++k) {
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    // 3-cycle (0 1 k)
    c[0] = 1;
    c[1] = k;
    c[k] = 0;
    gens.push_back(c);
  }
  FinGroup g = from_permutations(n, gens);
  g.set_name("A" + std::to_string(n));
  return g;
}

FinGroup FinGroup::dihedral(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidData, "dihedral parameter must be positive");
  if (n <= 2) {
    FinGroup g = n == 1 ? cyclic(2) : direct_product(cyclic(2), cyclic(2));
    g.set_name("D" + std::to_string(n));
    return g;
  }
  std::vector<int> r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  FinGroup g = from_permutations(n, {r, s});
  g.set_name("D" + std::to_string(n));
  return g;
}

FinGroup FinGroup::quaternion() {
  // index = 2*unit + sign, unit in {1,i,j,k}, sign 0 = +, 1 = -
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
      int u = unit_mul[ua][ub];
      int s = (sa + sb + sign_mul[ua][ub]) % 2;
      t[a][b] = 2 * u + s;
    }
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  labels[0] = "e";
  FinGroup g(std::move(t), std::move(labels));
  g.set_name("Q8");
  return g;
}

FinGroup FinGroup::direct_product(const FinGroup& a, const FinGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    labels[x] = x == 0 ? "e" : "(" + a.label(x / nb) + "," + b.label(x % nb) + ")";
    for (int y = 0; y < n; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  FinGroup g(std::move(t), std::move(labels));
  g.set_name(a.name() + "x" + b.name());
  return g;
}

FinGroup FinGroup::named(const std::string& name) {
  auto pos = name.find('x');
  if (pos != std::string::npos) {
    FinGroup g = direct_product(named(name.substr(0, pos)), named(name.substr(pos + 1)));
    g.set_name(name);
    return g;
  }
  static const std::regex re("^([CSADQ])([0-9]+)$");
  std::smatch m;
  if (!std::regex_match(name, m, re)) throw Error(ErrorKind::InvalidData, "unknown group name '" + name + "'");
  int k = std::stoi(m[2]);
  switch (m[1].str()[0]) {
    case 'C': return cyclic(k);
    case 'S': return symmetric(k);
    case 'A': return alternating(k);
    case 'D': return dihedral(k);
    case 'Q':
      if (k == 8) return quaternion();
      break;
  }
  throw Error(ErrorKind::InvalidData, "unknown group name '" + name + "'");
}

int FinGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int FinGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool FinGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FinGroup::find_label(const std::string& s) const {
  for (int a = 0; a < n_; ++a)
    if (labels_[a] == s) return a;
  return -1;
}

int FinGroup::find_perm(const std::vector<int>& images) const {
  for (int a = 0; a < static_cast<int>(perms_.size()); ++a)
    if (perms_[a] == images) return a;
  return -1;
}

std::vector<std::vector<int>> FinGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

namespace {

std::vector<int> closure(const FinGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int g : gens) {
      int x = G.mul(elems[i], g);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> greedy_generators(const FinGroup& G, const std::vector<int>& elems) {
  std::vector<int> gens;
  std::vector<int> span{0};
  // prefer elements of large order so the generating set stays short
  std::vector<int> order = elems;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return G.element_order(a) > G.element_order(b); });
  for (int g : order) {
    if (std::binary_search(span.begin(), span.end(), g)) continue;
    gens.push_back(g);
    span = closure(G, gens);
    if (span.size() == elems.size()) break;
  }
  return gens;
}

}  // namespace

std::vector<int> FinGroup::generators() const {
  std::vector<int> all(n_);
  std::iota(all.begin(), all.end(), 0);
  return greedy_generators(*this, all);
}

bool Subgroup::contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }

bool Subgroup::operator<(const Subgroup& o) const {
  if (elements.size() != o.elements.size()) return elements.size() < o.elements.size();
  return elements < o.elements;
}

std::vector<int> Subgroup::generators() const { return greedy_generators(*group, elements); }

std::string Subgroup::describe() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) s += ",";
    s += group->label(elements[i]);
  }
  return s + "}";
}

Subgroup trivial_subgroup(const GroupPtr& G) { return Subgroup{G, {0}}; }

Subgroup whole_group(const GroupPtr& G) {
  std::vector<int> e(G->order());
  std::iota(e.begin(), e.end(), 0);
  return Subgroup{G, e};
}

Subgroup generated_subgroup(const GroupPtr& G, const std::vector<int>& gens) {
  for (int g : gens)
    if (g < 0 || g >= G->order()) throw Error(ErrorKind::InvalidData, "generator index out of range");
  return Subgroup{G, closure(*G, gens)};
}

Subgroup subgroup_from_elements(const GroupPtr& G, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (int g : elems)
    if (g < 0 || g >= G->order()) throw Error(ErrorKind::InvalidData, "element index out of range");
  if (elems.empty() || elems[0] != 0) throw Error(ErrorKind::NotAGroup, "subset does not contain the identity");
  for (int a : elems)
    for (int b : elems)
      if (!std::binary_search(elems.begin(), elems.end(), G->mul(a, G->inv(b))))
        throw Error(ErrorKind::NotAGroup, "subset is not closed at (" + G->label(a) + "," + G->label(b) + ")");
  return Subgroup{G, elems};
}

std::vector<Subgroup> subgroups(const GroupPtr& G, int max_order) {
  if (G->order() > max_order)
    throw Error(ErrorKind::SizeBound, "group order " + std::to_string(G->order()) + " exceeds subgroup bound " +
                                          std::to_string(max_order));
  const FinGroup& g = *G;
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> list;
  auto add = [&](std::vector<int> s) {
    if (found.insert(s).second) list.push_back(std::move(s));
  };
  add({0});
  // join each known subgroup with one more element until nothing new appears
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::vector<int> cur = list[i];
    std::vector<char> in(g.order(), 0);
    for (int x : cur) in[x] = 1;
    for (int x = 1; x < g.order(); ++x) {
      if (in[x]) continue;
      std::vector<int> gens = cur;
      gens.push_back(x);
      std::vector<int> c = closure(g, gens);
      if (!found.count(c)) add(std::move(c));
    }
  }
  std::vector<Subgroup> out;
  for (auto& s : list) out.push_back(Subgroup{G, s});
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subset(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(), a.elements.end());
}

bool is_normal_in(const Subgroup& N, const Subgroup& H) {
  if (!is_subset(N, H)) throw Error(ErrorKind::NotContained, "N is not contained in H");
  for (int h : H.elements)
    for (int n : N.elements)
      if (!N.contains(N.group->conj(h, n))) return false;
  return true;
}

Subgroup conjugate_subgroup(const Subgroup& K, int g) {
  std::vector<int> e;
  for (int k : K.elements) e.push_back(K.group->conj(g, k));
  std::sort(e.begin(), e.end());
  return Subgroup{K.group, e};
}

std::pair<int, int> Transversal::decompose(int g) const {
  const FinGroup& G = *subgroup.group;
  int i = coset_of[g];
  return {i, G.mul(G.inv(reps[i]), g)};
}

namespace {

std::vector<int> moved_points(const FinGroup& G, int g) {
  std::vector<int> m;
  if (!G.is_permutation_group()) return m;
  const auto& p = G.perm(g);
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) m.push_back(i);
  return m;
}

Transversal finish_transversal(const Subgroup& H, std::vector<int> reps) {
  const FinGroup& G = *H.group;
  Transversal T{H, std::move(reps), std::vector<int>(G.order(), -1)};
  for (int i = 0; i < T.index(); ++i)
    for (int h : H.elements) {
      int g = G.mul(T.reps[i], h);
      if (T.coset_of[g] != -1) throw Error(ErrorKind::InvalidData, "representatives share a coset");
      T.coset_of[g] = i;
    }
  for (int g = 0; g < G.order(); ++g)
    if (T.coset_of[g] == -1) throw Error(ErrorKind::InvalidData, "representatives miss a coset");
  return T;
}

}  // namespace

Transversal coset_data(const Subgroup& H) {
  const FinGroup& G = *H.group;
  std::vector<int> assigned(G.order(), -1);
  std::vector<std::vector<int>> cosets;
  for (int g = 0; g < G.order(); ++g) {
    if (assigned[g] != -1) continue;
    std::vector<int> c;
    for (int h : H.elements) {
      int x = G.mul(g, h);
      assigned[x] = static_cast<int>(cosets.size());
      c.push_back(x);
    }
    cosets.push_back(c);
  }
  std::vector<int> reps;
  for (const auto& c : cosets) {
    int best = c[0];
    auto key = [&](int x) { return std::make_tuple(G.element_order(x), moved_points(G, x), x); };
    for (int x : c)
      if (key(x) < key(best)) best = x;
    reps.push_back(best);
  }
  return finish_transversal(H, reps);
}

Transversal transversal_from_reps(const Subgroup& H, const std::vector<int>& reps) {
  if (reps.empty() || reps[0] != 0) throw Error(ErrorKind::InvalidData, "transversal must start with the identity");
  return finish_transversal(H, reps);
}

std::vector<ConjugacyClass> conjugacy_classes(const GroupPtr& G) {
  const FinGroup& g = *G;
  std::vector<int> cls(g.order(), -1);
  std::vector<ConjugacyClass> out;
  for (int x = 0; x < g.order(); ++x) {
    if (cls[x] != -1) continue;
    ConjugacyClass c;
    c.rep = x;
    std::map<int, int> conj;
    for (int t = 0; t < g.order(); ++t) {
      int y = g.conj(t, x);
      if (!conj.count(y)) conj[y] = t;
    }
    for (auto [y, t] : conj) {
      c.elements.push_back(y);
      c.conjugator.push_back(t);
      cls[y] = static_cast<int>(out.size());
    }
    std::vector<int> cent;
    for (int t = 0; t < g.order(); ++t)
      if (g.mul(t, x) == g.mul(x, t)) cent.push_back(t);
    c.centralizer = Subgroup{G, cent};
    c.centralizer_gens = c.centralizer.generators();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace rfa
