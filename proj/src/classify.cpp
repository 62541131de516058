#include "rfa/classify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace rfa {

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f) {
  int t = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  t = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(t), std::max<std::size_t>(n, 1)));
  if (t <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mutex;
  std::vector<std::thread> pool;
  for (int k = 0; k < t; ++k)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// least (H, N) element lists over all simultaneous conjugates
std::string pair_key(const Subgroup& H, const Subgroup& N) {
  const FinGroup& G = *H.group;
  std::pair<std::vector<int>, std::vector<int>> best{H.elements, N.elements};
  for (int g = 0; g < G.order(); ++g) {
    std::vector<int> h, n;
    for (int x : H.elements) h.push_back(G.conj(g, x));
    for (int x : N.elements) n.push_back(G.conj(g, x));
    std::sort(h.begin(), h.end());
    std::sort(n.begin(), n.end());
    best = std::min(best, std::make_pair(h, n));
  }
  return "H{" + join(best.first) + "} N{" + join(best.second) + "}";
}

}  // namespace

DataEnumeration enumerate_data(const GroupPtr& G, const FieldSpec& f, const ClassifyOptions& opt) {
  if (G->order() > opt.max_group_order)
    throw Error(ErrorKind::SizeBound, "|G| = " + std::to_string(G->order()) + " exceeds the bound " +
                                          std::to_string(opt.max_group_order));
  DataEnumeration out;
  std::vector<Subgroup> subs = subgroups(G);
  std::map<std::string, int> first_of_key;
  for (const auto& H : subs) {
    if (!is_invertible_integer(f, G->order() / H.order())) continue;
    for (const auto& N : subs) {
      if (!is_subset(N, H) || !is_normal_in(N, H) || !is_invertible_integer(f, N.order())) continue;
      PairRecord rec{H, N};
      const int idx = static_cast<int>(out.pairs.size());
      auto [it, fresh] = first_of_key.emplace(pair_key(H, N), idx);
      rec.represented_by = it->second;
      if (N.order() > opt.max_normal_order) {
        rec.skipped = true;
        out.pairs.push_back(rec);
        continue;
      }
      rec.value_order = effective_value_order(f, opt.value_order > 0 ? opt.value_order : N.order());
      if (!fresh && opt.dedupe_conjugates) {
        const PairRecord& rep = out.pairs[it->second];
        rec.cocycle_classes = rep.cocycle_classes;
        rec.candidates = rep.candidates;
        rec.inconsistent_classes = rep.inconsistent_classes;
        out.pairs.push_back(rec);
        continue;
      }
      CocycleEnumeration ce = enumerate_cocycles(N, rec.value_order, opt.max_normal_order);
      rec.cocycle_classes = ce.classes.size();
      for (const auto& g : ce.classes) {
        EpsilonEnumeration ee = enumerate_epsilons(H, N, g);
        if (ee.inconsistent) {
          ++rec.inconsistent_classes;
          continue;
        }
        for (const auto& e : ee.systems) {
          out.data.push_back({H, N, g, e});
          out.pair_of.push_back(idx);
          ++rec.candidates;
        }
      }
      out.pairs.push_back(rec);
    }
  }
  return out;
}

Classification classify(const GroupPtr& G, const FieldSpec& f, const ClassifyOptions& opt) {
  DataEnumeration en = enumerate_data(G, f, opt);
  Classification out;
  out.pairs = en.pairs;
  const std::size_t n = en.data.size();
  std::vector<std::optional<ClassificationEntry>> slots(n);
  parallel_for(n, opt.threads, [&](std::size_t i) {
    const AlgebraData& d = en.data[i];
    ClassificationEntry e{d, build_A(d, f), {}, {}, {}, {}, {}, en.pair_of[i], {}};
    e.cert = check_rigid_frobenius(e.algebra.algebra, e.algebra.frobenius);
    const std::string where = "H = " + d.H.describe() + ", N = " + d.N.describe();
    if (!e.cert.passed)
      throw Error(ErrorKind::InternalInconsistency, where + ": " + e.cert.report.summary());
    e.audit = well_definedness_audit(d, f, opt.seed + i);
    if (!e.audit.ok()) throw Error(ErrorKind::InternalInconsistency, where + ": " + e.audit.summary());
    const std::int64_t g = G->order(), h = d.H.order(), nn = d.N.order();
    e.dims = {static_cast<std::int64_t>(e.algebra.algebra.dim()), g * h / nn, (h / nn) * (h / nn)};
    if (e.dims.dim_A * h != g * nn) throw Error(ErrorKind::InternalInconsistency, where + ": dim A");
    TwoCocycle cg = canonical_cocycle(d.gamma);
    EpsilonSystem ce = canonical_epsilon(d.epsilon);
    e.cohomology_key = "gamma[" + join(cg.exps) + "]/" + std::to_string(cg.order) + " eps[" + join(ce.exps) + "]/" +
                       std::to_string(ce.order);
    e.conjugacy_key = pair_key(d.H, d.N);
    slots[i] = std::move(e);
  });
  for (auto& s : slots) out.entries.push_back(std::move(*s));
  // data the enumeration does not separate: same dimension and graded dimensions
  for (std::size_t i = 0; i < out.entries.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = out.entries[i].algebra.algebra.carrier;
      const auto& b = out.entries[j].algebra.algebra.carrier;
      if (a.dim() == b.dim() && a.grade_dims() == b.grade_dims())
        out.entries[i].possibly_isomorphic.push_back(static_cast<int>(j));
    }
  return out;
}

bool LocalAnalysis::ok() const {
  if (!fpdim.report.ok() || !twist.ok()) return false;
  if (muger && !muger->trivial) return false;
  if (modular && determinant(modular->S).is_zero()) return false;
  return true;
}

LocalAnalysis analyze_local(const BuiltAlgebra& A, std::uint64_t seed, int modular_max_order) {
  LocalAnalysis out;
  const GroupPtr& G = A.algebra.carrier.group;
  try {
    require_semisimple_field(*G, A.field);
    RigidAlgebra R = make_rigid(A);
    out.simples = simple_modules(R, seed);
    out.fpdim = fpdim_checks(A, out.simples);
    std::vector<SimpleAModule> locals;
    for (const auto& s : out.simples)
      if (s.local) locals.push_back(s);
    out.muger = muger_center_local(R, locals);
    for (const auto& s : locals) {
      Report t = twist_local(R, s.module);
      for (auto& v : t.violations) v.witness = s.module.label + " " + v.witness;
      out.twist.merge(t);
    }
    if (G->order() <= modular_max_order) out.modular = modular_data(R, locals);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSemisimpleField && e.kind() != ErrorKind::NonSplit) throw;
    out.fpdim = fpdim_checks(A, seed);
    out.simples.clear();
    out.muger.reset();
  }
  return out;
}

}  // namespace rfa
