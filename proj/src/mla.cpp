#include "mlaw/mla.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "mlaw/errors.hpp"

namespace mlaw {

namespace {

int chunk_count(long total, int threads) {
  if (threads < 1) threads = 1;
  return static_cast<int>(std::min<long>(threads, std::max<long>(total, 1)));
}

// Run fn(chunk_index, begin, end) over [0, total) split into contiguous
// chunks, one worker thread per chunk. Chunk boundaries depend only on
// (total, threads), so merging per-chunk results in chunk order keeps the
// overall result deterministic.
void parallel_chunks(long total, int threads,
                     const std::function<void(int, long, long)>& fn) {
  int used = chunk_count(total, threads);
  if (used <= 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> workers;
  long step = (total + used - 1) / used;
  for (int i = 0; i < used; ++i) {
    long begin = i * step;
    long end = std::min(total, begin + step);
    workers.emplace_back(fn, i, begin, end);
  }
  for (auto& w : workers) w.join();
}

}  // namespace

AxiomReport verify_axioms(const FiniteGroup& g, const std::vector<Element>& star) {
  int n = g.order();
  if (star.size() != static_cast<size_t>(n) * n)
    throw InputError("star table shape does not match the group order");
  for (Element v : star)
    if (v < 0 || v >= n) throw InputError("star table entry out of range");

  auto s = [&](Element x, Element y) { return star[x * n + y]; };
  AxiomReport report;
  report.axiom_ok.fill(true);
  auto violate = [&](int axiom, Element a, Element b, Element c) {
    report.axiom_ok[axiom - 1] = false;
    if (!report.first_violation)
      report.first_violation = {axiom, {a, b, c}};
  };

  for (Element a = 0; a < n; ++a)
    if (s(a, a) != 0) {
      violate(1, a, a, a);
      break;
    }

  [&] {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (s(a, g.mul(b, c)) != g.mul(s(a, b), g.conj(b, s(a, c)))) {
            violate(2, a, b, c);
            return;
          }
  }();

  [&] {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (s(g.mul(a, b), c) != g.mul(g.conj(a, s(b, c)), s(a, c))) {
            violate(3, a, b, c);
            return;
          }
  }();

  [&] {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) {
          Element t1 = s(s(a, b), g.conj(b, c));
          Element t2 = s(s(b, c), g.conj(c, a));
          Element t3 = s(s(c, a), g.conj(a, b));
          if (g.mul(g.mul(t1, t2), t3) != 0) {
            violate(4, a, b, c);
            return;
          }
        }
  }();

  [&] {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (g.conj(c, s(a, b)) != s(g.conj(c, a), g.conj(c, b))) {
            violate(5, a, b, c);
            return;
          }
  }();

  return report;
}

MlaStructure structure_from_hom(const WedgeSquare& ws, const GroupHom& phi) {
  if (phi.domain.get() != ws.square.get() || phi.codomain.get() != ws.base.get())
    throw InputError("homomorphism does not match the wedge square");
  int n = ws.base->order();
  MlaStructure s;
  s.base = ws.base;
  s.star.resize(static_cast<size_t>(n) * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      s.star[x * n + y] = phi.images[ws.wedge(x, y)];
  return s;
}

namespace {

// J-condition of the wedge theorem, checked on the normal generators of J;
// sufficient because ker phi is normal.
bool passes_j_condition(const WedgeSquare& ws, const std::vector<Element>& phi) {
  const FiniteGroup& g = *ws.base;
  int n = g.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element pxy = phi[ws.wedge(x, y)];
      for (Element z = 0; z < n; ++z) {
        Element t1 = phi[ws.wedge(pxy, g.conj(y, z))];
        Element t2 = phi[ws.wedge(phi[ws.wedge(y, z)], g.conj(z, x))];
        Element t3 = phi[ws.wedge(phi[ws.wedge(z, x)], g.conj(x, y))];
        if (g.mul(g.mul(t1, t2), t3) != 0) return false;
      }
    }
  return true;
}

bool passes_equivariance(const WedgeSquare& ws, const std::vector<Element>& phi) {
  const FiniteGroup& g = *ws.base;
  int n = g.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element pxy = phi[ws.wedge(x, y)];
      for (Element z = 0; z < n; ++z)
        if (g.conj(z, pxy) != phi[ws.wedge(g.conj(z, x), g.conj(z, y))])
          return false;
    }
  return true;
}

}  // namespace

bool check_wedge_conditions(const WedgeSquare& ws, const GroupHom& phi) {
  if (phi.domain.get() != ws.square.get() || phi.codomain.get() != ws.base.get())
    throw InputError("homomorphism does not match the wedge square");
  return passes_j_condition(ws, phi.images) &&
         passes_equivariance(ws, phi.images);
}

namespace {

std::vector<MlaStructure> finalize_tables(std::vector<MlaStructure> tables,
                                          const FiniteGroup& g,
                                          EnumerationStats* stats) {
  std::sort(tables.begin(), tables.end(),
            [](const MlaStructure& a, const MlaStructure& b) {
              return a.star < b.star;
            });
  auto last = std::unique(tables.begin(), tables.end(),
                          [](const MlaStructure& a, const MlaStructure& b) {
                            return a.star == b.star;
                          });
  if (stats) stats->duplicate_tables = std::distance(last, tables.end());
  tables.erase(last, tables.end());
  for (const MlaStructure& s : tables)
    check_invariant(verify_axioms(g, s.star).valid(),
                    "enumerated structure fails the axioms");
  return tables;
}

}  // namespace

std::vector<MlaStructure> enumerate_structures_from_square(
    const WedgeSquare& ws, int threads, EnumerationStats* stats) {
  std::vector<GroupHom> homs = enumerate_homs(ws.square, ws.base);

  long total = static_cast<long>(homs.size());
  int used = chunk_count(total, threads);
  std::vector<std::vector<MlaStructure>> kept(used);
  std::vector<long> j_rej(used, 0), eq_rej(used, 0);
  parallel_chunks(total, threads, [&](int chunk, long begin, long end) {
    for (long i = begin; i < end; ++i) {
      const GroupHom& h = homs[i];
      if (!passes_j_condition(ws, h.images)) {
        ++j_rej[chunk];
        continue;
      }
      if (!passes_equivariance(ws, h.images)) {
        ++eq_rej[chunk];
        continue;
      }
      kept[chunk].push_back(structure_from_hom(ws, h));
    }
  });

  std::vector<MlaStructure> tables;
  for (auto& part : kept)
    for (auto& s : part) tables.push_back(std::move(s));
  if (stats) {
    stats->hom_candidates = total;
    stats->j_rejected = 0;
    stats->equivariance_rejected = 0;
    for (int i = 0; i < used; ++i) {
      stats->j_rejected += j_rej[i];
      stats->equivariance_rejected += eq_rej[i];
    }
  }
  return finalize_tables(std::move(tables), *ws.base, stats);
}

std::vector<MlaStructure> enumerate_structures_via_wedge(
    GroupPtr g, const EnumerationLimits& limits, int threads,
    EnumerationStats* stats) {
  WedgeSquare ws = exterior_square(std::move(g), limits);
  return enumerate_structures_from_square(ws, threads, stats);
}

std::vector<MlaStructure> enumerate_structures_direct(GroupPtr g,
                                                      int max_generators,
                                                      int threads) {
  const FiniteGroup& gr = *g;
  int n = gr.order();
  std::vector<Element> gens = small_generating_set(gr);
  int k = static_cast<int>(gens.size());
  if (k > max_generators)
    throw LimitError("direct enumeration needs " + std::to_string(k) +
                     " generators, above the bound of " +
                     std::to_string(max_generators));
  CanonicalWords words = canonical_words(gr, gens);

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  long seeds = 1;
  for (size_t i = 0; i < pairs.size(); ++i) seeds *= n;

  int used = chunk_count(seeds, threads);
  std::vector<std::vector<MlaStructure>> kept(used);
  parallel_chunks(seeds, threads, [&](int chunk, long begin, long end) {
    std::vector<Element> seedmat(static_cast<size_t>(k) * k, 0);
    std::vector<Element> star(static_cast<size_t>(n) * n);
    for (long seed = begin; seed < end; ++seed) {
      long rest = seed;
      for (auto [i, j] : pairs) {
        Element v = static_cast<Element>(rest % n);
        rest /= n;
        seedmat[i * k + j] = v;
        seedmat[j * k + i] = gr.inv(v);
      }

      // identity row and column are forced to the identity
      for (Element y = 0; y < n; ++y) {
        star[y] = 0;
        star[static_cast<size_t>(y) * n] = 0;
      }
      // generator rows, right argument peeled by axiom (2)
      for (int gi = 0; gi < k; ++gi) {
        Element s = gens[gi];
        for (size_t idx = 1; idx < words.order.size(); ++idx) {
          Element y = words.order[idx];
          Element py = words.parent[y];
          Element base = seedmat[gi * k + words.via[y]];
          star[static_cast<size_t>(s) * n + y] =
              gr.mul(star[static_cast<size_t>(s) * n + py], gr.conj(py, base));
        }
      }
      // remaining rows, left argument peeled by axiom (3)
      for (size_t idx = 1; idx < words.order.size(); ++idx) {
        Element x = words.order[idx];
        if (words.parent[x] == 0) continue;  // generator row, done above
        Element px = words.parent[x];
        Element gx = gens[words.via[x]];
        for (Element y = 0; y < n; ++y)
          star[static_cast<size_t>(x) * n + y] =
              gr.mul(gr.conj(px, star[static_cast<size_t>(gx) * n + y]),
                     star[static_cast<size_t>(px) * n + y]);
      }

      if (verify_axioms(gr, star).valid())
        kept[chunk].push_back(MlaStructure{g, star});
    }
  });

  std::vector<MlaStructure> tables;
  for (auto& part : kept)
    for (auto& s : part) tables.push_back(std::move(s));
  if (k == 2)
    check_invariant(tables.size() <= static_cast<size_t>(n),
                    "2-generator seed space bound violated");
  return finalize_tables(std::move(tables), gr, nullptr);
}

std::vector<GroupHom> enumerate_equivariant_homs(GroupPtr g) {
  Subgroup derived = derived_subgroup(g);
  SubgroupGroup sg = subgroup_group(derived);
  std::vector<GroupHom> homs = enumerate_homs(sg.group, g);

  const FiniteGroup& gr = *g;
  std::vector<GroupHom> kept;
  for (GroupHom& h : homs) {
    bool ok = true;
    for (Element z = 0; z < gr.order() && ok; ++z)
      for (Element d = 0; d < sg.group->order() && ok; ++d) {
        int cd = sg.from_parent[gr.conj(z, sg.to_parent[d])];
        check_invariant(cd >= 0, "[G,G] is not closed under conjugation");
        ok = h.images[cd] == gr.conj(z, h.images[d]);
      }
    if (ok) kept.push_back(std::move(h));
  }
  return kept;
}

Subgroup star_ideal(const MlaStructure& s) {
  const FiniteGroup& g = *s.base;
  int n = g.order();
  if (!verify_axioms(g, s.star).valid())
    throw InputError("star table is not a valid structure");

  std::vector<char> is_value(n, 0);
  std::vector<Element> values;
  for (Element v : s.star)
    if (!is_value[v]) {
      is_value[v] = 1;
      values.push_back(v);
    }
  for (Element z = 0; z < n; ++z)
    for (Element v : values)
      check_invariant(is_value[g.conj(z, v)],
                      "star values must be closed under conjugation");

  Subgroup ideal = subgroup_generated(s.base, values);
  check_invariant(ideal.normal, "G*G must be a normal subgroup");
  for (Element x = 0; x < n; ++x)
    for (Element h : ideal.members)
      check_invariant(ideal.contains(s.star_of(x, h)),
                      "G*G must absorb star products");
  return ideal;
}

GroupHom induced_hom_from_structure(const WedgeSquare& ws, const MlaStructure& s) {
  if (ws.kind != SquareKind::exterior)
    throw InputError("structures correspond to homs of the exterior square");
  if (s.base.get() != ws.base.get())
    throw InputError("structure and wedge square have different base groups");
  if (!verify_axioms(*ws.base, s.star).valid())
    throw InputError("star table is not a valid structure");

  const FiniteGroup& w = *ws.square;
  std::vector<std::pair<Element, Element>> pairs = generator_pairs(ws);
  CanonicalWords words = canonical_words(w, w.generators());
  std::vector<Element> gen_images(pairs.size());
  for (size_t kk = 0; kk < pairs.size(); ++kk)
    gen_images[kk] = s.star_of(pairs[kk].first, pairs[kk].second);
  std::vector<Element> img = extend_images(*ws.base, words, gen_images);
  check_invariant(is_homomorphism(w, *ws.base, img),
                  "structure does not extend to a homomorphism on W");

  int n = ws.base->order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      check_invariant(img[ws.wedge(x, y)] == s.star_of(x, y),
                      "induced homomorphism fails the round trip");
  return GroupHom{ws.square, ws.base, std::move(img)};
}

std::vector<StructureClass> classify_structures(
    GroupPtr g, const std::vector<MlaStructure>& tables) {
  Subgroup derived = derived_subgroup(g);

  struct OpenClass {
    StructureClass cls;
    GroupPtr ideal_group;
  };
  std::vector<OpenClass> classes;
  for (const MlaStructure& s : tables) {
    Subgroup ideal = star_ideal(s);
    SubgroupGroup ig = subgroup_group(ideal);
    bool abelian = ig.group->is_abelian();
    AbelianInvariants inv =
        abelian ? abelian_invariants(ig.group) : AbelianInvariants{};

    OpenClass* home = nullptr;
    for (OpenClass& c : classes) {
      if (c.cls.ideal.order != ideal.order() || c.cls.ideal.abelian != abelian)
        continue;
      if (abelian ? c.cls.ideal.invariants == inv
                  : are_isomorphic(*ig.group, *c.ideal_group)) {
        home = &c;
        break;
      }
    }
    if (!home) {
      OpenClass fresh;
      fresh.cls.ideal.order = ideal.order();
      fresh.cls.ideal.abelian = abelian;
      fresh.cls.ideal.invariants = inv;
      fresh.cls.ideal.name = identify_group(*ig.group);
      fresh.cls.trivial_class = ideal.order() == 1;
      fresh.ideal_group = ig.group;
      classes.push_back(std::move(fresh));
      home = &classes.back();
    }
    home->cls.representatives.push_back(s);
    if (ideal.members == derived.members) home->cls.commutator_class = true;
  }

  std::vector<StructureClass> out;
  out.reserve(classes.size());
  for (OpenClass& c : classes) out.push_back(std::move(c.cls));
  std::sort(out.begin(), out.end(),
            [](const StructureClass& a, const StructureClass& b) {
              if (a.ideal.order != b.ideal.order)
                return a.ideal.order < b.ideal.order;
              if (a.ideal.invariants.divisors != b.ideal.invariants.divisors)
                return a.ideal.invariants.divisors < b.ideal.invariants.divisors;
              return a.ideal.name < b.ideal.name;
            });
  return out;
}

bool is_lie_simple(GroupPtr g, const EnumerationLimits& limits, int threads) {
  std::vector<MlaStructure> tables =
      enumerate_structures_via_wedge(g, limits, threads);
  std::vector<StructureClass> classes = classify_structures(g, tables);
  for (const StructureClass& c : classes)
    if (!c.trivial_class && !c.commutator_class) return false;
  return true;
}

}  // namespace mlaw
