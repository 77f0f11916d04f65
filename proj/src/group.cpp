#include "mlaw/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "mlaw/errors.hpp"

namespace mlaw {

FiniteGroup::FiniteGroup(int order, std::vector<Element> table,
                         std::vector<std::string> names,
                         std::vector<Element> generators)
    : order_(order),
      table_(std::move(table)),
      inverse_(order, -1),
      names_(std::move(names)),
      generators_(std::move(generators)) {
  check_invariant(order_ >= 1, "group order must be positive");
  check_invariant(table_.size() == static_cast<size_t>(order_) * order_,
                  "multiplication table has wrong shape");
  check_invariant(names_.size() == static_cast<size_t>(order_),
                  "name list has wrong length");
  for (Element x : table_)
    check_invariant(x >= 0 && x < order_, "table entry out of range");

  // identity at index 0
  for (Element j = 0; j < order_; ++j) {
    check_invariant(mul(0, j) == j && mul(j, 0) == j,
                    "element 0 is not an identity");
  }
  // associativity over all triples
  for (Element i = 0; i < order_; ++i)
    for (Element j = 0; j < order_; ++j) {
      Element ij = mul(i, j);
      for (Element k = 0; k < order_; ++k)
        check_invariant(mul(ij, k) == mul(i, mul(j, k)),
                        "multiplication table is not associative");
    }
  // two-sided inverses
  for (Element i = 0; i < order_; ++i) {
    for (Element j = 0; j < order_; ++j)
      if (mul(i, j) == 0) {
        check_invariant(mul(j, i) == 0, "one-sided inverse");
        inverse_[i] = j;
        break;
      }
    check_invariant(inverse_[i] >= 0, "element without inverse");
  }
  // declared generators generate
  std::vector<char> seen(order_, 0);
  seen[0] = 1;
  std::vector<Element> frontier{0};
  size_t reached = 1;
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (Element s : generators_) {
      check_invariant(s >= 0 && s < order_, "generator index out of range");
      Element y = mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        frontier.push_back(y);
      }
    }
  }
  check_invariant(reached == static_cast<size_t>(order_),
                  "declared generators do not generate the group");
}

Element FiniteGroup::power(Element a, long e) const {
  Element base = e >= 0 ? a : inv(a);
  long k = e >= 0 ? e : -e;
  Element acc = 0;
  for (long i = 0; i < k; ++i) acc = mul(acc, base);
  return acc;
}

int FiniteGroup::element_order(Element a) const {
  int n = 1;
  Element x = a;
  while (x != 0) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (Element i = 0; i < order_; ++i)
    for (Element j = i + 1; j < order_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

GroupPtr make_group(int order, std::vector<Element> table,
                    std::vector<std::string> names,
                    std::vector<Element> generators) {
  return std::make_shared<const FiniteGroup>(order, std::move(table),
                                             std::move(names),
                                             std::move(generators));
}

bool Subgroup::contains(Element x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

std::string to_string(const AbelianInvariants& inv) {
  if (inv.divisors.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < inv.divisors.size(); ++i) {
    if (i) s += " x ";
    s += "Z" + std::to_string(inv.divisors[i]);
  }
  return s;
}

// --- permutations ---

Permutation parse_cycles(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point or ')'", i);
      int p = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        p = p * 10 + (text[i] - '0');
        ++i;
      }
      if (p < 1) throw ParseError("points are 1-based", i);
      cycle.push_back(p - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i == text.size()) throw ParseError("unclosed cycle", i);
    ++i;  // ')'
    cycles.push_back(std::move(cycle));
    skip_ws();
  }

  int degree = 0;
  for (const auto& c : cycles)
    for (int p : c) degree = std::max(degree, p + 1);
  Permutation perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> used(degree, 0);
  for (const auto& c : cycles) {
    for (int p : c) {
      if (used[p])
        throw ParseError("point " + std::to_string(p + 1) + " repeated", 0);
      used[p] = 1;
    }
    for (size_t k = 0; k < c.size(); ++k)
      perm[c[k]] = c[(k + 1) % c.size()];
  }
  return perm;
}

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += '(';
    size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Permutation compose_permutations(const Permutation& a, const Permutation& b) {
  // (a b)(x) = a(b(x))
  check_invariant(a.size() == b.size(), "permutation degrees differ");
  Permutation r(a.size());
  for (size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

GroupPtr group_from_permutations(const std::vector<Permutation>& gens,
                                 int max_order) {
  size_t degree = 1;
  for (const auto& g : gens) degree = std::max(degree, g.size());
  std::vector<Permutation> padded;
  for (auto g : gens) {
    size_t old = g.size();
    g.resize(degree);
    std::iota(g.begin() + old, g.end(), static_cast<int>(old));
    padded.push_back(std::move(g));
  }

  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0);

  std::vector<Permutation> elements{identity};
  std::map<Permutation, Element> index{{identity, 0}};
  std::vector<Element> gen_ids;
  for (const auto& g : padded) {
    auto [it, inserted] = index.try_emplace(g, static_cast<Element>(elements.size()));
    if (inserted) elements.push_back(g);
    if (it->second != 0 &&
        std::find(gen_ids.begin(), gen_ids.end(), it->second) == gen_ids.end())
      gen_ids.push_back(it->second);
  }
  for (size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : padded) {
      Permutation prod = compose_permutations(elements[i], g);
      auto [it, inserted] =
          index.try_emplace(std::move(prod), static_cast<Element>(elements.size()));
      if (inserted) {
        if (elements.size() >= static_cast<size_t>(max_order))
          throw LimitError("permutation closure exceeds maximum order " +
                           std::to_string(max_order));
        elements.push_back(it->first);
      }
    }
  }

  int n = static_cast<int>(elements.size());
  std::vector<Element> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<size_t>(i) * n + j] =
          index.at(compose_permutations(elements[i], elements[j]));
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& e : elements) names.push_back(cycle_string(e));
  return make_group(n, std::move(table), std::move(names), std::move(gen_ids));
}

// --- builtin families ---

namespace {

std::string power_name(const std::string& sym, int e) {
  if (e == 0) return "";
  if (e == 1) return sym;
  return sym + "^" + std::to_string(e);
}

GroupPtr dihedral_impl(int n) {
  // elements a^i b^j, i in {0,1}, j mod n; index = i*n + j
  int order = 2 * n;
  auto idx = [n](int i, int j) { return i * n + ((j % n) + n) % n; };
  std::vector<Element> table(static_cast<size_t>(order) * order);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < n; ++l) {
          // b^j a = a b^-j, so (a^i b^j)(a^k b^l) = a^(i+k) b^((-1)^k j + l)
          int jj = k ? -j : j;
          table[static_cast<size_t>(idx(i, j)) * order + idx(k, l)] =
              idx((i + k) % 2, jj + l);
        }
  std::vector<std::string> names(order);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < n; ++j) {
      std::string nm = std::string(i ? "a" : "") + power_name("b", j);
      names[idx(i, j)] = nm.empty() ? "1" : nm;
    }
  std::vector<Element> gens{idx(1, 0)};
  if (n > 1) gens.push_back(idx(0, 1));
  return make_group(order, std::move(table), std::move(names), std::move(gens));
}

GroupPtr quaternion_impl(int n) {
  // Q_n = <x,y | x^2 = y^n, x y x^-1 = y^-1>, order 4n: elements x^i y^j
  // with i in {0,1}, j mod 2n, and x^2 = y^n.
  int order = 4 * n;
  int m = 2 * n;
  auto idx = [m](int i, int j) { return i * m + ((j % m) + m) % m; };
  auto mul = [&](int i, int j, int k, int l) {
    int ii = i + k;
    int jj = k ? l - j : l + j;
    if (ii == 2) {
      ii = 0;
      jj += n;
    }
    return idx(ii, jj);
  };
  std::vector<Element> table(static_cast<size_t>(order) * order);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < m; ++l)
          table[static_cast<size_t>(idx(i, j)) * order + idx(k, l)] =
              mul(i, j, k, l);
  std::vector<std::string> names(order);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < m; ++j) {
      std::string nm = std::string(i ? "x" : "") + power_name("y", j);
      names[idx(i, j)] = nm.empty() ? "1" : nm;
    }
  std::vector<Element> gens{idx(1, 0), idx(0, 1)};
  return make_group(order, std::move(table), std::move(names), std::move(gens));
}

Permutation cycle_of(std::initializer_list<int> points, int degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> v(points);
  for (size_t k = 0; k < v.size(); ++k) p[v[k] - 1] = v[(k + 1) % v.size()] - 1;
  return p;
}

GroupPtr cyclic_product_impl(int m, int n) {
  int order = m * n;
  auto idx = [n](int i, int j) { return i * n + j; };
  std::vector<Element> table(static_cast<size_t>(order) * order);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < n; ++l)
          table[static_cast<size_t>(idx(i, j)) * order + idx(k, l)] =
              idx((i + k) % m, (j + l) % n);
  std::vector<std::string> names(order);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      std::string nm = power_name("a", i) + power_name("b", j);
      names[idx(i, j)] = nm.empty() ? "1" : nm;
    }
  std::vector<Element> gens;
  if (m > 1) gens.push_back(idx(1, 0));
  if (n > 1) gens.push_back(idx(0, 1));
  return make_group(order, std::move(table), std::move(names), std::move(gens));
}

struct Mat2 {
  int a, b, c, d;  // mod 3
  auto operator<=>(const Mat2&) const = default;
};

Mat2 matmul3(const Mat2& x, const Mat2& y) {
  return {(x.a * y.a + x.b * y.c) % 3, (x.a * y.b + x.b * y.d) % 3,
          (x.c * y.a + x.d * y.c) % 3, (x.c * y.b + x.d * y.d) % 3};
}

GroupPtr sl23_impl() {
  Mat2 identity{1, 0, 0, 1};
  Mat2 u{1, 1, 0, 1}, l{1, 0, 1, 1};
  std::vector<Mat2> elements{identity};
  std::map<Mat2, Element> index{{identity, 0}};
  for (size_t i = 0; i < elements.size(); ++i)
    for (const Mat2& g : {u, l}) {
      Mat2 prod = matmul3(elements[i], g);
      if (index.try_emplace(prod, static_cast<Element>(elements.size())).second)
        elements.push_back(prod);
    }
  int n = static_cast<int>(elements.size());
  check_invariant(n == 24, "SL(2,3) closure has wrong order");
  std::vector<Element> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<size_t>(i) * n + j] =
          index.at(matmul3(elements[i], elements[j]));
  std::vector<std::string> names;
  for (const Mat2& e : elements) {
    std::ostringstream os;
    os << "[[" << e.a << "," << e.b << "],[" << e.c << "," << e.d << "]]";
    names.push_back(os.str());
  }
  return make_group(n, std::move(table), std::move(names),
                    {index.at(u), index.at(l)});
}

}  // namespace

GroupPtr dihedral_group(int n) {
  if (n < 1) throw InputError("dihedral parameter must be >= 1");
  return dihedral_impl(n);
}

GroupPtr quaternion_group(int n) {
  if (n < 2) throw InputError("quaternion parameter must be >= 2");
  return quaternion_impl(n);
}

GroupPtr symmetric_group(int n) {
  if (n < 1) throw InputError("symmetric parameter must be >= 1");
  if (n > 5) throw InputError("symmetric groups supported up to n = 5");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(cycle_of({1, 2}, n));
  if (n >= 3) {
    Permutation full(n);
    for (int i = 0; i < n; ++i) full[i] = (i + 1) % n;
    gens.push_back(full);
  }
  return group_from_permutations(gens, 2 * 120);
}

GroupPtr alternating_group(int n) {
  if (n < 1) throw InputError("alternating parameter must be >= 1");
  if (n > 5) throw InputError("alternating groups supported up to n = 5");
  std::vector<Permutation> gens;
  for (int k = 3; k <= n; ++k) gens.push_back(cycle_of({1, 2, k}, n));
  return group_from_permutations(gens, 2 * 60);
}

GroupPtr cyclic_product_group(int m, int n) {
  if (m < 1 || n < 1) throw InputError("cyclic factors must be >= 1");
  return cyclic_product_impl(m, n);
}

GroupPtr cyclic_group(int n) { return cyclic_product_group(1, n); }

GroupPtr sl23_group() { return sl23_impl(); }

GroupPtr klein_group() { return cyclic_product_group(2, 2); }

GroupPtr builtin_family(Family family, int p1, int p2) {
  switch (family) {
    case Family::dihedral: return dihedral_group(p1);
    case Family::quaternion: return quaternion_group(p1);
    case Family::symmetric: return symmetric_group(p1);
    case Family::alternating: return alternating_group(p1);
    case Family::cyclic_product: return cyclic_product_group(p1, p2);
    case Family::sl23: return sl23_group();
    case Family::klein: return klein_group();
  }
  throw InputError("unknown group family");
}

// --- subgroups ---

namespace {

std::vector<Element> closure_of(const FiniteGroup& g,
                                std::span<const Element> seed) {
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<Element> worklist{0};
  for (size_t i = 0; i < worklist.size(); ++i)
    for (Element s : seed) {
      Element y = g.mul(worklist[i], s);
      if (!in[y]) {
        in[y] = 1;
        worklist.push_back(y);
      }
    }
  std::sort(worklist.begin(), worklist.end());
  return worklist;
}

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<Element>& members) {
  std::vector<char> in(g.order(), 0);
  for (Element m : members) in[m] = 1;
  for (Element z = 0; z < g.order(); ++z)
    for (Element m : members)
      if (!in[g.conj(z, m)]) return false;
  return true;
}

}  // namespace

Subgroup subgroup_generated(GroupPtr g, std::span<const Element> seed) {
  for (Element s : seed)
    check_invariant(s >= 0 && s < g->order(), "seed element out of range");
  Subgroup sub;
  sub.parent = g;
  sub.members = closure_of(*g, seed);
  sub.normal = is_normal_subgroup(*g, sub.members);
  return sub;
}

Subgroup derived_subgroup(GroupPtr g) {
  std::vector<char> seen(g->order(), 0);
  std::vector<Element> seeds;
  for (Element x = 0; x < g->order(); ++x)
    for (Element y = 0; y < g->order(); ++y) {
      Element c = g->comm(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        seeds.push_back(c);
      }
    }
  Subgroup sub = subgroup_generated(g, seeds);
  check_invariant(sub.normal, "derived subgroup must be normal");
  return sub;
}

Subgroup center(GroupPtr g) {
  std::vector<Element> members;
  for (Element z = 0; z < g->order(); ++z) {
    bool central = true;
    for (Element x = 0; x < g->order() && central; ++x)
      central = g->mul(z, x) == g->mul(x, z);
    if (central) members.push_back(z);
  }
  Subgroup sub;
  sub.parent = std::move(g);
  sub.members = std::move(members);
  sub.normal = true;
  return sub;
}

SubgroupGroup subgroup_group(const Subgroup& s) {
  const FiniteGroup& g = *s.parent;
  int n = static_cast<int>(s.members.size());
  std::vector<int> from_parent(g.order(), -1);
  for (int i = 0; i < n; ++i) from_parent[s.members[i]] = i;
  check_invariant(from_parent[0] == 0, "subgroup does not contain identity");

  std::vector<Element> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = from_parent[g.mul(s.members[i], s.members[j])];
      check_invariant(p >= 0, "subgroup members not closed under product");
      table[static_cast<size_t>(i) * n + j] = p;
    }
  std::vector<std::string> names;
  names.reserve(n);
  for (Element m : s.members) names.push_back(g.name(m));

  // pick small generators inside the subgroup index space
  std::vector<Element> gens;
  {
    std::vector<Element> all(n);
    std::iota(all.begin(), all.end(), 0);
    all.erase(all.begin());
    FiniteGroup probe(n, table, names, all);
    gens = small_generating_set(probe);
  }
  SubgroupGroup out;
  out.group = make_group(n, std::move(table), std::move(names), std::move(gens));
  out.to_parent = s.members;
  out.from_parent = std::move(from_parent);
  return out;
}

Quotient quotient_group(GroupPtr g, const Subgroup& n) {
  if (!n.normal) throw InputError("quotient by a non-normal subgroup");
  const FiniteGroup& gr = *g;
  int order = gr.order();

  std::vector<Element> rep(order, -1);  // element -> least element of its coset
  for (Element x = 0; x < order; ++x) {
    if (rep[x] >= 0) continue;
    Element least = x;
    std::vector<Element> coset;
    for (Element h : n.members) coset.push_back(gr.mul(x, h));
    for (Element y : coset) least = std::min(least, y);
    for (Element y : coset) rep[y] = least;
  }
  std::vector<Element> reps;
  for (Element x = 0; x < order; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<int> id_of(order, -1);
  for (size_t i = 0; i < reps.size(); ++i) id_of[reps[i]] = static_cast<int>(i);

  int q = static_cast<int>(reps.size());
  std::vector<Element> table(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[static_cast<size_t>(i) * q + j] = id_of[rep[gr.mul(reps[i], reps[j])]];
  std::vector<std::string> names;
  names.reserve(q);
  for (Element r : reps) names.push_back(gr.name(r));

  std::vector<Element> gens;
  for (Element s : gr.generators()) {
    Element img = id_of[rep[s]];
    if (img != 0 && std::find(gens.begin(), gens.end(), img) == gens.end())
      gens.push_back(img);
  }
  // a quotient of a generated group is generated by the generator images;
  // fall back to all cosets only if the parent declared none
  if (gens.empty() && q > 1) {
    for (int i = 1; i < q; ++i) gens.push_back(i);
  }

  Quotient out;
  out.group = make_group(q, std::move(table), std::move(names), std::move(gens));
  std::vector<Element> images(order);
  for (Element x = 0; x < order; ++x) images[x] = id_of[rep[x]];
  out.projection = GroupHom{std::move(g), out.group, std::move(images)};
  return out;
}

namespace {

AbelianInvariants invariants_of_abelian(GroupPtr g) {
  check_invariant(g->is_abelian(), "invariant factors need an abelian group");
  std::vector<int> peeled;
  GroupPtr cur = g;
  while (cur->order() > 1) {
    Element best = 1;
    int best_order = 0;
    for (Element x = 1; x < cur->order(); ++x) {
      int o = cur->element_order(x);
      if (o > best_order) {
        best_order = o;
        best = x;
      }
    }
    peeled.push_back(best_order);
    std::vector<Element> seed{best};
    Quotient q = quotient_group(cur, subgroup_generated(cur, seed));
    cur = q.group;
  }
  std::reverse(peeled.begin(), peeled.end());
  return AbelianInvariants{std::move(peeled)};
}

}  // namespace

AbelianInvariants abelian_invariants(GroupPtr g) {
  if (g->is_abelian()) return invariants_of_abelian(std::move(g));
  Quotient ab = quotient_group(g, derived_subgroup(g));
  return invariants_of_abelian(ab.group);
}

// --- words and homomorphisms ---

CanonicalWords canonical_words(const FiniteGroup& g,
                               std::span<const Element> gens) {
  CanonicalWords w;
  int n = g.order();
  w.parent.assign(n, -2);
  w.via.assign(n, -1);
  w.parent[0] = -1;
  w.order.push_back(0);
  for (size_t head = 0; head < w.order.size(); ++head) {
    Element x = w.order[head];
    for (size_t k = 0; k < gens.size(); ++k) {
      Element y = g.mul(x, gens[k]);
      if (w.parent[y] == -2) {
        w.parent[y] = x;
        w.via[y] = static_cast<int>(k);
        w.order.push_back(y);
      }
    }
  }
  if (w.order.size() != static_cast<size_t>(n))
    throw InputError("the given elements do not generate the group");
  return w;
}

std::vector<Element> extend_images(const FiniteGroup& cod,
                                   const CanonicalWords& words,
                                   std::span<const Element> gen_images) {
  std::vector<Element> img(words.order.size());
  img[0] = 0;
  for (size_t i = 1; i < words.order.size(); ++i) {
    Element x = words.order[i];
    img[x] = cod.mul(img[words.parent[x]], gen_images[words.via[x]]);
  }
  return img;
}

bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod,
                     const std::vector<Element>& images) {
  int n = dom.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (images[dom.mul(x, y)] != cod.mul(images[x], images[y])) return false;
  return true;
}

std::optional<GroupHom> hom_from_generator_images(
    GroupPtr dom, std::span<const Element> dom_gens,
    std::span<const Element> images, GroupPtr cod) {
  if (dom_gens.size() != images.size())
    throw InputError("generator and image counts differ");
  CanonicalWords words = canonical_words(*dom, dom_gens);
  std::vector<Element> img = extend_images(*cod, words, images);
  if (!is_homomorphism(*dom, *cod, img)) return std::nullopt;
  return GroupHom{std::move(dom), std::move(cod), std::move(img)};
}

std::vector<Element> small_generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<Element> closed = closure_of(g, gens);
  while (closed.size() < static_cast<size_t>(g.order())) {
    std::vector<char> in(g.order(), 0);
    for (Element m : closed) in[m] = 1;
    Element best = -1;
    int best_order = 0;
    for (Element x = 0; x < g.order(); ++x)
      if (!in[x]) {
        int o = g.element_order(x);
        if (o > best_order) {
          best_order = o;
          best = x;
        }
      }
    gens.push_back(best);
    closed = closure_of(g, gens);
  }
  return gens;
}

std::vector<GroupHom> enumerate_homs(GroupPtr dom, GroupPtr cod) {
  std::vector<Element> gens = small_generating_set(*dom);
  CanonicalWords words = canonical_words(*dom, gens);

  std::vector<std::vector<Element>> candidates(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    int go = dom->element_order(gens[k]);
    for (Element c = 0; c < cod->order(); ++c)
      if (go % cod->element_order(c) == 0) candidates[k].push_back(c);
  }

  std::vector<GroupHom> result;
  std::vector<Element> chosen(gens.size());
  auto recurse = [&](auto&& self, size_t k) -> void {
    if (k == gens.size()) {
      std::vector<Element> img = extend_images(*cod, words, chosen);
      if (is_homomorphism(*dom, *cod, img))
        result.push_back(GroupHom{dom, cod, std::move(img)});
      return;
    }
    for (Element c : candidates[k]) {
      chosen[k] = c;
      self(self, k + 1);
    }
  };
  recurse(recurse, 0);

  std::sort(result.begin(), result.end(),
            [](const GroupHom& a, const GroupHom& b) { return a.images < b.images; });
  return result;
}

std::vector<int> conjugacy_class_sizes(const FiniteGroup& g) {
  int n = g.order();
  std::vector<int> size(n, 0);
  std::vector<char> seen(n, 0);
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<Element> orbit;
    std::vector<char> in(n, 0);
    for (Element z = 0; z < n; ++z) {
      Element y = g.conj(z, x);
      if (!in[y]) {
        in[y] = 1;
        orbit.push_back(y);
      }
    }
    for (Element y : orbit) {
      seen[y] = 1;
      size[y] = static_cast<int>(orbit.size());
    }
  }
  return size;
}

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b, int max_order) {
  if (a.order() != b.order()) return false;
  if (a.order() > max_order)
    throw LimitError("isomorphism test beyond configured order bound " +
                     std::to_string(max_order));
  bool a_ab = a.is_abelian(), b_ab = b.is_abelian();
  if (a_ab != b_ab) return false;

  std::vector<int> ord_a(a.order()), ord_b(b.order());
  for (Element x = 0; x < a.order(); ++x) ord_a[x] = a.element_order(x);
  for (Element x = 0; x < b.order(); ++x) ord_b[x] = b.element_order(x);
  {
    auto pa = ord_a, pb = ord_b;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return false;
  }

  std::vector<int> cls_a = conjugacy_class_sizes(a);
  std::vector<int> cls_b = conjugacy_class_sizes(b);
  {
    std::vector<std::pair<int, int>> pa, pb;
    for (Element x = 0; x < a.order(); ++x) pa.emplace_back(ord_a[x], cls_a[x]);
    for (Element x = 0; x < b.order(); ++x) pb.emplace_back(ord_b[x], cls_b[x]);
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return false;
  }

  std::vector<Element> gens = small_generating_set(a);
  CanonicalWords words = canonical_words(a, gens);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (size_t k = 0; k < gens.size(); ++k)
    for (Element c = 0; c < b.order(); ++c)
      if (ord_b[c] == ord_a[gens[k]] && cls_b[c] == cls_a[gens[k]])
        candidates[k].push_back(c);

  std::vector<Element> chosen(gens.size());
  auto recurse = [&](auto&& self, size_t k) -> bool {
    if (k == gens.size()) {
      std::vector<Element> img = extend_images(b, words, chosen);
      std::vector<char> hit(b.order(), 0);
      for (Element y : img) {
        if (hit[y]) return false;
        hit[y] = 1;
      }
      return is_homomorphism(a, b, img);
    }
    for (Element c : candidates[k]) {
      chosen[k] = c;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  return recurse(recurse, 0);
}

int divisor_count(int n) {
  if (n < 1) throw InputError("divisor_count needs a positive integer");
  int count = 0;
  for (int d = 1; d * d <= n; ++d)
    if (n % d == 0) count += (d * d == n) ? 1 : 2;
  return count;
}

namespace {

const std::vector<std::pair<std::string, GroupPtr>>& nonabelian_catalog() {
  static const auto catalog = [] {
    std::vector<std::pair<std::string, GroupPtr>> c;
    c.emplace_back("SL23", sl23_group());
    c.emplace_back("S:3", symmetric_group(3));
    c.emplace_back("S:4", symmetric_group(4));
    c.emplace_back("A:4", alternating_group(4));
    c.emplace_back("A:5", alternating_group(5));
    for (int n = 2; 4 * n <= kDefaultIsoBound; ++n)
      c.emplace_back("Q:" + std::to_string(n), quaternion_group(n));
    for (int n = 3; 2 * n <= kDefaultIsoBound; ++n)
      c.emplace_back("D:" + std::to_string(n), dihedral_group(n));
    return c;
  }();
  return catalog;
}

}  // namespace

std::string identify_group(const FiniteGroup& g, int iso_bound) {
  if (g.is_abelian())
    return to_string(abelian_invariants(std::make_shared<const FiniteGroup>(g)));
  if (g.order() <= iso_bound) {
    for (const auto& [name, cand] : nonabelian_catalog())
      if (cand->order() == g.order() && are_isomorphic(g, *cand, iso_bound))
        return name;
  }
  std::map<int, int> profile;
  for (Element x = 0; x < g.order(); ++x) ++profile[g.element_order(x)];
  std::string s = "order " + std::to_string(g.order()) + ", element orders";
  for (auto [o, k] : profile)
    s += " " + std::to_string(o) + "^" + std::to_string(k);
  return s;
}

}  // namespace mlaw
