#include "mlaw/wedge.hpp"

#include <algorithm>
#include <string>

#include "mlaw/errors.hpp"

namespace mlaw {

namespace {

std::string pair_symbol(int a, int b) {
  return "t[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

void verify_defining_relations(const WedgeSquare& ws) {
  const FiniteGroup& g = *ws.base;
  const FiniteGroup& w = *ws.square;
  int n = g.order();
  if (ws.kind == SquareKind::exterior) {
    for (Element a = 0; a < n; ++a)
      check_invariant(ws.wedge(a, a) == 0, "relation a^a = 1 fails in W");
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        check_invariant(w.mul(ws.wedge(a, b), ws.wedge(b, a)) == 0,
                        "relation (a^b)(b^a) = 1 fails in W");
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        check_invariant(
            ws.wedge(g.mul(a, b), c) ==
                w.mul(ws.wedge(g.conj(a, b), g.conj(a, c)), ws.wedge(a, c)),
            "relation ab^c = (^a b ^ ^a c)(a^c) fails in W");
        check_invariant(
            ws.wedge(a, g.mul(b, c)) ==
                w.mul(ws.wedge(a, b), ws.wedge(g.conj(b, a), g.conj(b, c))),
            "relation a^bc = (a^b)(^b a ^ ^b c) fails in W");
      }
}

WedgeSquare build_square(GroupPtr g, SquareKind kind,
                         const EnumerationLimits& limits) {
  Presentation pres = wedge_presentation(*g, kind);
  CosetTable table = todd_coxeter(pres, limits);
  CosetGroup cg = group_from_cosets(table, pres);

  WedgeSquare ws;
  ws.base = std::move(g);
  ws.square = cg.group;
  ws.kind = kind;
  ws.pair_map = std::move(cg.generator_map);
  verify_defining_relations(ws);
  conjugation_action(ws);
  return ws;
}

}  // namespace

std::vector<std::pair<Element, Element>> generator_pairs(const WedgeSquare& ws) {
  const FiniteGroup& g = *ws.base;
  std::vector<std::pair<Element, Element>> rep(ws.square->order(), {-1, -1});
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      Element w = ws.wedge(a, b);
      if (rep[w].first == -1) rep[w] = {a, b};
    }
  std::vector<std::pair<Element, Element>> out;
  for (Element gen : ws.square->generators()) {
    check_invariant(rep[gen].first != -1,
                    "square generator is not a pair image");
    out.push_back(rep[gen]);
  }
  return out;
}

Presentation wedge_presentation(const FiniteGroup& g, SquareKind kind) {
  int n = g.order();
  Presentation p;
  p.generators.reserve(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p.generators.push_back(pair_symbol(a, b));
  auto t = [n](Element a, Element b) { return a * n + b; };

  size_t count = 2 * static_cast<size_t>(n) * n * n;
  if (kind == SquareKind::exterior) count += n + static_cast<size_t>(n) * n;
  p.relators.reserve(count);

  if (kind == SquareKind::exterior) {
    for (Element a = 0; a < n; ++a) {
      Word w;
      w.append(t(a, a), 1);
      p.relators.push_back(std::move(w));
    }
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        Word w;
        w.append(t(a, b), 1);
        w.append(t(b, a), 1);
        p.relators.push_back(std::move(w));
      }
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        // ab ^ c = (^a b ^ ^a c)(a ^ c)
        Word w1;
        w1.append(t(g.mul(a, b), c), 1);
        w1.append(t(a, c), -1);
        w1.append(t(g.conj(a, b), g.conj(a, c)), -1);
        p.relators.push_back(std::move(w1));
        // a ^ bc = (a ^ b)(^b a ^ ^b c)
        Word w2;
        w2.append(t(a, g.mul(b, c)), 1);
        w2.append(t(g.conj(b, a), g.conj(b, c)), -1);
        w2.append(t(a, b), -1);
        p.relators.push_back(std::move(w2));
      }
  return p;
}

WedgeSquare tensor_square(GroupPtr g, const EnumerationLimits& limits) {
  return build_square(std::move(g), SquareKind::tensor, limits);
}

WedgeSquare exterior_square(GroupPtr g, const EnumerationLimits& limits) {
  return build_square(std::move(g), SquareKind::exterior, limits);
}

const std::vector<Element>& conjugation_action(WedgeSquare& ws) {
  const FiniteGroup& g = *ws.base;
  const FiniteGroup& w = *ws.square;
  int n = g.order();
  int m = w.order();

  std::vector<std::pair<Element, Element>> pairs = generator_pairs(ws);
  CanonicalWords words = canonical_words(w, w.generators());

  ws.action.assign(static_cast<size_t>(n) * m, -1);
  std::vector<Element> gen_images(pairs.size());
  for (Element z = 0; z < n; ++z) {
    for (size_t k = 0; k < pairs.size(); ++k)
      gen_images[k] = ws.wedge(g.conj(z, pairs[k].first), g.conj(z, pairs[k].second));
    std::vector<Element> img = extend_images(w, words, gen_images);

    check_invariant(is_homomorphism(w, w, img),
                    "conjugation action is not a homomorphism of W");
    std::vector<char> hit(m, 0);
    for (Element y : img) hit[y] = 1;
    for (int y = 0; y < m; ++y)
      check_invariant(hit[y], "conjugation action is not bijective on W");
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        check_invariant(img[ws.wedge(a, b)] ==
                            ws.wedge(g.conj(z, a), g.conj(z, b)),
                        "conjugation action disagrees with the pair map");
    std::copy(img.begin(), img.end(),
              ws.action.begin() + static_cast<size_t>(z) * m);
  }

  for (Element y = 0; y < m; ++y)
    check_invariant(ws.act(0, y) == y, "identity must act trivially on W");
  for (Element z1 = 0; z1 < n; ++z1)
    for (Element z2 = 0; z2 < n; ++z2) {
      Element z12 = g.mul(z1, z2);
      for (Element y = 0; y < m; ++y)
        check_invariant(ws.act(z12, y) == ws.act(z1, ws.act(z2, y)),
                        "conjugation action is not compositional");
    }
  return ws.action;
}

SchurData commutator_hom(const WedgeSquare& ws) {
  if (ws.kind != SquareKind::exterior)
    throw InputError("the commutator homomorphism is defined on the exterior square");
  const FiniteGroup& g = *ws.base;
  const FiniteGroup& w = *ws.square;
  int m = w.order();

  std::vector<std::pair<Element, Element>> pairs = generator_pairs(ws);
  CanonicalWords words = canonical_words(w, w.generators());
  std::vector<Element> gen_images(pairs.size());
  for (size_t k = 0; k < pairs.size(); ++k)
    gen_images[k] = g.comm(pairs[k].first, pairs[k].second);
  std::vector<Element> img = extend_images(g, words, gen_images);

  check_invariant(is_homomorphism(w, g, img),
                  "chi does not extend to a homomorphism");
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      check_invariant(img[ws.wedge(a, b)] == g.comm(a, b),
                      "chi(a^b) must be the commutator [a,b]");

  Subgroup derived = derived_subgroup(ws.base);
  {
    std::vector<char> in_image(g.order(), 0);
    for (Element y : img) in_image[y] = 1;
    int image_size = 0;
    for (Element y = 0; y < g.order(); ++y)
      if (in_image[y]) {
        check_invariant(derived.contains(y), "chi image outside [G,G]");
        ++image_size;
      }
    check_invariant(image_size == derived.order(), "chi is not onto [G,G]");
    check_invariant(static_cast<long>(m) ==
                        static_cast<long>(image_size) *
                            std::count(img.begin(), img.end(), 0),
                    "|W| must equal |M(G)| * |[G,G]|");
  }

  SchurData out;
  std::vector<Element> kernel;
  for (Element y = 0; y < m; ++y)
    if (img[y] == 0) kernel.push_back(y);
  for (Element k : kernel)
    for (Element y = 0; y < m; ++y)
      check_invariant(w.mul(k, y) == w.mul(y, k),
                      "Schur multiplier must be central in W");
  out.multiplier = Subgroup{ws.square, std::move(kernel), true};
  out.invariants = abelian_invariants(subgroup_group(out.multiplier).group);
  out.chi = GroupHom{ws.square, ws.base, std::move(img)};

  if (g.is_abelian()) {
    check_invariant(w.is_abelian(), "W must be abelian for abelian G");
    check_invariant(out.multiplier.order() == m,
                    "M(G) must be all of W for abelian G");
  }
  return out;
}

}  // namespace mlaw
