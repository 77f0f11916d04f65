#include "mlaw/coset.hpp"

#include <algorithm>
#include <deque>

#include "mlaw/errors.hpp"

namespace mlaw {

CosetTable::CosetTable(int ngens, std::vector<std::vector<int32_t>> rows,
                       long total_defined, int passes)
    : ngens_(ngens),
      rows_(std::move(rows)),
      total_defined_(total_defined),
      passes_(passes) {}

namespace {

// Columns come in (generator, inverse) pairs: col(g) = 2g, col(g^-1) = 2g+1,
// so the inverse column of c is c ^ 1.
class Enumerator {
public:
  Enumerator(const Presentation& p, const EnumerationLimits& limits)
      : ngens_(static_cast<int>(p.generators.size())),
        ncols_(2 * ngens_),
        limits_(limits) {
    for (const Word& w : p.relators) {
      std::vector<int32_t> cols;
      for (auto [g, e] : w.factors) {
        int32_t c = e > 0 ? 2 * g : 2 * g + 1;
        for (int k = 0; k < (e > 0 ? e : -e); ++k) cols.push_back(c);
      }
      if (cols.empty()) continue;  // trivially satisfied
      relator_offsets_.push_back(static_cast<int32_t>(relator_data_.size()));
      relator_data_.insert(relator_data_.end(), cols.begin(), cols.end());
    }
    relator_offsets_.push_back(static_cast<int32_t>(relator_data_.size()));
  }

  CosetTable run() {
    define_root();
    int passes = 0;
    while (true) {
      ++passes;
      if (passes > limits_.max_passes)
        throw InvariantError("coset table failed to close within pass limit");
      sweep();
      if (verify()) break;
    }
    return standardize(passes);
  }

private:
  int find(int c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  bool live(int c) { return parent_[c] == c; }

  int define(int from, int col) {
    if (total_ >= limits_.max_cosets)
      throw LimitError("coset limit of " + std::to_string(limits_.max_cosets) +
                           " exceeded (possibly infinite group or limits too small)",
                       live_, total_);
    int idx = static_cast<int>(rows_.size());
    rows_.emplace_back(ncols_, -1);
    parent_.push_back(idx);
    ++live_;
    ++total_;
    rows_[from][col] = idx;
    rows_[idx][col ^ 1] = from;
    return idx;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    queue.push_back(b);
  }

  // Install edge x --col--> y (and the reverse edge), merging on conflicts.
  void force_edge(int x, int col, int y, std::deque<int>& queue) {
    x = find(x);
    y = find(y);
    int32_t ex = rows_[x][col];
    if (ex != -1) {
      merge(find(ex), y, queue);
      return;
    }
    rows_[x][col] = y;
    int32_t ey = rows_[y][col ^ 1];
    if (ey == -1)
      rows_[y][col ^ 1] = x;
    else if (find(ey) != x)
      merge(find(ey), x, queue);
  }

  void process_coincidences(std::deque<int>& queue) {
    while (!queue.empty()) {
      int dead = queue.front();
      queue.pop_front();
      std::vector<int32_t> row = std::move(rows_[dead]);
      rows_[dead].clear();
      rows_[dead].shrink_to_fit();
      for (int col = 0; col < ncols_; ++col) {
        if (row[col] == -1) continue;
        force_edge(find(dead), col, find(row[col]), queue);
      }
    }
  }

  void coincide(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    process_coincidences(queue);
  }

  // Trace one relator from coset alpha, defining cosets to bridge any gap
  // wider than one edge and deducing or coinciding on the final edge.
  void scan_and_fill(int alpha, const int32_t* word, int len) {
    int f = alpha, b = alpha;
    int i = 0, j = len;
    while (true) {
      while (i < j) {
        int32_t t = rows_[f][word[i]];
        if (t == -1) break;
        f = find(t);
        ++i;
      }
      if (i == j) {
        if (f != b) coincide(f, b);
        return;
      }
      while (j > i) {
        int32_t t = rows_[b][word[j - 1] ^ 1];
        if (t == -1) break;
        b = find(t);
        --j;
      }
      if (j == i) {
        if (f != b) coincide(f, b);
        return;
      }
      if (j == i + 1) {
        std::deque<int> queue;
        force_edge(f, word[i], b, queue);
        process_coincidences(queue);
        return;
      }
      f = define(f, word[i]);
      ++i;
    }
  }

  void define_root() {
    rows_.emplace_back(ncols_, -1);
    parent_.push_back(0);
    live_ = 1;
    total_ = 1;
  }

  void sweep() {
    size_t nrel = relator_offsets_.size() - 1;
    for (size_t alpha = 0; alpha < rows_.size(); ++alpha) {
      if (!live(static_cast<int>(alpha))) continue;
      for (size_t r = 0; r < nrel; ++r) {
        scan_and_fill(static_cast<int>(alpha),
                      relator_data_.data() + relator_offsets_[r],
                      relator_offsets_[r + 1] - relator_offsets_[r]);
        if (!live(static_cast<int>(alpha))) break;
      }
      if (!live(static_cast<int>(alpha))) continue;
      for (int col = 0; col < ncols_; ++col)
        if (rows_[alpha][col] == -1) define(static_cast<int>(alpha), col);
    }
  }

  // Completion and relator closure over every live coset; also checks the
  // forward/inverse column consistency.
  bool verify() {
    size_t nrel = relator_offsets_.size() - 1;
    for (size_t c = 0; c < rows_.size(); ++c) {
      if (!live(static_cast<int>(c))) continue;
      for (int col = 0; col < ncols_; ++col) {
        int32_t t = rows_[c][col];
        if (t == -1) return false;
        int target = find(t);
        int32_t back = rows_[target][col ^ 1];
        if (back == -1 || find(back) != static_cast<int>(c)) return false;
      }
      for (size_t r = 0; r < nrel; ++r) {
        int x = static_cast<int>(c);
        for (int32_t k = relator_offsets_[r]; k < relator_offsets_[r + 1]; ++k) {
          int32_t t = rows_[x][relator_data_[k]];
          if (t == -1) return false;
          x = find(t);
        }
        if (x != static_cast<int>(c)) return false;
      }
    }
    return true;
  }

  CosetTable standardize(int passes) {
    int root = find(0);
    std::vector<int32_t> renumber(rows_.size(), -1);
    std::vector<int32_t> bfs{static_cast<int32_t>(root)};
    renumber[root] = 0;
    for (size_t head = 0; head < bfs.size(); ++head) {
      int c = bfs[head];
      for (int col = 0; col < ncols_; ++col) {
        int t = find(rows_[c][col]);
        if (renumber[t] == -1) {
          renumber[t] = static_cast<int32_t>(bfs.size());
          bfs.push_back(static_cast<int32_t>(t));
        }
      }
    }
    check_invariant(bfs.size() == static_cast<size_t>(live_),
                    "coset table is not connected");
    std::vector<std::vector<int32_t>> out(bfs.size());
    for (size_t i = 0; i < bfs.size(); ++i) {
      out[i].resize(ncols_);
      for (int col = 0; col < ncols_; ++col)
        out[i][col] = renumber[find(rows_[bfs[i]][col])];
    }
    return CosetTable(ngens_, std::move(out), total_, passes);
  }

  int ngens_;
  int ncols_;
  EnumerationLimits limits_;
  std::vector<int32_t> relator_data_;
  std::vector<int32_t> relator_offsets_;
  std::vector<std::vector<int32_t>> rows_;
  std::vector<int32_t> parent_;
  long live_ = 0;
  long total_ = 0;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const EnumerationLimits& limits) {
  if (limits.max_cosets < 1 || limits.max_passes < 1)
    throw InputError("enumeration limits must be positive");
  return Enumerator(p, limits).run();
}

CosetGroup group_from_cosets(const CosetTable& t, const Presentation& p) {
  check_invariant(t.generator_count() == static_cast<int>(p.generators.size()),
                  "coset table does not match the presentation");
  int n = t.live_count();
  for (int c = 0; c < n; ++c)
    for (int g = 0; g < t.generator_count(); ++g)
      for (bool inv : {false, true})
        if (t.target(c, g, inv) < 0 || t.target(c, g, inv) >= n)
          throw InvariantError("incomplete coset table");

  // canonical word of each coset: BFS over columns in order, as in the
  // standardized numbering, so parents precede children
  std::vector<int> parent(n, -2), via_gen(n, -1);
  std::vector<char> via_inv(n, 0);
  parent[0] = -1;
  std::vector<int> order{0};
  for (size_t head = 0; head < order.size(); ++head) {
    int c = order[head];
    for (int g = 0; g < t.generator_count(); ++g)
      for (bool inv : {false, true}) {
        int d = t.target(c, g, inv);
        if (parent[d] == -2) {
          parent[d] = c;
          via_gen[d] = g;
          via_inv[d] = inv;
          order.push_back(d);
        }
      }
  }
  check_invariant(order.size() == static_cast<size_t>(n),
                  "coset table is not transitive");

  // mult(i, j) = coset reached from i along the canonical word of j
  std::vector<Element> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) table[static_cast<size_t>(i) * n + 0] = i;
  for (int idx = 1; idx < static_cast<int>(order.size()); ++idx) {
    int j = order[idx];
    int pj = parent[j];
    for (int i = 0; i < n; ++i) {
      int through = table[static_cast<size_t>(i) * n + pj];
      table[static_cast<size_t>(i) * n + j] =
          t.target(through, via_gen[j], via_inv[j]);
    }
  }

  std::vector<std::string> names(n);
  names[0] = "1";
  for (size_t head = 1; head < order.size(); ++head) {
    int c = order[head];
    names[c] = names[parent[c]] == "1" ? "" : names[parent[c]];
    names[c] += p.generators[via_gen[c]];
    if (via_inv[c]) names[c] += "^-1";
  }

  std::vector<Element> gens;
  std::vector<Element> generator_map(p.generators.size());
  for (size_t g = 0; g < p.generators.size(); ++g) {
    Element e = t.target(0, static_cast<int>(g));
    generator_map[g] = e;
    if (e != 0 && std::find(gens.begin(), gens.end(), e) == gens.end())
      gens.push_back(e);
  }

  CosetGroup out;
  out.group = make_group(n, std::move(table), std::move(names), std::move(gens));
  out.generator_map = std::move(generator_map);
  return out;
}

}  // namespace mlaw
