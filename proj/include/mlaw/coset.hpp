#pragma once

#include <cstdint>
#include <vector>

#include "mlaw/group.hpp"
#include "mlaw/presentation.hpp"

namespace mlaw {

struct EnumerationLimits {
  long max_cosets = 1'000'000;  // cap on cosets ever defined
  int max_passes = 16;          // cap on scan passes until the table closes
};

/// A complete coset table over the trivial subgroup, standardized so that
/// coset 0 is the subgroup coset and numbering follows breadth-first order
/// over the generator columns. Only produced by todd_coxeter.
class CosetTable {
public:
  CosetTable(int ngens, std::vector<std::vector<int32_t>> rows,
             long total_defined, int passes);

  int generator_count() const { return ngens_; }
  int live_count() const { return static_cast<int>(rows_.size()); }

  /// Target of coset under a generator (or its inverse).
  int32_t target(int coset, int gen, bool inverse = false) const {
    return rows_[coset][2 * gen + (inverse ? 1 : 0)];
  }

  long total_defined() const { return total_defined_; }
  int passes() const { return passes_; }

private:
  int ngens_;
  std::vector<std::vector<int32_t>> rows_;
  long total_defined_;
  int passes_;
};

/// Todd-Coxeter coset enumeration over the trivial subgroup: relator-tracing
/// strategy with immediate coincidence handling through union-find, followed
/// by a breadth-first standardization pass. Returns a complete table whose
/// live-coset count is the order of the presented group. Throws LimitError
/// when limits.max_cosets definitions are exhausted (possibly infinite group
/// or limits too small).
CosetTable todd_coxeter(const Presentation& p,
                        const EnumerationLimits& limits = {});

struct CosetGroup {
  GroupPtr group;
  std::vector<Element> generator_map;  // presentation generator -> element
};

/// Turn a completed coset table back into a concrete group: cosets become
/// elements (the subgroup coset is the identity) and multiplication traces
/// canonical words through the table.
CosetGroup group_from_cosets(const CosetTable& t, const Presentation& p);

}  // namespace mlaw
