#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ainf/twisted.hpp"

namespace ainf {

/// Block decomposition O_0, ..., O_l of a directed category, or the reason
/// why none exists.
struct DirectedStructure {
  bool directed = false;
  std::vector<std::vector<std::size_t>> blocks;  // objects per block, in input order
  std::vector<std::size_t> block_of;             // block index per object
  std::size_t length = 0;                        // number of blocks - 1

  /// When not directed: a nonzero non-invertible morphism inside a block.
  std::optional<Morphism> witness;
  std::string reason;
  /// False when some same-block hom component had dimension ≥ 2 over a
  /// large field, so only basis vectors and their pairwise sums were tested.
  bool exhaustive = true;
};

/// Blocks are the strongly connected components of the nonzero-hom relation,
/// layered by longest path; then every nonzero homogeneous morphism inside a
/// block must have a two-sided inverse under m_2. Requires m_1 = 0.
DirectedStructure analyze_directed(const Category& c);

/// Two-sided inverse of a homogeneous f under m_2, if any.
std::optional<Morphism> find_inverse(const Category& c, const Morphism& f);

/// True iff the summands appear in non-decreasing block order and every δ
/// entry goes from a strictly earlier block to a strictly later one.
/// Throws PreconditionError when a summand object has no block.
bool block_form_check(const TwObject& x, const DirectedStructure& d);

/// Stable reordering of the summands by block index (δ permuted along).
TwObject regroup(const TwObject& x, const DirectedStructure& d);

}  // namespace ainf
