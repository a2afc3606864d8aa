#pragma once

// Noncrossing perfect matchings on 2n circle points, rooted plane trees,
// and the boundary-walk bijection between them.
//
// Walk convention: start at the root, visit children in order, and number
// every edge traversal 1..2n. An edge maps to (down step, up step).

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pvalid/word.hpp"

namespace pvalid {

/// 1-based position pair with first < second.
using PositionPair = std::pair<std::size_t, std::size_t>;

struct Matching {
  /// Sorted by first coordinate; each pair has first < second.
  std::vector<PositionPair> pairs;

  Matching() = default;
  /// Normalizes orientation and order; does not check perfection.
  explicit Matching(std::vector<PositionPair> p);

  std::size_t edge_count() const noexcept { return pairs.size(); }

  /// partner[i] for 1-based i; index 0 unused. Requires a perfect matching.
  std::vector<std::size_t> partners() const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

/// True iff every position 1..2n appears exactly once, n = edge_count().
bool is_perfect(const Matching& m);

bool is_noncrossing(const Matching& m);

/// Noncrossing, and every pair joins complementary letters. False when the
/// matching is imperfect or sized differently from the word.
bool is_valid_matching(const Word& p, const Matching& m);

/// "(1,4)(2,3)"
std::string to_string(const Matching& m);
Matching parse_matching(std::string_view text);

/// Rooted plane tree; children are ordered.
struct PlaneTree {
  std::vector<PlaneTree> children;

  std::size_t edge_count() const noexcept;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

/// Balanced parentheses over the boundary walk: "(())" is a two-edge path.
std::string to_string(const PlaneTree& t);
PlaneTree parse_tree(std::string_view text);

Matching matching_from_tree(const PlaneTree& t);

/// Throws StructureError unless m is perfect and noncrossing.
PlaneTree tree_from_matching(const Matching& m);

/// Throws StructureError when |p| != 2 * edges.
bool tree_is_p_valid(const Word& p, const PlaneTree& t);

/// All Catalan(n) noncrossing perfect matchings on 2n points, in
/// lexicographic order of their sorted pair lists.
std::vector<Matching> all_noncrossing_matchings(std::size_t n);

/// All Catalan(n) plane trees with n edges.
std::vector<PlaneTree> all_plane_trees(std::size_t n);

}  // namespace pvalid
