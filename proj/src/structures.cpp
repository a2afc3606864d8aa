#include "pvalid/structures.hpp"

#include <algorithm>
#include <functional>

#include "pvalid/errors.hpp"

namespace pvalid {

Matching::Matching(std::vector<PositionPair> p) : pairs(std::move(p)) {
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
}

std::vector<std::size_t> Matching::partners() const {
  std::vector<std::size_t> partner(2 * pairs.size() + 1, 0);
  for (const auto& [a, b] : pairs) {
    partner[a] = b;
    partner[b] = a;
  }
  return partner;
}

bool is_perfect(const Matching& m) {
  const std::size_t points = 2 * m.pairs.size();
  std::vector<bool> seen(points + 1, false);
  for (const auto& [a, b] : m.pairs) {
    for (std::size_t x : {a, b}) {
      if (x < 1 || x > points || seen[x]) return false;
      seen[x] = true;
    }
  }
  return true;
}

bool is_noncrossing(const Matching& m) {
  // Stack check: scanning left to right, each closing point must close the
  // most recently opened chord.
  if (!is_perfect(m)) return false;
  const auto partner = m.partners();
  std::vector<std::size_t> open;
  for (std::size_t i = 1; i < partner.size(); ++i) {
    if (partner[i] > i) {
      open.push_back(i);
    } else {
      if (open.empty() || open.back() != partner[i]) return false;
      open.pop_back();
    }
  }
  return true;
}

bool is_valid_matching(const Word& p, const Matching& m) {
  if (p.size() != 2 * m.edge_count()) return false;
  if (!is_noncrossing(m)) return false;
  return std::all_of(m.pairs.begin(), m.pairs.end(), [&](const PositionPair& e) {
    return are_complementary(p[e.first - 1], p[e.second - 1]);
  });
}

std::string to_string(const Matching& m) {
  std::string out;
  for (const auto& [a, b] : m.pairs) {
    out += '(';
    out += std::to_string(a);
    out += ',';
    out += std::to_string(b);
    out += ')';
  }
  return out;
}

Matching parse_matching(std::string_view text) {
  std::vector<PositionPair> pairs;
  std::size_t i = 0;
  auto number = [&]() {
    std::size_t v = 0;
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + (text[i++] - '0');
    if (i == start) throw StructureError("malformed matching text at offset " + std::to_string(i));
    return v;
  };
  auto expect = [&](char c) {
    if (i >= text.size() || text[i] != c) {
      throw StructureError(std::string("expected '") + c + "' at offset " + std::to_string(i));
    }
    ++i;
  };
  while (i < text.size()) {
    expect('(');
    std::size_t a = number();
    expect(',');
    std::size_t b = number();
    expect(')');
    pairs.emplace_back(a, b);
  }
  return Matching(std::move(pairs));
}

std::size_t PlaneTree::edge_count() const noexcept {
  std::size_t n = children.size();
  for (const auto& c : children) n += c.edge_count();
  return n;
}

namespace {

void write_parens(const PlaneTree& t, std::string& out) {
  for (const auto& c : t.children) {
    out += '(';
    write_parens(c, out);
    out += ')';
  }
}

void walk(const PlaneTree& t, std::size_t& step, std::vector<PositionPair>& pairs) {
  for (const auto& c : t.children) {
    std::size_t down = ++step;
    walk(c, step, pairs);
    pairs.emplace_back(down, ++step);
  }
}

// Builds the forest for positions [lo, hi) (1-based) of a noncrossing matching.
PlaneTree build(const std::vector<std::size_t>& partner, std::size_t lo, std::size_t hi) {
  PlaneTree t;
  std::size_t i = lo;
  while (i < hi) {
    std::size_t j = partner[i];
    t.children.push_back(build(partner, i + 1, j));
    i = j + 1;
  }
  return t;
}

}  // namespace

std::string to_string(const PlaneTree& t) {
  std::string out;
  write_parens(t, out);
  return out;
}

PlaneTree parse_tree(std::string_view text) {
  std::vector<PlaneTree> stack(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') {
      stack.emplace_back();
    } else if (text[i] == ')') {
      if (stack.size() < 2) throw StructureError("unbalanced ')' at offset " + std::to_string(i));
      PlaneTree child = std::move(stack.back());
      stack.pop_back();
      stack.back().children.push_back(std::move(child));
    } else {
      throw StructureError("unexpected character in tree text at offset " + std::to_string(i));
    }
  }
  if (stack.size() != 1) throw StructureError("unbalanced '(' in tree text");
  return std::move(stack.front());
}

Matching matching_from_tree(const PlaneTree& t) {
  std::vector<PositionPair> pairs;
  std::size_t step = 0;
  walk(t, step, pairs);
  return Matching(std::move(pairs));
}

PlaneTree tree_from_matching(const Matching& m) {
  if (!is_perfect(m)) throw StructureError("matching is not perfect on 1.." + std::to_string(2 * m.edge_count()));
  if (!is_noncrossing(m)) throw StructureError("matching has crossing pairs");
  const auto partner = m.partners();
  return build(partner, 1, partner.size());
}

bool tree_is_p_valid(const Word& p, const PlaneTree& t) {
  const std::size_t n = t.edge_count();
  if (p.size() != 2 * n) {
    throw StructureError("word length " + std::to_string(p.size()) + " does not match " +
                         std::to_string(n) + " tree edges");
  }
  return is_valid_matching(p, matching_from_tree(t));
}

std::vector<Matching> all_noncrossing_matchings(std::size_t n) {
  // Position 1 pairs with an even position 2k; inside and outside recurse.
  std::vector<std::vector<std::vector<PositionPair>>> by_size(n + 1);
  by_size[0] = {{}};
  for (std::size_t s = 1; s <= n; ++s) {
    for (std::size_t inner = 0; inner < s; ++inner) {
      const std::size_t outer = s - 1 - inner;
      const std::size_t close = 2 * inner + 2;
      for (const auto& in : by_size[inner]) {
        for (const auto& out : by_size[outer]) {
          std::vector<PositionPair> pairs;
          pairs.reserve(s);
          pairs.emplace_back(1, close);
          for (auto [a, b] : in) pairs.emplace_back(a + 1, b + 1);
          for (auto [a, b] : out) pairs.emplace_back(a + close, b + close);
          by_size[s].push_back(std::move(pairs));
        }
      }
    }
  }
  std::vector<Matching> out;
  out.reserve(by_size[n].size());
  for (auto& p : by_size[n]) out.emplace_back(std::move(p));
  return out;
}

std::vector<PlaneTree> all_plane_trees(std::size_t n) {
  // First subtree has `inner` edges; the remaining forest hangs off the root.
  std::vector<std::vector<PlaneTree>> by_size(n + 1);
  by_size[0] = {PlaneTree{}};
  for (std::size_t s = 1; s <= n; ++s) {
    for (std::size_t inner = 0; inner < s; ++inner) {
      for (const auto& first : by_size[inner]) {
        for (const auto& rest : by_size[s - 1 - inner]) {
          PlaneTree t;
          t.children.reserve(rest.children.size() + 1);
          t.children.push_back(first);
          t.children.insert(t.children.end(), rest.children.begin(), rest.children.end());
          by_size[s].push_back(std::move(t));
        }
      }
    }
  }
  return std::move(by_size[n]);
}

}  // namespace pvalid
