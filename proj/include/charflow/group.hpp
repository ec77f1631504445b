#pragma once

// Generators of the modular group, words over them, the normal form in
// Z2 * Z2 * Z2 extended by sign changes and the x/y transposition, and
// orbit-tree / BFS enumeration.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "charflow/character.hpp"
#include "charflow/errors.hpp"
#include "charflow/numeric.hpp"

namespace charflow {

enum class Generator : std::uint8_t { Qx, Qy, Qz, SigmaXZ, SigmaYZ, SigmaXY, Txy };

inline bool is_quadratic(Generator g) {
  return g == Generator::Qx || g == Generator::Qy || g == Generator::Qz;
}
inline bool is_sign(Generator g) {
  return g == Generator::SigmaXZ || g == Generator::SigmaYZ || g == Generator::SigmaXY;
}

inline char generator_letter(Generator g) {
  switch (g) {
    case Generator::Qx: return 'x';
    case Generator::Qy: return 'y';
    case Generator::Qz: return 'z';
    case Generator::SigmaXZ: return 'X';
    case Generator::SigmaYZ: return 'Y';
    case Generator::SigmaXY: return 'S';
    case Generator::Txy: return 'T';
  }
  return '?';
}

inline Generator parse_generator(char c) {
  switch (c) {
    case 'x': return Generator::Qx;
    case 'y': return Generator::Qy;
    case 'z': return Generator::Qz;
    case 'X': return Generator::SigmaXZ;
    case 'Y': return Generator::SigmaYZ;
    case 'S': return Generator::SigmaXY;
    case 'T': return Generator::Txy;
  }
  throw ParseError(std::string("unknown generator letter '") + c + "'");
}

struct GroupWord {
  std::vector<Generator> letters;
  bool reduced = false;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const GroupWord&) const = default;
};

inline GroupWord word_from_string(const std::string& s) {
  GroupWord w;
  for (char c : s) w.letters.push_back(parse_generator(c));
  return w;
}

inline std::string word_to_string(const GroupWord& w) {
  std::string s;
  for (Generator g : w.letters) s.push_back(generator_letter(g));
  return s;
}

// All generators are involutions, so the inverse is the reversed word.
inline GroupWord inverse_word(const GroupWord& w) {
  GroupWord inv;
  inv.letters.assign(w.letters.rbegin(), w.letters.rend());
  return inv;
}

// ---------------------------------------------------------------------------
// Generator action.

template <class T>
Character<T> apply(Generator g, const Character<T>& u) {
  if (g == Generator::Txy) return transpose_xy(u);
  if (u.component != Component::C11)
    throw ComponentMismatch("generator acts on component 11 only");
  switch (g) {
    case Generator::Qx: return {u.y * u.z - u.x, u.y, u.z, u.component};
    case Generator::Qy: return {u.x, u.x * u.z - u.y, u.z, u.component};
    case Generator::Qz: return {u.x, u.y, -u.x * u.y - u.z, u.component};
    case Generator::SigmaXZ: return sign_change(u, SignChange::SigmaXZ);
    case Generator::SigmaYZ: return sign_change(u, SignChange::SigmaYZ);
    case Generator::SigmaXY: return sign_change(u, SignChange::SigmaXY);
    default: return u;
  }
}

// Left-to-right composition: the first letter acts first.
template <class T>
Character<T> apply_word(const GroupWord& w, const Character<T>& u) {
  Character<T> v = u;
  for (Generator g : w.letters) v = charflow::apply(g, v);
  return v;
}

// ---------------------------------------------------------------------------
// Word reduction.
//
// Normal form: [sign][T] q1 q2 ... qn where the sign part is a single
// element of the Klein four-group {e, sigma_xz, sigma_yz, sigma_xy}, T is
// the optional x/y transposition, and q1..qn is a reduced word in
// Qx, Qy, Qz (no two adjacent letters equal). Sign changes commute with
// every quadratic reflection; T conjugates Qx <-> Qy and
// sigma_xz <-> sigma_yz.

namespace detail {

// Klein four-group product on {none, XZ, YZ, XY}.
inline std::optional<SignChange> sign_mul(std::optional<SignChange> a, SignChange b) {
  if (!a) return b;
  if (*a == b) return std::nullopt;
  // the product of two distinct non-trivial elements is the third one
  int sum = static_cast<int>(*a) + static_cast<int>(b);
  // XZ=0, YZ=1, XY=2: {0,1}->2, {0,2}->1, {1,2}->0
  return static_cast<SignChange>(3 - sum);
}

inline SignChange sign_conj_txy(SignChange s) {
  if (s == SignChange::SigmaXZ) return SignChange::SigmaYZ;
  if (s == SignChange::SigmaYZ) return SignChange::SigmaXZ;
  return s;
}

inline Generator q_conj_txy(Generator g) {
  if (g == Generator::Qx) return Generator::Qy;
  if (g == Generator::Qy) return Generator::Qx;
  return g;
}

inline SignChange as_sign(Generator g) {
  switch (g) {
    case Generator::SigmaXZ: return SignChange::SigmaXZ;
    case Generator::SigmaYZ: return SignChange::SigmaYZ;
    default: return SignChange::SigmaXY;
  }
}

inline Generator as_generator(SignChange s) {
  switch (s) {
    case SignChange::SigmaXZ: return Generator::SigmaXZ;
    case SignChange::SigmaYZ: return Generator::SigmaYZ;
    case SignChange::SigmaXY: return Generator::SigmaXY;
  }
  return Generator::SigmaXY;
}

}  // namespace detail

inline GroupWord reduce_word(const GroupWord& w) {
  std::optional<SignChange> sign;
  bool txy = false;
  std::vector<Generator> q;
  for (Generator g : w.letters) {
    if (is_quadratic(g)) {
      // the letter lands at the end of the word, after the stored q-part,
      // so no conjugation is involved
      if (!q.empty() && q.back() == g)
        q.pop_back();
      else
        q.push_back(g);
    } else if (g == Generator::Txy) {
      // move T left past the quadratic part, conjugating it
      for (Generator& h : q) h = detail::q_conj_txy(h);
      txy = !txy;
    } else {
      SignChange s = detail::as_sign(g);
      if (txy) s = detail::sign_conj_txy(s);
      sign = detail::sign_mul(sign, s);
    }
  }
  GroupWord out;
  if (sign) out.letters.push_back(detail::as_generator(*sign));
  if (txy) out.letters.push_back(Generator::Txy);
  out.letters.insert(out.letters.end(), q.begin(), q.end());
  out.reduced = true;
  return out;
}

// ---------------------------------------------------------------------------
// Orbit enumeration over Lambda = <Qx, Qy, Qz>.

inline constexpr std::size_t kOrbitTreeDepthCap = 24;
inline constexpr std::size_t kBfsWordCap = 14;

template <class T>
struct OrbitNode {
  std::string word;       // reduced Lambda-word from the root, first letter acts first
  Character<T> value;
  std::size_t depth = 0;
  std::ptrdiff_t parent = -1;
};

template <class T>
struct OrbitTree {
  Character<T> root;
  std::size_t depth = 0;
  std::vector<OrbitNode<T>> nodes;  // breadth-first order, node 0 is the root
};

// The binary tree rooted at u: children of the root are Qx(u), Qy(u);
// below that, the two generators different from the arriving one.
template <class T>
OrbitTree<T> orbit_tree(const Character<T>& u, std::size_t depth,
                        std::size_t depth_cap = kOrbitTreeDepthCap) {
  if (depth > depth_cap) throw DepthCapExceeded("orbit_tree depth exceeds cap");
  OrbitTree<T> tree{u, depth, {}};
  tree.nodes.push_back({"", u, 0, -1});
  std::size_t level_begin = 0, level_end = 1;
  for (std::size_t d = 0; d < depth; ++d) {
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const auto node = tree.nodes[i];  // copy: push_back may reallocate
      for (Generator g : {Generator::Qx, Generator::Qy, Generator::Qz}) {
        if (!node.word.empty() && node.word.back() == generator_letter(g)) continue;
        if (node.word.empty() && g == Generator::Qz) continue;
        tree.nodes.push_back({node.word + generator_letter(g), charflow::apply(g, node.value),
                              d + 1, static_cast<std::ptrdiff_t>(i)});
      }
    }
    level_begin = level_end;
    level_end = tree.nodes.size();
  }
  return tree;
}

namespace detail {
template <class T>
std::tuple<const T&, const T&, const T&> coord_tie(const Character<T>& u) {
  return std::tie(u.x, u.y, u.z);
}
template <class T>
struct CharacterLess {
  bool operator()(const Character<T>& a, const Character<T>& b) const {
    return coord_tie(a) < coord_tie(b);
  }
};
}  // namespace detail

// Exact BFS over reduced Lambda-words, deduplicated by coordinates.
// Rational backend only: exact dedup is the point of the oracle.
template <class T>
std::map<std::string, Character<T>> bfs_orbit(const Character<T>& u, std::size_t max_len,
                                              std::size_t word_cap = kBfsWordCap) {
  static_assert(is_exact_v<T>, "bfs_orbit requires the exact backend");
  if (max_len > word_cap) throw DepthCapExceeded("bfs_orbit word length exceeds cap");
  std::map<std::string, Character<T>> out;
  std::map<Character<T>, std::string, detail::CharacterLess<T>> seen;
  struct Item {
    std::string word;
    Character<T> value;
  };
  std::vector<Item> frontier{{"", u}};
  out.emplace("", u);
  seen.emplace(u, "");
  for (std::size_t len = 0; len < max_len; ++len) {
    std::vector<Item> next;
    for (const auto& item : frontier) {
      for (Generator g : {Generator::Qx, Generator::Qy, Generator::Qz}) {
        if (!item.word.empty() && item.word.back() == generator_letter(g)) continue;
        Item child{item.word + generator_letter(g), charflow::apply(g, item.value)};
        if (seen.emplace(child.value, child.word).second) {
          out.emplace(child.word, child.value);
          next.push_back(child);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace charflow
