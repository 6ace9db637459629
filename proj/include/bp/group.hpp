#ifndef BP_GROUP_HPP
#define BP_GROUP_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "bp/bigint.hpp"
#include "bp/perm.hpp"

namespace bp {

/// Default cap on element enumeration (elements(), conjugacy classes,
/// subgroup intersections).  Overridable per call and via the CLI.
inline constexpr std::uint64_t kDefaultEnumCap = 100'000;

/// Hard cap on permutation degree.
inline constexpr Point kMaxDegree = 100'000;

/// Deterministic Schreier-Sims stabilizer chain.
///
/// Base points come from the forced prefix first (used by point
/// stabilizers), then are chosen as the smallest point moved by the residue
/// that opens each level.  Construction is deterministic: the same
/// generators in the same order always produce the same chain.
///
/// A generator placed at level l fixes the base points of all shallower
/// levels, so the group of level i is generated by the new_gens of all
/// levels >= i.  The verify pass establishes the Schreier condition at
/// every level, which is what makes order() exact.
class StabilizerChain {
public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> new_gens;  // gens first placed at this level
    std::vector<Permutation> gens;      // all gens of this level's group
    // Schreier vector: for each point, the index into gens of the generator
    // that reached it (-1 root, -2 outside the orbit) and the previous point.
    std::vector<std::int32_t> via_gen;
    std::vector<Point> via_prev;
    std::vector<Point> orbit;  // BFS discovery order
  };

  StabilizerChain(Point degree, std::vector<Point> forced_base = {});

  /// Add generators and re-establish the Schreier condition.
  void extend(const std::vector<Permutation> &gens);

  Point degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  const Level &level(std::size_t i) const { return levels_[i]; }
  const BigInt &order() const { return order_; }

  bool contains(const Permutation &p) const;

  /// Sift p through levels [start, depth).  Returns the residue and the
  /// level at which sifting stopped (== depth on full success).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t start = 0) const;

  /// Coset representative u with level(i).base ^ u = p.
  Permutation transversal(std::size_t i, Point p) const;

  bool in_orbit(std::size_t i, Point p) const {
    return levels_[i].via_gen[p] != kOutside;
  }

private:
  static constexpr std::int32_t kRoot = -1;
  static constexpr std::int32_t kOutside = -2;

  void place(Permutation residue, std::size_t level);
  void recompute_orbit(std::size_t i);
  void rebuild_level_gens(std::size_t i);
  void verify_from(std::size_t start);
  void recompute_order();

  Point degree_;
  std::vector<Point> forced_base_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

/// A finitely generated permutation group with a verified stabilizer chain.
///
/// Handles are immutable after construction and cheap to copy (the chain is
/// shared).  Two handles may describe the same subgroup; use same_group()
/// rather than comparing generator lists.
class Group {
public:
  /// Build from generators (non-empty, uniform degree; identity allowed).
  /// The chain is verified by a strip test on all generators and on
  /// deterministic pseudo-random products.
  explicit Group(std::vector<Permutation> generators,
                 std::vector<Point> forced_base = {});

  static Group trivial(Point degree);

  Point degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return gens_; }
  const StabilizerChain &chain() const { return *chain_; }
  const BigInt &order() const { return chain_->order(); }

  bool is_trivial() const { return order() == 1; }
  bool contains(const Permutation &p) const;
  bool contains_group(const Group &other) const;
  bool same_group(const Group &other) const;
  bool is_normal_in(const Group &ambient) const;

  /// All elements, each exactly once, in deterministic chain order.
  /// Throws CapError if order() > cap.
  std::vector<Permutation> elements(std::uint64_t cap = kDefaultEnumCap) const;

  std::vector<Point> orbit_of(Point a) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  /// Stabilizer of a point, with order(G) = |orbit(a)| * order(G_a).
  Group point_stabilizer(Point a) const;

private:
  Point degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<const StabilizerChain> chain_;
};

/// The image of a group action together with its kernel size and labels
/// describing what each new point is.
struct ActionImage {
  Group source;
  Group image;
  BigInt kernel_order;
  std::vector<std::string> point_labels;
};

/// Action of G on the right cosets of H by right multiplication.
/// H must be a subgroup of G (checked on generators).  The stabilizer of
/// the point labeled by H itself is H; this is verified when order(H)
/// fits under cap.
ActionImage coset_action(const Group &G, const Group &H,
                         std::uint64_t cap = kDefaultEnumCap);

/// Join <A, B> inside a common symmetric group.
Group join(const Group &A, const Group &B);

/// Intersection A & B, computed by enumerating the smaller factor.
/// Throws CapError if min(order) exceeds cap.
Group intersection(const Group &A, const Group &B,
                   std::uint64_t cap = kDefaultEnumCap);

/// Group file format: first line "degree N"; each further non-comment line
/// one generator in cycle notation; '#' starts a comment.
Group parse_group_file(std::istream &in);
Group parse_group_text(const std::string &text);
std::string render_group_file(const Group &G);

} // namespace bp

#endif
