#ifndef BP_PERM_HPP
#define BP_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bp {

using Point = std::uint32_t;

/// A permutation of {0,...,n-1} stored as its image table.
///
/// Values are immutable after construction and safe to read from any number
/// of threads.  Composition follows the right-action convention used
/// throughout the library: in product(p, q) the permutation p acts first,
/// so (p*q)(x) = q(p(x)) and x^(pq) = (x^p)^q.
///
/// Points are 0-based internally; all textual I/O (cycle notation) is
/// 1-based.
class Permutation {
public:
  /// Identity of the given degree.
  explicit Permutation(Point degree);

  /// From an image table; throws PreconditionError if not a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(Point degree) { return Permutation(degree); }

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point> &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Order of the permutation as a group element (lcm of cycle lengths).
  std::uint64_t element_order() const;

  /// Smallest point moved, or degree() if the identity.
  Point smallest_moved() const;

  std::vector<Point> moved_points() const;

  /// Disjoint cycles of length >= 2, each starting at its minimal point,
  /// sorted by minimal point.
  std::vector<std::vector<Point>> cycles() const;

  /// 1-based disjoint cycle notation; "()" for the identity.
  std::string to_cycle_string() const;

  bool operator==(const Permutation &o) const { return images_ == o.images_; }
  bool operator!=(const Permutation &o) const { return images_ != o.images_; }
  bool operator<(const Permutation &o) const { return images_ < o.images_; }

private:
  std::vector<Point> images_;
};

/// Composition, p first then q.  Degrees must match.
Permutation product(const Permutation &p, const Permutation &q);

inline Permutation operator*(const Permutation &p, const Permutation &q) {
  return product(p, q);
}

/// Conjugate h^-1 * g * h.
Permutation conjugate(const Permutation &g, const Permutation &h);

/// Parse 1-based disjoint cycle notation, e.g. "(1 2 3)(4 5)" or "()".
/// Unmentioned points are fixed.  Throws ParseError naming the offending
/// token for repeated points, out-of-range points and malformed input.
Permutation parse_cycles(const std::string &text, Point degree);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const;
};

} // namespace bp

#endif
