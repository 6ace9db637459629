#include "bp/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "bp/errors.hpp"

namespace bp {

Permutation::Permutation(Point degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw PreconditionError("image table is not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < degree(); ++i)
    inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

std::uint64_t Permutation::element_order() const {
  std::uint64_t ord = 1;
  for (const auto &c : cycles())
    ord = std::lcm(ord, static_cast<std::uint64_t>(c.size()));
  return ord;
}

Point Permutation::smallest_moved() const {
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return i;
  return degree();
}

std::vector<Point> Permutation::moved_points() const {
  std::vector<Point> moved;
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i)
      moved.push_back(i);
  return moved;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    std::vector<Point> cycle;
    Point x = start;
    do {
      cycle.push_back(x);
      seen[x] = true;
      x = images_[x];
    } while (x != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (const auto &c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        os << ' ';
      os << c[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

Permutation product(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw PreconditionError("degree mismatch in product: " +
                            std::to_string(p.degree()) + " vs " +
                            std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < p.degree(); ++i)
    images[i] = q(p(i));
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation &g, const Permutation &h) {
  return product(product(h.inverse(), g), h);
}

Permutation parse_cycles(const std::string &text, Point degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_ws();
  if (pos == text.size())
    throw ParseError("empty cycle expression");

  bool any_cycle = false;
  while (true) {
    skip_ws();
    if (pos == text.size())
      break;
    if (text[pos] != '(')
      throw ParseError(std::string("expected '(' at \"") + text.substr(pos, 8) + "\"");
    ++pos;

    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (pos == text.size())
        throw ParseError("unterminated cycle: missing ')'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError(std::string("unexpected token \"") + text[pos] + "\" inside cycle");
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > 10'000'000)
          throw ParseError("point " + std::to_string(value) + " out of range");
        ++pos;
      }
      if (value == 0)
        throw ParseError("points are 1-based; 0 is not a valid point");
      if (value > degree)
        throw ParseError("point " + std::to_string(value) + " out of range (degree " +
                         std::to_string(degree) + ")");
      Point pt = static_cast<Point>(value - 1);
      if (used[pt])
        throw ParseError("repeated point " + std::to_string(value));
      used[pt] = true;
      cycle.push_back(pt);
    }
    any_cycle = true;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }

  if (!any_cycle)
    throw ParseError("empty cycle expression");
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation &p) const {
  // FNV-1a over the image words
  std::uint64_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace bp
