#include "bp/group.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "bp/errors.hpp"

namespace bp {

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(Point degree, std::vector<Point> forced_base)
    : degree_(degree), forced_base_(std::move(forced_base)) {
  for (Point b : forced_base_)
    if (b >= degree_)
      throw PreconditionError("forced base point out of range");
}

void StabilizerChain::rebuild_level_gens(std::size_t i) {
  Level &L = levels_[i];
  L.gens = L.new_gens;
  if (i + 1 < levels_.size())
    L.gens.insert(L.gens.end(), levels_[i + 1].gens.begin(), levels_[i + 1].gens.end());
}

void StabilizerChain::recompute_orbit(std::size_t i) {
  Level &L = levels_[i];
  L.via_gen.assign(degree_, kOutside);
  L.via_prev.assign(degree_, 0);
  L.orbit.clear();
  L.via_gen[L.base] = kRoot;
  L.orbit.push_back(L.base);
  for (std::size_t head = 0; head < L.orbit.size(); ++head) {
    Point p = L.orbit[head];
    for (std::size_t gi = 0; gi < L.gens.size(); ++gi) {
      Point q = L.gens[gi](p);
      if (L.via_gen[q] == kOutside) {
        L.via_gen[q] = static_cast<std::int32_t>(gi);
        L.via_prev[q] = p;
        L.orbit.push_back(q);
      }
    }
  }
}

void StabilizerChain::place(Permutation residue, std::size_t level) {
  if (level == levels_.size()) {
    Level L;
    L.base = level < forced_base_.size() ? forced_base_[level]
                                         : residue.smallest_moved();
    levels_.push_back(std::move(L));
  }
  levels_[level].new_gens.push_back(std::move(residue));
  for (std::size_t i = level + 1; i-- > 0;)
    rebuild_level_gens(i);
  for (std::size_t i = 0; i <= level; ++i)
    recompute_orbit(i);
}

Permutation StabilizerChain::transversal(std::size_t i, Point p) const {
  const Level &L = levels_[i];
  if (L.via_gen[p] == kOutside)
    throw InternalError("transversal requested for point outside basic orbit");
  std::vector<std::int32_t> path;
  Point x = p;
  while (L.via_gen[x] != kRoot) {
    path.push_back(L.via_gen[x]);
    x = L.via_prev[x];
  }
  Permutation u(degree_);
  for (std::size_t k = path.size(); k-- > 0;)
    u = product(u, L.gens[static_cast<std::size_t>(path[k])]);
  return u;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation p,
                                                          std::size_t start) const {
  for (std::size_t i = start; i < levels_.size(); ++i) {
    Point moved = p(levels_[i].base);
    if (levels_[i].via_gen[moved] == kOutside)
      return {std::move(p), i};
    p = product(p, transversal(i, moved).inverse());
  }
  return {std::move(p), levels_.size()};
}

bool StabilizerChain::contains(const Permutation &p) const {
  if (p.degree() != degree_)
    throw PreconditionError("degree mismatch in membership test");
  auto [residue, level] = sift(p);
  return level == levels_.size() && residue.is_identity();
}

void StabilizerChain::verify_from(std::size_t start) {
  if (!levels_.empty()) {
    std::ptrdiff_t i =
        static_cast<std::ptrdiff_t>(std::min(start, levels_.size() - 1));
    while (i >= 0) {
      bool complete = true;
      const Level &L = levels_[static_cast<std::size_t>(i)];
      for (std::size_t oi = 0; oi < L.orbit.size() && complete; ++oi) {
        Point p = L.orbit[oi];
        Permutation up = transversal(static_cast<std::size_t>(i), p);
        for (const Permutation &g : L.gens) {
          Permutation schreier = product(
              product(up, g),
              transversal(static_cast<std::size_t>(i), g(p)).inverse());
          auto [residue, lvl] =
              sift(std::move(schreier), static_cast<std::size_t>(i) + 1);
          if (!residue.is_identity()) {
            place(std::move(residue), lvl);
            i = static_cast<std::ptrdiff_t>(lvl);
            complete = false;
            break;
          }
        }
      }
      if (complete)
        --i;
    }
  }
  recompute_order();
}

void StabilizerChain::extend(const std::vector<Permutation> &gens) {
  std::size_t deepest_touched = levels_.size();
  for (const Permutation &g : gens) {
    if (g.degree() != degree_)
      throw PreconditionError("generator degree mismatch");
    auto [residue, lvl] = sift(g);
    if (!residue.is_identity()) {
      place(std::move(residue), lvl);
      deepest_touched = std::max(deepest_touched, lvl);
    }
  }
  verify_from(levels_.empty() ? 0 : levels_.size() - 1);
}

void StabilizerChain::recompute_order() {
  order_ = 1;
  for (const Level &L : levels_)
    order_ *= static_cast<std::uint64_t>(L.orbit.size());
}

// ---------------------------------------------------------------------------
// Group

Group::Group(std::vector<Permutation> generators, std::vector<Point> forced_base)
    : degree_(0), gens_(std::move(generators)) {
  if (gens_.empty())
    throw PreconditionError("a group needs at least one generator");
  degree_ = gens_.front().degree();
  if (degree_ == 0)
    throw PreconditionError("degree must be positive");
  if (degree_ > kMaxDegree)
    throw PreconditionError("degree exceeds the supported maximum");
  for (const Permutation &g : gens_)
    if (g.degree() != degree_)
      throw PreconditionError("generators have mixed degrees");

  auto chain = std::make_shared<StabilizerChain>(degree_, std::move(forced_base));
  chain->extend(gens_);

  // Strip test: every generator and a handful of deterministic pseudo-random
  // products must sift to the identity.
  for (const Permutation &g : gens_)
    if (!chain->contains(g))
      throw InternalError("stabilizer chain rejects one of its own generators");
  std::mt19937_64 rng(0x5eed5eedULL);
  for (int trial = 0; trial < 16; ++trial) {
    Permutation w(degree_);
    std::size_t len = 2 + rng() % 5;
    for (std::size_t k = 0; k < len; ++k)
      w = product(w, gens_[rng() % gens_.size()]);
    if (!chain->contains(w))
      throw InternalError("stabilizer chain rejects a product of generators");
  }
  chain_ = std::move(chain);
}

Group Group::trivial(Point degree) {
  return Group({Permutation(degree)});
}

bool Group::contains(const Permutation &p) const {
  return chain_->contains(p);
}

bool Group::contains_group(const Group &other) const {
  if (other.degree() != degree_)
    throw PreconditionError("degree mismatch between groups");
  for (const Permutation &g : other.generators())
    if (!contains(g))
      return false;
  return true;
}

bool Group::same_group(const Group &other) const {
  return order() == other.order() && contains_group(other);
}

bool Group::is_normal_in(const Group &ambient) const {
  if (!ambient.contains_group(*this))
    return false;
  for (const Permutation &g : ambient.generators())
    for (const Permutation &n : gens_)
      if (!contains(conjugate(n, g)))
        return false;
  return true;
}

std::vector<Permutation> Group::elements(std::uint64_t cap) const {
  if (order() > cap)
    throw CapError("group too large: order " + order().str() + " exceeds cap " +
                   std::to_string(cap));
  std::vector<Permutation> elems{Permutation(degree_)};
  const auto &ch = *chain_;
  for (std::size_t i = ch.depth(); i-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(elems.size() * ch.level(i).orbit.size());
    for (Point p : ch.level(i).orbit) {
      Permutation u = ch.transversal(i, p);
      for (const Permutation &h : elems)
        next.push_back(product(h, u));
    }
    elems = std::move(next);
  }
  return elems;
}

std::vector<Point> Group::orbit_of(Point a) const {
  if (a >= degree_)
    throw PreconditionError("point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> orbit{a};
  seen[a] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const Permutation &g : gens_) {
      Point q = g(orbit[head]);
      if (!seen[q]) {
        seen[q] = true;
        orbit.push_back(q);
      }
    }
  return orbit;
}

std::vector<std::vector<Point>> Group::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<Point>> out;
  for (Point a = 0; a < degree_; ++a) {
    if (seen[a])
      continue;
    auto orb = orbit_of(a);
    for (Point p : orb)
      seen[p] = true;
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool Group::is_transitive() const {
  return orbit_of(0).size() == degree_;
}

Group Group::point_stabilizer(Point a) const {
  if (a >= degree_)
    throw PreconditionError("point out of range");
  StabilizerChain rebased(degree_, {a});
  rebased.extend(gens_);

  std::vector<Permutation> stab_gens;
  for (std::size_t i = 1; i < rebased.depth(); ++i)
    for (const Permutation &g : rebased.level(i).new_gens)
      stab_gens.push_back(g);
  if (stab_gens.empty())
    stab_gens.push_back(Permutation(degree_));

  Group stab(std::move(stab_gens));
  BigInt orbit_len = rebased.depth() == 0
                         ? 1
                         : static_cast<std::uint64_t>(rebased.level(0).orbit.size());
  if (stab.order() * orbit_len != order())
    throw InternalError("orbit-stabilizer mismatch in point_stabilizer");
  return stab;
}

// ---------------------------------------------------------------------------
// Coset action

ActionImage coset_action(const Group &G, const Group &H, std::uint64_t cap) {
  if (G.degree() != H.degree())
    throw PreconditionError("degree mismatch between group and subgroup");
  if (!G.contains_group(H))
    throw PreconditionError("H is not a subgroup of G");

  std::vector<Permutation> h_elems = H.elements(cap);

  BigInt index_big = G.order() / H.order();
  if (index_big * H.order() != G.order())
    throw InternalError("subgroup order does not divide group order");
  if (index_big > kMaxDegree)
    throw CapError("coset space too large: index " + index_big.str());

  auto coset_key = [&](const Permutation &rep) {
    std::vector<Point> best = product(h_elems.front(), rep).images();
    for (std::size_t k = 1; k < h_elems.size(); ++k) {
      std::vector<Point> cand = product(h_elems[k], rep).images();
      if (cand < best)
        best = std::move(cand);
    }
    return best;
  };

  std::vector<Permutation> reps{Permutation(G.degree())};
  std::map<std::vector<Point>, Point> index_of;
  index_of[coset_key(reps.front())] = 0;
  std::vector<std::vector<Point>> images_per_gen(G.generators().size());

  for (std::size_t head = 0; head < reps.size(); ++head) {
    Permutation rep = reps[head];
    for (std::size_t gi = 0; gi < G.generators().size(); ++gi) {
      Permutation moved = product(rep, G.generators()[gi]);
      auto key = coset_key(moved);
      auto it = index_of.find(key);
      Point target;
      if (it == index_of.end()) {
        target = static_cast<Point>(reps.size());
        index_of.emplace(std::move(key), target);
        reps.push_back(std::move(moved));
      } else {
        target = it->second;
      }
      images_per_gen[gi].push_back(target);  // slot `head`, processed in order
    }
  }

  Point n_cosets = static_cast<Point>(reps.size());
  if (BigInt(n_cosets) != index_big)
    throw InternalError("coset enumeration found " + std::to_string(n_cosets) +
                        " cosets, expected " + index_big.str());

  std::vector<Permutation> image_gens;
  for (auto &imgs : images_per_gen) {
    imgs.resize(n_cosets);
    image_gens.emplace_back(std::move(imgs));
  }
  Group image(std::move(image_gens));

  BigInt kernel = G.order() / image.order();
  if (kernel * image.order() != G.order())
    throw InternalError("image order does not divide group order");

  // The stabilizer of the trivial coset, pulled back through the kernel,
  // must be H itself.
  if (image.point_stabilizer(0).order() * kernel != H.order())
    throw InternalError("coset action stabilizer does not match the subgroup");

  std::vector<std::string> labels;
  labels.reserve(n_cosets);
  for (const Permutation &rep : reps)
    labels.push_back(rep.is_identity() ? "H" : "H*" + rep.to_cycle_string());

  return ActionImage{G, std::move(image), std::move(kernel), std::move(labels)};
}

Group join(const Group &A, const Group &B) {
  if (A.degree() != B.degree())
    throw PreconditionError("degree mismatch in join");
  std::vector<Permutation> gens = A.generators();
  gens.insert(gens.end(), B.generators().begin(), B.generators().end());
  return Group(std::move(gens));
}

Group intersection(const Group &A, const Group &B, std::uint64_t cap) {
  if (A.degree() != B.degree())
    throw PreconditionError("degree mismatch in intersection");
  const Group &small = A.order() <= B.order() ? A : B;
  const Group &large = A.order() <= B.order() ? B : A;
  std::vector<Permutation> found;
  for (const Permutation &e : small.elements(cap))
    if (large.contains(e))
      found.push_back(e);
  if (found.empty())
    found.push_back(Permutation(A.degree()));
  return Group(std::move(found));
}

// ---------------------------------------------------------------------------
// Group file format

namespace {

std::string strip_comment(const std::string &line) {
  auto pos = line.find('#');
  std::string s = pos == std::string::npos ? line : line.substr(0, pos);
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

} // namespace

Group parse_group_file(std::istream &in) {
  std::string line;
  Point degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip_comment(line);
    if (s.empty())
      continue;
    if (!have_degree) {
      std::istringstream is(s);
      std::string word;
      std::uint64_t n = 0;
      if (!(is >> word >> n) || word != "degree" || n == 0 || n > kMaxDegree)
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected \"degree N\", got \"" + s + "\"");
      degree = static_cast<Point>(n);
      have_degree = true;
      continue;
    }
    try {
      gens.push_back(parse_cycles(s, degree));
    } catch (const ParseError &e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_degree)
    throw ParseError("missing \"degree N\" header line");
  if (gens.empty())
    throw ParseError("group file contains no generators");
  return Group(std::move(gens));
}

Group parse_group_text(const std::string &text) {
  std::istringstream is(text);
  return parse_group_file(is);
}

std::string render_group_file(const Group &G) {
  std::ostringstream os;
  os << "degree " << G.degree() << "\n";
  for (const Permutation &g : G.generators())
    os << g.to_cycle_string() << "\n";
  return os.str();
}

} // namespace bp
