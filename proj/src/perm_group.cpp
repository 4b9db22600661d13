#include "ngon/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

namespace ngon {

Perm identity_perm(std::size_t degree) {
  Perm p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<int>(i);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

namespace {

// Recursive Schreier–Sims. Level i holds the group generated by its own
// generators; level i+1 holds the stabilizer of level i's base point, built
// from Schreier generators.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::vector<int> base_prefix) : degree_(degree), prefix_(std::move(base_prefix)) {}

  void add(const Perm& g) { add_at(0, g); }

  GroupOrder order() const {
    GroupOrder total = 1;
    for (const auto& level : levels_) total *= level.orbit.size();
    return total;
  }

  bool contains(const Perm& g) const { return contains_from(0, g); }

  // Generators of the subgroup fixing the first k base points.
  std::vector<Perm> generators_at(std::size_t k) const {
    if (k >= levels_.size()) return {};
    return levels_[k].gens;
  }

 private:
  struct Level {
    int point = -1;
    std::vector<Perm> gens;
    std::vector<int> orbit;
    std::vector<std::optional<Perm>> transversal;  // transversal[y]: point -> y
  };

  Level& level(std::size_t i, const Perm& moving) {
    while (levels_.size() <= i) {
      Level fresh;
      const std::size_t idx = levels_.size();
      if (idx < prefix_.size()) {
        fresh.point = prefix_[idx];
      } else {
        for (std::size_t x = 0; x < degree_; ++x)
          if (moving[x] != static_cast<int>(x)) {
            fresh.point = static_cast<int>(x);
            break;
          }
      }
      fresh.transversal.assign(degree_, std::nullopt);
      fresh.transversal[static_cast<std::size_t>(fresh.point)] = identity_perm(degree_);
      fresh.orbit.push_back(fresh.point);
      levels_.push_back(std::move(fresh));
    }
    return levels_[i];
  }

  bool contains_from(std::size_t i, const Perm& g) const {
    if (i >= levels_.size() || levels_[i].gens.empty()) {
      // Trivial below here, except for prefix levels that may still have
      // deeper non-trivial levels.
      if (i < levels_.size()) {
        const auto& lv = levels_[i];
        if (g[static_cast<std::size_t>(lv.point)] != lv.point) return false;
        return contains_from(i + 1, g);
      }
      return is_identity(g);
    }
    const auto& lv = levels_[i];
    const int y = g[static_cast<std::size_t>(lv.point)];
    const auto& t = lv.transversal[static_cast<std::size_t>(y)];
    if (!t) return false;
    return contains_from(i + 1, compose(g, inverse(*t)));
  }

  void add_at(std::size_t i, const Perm& g) {
    if (is_identity(g) || contains_from(i, g)) return;
    level(i, g);
    // g fixes this level's point: it belongs to the stabilizer as well.
    levels_[i].gens.push_back(g);
    const std::size_t new_gen = levels_[i].gens.size() - 1;

    std::deque<std::pair<int, std::size_t>> work;  // (orbit point, generator index)
    for (int x : levels_[i].orbit) work.emplace_back(x, new_gen);
    while (!work.empty()) {
      auto [x, k] = work.front();
      work.pop_front();
      Level& lv = levels_[i];
      const Perm s = lv.gens[k];
      const int y = s[static_cast<std::size_t>(x)];
      const Perm via = compose(*lv.transversal[static_cast<std::size_t>(x)], s);
      if (!lv.transversal[static_cast<std::size_t>(y)]) {
        lv.transversal[static_cast<std::size_t>(y)] = via;
        lv.orbit.push_back(y);
        for (std::size_t j = 0; j < lv.gens.size(); ++j) work.emplace_back(y, j);
      } else {
        Perm schreier = compose(via, inverse(*lv.transversal[static_cast<std::size_t>(y)]));
        add_at(i + 1, schreier);
      }
    }
  }

  std::size_t degree_;
  std::vector<int> prefix_;
  std::vector<Level> levels_;
};

StabilizerChain build_chain(std::size_t degree, const std::vector<Perm>& gens, std::vector<int> prefix) {
  StabilizerChain chain(degree, std::move(prefix));
  for (const auto& g : gens) chain.add(g);
  return chain;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators) : degree_(degree) {
  for (auto& g : generators) {
    if (g.size() != degree) throw std::invalid_argument("generator has the wrong degree");
    std::vector<bool> hit(degree, false);
    for (int x : g) {
      if (x < 0 || static_cast<std::size_t>(x) >= degree || hit[static_cast<std::size_t>(x)])
        throw std::invalid_argument("generator is not a permutation");
      hit[static_cast<std::size_t>(x)] = true;
    }
    if (!is_identity(g)) generators_.push_back(std::move(g));
  }
}

GroupOrder PermGroup::order() const { return build_chain(degree_, generators_, {}).order(); }

bool PermGroup::contains(const Perm& p) const {
  if (p.size() != degree_) return false;
  return build_chain(degree_, generators_, {}).contains(p);
}

// With the points as base prefix, level k of the chain is exactly the
// stabilizer of the first k base points.
PermGroup PermGroup::pointwise_stabilizer(std::span<const int> points) const {
  std::vector<int> prefix(points.begin(), points.end());
  auto chain = build_chain(degree_, generators_, prefix);
  return PermGroup(degree_, chain.generators_at(prefix.size()));
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<int> out{point};
  std::vector<bool> seen(degree_, false);
  seen[static_cast<std::size_t>(point)] = true;
  for (std::size_t h = 0; h < out.size(); ++h)
    for (const auto& g : generators_) {
      int y = g[static_cast<std::size_t>(out[h])];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::vector<int>> PermGroup::tuple_orbit(const std::vector<int>& tuple) const {
  std::set<std::vector<int>> seen{tuple};
  std::deque<std::vector<int>> queue{tuple};
  while (!queue.empty()) {
    auto t = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators_) {
      std::vector<int> image(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) image[i] = g[static_cast<std::size_t>(t[i])];
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return seen;
}

std::vector<std::vector<std::vector<int>>> PermGroup::tuple_orbits(std::vector<std::vector<int>> tuples) const {
  std::sort(tuples.begin(), tuples.end());
  std::set<std::vector<int>> assigned;
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& t : tuples) {
    if (assigned.count(t)) continue;
    auto orb = tuple_orbit(t);
    assigned.insert(orb.begin(), orb.end());
    out.emplace_back(orb.begin(), orb.end());
  }
  return out;
}

bool PermGroup::transitive_on(std::span<const int> points) const {
  if (points.empty()) return true;
  auto orb = orbit(points.front());
  return std::all_of(points.begin(), points.end(),
                     [&](int p) { return std::binary_search(orb.begin(), orb.end(), p); });
}

}  // namespace ngon
