#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace ngon {

/// Permutation of {0, …, degree-1}: p[x] is the image of x.
using Perm = std::vector<int>;
using GroupOrder = boost::multiprecision::cpp_int;

Perm identity_perm(std::size_t degree);
/// Apply a, then b.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);

/// Permutation group given by generators. Orders and stabilizers are
/// computed on demand with a Schreier–Sims stabilizer chain.
class PermGroup {
 public:
  /// Throws std::invalid_argument if a generator is not a bijection of the
  /// right degree.
  PermGroup(std::size_t degree, std::vector<Perm> generators);
  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  GroupOrder order() const;
  bool contains(const Perm& p) const;

  /// The subgroup fixing every listed point.
  PermGroup pointwise_stabilizer(std::span<const int> points) const;

  std::vector<int> orbit(int point) const;
  /// Orbit of an ordered tuple under the coordinatewise action.
  std::set<std::vector<int>> tuple_orbit(const std::vector<int>& tuple) const;
  /// Orbits of the group on a set of tuples closed under the action; each
  /// orbit is returned sorted, orbits sorted by their first element.
  std::vector<std::vector<std::vector<int>>> tuple_orbits(std::vector<std::vector<int>> tuples) const;

  /// True iff the group acts transitively on the given points (which must
  /// form a union of orbits of the group, e.g. a stabilized neighbourhood).
  bool transitive_on(std::span<const int> points) const;

 private:
  std::size_t degree_;
  std::vector<Perm> generators_;
};

}  // namespace ngon
