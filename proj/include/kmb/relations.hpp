#pragma once

#include <array>
#include <vector>

#include "kmb/metric.hpp"
#include "kmb/nest.hpp"
#include "kmb/report.hpp"

namespace kmb {

class BinaryRelation {
public:
  explicit BinaryRelation(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n, 0) {
    if (n <= 0) throw InvalidArgument("universe size must be positive");
  }
  static BinaryRelation identity(int n);

  int universe() const { return n_; }
  bool contains(int x, int y) const { return bits_[idx(x, y)] != 0; }
  void insert(int x, int y) { bits_[idx(x, y)] = 1; }

  bool operator==(const BinaryRelation& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
  std::size_t idx(int x, int y) const {
    if (x < 0 || y < 0 || x >= n_ || y >= n_) throw InvalidArgument("pair index out of range");
    return static_cast<std::size_t>(x) * n_ + y;
  }
  int n_;
  std::vector<char> bits_;
};

class TernaryRelation {
public:
  explicit TernaryRelation(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n * n, 0) {
    if (n <= 0) throw InvalidArgument("universe size must be positive");
  }
  static TernaryRelation full(int n);

  int universe() const { return n_; }
  bool contains(int x, int y, int z) const { return bits_[idx(x, y, z)] != 0; }
  void insert(int x, int y, int z) { bits_[idx(x, y, z)] = 1; }

  bool subset_of(const TernaryRelation& o) const;
  std::size_t count() const;
  /// Members in lexicographic order.
  std::vector<std::array<int, 3>> triples() const;

  bool operator==(const TernaryRelation& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
  std::size_t idx(int x, int y, int z) const {
    if (x < 0 || y < 0 || z < 0 || x >= n_ || y >= n_ || z >= n_)
      throw InvalidArgument("triple index out of range");
    return (static_cast<std::size_t>(x) * n_ + y) * n_ + z;
  }
  int n_;
  std::vector<char> bits_;
};

// ---------------------------------------------------------------------------
// Order and lattice tables

class PosetTable {
public:
  /// Validates reflexivity, antisymmetry, transitivity.
  static PosetTable create(BinaryRelation leq);
  const BinaryRelation& leq() const { return leq_; }
  int universe() const { return leq_.universe(); }

private:
  explicit PosetTable(BinaryRelation r) : leq_(std::move(r)) {}
  BinaryRelation leq_;
};

class LatticeTable {
public:
  /// Validates commutativity, associativity, and the two absorption laws
  /// exhaustively (which together imply idempotence).
  static LatticeTable create(std::vector<std::vector<int>> join, std::vector<std::vector<int>> meet);
  int universe() const { return n_; }
  int join(int a, int b) const { return join_[a][b]; }
  int meet(int a, int b) const { return meet_[a][b]; }

private:
  LatticeTable() = default;
  int n_ = 0;
  std::vector<std::vector<int>> join_, meet_;
};

// ---------------------------------------------------------------------------
// Property checkers.  All are exhaustive with lexicographically-first
// witnesses.

enum class BasicProperty { Reflexive, Symmetric, Antisymmetric, Complete };

/// Reflexive: (x,y,y) in T.  Symmetric: (x,y,z) in T <=> (z,y,x) in T.
/// Antisymmetric: (x,y,z), (x,z,y) in T => y = z.  Complete: for every
/// (a,b,c) at least one of the six permutations with b or c in the middle
/// belongs to T.
PropertyResult check_basic(const TernaryRelation& t, BasicProperty which);

/// Left, middle, right projections: P_l = {(x,y) | exists z, (z,x,y)},
/// P_m = {(x,y) | exists z, (x,z,y)}, P_r = {(x,y) | exists z, (x,y,z)}.
struct Projections {
  BinaryRelation left, middle, right;
};
Projections projections(const TernaryRelation& t);

/// T |x R = {(x,y,z) | exists t, (x,y,t) in T and (t,z) in R}.
TernaryRelation compose_tb(const TernaryRelation& t, const BinaryRelation& r);
/// R x| T = {(x,y,z) | exists t, (x,t) in R and (t,y,z) in T}.
TernaryRelation compose_bt(const BinaryRelation& r, const TernaryRelation& t);

/// The six compositions of ternary relations through binary projections,
/// i in 1..6.
TernaryRelation compose_i(const TernaryRelation& t, const TernaryRelation& s, int i);

/// The eight four-point transitivity properties, k in 1..8.
/// Witness order is (x, y, s, t).
PropertyResult check_fourpoint(const TernaryRelation& t, int k);

/// The six five-point transitivity properties, i in 1..6: containment of the
/// i-th self-composition.  Runs both the composition subset test and the
/// direct implication scan and insists they agree; the witness comes from
/// the direct form in order (x, y, z, s, t).
PropertyResult check_fivepoint(const TernaryRelation& t, int i);

/// Betweenness axiom report over {B1..B5} plus the instance-level check that
/// the closure axiom B2 coincides with reflexivity B4 + antisymmetry B5.
ValidationReport check_betweenness(const TernaryRelation& b);

// Example constructions.
TernaryRelation order_betweenness(const PosetTable& p);
TernaryRelation lattice_betweenness(const LatticeTable& l);
/// Triples with d(x,z) = d(x,y) + d(y,z).
TernaryRelation metric_betweenness(const FiniteMetric& d);
/// The same set through the inequality d(x,z) >= d(x,y) + d(y,z) (equal by
/// the triangle inequality; kept as an independent route).
TernaryRelation metric_betweenness_ge(const FiniteMetric& d);

/// Metric betweenness of the slice of the nest at level a.
TernaryRelation betweenness_at_level(const MetricNest& nest, const Grade& a);

/// Antitone inclusion (larger levels give smaller relations) and the union
/// identity (the relation at a level equals the union over levels >= it),
/// checked over the nest's probe levels.
ValidationReport check_betweenness_nest(const MetricNest& nest);

}  // namespace kmb
