#pragma once

#include <vector>

#include "kmb/fuzzy_metric.hpp"
#include "kmb/nest.hpp"
#include "kmb/relations.hpp"
#include "kmb/report.hpp"

namespace kmb {

/// A fully populated grade tensor over ordered triples of a finite universe.
class FuzzyTernaryRelation {
public:
  explicit FuzzyTernaryRelation(int n)
      : n_(n), g_(static_cast<std::size_t>(n) * n * n, Grade::zero()) {
    if (n <= 0) throw InvalidArgument("universe size must be positive");
  }

  /// {0,1}-valued tensor of a crisp relation.
  static FuzzyTernaryRelation indicator(const TernaryRelation& t);

  int universe() const { return n_; }
  const Grade& at(int x, int y, int z) const { return g_[idx(x, y, z)]; }
  void set(int x, int y, int z, Grade g) { g_[idx(x, y, z)] = std::move(g); }

  /// True when every grade is 0 or 1.
  bool is_crisp() const;
  /// The crisp relation of triples with grade exactly 1.
  TernaryRelation one_cut() const;

  bool operator==(const FuzzyTernaryRelation& o) const { return n_ == o.n_ && g_ == o.g_; }

private:
  std::size_t idx(int x, int y, int z) const {
    if (x < 0 || y < 0 || z < 0 || x >= n_ || y >= n_ || z >= n_)
      throw InvalidArgument("triple index out of range");
    return (static_cast<std::size_t>(x) * n_ + y) * n_ + z;
  }
  int n_;
  std::vector<Grade> g_;
};

/// The three graded axiom systems.  They differ in the antisymmetry clause:
/// Star requires it only of grade-1 memberships, the others of any pair with
/// nonzero t-norm product; Fbr adds middle transitivity.
enum class FuzzyAxiomSystem { Star, StrongStar, Fbr };

/// Exhaustive axiom report for the chosen system under the given t-norm.
ValidationReport check_fuzzy_axioms(const FuzzyTernaryRelation& b, FuzzyAxiomSystem system,
                                    TNorm kind);

/// The implication-route construction: for each ordered triple,
///   B(x, y, z) = inf_{t>0} ( M(x,z,t) -> sup_{s+r=t} min(M(x,y,s), M(y,z,r)) )
/// with the Goedel residuum, evaluated exactly through the distribution
/// algebra.
FuzzyTernaryRelation bm_from_fuzzy_metric(const FuzzyMetricSpace& space);

/// The nest-route construction:
///   B(x, y, z) = sup{ a in (0,1) | d_a(x,z) = d_a(x,y) + d_a(y,z) }.
/// The satisfying set is a finite union of half-open level pieces, so the
/// sup is the right endpoint of the topmost satisfying run (1 when the top
/// piece satisfies, 0 when no piece does).
FuzzyTernaryRelation bd_from_nest(const MetricNest& nest);

/// { (x,y,z) | B(x,y,z) >= a }, for 0 < a <= 1.
TernaryRelation level_cut(const FuzzyTernaryRelation& b, const Grade& a);

/// For every probe level a (piece endpoints, midpoints, and 1): the level
/// cut of the nest-route relation equals the intersection of the crisp
/// betweenness relations of all slices strictly below a.
PropertyResult check_cut_characterization(const MetricNest& nest);

struct EqualityResult {
  bool equal = true;
  Rational max_discrepancy = Rational(0);
  std::vector<int> witness;  // triple with the largest gap, when unequal
};

/// Entry-wise comparison of the two constructions on a step-family space.
EqualityResult check_equality(const FuzzyMetricSpace& space);

/// Graded four-point transitivity FP k, k in 1..8 (join on the consequent
/// side for the disjunctive schemes).  Witness order (x, y, s, t).
PropertyResult check_fp(const FuzzyTernaryRelation& b, int k, TNorm kind);

/// Graded five-point transitivity FT i, i in 1..6.  Witness order
/// (x, y, z, s, t).
PropertyResult check_ft(const FuzzyTernaryRelation& b, int i, TNorm kind);

}  // namespace kmb
