#include "kmb/fuzzy_relations.hpp"

#include <sstream>

namespace kmb {

FuzzyTernaryRelation FuzzyTernaryRelation::indicator(const TernaryRelation& t) {
  FuzzyTernaryRelation b(t.universe());
  for (const auto& tr : t.triples()) b.set(tr[0], tr[1], tr[2], Grade::one());
  return b;
}

bool FuzzyTernaryRelation::is_crisp() const {
  for (const auto& g : g_)
    if (!g.is_zero() && !g.is_one()) return false;
  return true;
}

TernaryRelation FuzzyTernaryRelation::one_cut() const {
  TernaryRelation t(n_);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < n_; ++z)
        if (at(x, y, z).is_one()) t.insert(x, y, z);
  return t;
}

// ---------------------------------------------------------------------------
// Axiom systems

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int x : xs) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

ValidationReport check_fuzzy_axioms(const FuzzyTernaryRelation& b, FuzzyAxiomSystem system,
                                    TNorm kind) {
  const int n = b.universe();
  ValidationReport rep;
  const bool fbr = system == FuzzyAxiomSystem::Fbr;
  const char* p = fbr ? "FBR" : (system == FuzzyAxiomSystem::StrongStar ? "SFB" : "FB");
  auto name = [&](int i, const char* what) { return std::string(p) + std::to_string(i) + "-" + what; };

  bool ok = true;
  std::string w;
  for (int x = 0; x < n && ok; ++x)
    for (int y = 0; y < n && ok; ++y)
      for (int z = 0; z < n && ok; ++z)
        if (b.at(x, y, z) != b.at(z, y, x)) {
          ok = false;
          w = "B" + tuple_str({x, y, z}) + " = " + b.at(x, y, z).str() + " != " +
              b.at(z, y, x).str() + " = B" + tuple_str({z, y, x});
        }
  rep.add(name(1, "symmetry"), ok, w);

  ok = true;
  w.clear();
  for (int x = 0; x < n && ok; ++x)
    for (int y = 0; y < n && ok; ++y)
      if (!b.at(x, y, y).is_one()) {
        ok = false;
        w = "B" + tuple_str({x, y, y}) + " = " + b.at(x, y, y).str() + " < 1";
      }
  rep.add(name(2, "reflexivity"), ok, w);

  ok = true;
  w.clear();
  for (int x = 0; x < n && ok; ++x)
    for (int y = 0; y < n && ok; ++y)
      for (int z = 0; z < n && ok; ++z) {
        if (y == z) continue;
        bool violates;
        if (system == FuzzyAxiomSystem::Star) {
          violates = b.at(x, y, z).is_one() && b.at(x, z, y).is_one();
        } else {
          violates = !tnorm_apply(kind, b.at(x, y, z), b.at(x, z, y)).is_zero();
        }
        if (violates) {
          ok = false;
          w = "B" + tuple_str({x, y, z}) + " = " + b.at(x, y, z).str() + ", B" +
              tuple_str({x, z, y}) + " = " + b.at(x, z, y).str() + " with y != z";
        }
      }
  rep.add(name(3, "antisymmetry"), ok, w);

  ok = true;
  w.clear();
  for (int o = 0; o < n && ok; ++o)
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z) {
          Grade lhs = tnorm_apply(kind, b.at(o, x, y), b.at(o, y, z));
          if (lhs > b.at(o, x, z)) {
            ok = false;
            w = "B" + tuple_str({o, x, y}) + " * B" + tuple_str({o, y, z}) + " = " + lhs.str() +
                " > " + b.at(o, x, z).str() + " = B" + tuple_str({o, x, z});
          }
        }
  rep.add(name(4, "endpoint-transitivity"), ok, w);

  if (fbr) {
    ok = true;
    w.clear();
    for (int o = 0; o < n && ok; ++o)
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y)
          for (int z = 0; z < n && ok; ++z) {
            Grade lhs = tnorm_apply(kind, b.at(o, x, y), b.at(o, y, z));
            if (lhs > b.at(x, y, z)) {
              ok = false;
              w = "B" + tuple_str({o, x, y}) + " * B" + tuple_str({o, y, z}) + " = " + lhs.str() +
                  " > " + b.at(x, y, z).str() + " = B" + tuple_str({x, y, z});
            }
          }
    rep.add(name(5, "middle-transitivity"), ok, w);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// The two constructions

FuzzyTernaryRelation bm_from_fuzzy_metric(const FuzzyMetricSpace& space) {
  const int n = space.size();
  FuzzyTernaryRelation b(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Distribution legs = supmin_convolve(space.entry(x, y), space.entry(y, z));
        b.set(x, y, z, godel_residual_inf(space.entry(x, z), legs));
      }
  return b;
}

FuzzyTernaryRelation bd_from_nest(const MetricNest& nest) {
  const int n = nest.size();

  // Global level pieces: (0, A_1), [A_1, A_2), ..., [A_M, 1).  Betweenness of
  // every slice is constant on each piece, so evaluating at one interior
  // point per piece decides the whole piece.
  std::vector<Grade> probes = nest.probe_levels();  // alternating midpoints and cuts
  std::vector<Grade> reps, ends;
  for (std::size_t i = 0; i < probes.size(); i += 2) {
    reps.push_back(probes[i]);  // midpoint of piece i/2
    ends.push_back(i + 1 < probes.size() ? probes[i + 1] : Grade::one());
  }

  std::vector<TernaryRelation> slices;
  slices.reserve(reps.size());
  for (const Grade& a : reps) slices.push_back(betweenness_at_level(nest, a));

  FuzzyTernaryRelation b(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // sup of the satisfying union: right endpoint of the topmost run.
        Grade value = Grade::zero();
        for (std::size_t k = 0; k < slices.size(); ++k)
          if (slices[k].contains(x, y, z)) value = ends[k];
        b.set(x, y, z, value);
      }
  return b;
}

TernaryRelation level_cut(const FuzzyTernaryRelation& b, const Grade& a) {
  if (a.is_zero()) throw InvalidArgument("cut level must satisfy 0 < a <= 1");
  const int n = b.universe();
  TernaryRelation t(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (b.at(x, y, z) >= a) t.insert(x, y, z);
  return t;
}

PropertyResult check_cut_characterization(const MetricNest& nest) {
  const int n = nest.size();
  FuzzyTernaryRelation b = bd_from_nest(nest);

  std::vector<Grade> probes = nest.probe_levels();
  probes.push_back(Grade::one());

  // Piece structure as in bd_from_nest.
  std::vector<Grade> all = nest.probe_levels();
  std::vector<Grade> reps, starts;
  for (std::size_t i = 0; i < all.size(); i += 2) {
    reps.push_back(all[i]);
    starts.push_back(i == 0 ? Grade::zero() : all[i - 1]);
  }
  std::vector<TernaryRelation> slices;
  for (const Grade& a : reps) slices.push_back(betweenness_at_level(nest, a));

  for (const Grade& a : probes) {
    TernaryRelation cut = level_cut(b, a);
    TernaryRelation expect = TernaryRelation::full(n);  // empty intersection convention
    for (std::size_t k = 0; k < slices.size(); ++k) {
      if (!(starts[k] < a)) continue;  // piece lies entirely at or above a
      TernaryRelation next(n);
      for (const auto& tr : expect.triples())
        if (slices[k].contains(tr[0], tr[1], tr[2])) next.insert(tr[0], tr[1], tr[2]);
      expect = next;
    }
    if (!(cut == expect)) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (cut.contains(x, y, z) != expect.contains(x, y, z))
              return PropertyResult::fail(
                  {x, y, z}, "at level " + a.str() + ": cut membership " +
                                 (cut.contains(x, y, z) ? "present" : "absent") +
                                 " but intersection of lower slices says otherwise for " +
                                 tuple_str({x, y, z}));
    }
  }
  return PropertyResult::ok();
}

EqualityResult check_equality(const FuzzyMetricSpace& space) {
  FuzzyTernaryRelation lhs = bm_from_fuzzy_metric(space);
  FuzzyTernaryRelation rhs = bd_from_nest(nest_from_fuzzy_metric(space));
  const int n = space.size();
  EqualityResult res;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Rational gap = lhs.at(x, y, z).value() - rhs.at(x, y, z).value();
        if (gap < 0) gap = -gap;
        if (gap > res.max_discrepancy) {
          res.max_discrepancy = gap;
          res.witness = {x, y, z};
          res.equal = false;
        }
      }
  return res;
}

// ---------------------------------------------------------------------------
// Graded transitivity suites

namespace {

struct FuzzyScheme {
  std::array<std::array<int, 3>, 2> hyp;
  std::vector<std::array<int, 3>> concl;
};

const FuzzyScheme kFuzzyFour[8] = {
    /* FP1 */ {{{{0, 2, 3}}, {{2, 3, 1}}}, {{{0, 2, 1}}}},
    /* FP2 */ {{{{0, 2, 3}}, {{2, 1, 3}}}, {{{0, 2, 1}}}},
    /* FP3 */ {{{{0, 2, 3}}, {{2, 1, 3}}}, {{{0, 1, 3}}}},
    /* FP4 */ {{{{2, 0, 3}}, {{2, 1, 3}}}, {{{2, 0, 1}}, {{2, 1, 0}}}},
    /* FP5 */ {{{{2, 0, 3}}, {{2, 1, 3}}}, {{{2, 0, 1}}, {{1, 0, 3}}}},
    /* FP6 */ {{{{0, 2, 3}}, {{1, 2, 3}}}, {{{0, 1, 3}}, {{1, 0, 3}}}},
    /* FP7 */ {{{{0, 2, 3}}, {{1, 2, 3}}}, {{{0, 1, 2}}, {{1, 0, 2}}}},
    /* FP8 */ {{{{0, 2, 3}}, {{1, 2, 3}}}, {{{0, 1, 2}}, {{1, 0, 3}}}},
};

const FuzzyScheme kFuzzyFive[6] = {
    /* FT1 */ {{{{0, 1, 4}}, {{3, 4, 2}}}, {{{0, 1, 2}}}},
    /* FT2 */ {{{{0, 1, 4}}, {{4, 3, 2}}}, {{{0, 1, 2}}}},
    /* FT3 */ {{{{0, 1, 4}}, {{4, 2, 3}}}, {{{0, 1, 2}}}},
    /* FT4 */ {{{{3, 0, 4}}, {{4, 1, 2}}}, {{{0, 1, 2}}}},
    /* FT5 */ {{{{0, 3, 4}}, {{4, 1, 2}}}, {{{0, 1, 2}}}},
    /* FT6 */ {{{{0, 3, 4}}, {{3, 1, 2}}}, {{{0, 1, 2}}}},
};

PropertyResult check_fuzzy_scheme(const FuzzyTernaryRelation& b, const FuzzyScheme& s, int arity,
                                  TNorm kind) {
  const int n = b.universe();
  int v[5] = {0, 0, 0, 0, 0};
  auto g = [&](const std::array<int, 3>& pat) -> const Grade& {
    return b.at(v[pat[0]], v[pat[1]], v[pat[2]]);
  };

  // Odometer iteration over arity counters.
  std::vector<int> c(arity, 0);
  while (true) {
    for (int i = 0; i < arity; ++i) v[i] = c[i];
    Grade lhs = tnorm_apply(kind, g(s.hyp[0]), g(s.hyp[1]));
    Grade rhs = g(s.concl[0]);
    for (std::size_t j = 1; j < s.concl.size(); ++j) rhs = max(rhs, g(s.concl[j]));
    if (lhs > rhs) {
      std::ostringstream os;
      os << "lhs " << lhs.str() << " > rhs " << rhs.str();
      return PropertyResult::fail(std::vector<int>(c.begin(), c.end()), os.str());
    }
    int k = arity - 1;
    while (k >= 0 && ++c[k] == n) c[k--] = 0;
    if (k < 0) break;
  }
  return PropertyResult::ok();
}

}  // namespace

PropertyResult check_fp(const FuzzyTernaryRelation& b, int k, TNorm kind) {
  if (k < 1 || k > 8) throw InvalidArgument("graded four-point index must be 1..8");
  return check_fuzzy_scheme(b, kFuzzyFour[k - 1], 4, kind);
}

PropertyResult check_ft(const FuzzyTernaryRelation& b, int i, TNorm kind) {
  if (i < 1 || i > 6) throw InvalidArgument("graded five-point index must be 1..6");
  return check_fuzzy_scheme(b, kFuzzyFive[i - 1], 5, kind);
}

}  // namespace kmb
