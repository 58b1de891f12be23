#include "kmb/relations.hpp"

#include <algorithm>
#include <sstream>

namespace kmb {

BinaryRelation BinaryRelation::identity(int n) {
  BinaryRelation r(n);
  for (int i = 0; i < n; ++i) r.insert(i, i);
  return r;
}

TernaryRelation TernaryRelation::full(int n) {
  TernaryRelation t(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) t.insert(x, y, z);
  return t;
}

bool TernaryRelation::subset_of(const TernaryRelation& o) const {
  if (n_ != o.n_) throw UniverseMismatch("relations live on different universes");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !o.bits_[i]) return false;
  return true;
}

std::size_t TernaryRelation::count() const {
  std::size_t c = 0;
  for (char b : bits_) c += (b != 0);
  return c;
}

std::vector<std::array<int, 3>> TernaryRelation::triples() const {
  std::vector<std::array<int, 3>> out;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < n_; ++z)
        if (contains(x, y, z)) out.push_back({x, y, z});
  return out;
}

// ---------------------------------------------------------------------------
// Poset and lattice tables

PosetTable PosetTable::create(BinaryRelation leq) {
  const int n = leq.universe();
  for (int x = 0; x < n; ++x)
    if (!leq.contains(x, x)) throw InvalidArgument("order not reflexive at " + std::to_string(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && leq.contains(x, y) && leq.contains(y, x))
        throw InvalidArgument("order not antisymmetric on (" + std::to_string(x) + "," +
                              std::to_string(y) + ")");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (leq.contains(x, y) && leq.contains(y, z) && !leq.contains(x, z))
          throw InvalidArgument("order not transitive on (" + std::to_string(x) + "," +
                                std::to_string(y) + "," + std::to_string(z) + ")");
  return PosetTable(std::move(leq));
}

LatticeTable LatticeTable::create(std::vector<std::vector<int>> join,
                                  std::vector<std::vector<int>> meet) {
  const int n = static_cast<int>(join.size());
  if (n == 0) throw InvalidArgument("empty lattice");
  auto check_table = [&](const std::vector<std::vector<int>>& t, const char* name) {
    if (static_cast<int>(t.size()) != n) throw ShapeMismatch("lattice table has wrong row count");
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != n) throw ShapeMismatch("lattice table row has wrong size");
      for (int v : row)
        if (v < 0 || v >= n)
          throw InvalidArgument(std::string(name) + " table entry out of range");
    }
  };
  check_table(join, "join");
  check_table(meet, "meet");

  auto law = [&](bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument("lattice law fails: " + what);
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      law(join[a][b] == join[b][a], "join commutativity");
      law(meet[a][b] == meet[b][a], "meet commutativity");
      law(join[a][meet[a][b]] == a, "absorption a v (a ^ b) = a");
      law(meet[a][join[a][b]] == a, "absorption a ^ (a v b) = a");
      for (int c = 0; c < n; ++c) {
        law(join[a][join[b][c]] == join[join[a][b]][c], "join associativity");
        law(meet[a][meet[b][c]] == meet[meet[a][b]][c], "meet associativity");
      }
    }

  LatticeTable l;
  l.n_ = n;
  l.join_ = std::move(join);
  l.meet_ = std::move(meet);
  return l;
}

// ---------------------------------------------------------------------------
// Basic ternary properties

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

PropertyResult check_basic(const TernaryRelation& t, BasicProperty which) {
  const int n = t.universe();
  switch (which) {
    case BasicProperty::Reflexive:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (!t.contains(x, y, y))
            return PropertyResult::fail({x, y}, tuple_str({x, y, y}) + " missing");
      return PropertyResult::ok();
    case BasicProperty::Symmetric:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (t.contains(x, y, z) && !t.contains(z, y, x))
              return PropertyResult::fail(
                  {x, y, z}, tuple_str({x, y, z}) + " present but " + tuple_str({z, y, x}) + " missing");
      return PropertyResult::ok();
    case BasicProperty::Antisymmetric:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (y != z && t.contains(x, y, z) && t.contains(x, z, y))
              return PropertyResult::fail({x, y, z}, tuple_str({x, y, z}) + " and " +
                                                         tuple_str({x, z, y}) + " both present");
      return PropertyResult::ok();
    case BasicProperty::Complete:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            if (t.contains(a, b, c) || t.contains(a, c, b) || t.contains(b, a, c) ||
                t.contains(b, c, a) || t.contains(c, a, b) || t.contains(c, b, a))
              continue;
            return PropertyResult::fail({a, b, c},
                                        "no permutation of " + tuple_str({a, b, c}) + " present");
          }
      return PropertyResult::ok();
  }
  throw InvalidArgument("unreachable basic property tag");
}

Projections projections(const TernaryRelation& t) {
  const int n = t.universe();
  Projections p{BinaryRelation(n), BinaryRelation(n), BinaryRelation(n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t.contains(x, y, z)) {
          p.left.insert(y, z);
          p.middle.insert(x, z);
          p.right.insert(x, y);
        }
  return p;
}

TernaryRelation compose_tb(const TernaryRelation& t, const BinaryRelation& r) {
  const int n = t.universe();
  if (r.universe() != n) throw UniverseMismatch("relation universes differ");
  TernaryRelation out(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int u = 0; u < n; ++u) {
        if (!t.contains(x, y, u)) continue;
        for (int z = 0; z < n; ++z)
          if (r.contains(u, z)) out.insert(x, y, z);
      }
  return out;
}

TernaryRelation compose_bt(const BinaryRelation& r, const TernaryRelation& t) {
  const int n = t.universe();
  if (r.universe() != n) throw UniverseMismatch("relation universes differ");
  TernaryRelation out(n);
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < n; ++u) {
      if (!r.contains(x, u)) continue;
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (t.contains(u, y, z)) out.insert(x, y, z);
    }
  return out;
}

TernaryRelation compose_i(const TernaryRelation& t, const TernaryRelation& s, int i) {
  if (t.universe() != s.universe()) throw UniverseMismatch("relation universes differ");
  Projections pt = projections(t);
  Projections ps = projections(s);
  switch (i) {
    case 1: return compose_tb(t, ps.left);
    case 2: return compose_tb(t, ps.middle);
    case 3: return compose_tb(t, ps.right);
    case 4: return compose_bt(pt.left, s);
    case 5: return compose_bt(pt.middle, s);
    case 6: return compose_bt(pt.right, s);
    default: throw InvalidArgument("composition index must be 1..6");
  }
}

// ---------------------------------------------------------------------------
// Four- and five-point transitivity
//
// Each scheme is two hypothesis patterns and one or two conclusion patterns
// over the variable vector; a pattern picks three of the variables.

namespace {

struct Scheme {
  std::array<std::array<int, 3>, 2> hyp;
  std::vector<std::array<int, 3>> concl;
};

// Variables (x, y, s, t) = indices 0..3.
const Scheme kFourPoint[8] = {
    /* P1 */ {{{{0, 2, 3}}, {{2, 3, 1}}}, {{{0, 2, 1}}}},
    /* P2 */ {{{{0, 2, 3}}, {{2, 1, 3}}}, {{{0, 2, 1}}}},
    /* P3 */ {{{{0, 2, 3}}, {{2, 1, 3}}}, {{{0, 1, 3}}}},
    /* P4 */ {{{{2, 0, 3}}, {{2, 1, 3}}}, {{{2, 0, 1}}, {{2, 1, 0}}}},
    /* P5 */ {{{{2, 0, 3}}, {{2, 1, 3}}}, {{{2, 0, 1}}, {{1, 0, 3}}}},
    /* P6 */ {{{{0, 2, 3}}, {{1, 2, 3}}}, {{{0, 1, 3}}, {{1, 0, 3}}}},
    /* P7 */ {{{{0, 2, 3}}, {{1, 2, 3}}}, {{{0, 1, 2}}, {{1, 0, 2}}}},
    /* P8 */ {{{{0, 2, 3}}, {{1, 2, 3}}}, {{{0, 1, 2}}, {{1, 0, 3}}}},
};

// Variables (x, y, z, s, t) = indices 0..4.
const Scheme kFivePoint[6] = {
    /* T1 */ {{{{0, 1, 4}}, {{3, 4, 2}}}, {{{0, 1, 2}}}},
    /* T2 */ {{{{0, 1, 4}}, {{4, 3, 2}}}, {{{0, 1, 2}}}},
    /* T3 */ {{{{0, 1, 4}}, {{4, 2, 3}}}, {{{0, 1, 2}}}},
    /* T4 */ {{{{3, 0, 4}}, {{4, 1, 2}}}, {{{0, 1, 2}}}},
    /* T5 */ {{{{0, 3, 4}}, {{4, 1, 2}}}, {{{0, 1, 2}}}},
    /* T6 */ {{{{0, 3, 4}}, {{3, 1, 2}}}, {{{0, 1, 2}}}},
};

bool scheme_holds_at(const TernaryRelation& t, const Scheme& s, const int* vars) {
  for (const auto& h : s.hyp)
    if (!t.contains(vars[h[0]], vars[h[1]], vars[h[2]])) return true;  // vacuous
  for (const auto& c : s.concl)
    if (t.contains(vars[c[0]], vars[c[1]], vars[c[2]])) return true;
  return false;
}

std::string scheme_witness(const Scheme& s, const int* vars) {
  std::ostringstream os;
  os << "hypotheses";
  for (const auto& h : s.hyp) os << " " << tuple_str({vars[h[0]], vars[h[1]], vars[h[2]]});
  os << " hold but";
  bool first = true;
  for (const auto& c : s.concl) {
    os << (first ? " " : " / ") << tuple_str({vars[c[0]], vars[c[1]], vars[c[2]]});
    first = false;
  }
  os << (s.concl.size() > 1 ? " are" : " is") << " missing";
  return os.str();
}

}  // namespace

PropertyResult check_fourpoint(const TernaryRelation& t, int k) {
  if (k < 1 || k > 8) throw InvalidArgument("four-point property index must be 1..8");
  const Scheme& s = kFourPoint[k - 1];
  const int n = t.universe();
  int v[4];
  for (v[0] = 0; v[0] < n; ++v[0])
    for (v[1] = 0; v[1] < n; ++v[1])
      for (v[2] = 0; v[2] < n; ++v[2])
        for (v[3] = 0; v[3] < n; ++v[3])
          if (!scheme_holds_at(t, s, v))
            return PropertyResult::fail({v[0], v[1], v[2], v[3]}, scheme_witness(s, v));
  return PropertyResult::ok();
}

PropertyResult check_fivepoint(const TernaryRelation& t, int i) {
  if (i < 1 || i > 6) throw InvalidArgument("five-point property index must be 1..6");
  const Scheme& s = kFivePoint[i - 1];
  const int n = t.universe();

  PropertyResult direct = PropertyResult::ok();
  int v[5];
  for (v[0] = 0; v[0] < n && direct.pass; ++v[0])
    for (v[1] = 0; v[1] < n && direct.pass; ++v[1])
      for (v[2] = 0; v[2] < n && direct.pass; ++v[2])
        for (v[3] = 0; v[3] < n && direct.pass; ++v[3])
          for (v[4] = 0; v[4] < n; ++v[4])
            if (!scheme_holds_at(t, s, v)) {
              direct = PropertyResult::fail({v[0], v[1], v[2], v[3], v[4]}, scheme_witness(s, v));
              break;
            }

  bool by_composition = compose_i(t, t, i).subset_of(t);
  if (by_composition != direct.pass)
    throw InvalidArgument("five-point check routes disagree; internal defect");
  return direct;
}

// ---------------------------------------------------------------------------
// Betweenness

ValidationReport check_betweenness(const TernaryRelation& b) {
  const int n = b.universe();
  ValidationReport rep;

  PropertyResult sym = check_basic(b, BasicProperty::Symmetric);
  rep.add("B1-symmetry", sym.pass, sym.detail);

  // Closure is an equivalence: membership of both (x,y,z) and (x,z,y) iff y=z.
  bool ok = true;
  std::string w;
  for (int x = 0; x < n && ok; ++x)
    for (int y = 0; y < n && ok; ++y)
      for (int z = 0; z < n && ok; ++z) {
        bool both = b.contains(x, y, z) && b.contains(x, z, y);
        if (both && y != z) {
          ok = false;
          w = tuple_str({x, y, z}) + " and " + tuple_str({x, z, y}) + " both present with y != z";
        }
        if (!both && y == z) {
          ok = false;
          w = tuple_str({x, y, y}) + " missing";
        }
      }
  rep.add("B2-closure", ok, w);

  ok = true;
  w.clear();
  for (int o = 0; o < n && ok; ++o)
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          if (b.contains(o, x, y) && b.contains(o, y, z) && !b.contains(o, x, z)) {
            ok = false;
            w = tuple_str({o, x, y}) + " and " + tuple_str({o, y, z}) + " present but " +
                tuple_str({o, x, z}) + " missing";
          }
  rep.add("B3-endpoint-transitivity", ok, w);

  PropertyResult refl = check_basic(b, BasicProperty::Reflexive);
  rep.add("B4-reflexivity", refl.pass, refl.detail);

  PropertyResult anti = check_basic(b, BasicProperty::Antisymmetric);
  rep.add("B5-antisymmetry", anti.pass, anti.detail);

  bool b2 = rep.rows[1].pass;
  rep.add("B2<=>B4&B5", b2 == (refl.pass && anti.pass),
          b2 ? "" : "closure and reflexivity+antisymmetry disagree on this instance");
  return rep;
}

TernaryRelation order_betweenness(const PosetTable& p) {
  const int n = p.universe();
  const BinaryRelation& le = p.leq();
  TernaryRelation b(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (x == y || y == z || (le.contains(x, y) && le.contains(y, z)) ||
            (le.contains(z, y) && le.contains(y, x)))
          b.insert(x, y, z);
  return b;
}

TernaryRelation lattice_betweenness(const LatticeTable& l) {
  const int n = l.universe();
  TernaryRelation b(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int lower = l.join(l.meet(x, y), l.meet(y, z));
        int upper = l.meet(l.join(x, y), l.join(y, z));
        if (lower == y && upper == y) b.insert(x, y, z);
      }
  return b;
}

TernaryRelation metric_betweenness(const FiniteMetric& d) {
  const int n = d.size();
  TernaryRelation b(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (d.dist(x, z) == d.dist(x, y) + d.dist(y, z)) b.insert(x, y, z);
  return b;
}

TernaryRelation metric_betweenness_ge(const FiniteMetric& d) {
  const int n = d.size();
  TernaryRelation b(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (d.dist(x, z) >= d.dist(x, y) + d.dist(y, z)) b.insert(x, y, z);
  return b;
}

TernaryRelation betweenness_at_level(const MetricNest& nest, const Grade& a) {
  return metric_betweenness(nest.slice(a));
}

ValidationReport check_betweenness_nest(const MetricNest& nest) {
  ValidationReport rep;
  std::vector<Grade> probes = nest.probe_levels();
  std::vector<TernaryRelation> bs;
  bs.reserve(probes.size());
  for (const Grade& a : probes) bs.push_back(betweenness_at_level(nest, a));

  bool ok = true;
  std::string w;
  for (std::size_t i = 0; i + 1 < bs.size() && ok; ++i) {
    if (!bs[i + 1].subset_of(bs[i])) {
      ok = false;
      for (const auto& tr : bs[i + 1].triples())
        if (!bs[i].contains(tr[0], tr[1], tr[2])) {
          w = "triple " + tuple_str({tr[0], tr[1], tr[2]}) + " between at level " +
              probes[i + 1].str() + " but not at " + probes[i].str();
          break;
        }
    }
  }
  rep.add("antitone-inclusion", ok, w);

  ok = true;
  w.clear();
  for (std::size_t i = 0; i < bs.size() && ok; ++i) {
    TernaryRelation uni(nest.size());
    for (std::size_t j = i; j < bs.size(); ++j)
      for (const auto& tr : bs[j].triples()) uni.insert(tr[0], tr[1], tr[2]);
    if (!(uni == bs[i])) {
      ok = false;
      w = "at level " + probes[i].str() +
          ": relation differs from the union over levels above it";
    }
  }
  rep.add("union-identity", ok, w);

  return rep;
}

}  // namespace kmb
