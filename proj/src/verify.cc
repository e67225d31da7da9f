// Copyright 2026 The geodex Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "geodex/verify.h"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "geodex/analyze.h"
#include "geodex/autsearch.h"
#include "geodex/census.h"
#include "geodex/families.h"
#include "geodex/group.h"
#include "geodex/report.h"

namespace geodex {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void Check(std::string claim, std::string reference, std::string expected,
             std::string computed) {
    const bool pass = expected == computed;
    Add(std::move(claim), std::move(reference), std::move(expected), std::move(computed), pass);
  }
  void Add(std::string claim, std::string reference, std::string expected,
           std::string computed, bool pass) {
    out_.push_back({suite_, std::move(claim), std::move(reference), std::move(expected),
                    std::move(computed), pass});
  }
  std::vector<VerificationOutcome> Take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<VerificationOutcome> out_;
};

std::string Str(long long v) { return std::to_string(v); }

void RequirePrime(int p, std::initializer_list<int> allowed, const std::string& suite) {
  if (std::find(allowed.begin(), allowed.end(), p) == allowed.end()) {
    std::string list;
    for (const int q : allowed) list += (list.empty() ? "" : ", ") + std::to_string(q);
    throw std::invalid_argument(suite + ": unsupported prime " + std::to_string(p) +
                                " (supported: " + list + ")");
  }
}

std::string SortedLengths(const std::vector<std::vector<int>>& orbits) {
  std::vector<int> lengths;
  for (const auto& o : orbits) lengths.push_back(static_cast<int>(o.size()));
  std::sort(lengths.begin(), lengths.end());
  return JoinInts(lengths);
}

// Full automorphism group of g through the search's base.
PermGroup FullAut(const Graph& g) { return GroupFromSearch(g, SearchAutomorphisms(g)); }

// "true"/"false" for arc-transitive with one orbit on 2-geodesics.
bool TwoGeodesicTransitive(const TransitivityReport& r) {
  return r.arc_transitive && r.two_geodesic_transitive;
}

// ---------------------------------------------------------------- thm4.3

std::vector<VerificationOutcome> RunFamilyB(const VerifyOptions& options) {
  const int p = options.p;
  RequirePrime(p, {3, 5, 7}, "thm4.3");
  Recorder rec("thm4.3");
  const FiniteGroup e = ExtraspecialP3(p);
  const ConnectionSet s = ExtraspecialSetB(e);
  const auto aut_es = AutStabSet(e, s);
  const long long gl2 = static_cast<long long>(p * p - 1) * (p * p - p);

  rec.Check("aut_es_order", "|Aut(E(p^3),S)| = |GL(2,p)| = p(p^2-1)(p-1)",
            Str(static_cast<long long>(p) * (p * p - 1) * (p - 1)), Str(aut_es.size()));
  std::set<Mat2> matrices;
  bool invertible = true;
  for (const auto& alpha : aut_es) {
    const Mat2 m = InducedMatrix(e, alpha);
    invertible = invertible && m.Det() != 0;
    matrices.insert(m);
  }
  rec.Check("induced_matrix_injective", "Aut(E(p^3),S) -> GL(2,p) is a bijection",
            "injective, image " + Str(gl2),
            std::string(matrices.size() == aut_es.size() && invertible ? "injective"
                                                                       : "not injective") +
                ", image " + Str(matrices.size()));

  std::vector<int> divisors;
  if (options.m) {
    if (*options.m < 1 || (p - 1) % *options.m != 0) {
      throw std::invalid_argument("thm4.3: m must divide p - 1");
    }
    divisors.push_back(*options.m);
  } else {
    for (int m = 1; m <= p - 1; ++m) {
      if ((p - 1) % m == 0) divisors.push_back(m);
    }
  }
  for (const int m : divisors) {
    const auto sub = DetIndexSubgroup(e, aut_es, m);
    rec.Check("det_index_" + Str(m) + "_order", "index-m subgroup of Aut(E(p^3),S)",
              Str(static_cast<long long>(aut_es.size()) / m), Str(sub.size()));
    std::vector<int> expected = {1, p * p - 1};
    for (int i = 0; i < m; ++i) expected.push_back((p - 1) / m);
    for (int i = 0; i < m; ++i) expected.push_back((p * p - 1) * (p - 1) / m);
    std::sort(expected.begin(), expected.end());
    rec.Check("orbit_lengths_m" + Str(m),
              "orbits 1; p^2-1; m x (p-1)/m; m x (p^2-1)(p-1)/m",
              JoinInts(expected), SortedLengths(AutomorphismOrbits(e, sub)));
  }

  {
    const auto orbits = AutomorphismOrbits(e, DetOneSubgroup(e, aut_es));
    std::vector<std::vector<int>> expected;
    const Extraspecial arith(p);
    for (int i = 0; i < p; ++i) {
      const int ci = arith.Index({0, 0, i});
      expected.push_back({ci});
      std::vector<int> coset;
      for (const int x : s.members()) coset.push_back(e.Mul(ci, x));
      std::sort(coset.begin(), coset.end());
      expected.push_back(coset);
    }
    std::vector<std::vector<int>> computed = orbits;
    for (auto& o : computed) std::sort(o.begin(), o.end());
    std::sort(expected.begin(), expected.end());
    std::sort(computed.begin(), computed.end());
    rec.Check("sl_orbits", "SL(2,p) has orbit set {{c^i}, c^i S}",
              "{{c^i}, c^i S}: " + Str(2 * p) + " orbits",
              std::string(computed == expected ? "{{c^i}, c^i S}" : "other") + ": " +
                  Str(computed.size()) + " orbits");
  }

  rec.Check("product_set", "|SS| = p^2 + (p^2-1)(p-1)",
            Str(p * p + (p * p - 1) * (p - 1)), Str(ProductSet(e, s).size()));

  const Graph g = Cayley(e, s);
  rec.Check("distance_layers", "layers (1, p^2-1, (p^2-1)(p-1), p-1)",
            JoinInts({1, p * p - 1, (p * p - 1) * (p - 1), p - 1}),
            JoinInts(MakeDistancePartition(g, e.identity()).LayerSizes()));
  rec.Check("diameter", "diameter 3", "3", Str(Diameter(g)));
  const auto girth = Girth(g);
  rec.Check("girth", "girth 3", "3", girth ? Str(*girth) : "infinite");

  const bool full = p <= 5;
  const std::vector<Perm> normalizer = NormalizerGenerators(e, s);
  const TransitivityReport report = full ? Analyze(g) : Analyze(g, normalizer);
  const std::string source = full ? "" : " (subgroup R(E) x| Aut(E,S))";
  rec.Check("distance_transitive", "distance transitive" + source, "true",
            BoolString(report.distance_transitive));
  rec.Check("two_geodesic_transitive", "2-geodesic transitive" + source, "true",
            BoolString(TwoGeodesicTransitive(report)));
  if (full) {
    rec.Check("not_two_arc_transitive", "not 2-arc transitive", "false",
              BoolString(report.two_arc_transitive));
  } else {
    // A triangle-closing 2-arc and a 2-geodesic lie in different orbits of
    // any automorphism group.
    const bool mixed = girth && *girth == 3 && report.two_geodesics > 0;
    rec.Check("not_two_arc_transitive", "not 2-arc transitive (girth 3, non-complete)",
              "false", mixed ? "false" : "undetermined");
  }

  {
    const int a = Extraspecial(p).Index(Extraspecial::a());
    SchreierSimsOptions ss;
    ss.base_prefix = {e.identity(), a};
    const PermGroup b = PermGroup::SchreierSims(e.size(), normalizer, ss);
    const auto dist = Distances(g, e.identity());
    std::vector<int> target;
    for (const int w : g.Neighbors(a)) {
      if (dist[w] == 2) target.push_back(w);
    }
    const BigInt stab_order =
        b.order() / (BigInt(b.basic_orbit(0).size()) * BigInt(b.basic_orbit(1).size()));
    const auto stab_gens = b.StabilizerGenerators(2);
    auto orbit = Orbit(e.size(), stab_gens, target.empty() ? 0 : target[0]);
    std::sort(orbit.begin(), orbit.end());
    const bool regular = !target.empty() && orbit == target && stab_order == target.size();
    rec.Check("stabilizer_regular", "B_a regular on Gamma(a) n Gamma_2(1), size p(p-1)",
              "regular on " + Str(p * (p - 1)),
              std::string(regular ? "regular" : "not regular") + " on " + Str(target.size()));
  }
  return rec.Take();
}

// ---------------------------------------------------------------- ex3.4, cor6.3

std::vector<VerificationOutcome> RunFamilyA(const VerifyOptions& options) {
  const int p = options.p;
  RequirePrime(p, {3, 5}, "ex3.4");
  Recorder rec("ex3.4");
  const FiniteGroup e = ExtraspecialP3(p);
  const ConnectionSet s = ExtraspecialSetA(e);
  const Graph g = Cayley(e, s);
  const PermGroup aut = FullAut(g);
  const TransitivityReport report = Analyze(g, aut, true);
  const long long q = p - 1;
  rec.Check("aut_order", "|Aut| = |E(p^3) x| ((Z_{p-1} x Z_{p-1}) x| Z_2)| = 2p^3(p-1)^2",
            Str(2LL * p * p * p * q * q), aut.order().str());
  rec.Check("aut_es_order", "|Aut(E(p^3),S)| = 2(p-1)^2", Str(2 * q * q),
            Str(AutStabSet(e, s).size()));
  rec.Check("normal_cayley", "Cay(E(p^3),S) is normal", "true",
            BoolString(IsNormalCayley(e, s, aut)));
  rec.Check("two_geodesic_transitive", "2-geodesic transitive", "true",
            BoolString(TwoGeodesicTransitive(report)));
  rec.Check("not_two_arc_transitive", "not 2-arc transitive", "false",
            BoolString(report.two_arc_transitive));
  if (p >= 5) {
    rec.Check("not_distance_transitive", "neither distance transitive nor 2-arc transitive",
              "false", BoolString(report.distance_transitive));
  }
  return rec.Take();
}

std::vector<VerificationOutcome> RunCorollary(const VerifyOptions& options) {
  const int p = options.p;
  RequirePrime(p, {3, 5}, "cor6.3");
  Recorder rec("cor6.3");
  const FiniteGroup e = ExtraspecialP3(p);
  const ConnectionSet s = ExtraspecialSetB(e);
  const Graph g = Cayley(e, s);
  const PermGroup aut = FullAut(g);
  rec.Check("aut_order", "|Aut| = |R(E(p^3)) x| GL(2,p)| = p^4(p^2-1)(p-1)",
            Str(static_cast<long long>(p) * p * p * p * (p * p - 1) * (p - 1)),
            aut.order().str());
  rec.Check("normal_cayley", "Cay(E(p^3),S) is normal", "true",
            BoolString(IsNormalCayley(e, s, aut)));
  return rec.Take();
}

// ---------------------------------------------------------------- prop3.5

struct CensusExpectation {
  int order;
  std::vector<std::string> two_arc;
  std::vector<std::string> other;
};

std::string SortedNames(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ",") + n;
  return out;
}

std::vector<VerificationOutcome> RunCensusSuite(const VerifyOptions& options) {
  const int p = options.p;
  RequirePrime(p, {2, 3, 5}, "prop3.5");
  Recorder rec("prop3.5");
  std::vector<CensusExpectation> expectations;
  if (p == 2) {
    expectations.push_back({4, {"C4", "K4"}, {}});
    expectations.push_back({8, {"C8", "H(3,2)", "K4,4", "K8"}, {"K4[2]"}});
  } else if (p == 3) {
    expectations.push_back({9, {"C9", "K9"}, {"H(2,3)", "K3[3]"}});
    expectations.push_back({27,
                            {"C27", "K27"},
                            {"G(27,4)", "H(3,3)", "G(27,8)", "K9[3]", "K3[9]", "Schlafli",
                             "Schlafli-complement"}});
  } else {
    expectations.push_back({25, {"C25", "K25"}, {"H(2,5)", "H(2,5)-complement", "K5[5]"}});
  }
  for (const auto& want : expectations) {
    const CensusResult result = RunCensus(want.order, options.jobs);
    const std::string n = Str(want.order);
    for (const bool two_arc : {true, false}) {
      std::vector<std::string> names;
      for (const CensusRecord* r : result.TwoGeodesicTransitive(two_arc)) {
        names.push_back(r->classification.name);
      }
      rec.Check("order" + n + (two_arc ? "_two_arc" : "_not_two_arc"),
                std::string("order ") + n +
                    (two_arc ? ", 2-arc transitive" : ", 2-geodesic but not 2-arc transitive"),
                SortedNames(two_arc ? want.two_arc : want.other), SortedNames(names));
    }
    int violations = 0;
    for (const CensusRecord& r : result.classes) {
      const TransitivityReport& t = r.report;
      if (t.two_arc_transitive && !t.two_geodesic_transitive) ++violations;
      if (t.distance_transitive && !t.arc_transitive) ++violations;
      if (t.arc_transitive && !t.vertex_transitive) ++violations;
      if (!t.vertex_transitive) ++violations;
    }
    rec.Check("order" + n + "_flag_monotonicity",
              "2-arc => 2-geodesic; distance => arc => vertex transitive", "0 violations",
              Str(violations) + " violations");
  }
  return rec.Take();
}

// ---------------------------------------------------------------- thm1.2

struct ElabPresentation {
  bool cayley = false;
  bool normal = false;
};

// Looks for connection sets S of Z_q^r (q^r = n) with Cay(Z_q^r, S) isomorphic
// to g, and whether any of them is normal.
ElabPresentation FindElabPresentation(const Graph& g, const CanonicalKey& key, int q, int r) {
  const FiniteGroup group = ElementaryAbelian(q, r);
  const auto classes = InverseClasses(group);
  const int valency = g.Degree(0);
  ElabPresentation found;
  const std::uint64_t limit = std::uint64_t{1} << classes.size();
  for (std::uint64_t mask = 1; mask < limit && !found.normal; ++mask) {
    int size = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if ((mask >> c) & 1) size += static_cast<int>(classes[c].size());
    }
    if (size != valency) continue;
    const ConnectionSet s(group, MaskToConnection(classes, mask));
    const Graph h = Cayley(group, s);
    if (!IsConnected(h)) continue;
    const SearchResult search = SearchAutomorphisms(h);
    if (search.key != key) continue;
    found.cayley = true;
    if (IsNormalCayley(group, s, GroupFromSearch(h, search))) found.normal = true;
  }
  return found;
}

// Primitivity read off the structure of each family, with the fact used.
std::pair<bool, std::string> StructuralPrimitivity(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kCompleteMultipartite:
      return {false, "Aut = S_b wr S_m preserves the parts"};
    case Family::kHamming:
      return {true, "Aut = S_n wr S_d in product action, n >= 3"};
    case Family::kEp3FamilyA:
    case Family::kEp3FamilyB:
      return {false, "normal Cayley on E(p^3): the centre's orbits are blocks"};
    case Family::kSchlafli:
    case Family::kSchlafliComplement:
      return {true, "contains PSU(4,2) acting primitively on 27 points"};
    default:
      throw std::logic_error("StructuralPrimitivity: unexpected family");
  }
}

std::vector<VerificationOutcome> RunPrimitivity(const VerifyOptions& options) {
  RequirePrime(options.p, {3}, "thm1.2");
  Recorder rec("thm1.2");
  const char* specs[] = {"hamming:2,3", "kmb:3,3", "kmb:4,2", "ep3A:3", "hamming:3,3",
                         "ep3B:3", "kmb:9,3", "kmb:3,9", "schlafli", "schlafli_complement"};
  int matches = 0;
  std::vector<std::string> primitive_names, expected_primitive_names;
  for (const char* text : specs) {
    const FamilySpec spec = ParseFamilySpec(text);
    const std::string name = DisplayName(spec);
    const Graph g = Build(spec);
    const SearchResult search = SearchAutomorphisms(g);
    const PermGroup aut = GroupFromSearch(g, search);
    const bool primitive = IsPrimitive(aut);
    const int n = g.n();
    const int q = n == 8 ? 2 : 3;
    const int r = n == 8 ? 3 : (n == 9 ? 2 : 3);
    const ElabPresentation elab = FindElabPresentation(g, search.key, q, r);
    const bool hit = primitive && elab.normal;
    const bool expected = name == "H(2,3)" || name == "H(3,3)";
    matches += hit;
    if (primitive) primitive_names.push_back(name);
    const auto [structural, reason] = StructuralPrimitivity(spec);
    if (structural) expected_primitive_names.push_back(name);
    rec.Add(name + " primitive", reason, BoolString(structural), BoolString(primitive),
            structural == primitive);
    rec.Add(name, "normal Cayley on Z_p^n with primitive Aut iff H(2,3) or H(3,3)",
            BoolString(expected),
            BoolString(hit) + " (primitive=" + BoolString(primitive) +
                ", cayley_on_Zp^n=" + BoolString(elab.cayley) +
                ", normal=" + BoolString(elab.normal) + ")",
            hit == expected);
  }
  rec.Check("count", "exactly two of the ten graphs", "2", Str(matches));
  rec.Check("primitive_aut", "graphs whose Aut is primitive, ignoring the Cayley condition",
            SortedNames(expected_primitive_names), SortedNames(primitive_names));
  return rec.Take();
}

// ---------------------------------------------------------------- thm1.4, thm1.5

std::string FamilyFlags(const TransitivityReport& r, bool connected) {
  return "connected=" + BoolString(connected) + " arc=" + BoolString(r.arc_transitive) +
         " 2geo=" + BoolString(TwoGeodesicTransitive(r)) +
         " 2arc=" + BoolString(r.two_arc_transitive);
}

void CheckFamilies(Recorder& rec, const std::vector<std::pair<FamilySpec, bool>>& families) {
  for (const auto& [spec, two_arc] : families) {
    const Graph g = Build(spec);
    const bool connected = IsConnected(g);
    std::string computed = "connected=false";
    if (connected) computed = FamilyFlags(Analyze(g), true);
    rec.Check(FormatFamilySpec(spec), DisplayName(spec) + (two_arc ? " is 2-arc transitive"
                                                                   : " is 2-geodesic but not 2-arc transitive"),
              "connected=true arc=true 2geo=true 2arc=" + BoolString(two_arc), computed);
  }
}

FamilySpec Spec(Family f, std::vector<int> params) { return {f, std::move(params), {}, {}}; }

std::vector<VerificationOutcome> RunOrderP2(const VerifyOptions& options) {
  const int p = options.p;
  RequirePrime(p, {2, 3, 5}, "thm1.4");
  Recorder rec("thm1.4");
  std::vector<std::pair<FamilySpec, bool>> families = {
      {Spec(Family::kCycle, {p * p}), true},
      {Spec(Family::kComplete, {p * p}), true},
  };
  if (p >= 3) {
    families.push_back({Spec(Family::kCompleteMultipartite, {p, p}), false});
    families.push_back({Spec(Family::kHamming, {2, p}), false});
    families.push_back({Spec(Family::kHamming2Complement, {p}), false});
  }
  CheckFamilies(rec, families);
  return rec.Take();
}

std::vector<VerificationOutcome> RunOrderP3(const VerifyOptions& options) {
  const int p = options.p;
  RequirePrime(p, {2, 3, 5}, "thm1.5");
  Recorder rec("thm1.5");
  const int n = p * p * p;
  std::vector<std::pair<FamilySpec, bool>> families = {
      {Spec(Family::kCycle, {n}), true},
      {Spec(Family::kComplete, {n}), true},
  };
  if (p == 2) {
    families.push_back({Spec(Family::kHamming, {3, 2}), true});
    families.push_back({Spec(Family::kCompleteBipartite, {4}), true});
  }
  if (p == 3) {
    families.push_back({Spec(Family::kSchlafli, {}), false});
    families.push_back({Spec(Family::kSchlafliComplement, {}), false});
  }
  families.push_back({Spec(Family::kCompleteMultipartite, {p * p, p}), false});
  if (p >= 3) {
    families.push_back({Spec(Family::kCompleteMultipartite, {p, p * p}), false});
    families.push_back({Spec(Family::kHamming, {3, p}), false});
    families.push_back({Spec(Family::kEp3FamilyA, {p}), false});
    families.push_back({Spec(Family::kEp3FamilyB, {p}), false});
  }
  CheckFamilies(rec, families);
  return rec.Take();
}

}  // namespace

const std::vector<std::string>& SuiteNames() {
  static const auto* names = new std::vector<std::string>{
      "thm4.3", "ex3.4", "cor6.3", "prop3.5", "thm1.2", "thm1.4", "thm1.5"};
  return *names;
}

std::vector<VerificationOutcome> RunSuite(const std::string& suite, const VerifyOptions& options) {
  if (suite == "thm4.3") return RunFamilyB(options);
  if (suite == "ex3.4") return RunFamilyA(options);
  if (suite == "cor6.3") return RunCorollary(options);
  if (suite == "prop3.5") return RunCensusSuite(options);
  if (suite == "thm1.2") return RunPrimitivity(options);
  if (suite == "thm1.4") return RunOrderP2(options);
  if (suite == "thm1.5") return RunOrderP3(options);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

bool AllPass(const std::vector<VerificationOutcome>& outcomes) {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const VerificationOutcome& o) { return o.pass; });
}

std::string FormatOutcomes(const std::vector<VerificationOutcome>& outcomes) {
  std::string out;
  int passed = 0;
  for (const auto& o : outcomes) {
    passed += o.pass;
    out += std::string(o.pass ? "[PASS] " : "[FAIL] ") + o.suite + " " + o.claim +
           ": expected=" + o.expected + " computed=" + o.computed + "  -- " + o.reference +
           "\n";
  }
  const std::string suite = outcomes.empty() ? "" : outcomes.front().suite;
  out += "summary: " + suite + " " + std::to_string(passed) + "/" +
         std::to_string(outcomes.size()) + " claims pass\n";
  return out;
}

}  // namespace geodex
