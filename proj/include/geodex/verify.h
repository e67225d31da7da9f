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

// Claim-by-claim verification suites. Each outcome pairs an expected value,
// recomputed from its formula, with the computed one.
//
//   thm4.3   family B on E(p^3): stabilizer order, GL(2,p) embedding,
//            determinant-subgroup orbits, SL orbits, |SS|, distance layers,
//            transitivity flags. p in {3, 5, 7}; p = 7 uses the subgroup
//            R(E) x| Aut(E, S) instead of a full automorphism search.
//   ex3.4    family A: flags, normality, |Aut| = 2p^3(p-1)^2. p in {3, 5}.
//   cor6.3   family B: normality, |Aut| = p^4(p^2-1)(p-1). p in {3, 5}.
//   prop3.5  small-order censuses: p = 2 (orders 4, 8), 3 (9, 27), 5 (25).
//   thm1.2   primitivity among the ten non-2-arc-transitive graphs of
//            orders 8, 9, 27. p = 3.
//   thm1.4   order p^2 families. p in {2, 3, 5}.
//   thm1.5   order p^3 families. p in {2, 3, 5}.

#ifndef GEODEX_VERIFY_H_
#define GEODEX_VERIFY_H_

#include <optional>
#include <string>
#include <vector>

namespace geodex {

struct VerificationOutcome {
  std::string suite;
  std::string claim;
  std::string reference;  // the statement being checked
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerifyOptions {
  int p = 3;
  std::optional<int> m;  // thm4.3: restrict to one divisor of p - 1
  int jobs = 1;          // census threads
};

const std::vector<std::string>& SuiteNames();

// Throws std::invalid_argument for an unknown suite or unsupported prime.
std::vector<VerificationOutcome> RunSuite(const std::string& suite, const VerifyOptions& options);

bool AllPass(const std::vector<VerificationOutcome>& outcomes);
// One line per outcome plus a summary line.
std::string FormatOutcomes(const std::vector<VerificationOutcome>& outcomes);

}  // namespace geodex

#endif  // GEODEX_VERIFY_H_
