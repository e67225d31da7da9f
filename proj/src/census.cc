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

#include "geodex/census.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "geodex/families.h"
#include "geodex/report.h"

namespace geodex {

std::vector<const CensusRecord*> CensusResult::TwoGeodesicTransitive(bool two_arc) const {
  std::vector<const CensusRecord*> out;
  for (const CensusRecord& r : classes) {
    if (r.report.arc_transitive && r.report.two_geodesic_transitive &&
        r.report.two_arc_transitive == two_arc) {
      out.push_back(&r);
    }
  }
  return out;
}

std::vector<FiniteGroup> CensusGroups(int order) {
  std::vector<FiniteGroup> groups;
  switch (order) {
    case 4:
      groups.push_back(Cyclic(4));
      groups.push_back(ElementaryAbelian(2, 2));
      break;
    case 8:
      groups.push_back(Cyclic(8));
      groups.push_back(DirectProduct(Cyclic(4), Cyclic(2)));
      groups.push_back(ElementaryAbelian(2, 3));
      groups.push_back(Dihedral8());
      groups.push_back(Quaternion8());
      break;
    case 9:
      groups.push_back(Cyclic(9));
      groups.push_back(ElementaryAbelian(3, 2));
      break;
    case 25:
      groups.push_back(Cyclic(25));
      groups.push_back(ElementaryAbelian(5, 2));
      break;
    case 27:
      groups.push_back(Cyclic(27));
      groups.push_back(DirectProduct(Cyclic(9), Cyclic(3)));
      groups.push_back(ElementaryAbelian(3, 3));
      groups.push_back(ExtraspecialP3(3));
      groups.push_back(ModularP3(3));
      break;
    default:
      throw std::invalid_argument("census: unsupported order " + std::to_string(order) +
                                  " (supported: 4, 8, 9, 25, 27)");
  }
  return groups;
}

std::vector<std::vector<int>> InverseClasses(const FiniteGroup& group) {
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < group.size(); ++x) {
    if (x == group.identity()) continue;
    const int y = group.Inv(x);
    if (y < x) continue;
    classes.push_back(x == y ? std::vector<int>{x} : std::vector<int>{x, y});
  }
  return classes;
}

std::vector<int> MaskToConnection(const std::vector<std::vector<int>>& classes,
                                  std::uint64_t mask) {
  std::vector<int> s;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if ((mask >> c) & 1) s.insert(s.end(), classes[c].begin(), classes[c].end());
  }
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

struct Candidate {
  int group = 0;
  std::uint64_t mask = 0;
};

}  // namespace

CensusResult RunCensus(int order, int jobs) {
  const std::vector<FiniteGroup> groups = CensusGroups(order);
  std::vector<std::vector<std::vector<int>>> classes;
  std::vector<Candidate> candidates;
  CensusResult result;
  result.order = order;
  for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi) {
    result.groups.push_back(groups[gi].name());
    classes.push_back(InverseClasses(groups[gi]));
    const std::uint64_t limit = std::uint64_t{1} << classes.back().size();
    for (std::uint64_t mask = 1; mask < limit; ++mask) candidates.push_back({gi, mask});
  }
  result.candidates = static_cast<long long>(candidates.size());

  auto graph_of = [&](const Candidate& c) {
    const FiniteGroup& g = groups[c.group];
    return Cayley(g, ConnectionSet(g, MaskToConnection(classes[c.group], c.mask)));
  };

  std::vector<std::optional<CanonicalKey>> keys(candidates.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < candidates.size(); i = next++) {
        const Graph g = graph_of(candidates[i]);
        if (IsConnected(g)) keys[i] = CanonicalKeyOf(g);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = candidates.size();
    }
  };
  const int threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  // Candidates are in (group, mask) order, so the first hit is the minimum.
  std::map<CanonicalKey, std::size_t> representative;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!keys[i]) continue;
    ++result.connected;
    representative.emplace(*keys[i], i);
  }

  std::vector<std::pair<CanonicalKey, std::size_t>> reps(representative.begin(),
                                                         representative.end());
  result.classes.resize(reps.size());
  next = 0;
  auto analyze_worker = [&] {
    try {
      for (std::size_t k = next++; k < reps.size(); k = next++) {
        const Candidate& c = candidates[reps[k].second];
        const Graph g = graph_of(c);
        CensusRecord& rec = result.classes[k];
        rec.group = groups[c.group].name();
        rec.mask = c.mask;
        rec.connection = MaskToConnection(classes[c.group], c.mask);
        rec.key = reps[k].first;
        rec.report = Analyze(g);
        rec.classification = ClassifyNamed(g, rec.key);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = reps.size();
    }
  };
  pool.clear();
  for (int t = 1; t < threads; ++t) pool.emplace_back(analyze_worker);
  analyze_worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return result;
}

std::string FormatCensus(const CensusResult& result) {
  std::ostringstream out;
  std::string groups;
  for (const auto& g : result.groups) groups += (groups.empty() ? "" : ",") + g;
  out << "order: " << result.order << "\n"
      << "groups: " << groups << "\n"
      << "candidates: " << result.candidates << "\n"
      << "connected: " << result.connected << "\n"
      << "isomorphism_classes: " << result.classes.size() << "\n";
  for (const bool two_arc : {true, false}) {
    const auto records = result.TwoGeodesicTransitive(two_arc);
    out << (two_arc ? "two_arc_transitive" : "two_geodesic_not_two_arc") << ": "
        << records.size() << "\n";
    for (const CensusRecord* r : records) {
      std::ostringstream mask;
      mask << std::hex << r->mask;
      out << "  class name=" << r->classification.name << " tag=" << r->classification.tag
          << " group=" << r->group << " mask=0x" << mask.str()
          << " valency=" << (r->report.valency ? std::to_string(*r->report.valency) : "irregular")
          << " diameter=" << r->report.diameter
          << " girth=" << (r->report.girth ? std::to_string(*r->report.girth) : "infinite")
          << " aut_order=" << r->report.aut_order.str()
          << " distance_transitive=" << BoolString(r->report.distance_transitive)
          << " primitive="
          << (r->report.primitive ? BoolString(*r->report.primitive) : std::string("n/a"))
          << "\n";
    }
  }
  return out.str();
}

}  // namespace geodex
