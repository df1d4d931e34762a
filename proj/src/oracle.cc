// Copyright 2026 The Authors.
//
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

#include "maxext/oracle.h"

#include <algorithm>

namespace maxext {
namespace {

// True if some Y with W < Y <= A passes `admissible`.
template <typename Admissible>
bool has_strict_superset(const FinSet& a, const FinSet& w,
                         Admissible&& admissible, std::size_t cap) {
  const FinSet free = set_difference(a, w);
  const SubsetRange range = subsets(free, cap);
  for (auto it = range.begin(); it != range.end(); ++it) {
    if (it.mask() == 0) continue;
    if (admissible(set_union(w, *it))) return true;
  }
  return false;
}

void add(Report& report, std::string name, bool passed) {
  report.push_back({std::move(name), passed});
}

}  // namespace

bool all_passed(const Report& report) {
  return std::all_of(report.begin(), report.end(),
                     [](const Check& c) { return c.passed; });
}

Report verify_fcp(const FinSet& a, const SetPredicate& phi, const FinSet& w) {
  Report report;
  add(report, "within", w.is_subset_of(a));
  add(report, "property", phi(w));
  bool maximal = true;
  for (Nat e : set_difference(a, w)) {
    if (phi(w.with(e))) {
      maximal = false;
      break;
    }
  }
  add(report, "maximal", maximal);
  return report;
}

Report verify_ce(const FinSet& a, const FinSet& c, const SetPredicate& phi,
                 const ClosureOperator& d, const FinSet& w, std::size_t cap) {
  Report report;
  add(report, "within", w.is_subset_of(a));
  add(report, "contains start", c.is_subset_of(w));
  add(report, "closed", is_closed(w, d));
  add(report, "property", phi(w));
  add(report, "maximal",
      !has_strict_superset(
          a, w,
          [&](const FinSet& y) { return is_closed(y, d) && phi(y); }, cap));
  return report;
}

Report verify_nce(const FinSet& a, const FinSet& c, const SetPredicate& phi,
                  const NdClosureOperator& n, const FinSet& w,
                  std::size_t cap) {
  Report report;
  add(report, "within", w.is_subset_of(a));
  add(report, "contains start", c.is_subset_of(w));
  add(report, "closed", is_nclosed(w, n));
  add(report, "property", phi(w));
  add(report, "maximal",
      !has_strict_superset(
          a, w,
          [&](const FinSet& y) { return is_nclosed(y, n) && phi(y); }, cap));
  return report;
}

Report verify_closure(const ClosureOperator& d, const FinSet& x,
                      const FinSet& w, std::size_t cap) {
  Report report;
  add(report, "contains input", x.is_subset_of(w));
  add(report, "closed", is_closed(w, d));
  bool least = true;
  const FinSet free = set_difference(d.universe().ground(), x);
  for (const FinSet& extra : subsets(free, cap)) {
    const FinSet y = set_union(x, extra);
    if (is_closed(y, d) && !w.is_subset_of(y)) {
      least = false;
      break;
    }
  }
  add(report, "least", least);
  return report;
}

Report verify_semilattice_ideal(const JoinSemilattice& l, const FinSet& i,
                                const FinSet& w) {
  Report report;
  const bool in_range = w.empty() || w.max() < l.size();
  add(report, "elements", in_range);
  if (!in_range) return report;
  add(report, "contains start", i.is_subset_of(w));
  add(report, "ideal", is_semilattice_ideal(w, l));
  add(report, "proper", !w.contains(l.top()));
  add(report, "maximal",
      !has_strict_superset(
          l.elements(), w,
          [&](const FinSet& y) {
            return !y.contains(l.top()) && is_semilattice_ideal(y, l);
          },
          kMaxEnumerationCap));
  return report;
}

Report verify_poset_ideal(const Poset& p, const FinSet& i, const FinSet& w) {
  Report report;
  const bool in_range = w.empty() || w.max() < p.size();
  add(report, "elements", in_range);
  if (!in_range) return report;
  add(report, "contains start", i.is_subset_of(w));
  add(report, "ideal", is_poset_ideal(w, p));
  add(report, "maximal",
      !has_strict_superset(
          p.elements(), w,
          [&](const FinSet& y) { return is_poset_ideal(y, p); },
          kMaxEnumerationCap));
  return report;
}

}  // namespace maxext
