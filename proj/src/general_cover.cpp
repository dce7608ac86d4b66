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

#include "subcover/general_cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "solver_util.hpp"

namespace subcover {

using internal::CeilCount;

double StopFraction(SmpSubroutine kind) {
  switch (kind) {
    case SmpSubroutine::kRandomGreedy:
      return 1.0 / std::exp(1.0);
    case SmpSubroutine::kDoubleGreedy:
      return 0.5;
    case SmpSubroutine::kExact:
    case SmpSubroutine::kFastExact:
      return 1.0;
  }
  return 1.0;
}

std::string_view ToString(SmpSubroutine kind) {
  switch (kind) {
    case SmpSubroutine::kRandomGreedy:
      return "rg";
    case SmpSubroutine::kDoubleGreedy:
      return "dg";
    case SmpSubroutine::kExact:
      return "ex";
    case SmpSubroutine::kFastExact:
      return "fex";
  }
  return "?";
}

SmpSubroutine SubroutineFromString(std::string_view text) {
  if (text == "rg") return SmpSubroutine::kRandomGreedy;
  if (text == "dg") return SmpSubroutine::kDoubleGreedy;
  if (text == "ex") return SmpSubroutine::kExact;
  if (text == "fex") return SmpSubroutine::kFastExact;
  throw InputError("unknown subroutine: " + std::string(text));
}

namespace {

void CheckGround(const Oracle& oracle, const ElementSet& ground) {
  if (!IsValidSet(ground, oracle.n())) {
    throw InputError("ground must be sorted, unique and in range");
  }
}

Session SessionWith(const Oracle& oracle, const ElementSet& members) {
  Session session = oracle.NewSession();
  for (ElementId x : members) session.Add(x);
  return session;
}

}  // namespace

ElementSet RandomGreedySmp(const Oracle& oracle, const ElementSet& ground,
                           std::size_t kappa, std::uint64_t seed) {
  CheckGround(oracle, ground);
  std::mt19937_64 rng(seed);
  Session session = oracle.NewSession();
  std::vector<internal::Pick> ranked;
  for (std::size_t round = 0; round < kappa; ++round) {
    ranked.clear();
    for (ElementId x : ground) {
      if (session.Contains(x)) continue;
      const double gain = session.Gain(x);
      if (gain > kTolerance) ranked.push_back({x, gain});
    }
    const std::size_t top = std::min(kappa, ranked.size());
    std::partial_sort(ranked.begin(), ranked.begin() + top, ranked.end(),
                      [](const internal::Pick& a, const internal::Pick& b) {
                        if (a.gain != b.gain) return a.gain > b.gain;
                        return a.element < b.element;
                      });
    std::uniform_int_distribution<std::size_t> slot(0, kappa - 1);
    const std::size_t chosen = slot(rng);
    if (chosen < top) session.Add(ranked[chosen].element);
  }
  return session.Elements();
}

ElementSet RandomGreedySmp(const SmpInstance& instance, std::uint64_t seed) {
  return RandomGreedySmp(instance.oracle, Iota(instance.oracle.n()),
                         instance.kappa, seed);
}

ElementSet DoubleGreedyUsm(const Oracle& oracle, const ElementSet& ground,
                           std::uint64_t seed) {
  CheckGround(oracle, ground);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Session lower = oracle.NewSession();
  Session upper = SessionWith(oracle, ground);
  for (ElementId x : ground) {
    const double a = std::max(lower.Gain(x), 0.0);
    const double b = std::max(upper.RemovalGain(x), 0.0);
    const double draw = coin(rng);
    if (a + b <= 0.0 || draw < a / (a + b)) {
      lower.Add(x);
    } else {
      upper.Remove(x);
    }
  }
  return lower.Elements();
}

ElementSet DoubleGreedyUsm(const Oracle& oracle, std::uint64_t seed) {
  return DoubleGreedyUsm(oracle, Iota(oracle.n()), seed);
}

namespace {

// Depth-first search over subsets of `candidates` added on top of a fixed
// base set, at most `limit` elements in total.
class SubsetSearch {
 public:
  SubsetSearch(const Oracle& oracle, const ElementSet& base, std::size_t limit,
               double target, SearchTimeout timeout)
      : oracle_(oracle),
        session_(SessionWith(oracle, base)),
        limit_(limit),
        target_(target),
        timeout_(timeout),
        start_(std::chrono::steady_clock::now()) {
    result_.set = session_.Elements();
    result_.value = session_.value();
    result_.met_target = MeetsTarget(result_.value, target_);
  }

  SearchResult Run(const ElementSet& candidates) {
    if (result_.met_target) return result_;
    if (Greedy(candidates)) return result_;
    Visit(candidates);
    return result_;
  }

 private:
  // Returns true when the search should stop.
  bool Record() {
    ++result_.nodes;
    const double value = session_.value();
    if (value > result_.value + kTolerance) {
      result_.value = value;
      result_.set = session_.Elements();
    }
    if (MeetsTarget(value, target_)) {
      result_.value = value;
      result_.set = session_.Elements();
      result_.met_target = true;
      return true;
    }
    if (timeout_ > SearchTimeout::zero() && (result_.nodes & 63) == 0 &&
        std::chrono::steady_clock::now() - start_ > timeout_) {
      result_.timed_out = true;
      return true;
    }
    return false;
  }

  bool Greedy(const ElementSet& candidates) {
    Session saved = session_.Fork();
    bool stop = false;
    while (session_.size() < limit_) {
      const auto pick = internal::BestGain(session_, candidates);
      if (!pick || pick->gain <= kTolerance) break;
      session_.Add(pick->element);
      if (Record()) {
        stop = true;
        break;
      }
    }
    session_ = std::move(saved);
    return stop;
  }

  bool Visit(std::span<const ElementId> candidates) {
    if (session_.size() >= limit_) return false;
    std::vector<internal::Pick> ranked;
    ranked.reserve(candidates.size());
    for (ElementId x : candidates) {
      const double gain = session_.Gain(x);
      // Submodularity: a non-positive gain here stays non-positive below,
      // so x never improves a descendant.
      if (gain > kTolerance) ranked.push_back({x, gain});
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const internal::Pick& a, const internal::Pick& b) {
                if (a.gain != b.gain) return a.gain > b.gain;
                return a.element < b.element;
              });
    const std::size_t room = limit_ - session_.size();
    const double base = session_.value();
    std::vector<ElementId> order(ranked.size());
    for (std::size_t i = 0; i < ranked.size(); ++i) order[i] = ranked[i].element;

    for (std::size_t i = 0; i < ranked.size(); ++i) {
      double bound = base;
      for (std::size_t j = i; j < ranked.size() && j < i + room; ++j) {
        bound += ranked[j].gain;
      }
      if (bound <= result_.value + kTolerance) break;
      if (std::isfinite(target_) && bound < target_ - kTolerance) break;
      session_.Add(order[i]);
      if (Record()) return true;
      std::vector<ElementId> rest(order.begin() + i + 1, order.end());
      std::sort(rest.begin(), rest.end());
      if (Visit(rest)) return true;
      session_.Remove(order[i]);
    }
    return false;
  }

  Oracle oracle_;
  Session session_;
  std::size_t limit_;
  double target_;
  SearchTimeout timeout_;
  std::chrono::steady_clock::time_point start_;
  SearchResult result_;
};

}  // namespace

SearchResult ExactSmp(const Oracle& oracle, const ElementSet& ground,
                      std::size_t kappa, double target,
                      SearchTimeout timeout) {
  CheckGround(oracle, ground);
  SubsetSearch search(oracle, {}, kappa, target, timeout);
  return search.Run(ground);
}

MonotonePartition ClassifyMonotoneElements(const Oracle& oracle,
                                           const ElementSet& t) {
  CheckGround(oracle, t);
  MonotonePartition partition;
  if (t.empty()) return partition;
  Session whole = SessionWith(oracle, t);
  for (ElementId x : t) {
    // f(T) - f(T - x) = -(f(T - x) - f(T)).
    if (-whole.RemovalGain(x) >= -kTolerance) {
      partition.monotone.push_back(x);
    } else {
      partition.nonmonotone.push_back(x);
    }
  }
  return partition;
}

SearchResult FastExactSmp(const Oracle& oracle, const ElementSet& ground,
                          std::size_t kappa, double target,
                          SearchTimeout timeout) {
  CheckGround(oracle, ground);
  if (kappa < ground.size()) return ExactSmp(oracle, ground, kappa, target, timeout);
  MonotonePartition parts = ClassifyMonotoneElements(oracle, ground);
  SubsetSearch search(oracle, parts.monotone, ground.size(), target, timeout);
  SearchResult result = search.Run(parts.nonmonotone);
  result.nonmonotone = parts.nonmonotone.size();
  return result;
}

BucketState::BucketState(const Oracle& oracle, std::size_t num_buckets,
                         std::size_t cap)
    : oracle_(oracle), cap_(cap), stored_(oracle.n(), false) {
  if (num_buckets == 0) throw InputError("need at least one bucket");
  for (std::size_t j = 0; j < num_buckets; ++j) {
    buckets_.push_back(oracle_.NewSession());
  }
}

std::optional<std::size_t> BucketState::Offer(ElementId u, double threshold) {
  if (u >= stored_.size()) throw InputError("element id out of range");
  if (stored_[u]) return std::nullopt;
  for (std::size_t j = 0; j < buckets_.size(); ++j) {
    if (buckets_[j].size() >= cap_) continue;
    if (buckets_[j].Gain(u) >= threshold - kTolerance) {
      buckets_[j].Add(u);
      stored_[u] = true;
      return j;
    }
  }
  return std::nullopt;
}

void BucketState::Clear() {
  for (auto& bucket : buckets_) {
    for (ElementId x : bucket.Elements()) bucket.Remove(x);
  }
  std::fill(stored_.begin(), stored_.end(), false);
}

std::size_t BucketState::stored() const {
  std::size_t total = 0;
  for (const auto& bucket : buckets_) total += bucket.size();
  return total;
}

ElementSet BucketState::Union() const {
  ElementSet all;
  for (const auto& bucket : buckets_) {
    const ElementSet members = bucket.Elements();
    all.insert(all.end(), members.begin(), members.end());
  }
  Normalize(all);
  return all;
}

bool BucketState::CheckInvariants() const {
  std::vector<bool> seen(stored_.size(), false);
  std::size_t total = 0;
  for (const auto& bucket : buckets_) {
    if (bucket.size() > cap_) return false;
    for (ElementId x : bucket.Elements()) {
      if (seen[x] || !stored_[x]) return false;
      seen[x] = true;
      ++total;
    }
  }
  return total == static_cast<std::size_t>(
                      std::count(stored_.begin(), stored_.end(), true));
}

BicriteriaResult StreamCover(const CoverInstance& instance, double eps,
                             double alpha, SmpSubroutine sub,
                             std::uint64_t seed, const StreamOptions& options) {
  RequireOpenUnit(eps, "eps");
  RequirePositive(alpha, "alpha");
  internal::RequireThreshold(instance.tau);
  const Oracle& oracle = instance.oracle;
  internal::RunMeter meter(oracle);
  const std::size_t n = oracle.n();
  const double target = (1.0 - eps) * instance.tau;
  const double accept = StopFraction(sub) * target;

  if (MeetsTarget(oracle.Eval({}), target)) {
    return meter.Finish({}, Status::kSolved);
  }
  if (n == 0) return meter.Finish({}, Status::kInfeasibleDetected);

  ElementSet order = Iota(n);
  if (options.shuffle) {
    std::mt19937_64 rng(DeriveSeed(seed, 0, 1));
    std::shuffle(order.begin(), order.end(), rng);
  }

  double g = options.initial_guess > 0.0 ? options.initial_guess : 1.0 + alpha;
  g = std::min(g, static_cast<double>(n));
  BucketState buckets(oracle, CeilCount(2.0 / eps), CeilCount(2.0 * g / eps));

  for (std::uint64_t pass = 0;; ++pass) {
    const std::size_t cap = CeilCount(2.0 * g / eps);
    if (!options.retain_buckets) buckets.Clear();
    buckets.set_cap(cap);
    const double threshold = eps * instance.tau / (2.0 * g);
    for (ElementId u : order) {
      buckets.Offer(u, threshold);
      if (options.observer) options.observer(buckets);
    }

    const ElementSet pool = buckets.Union();
    const std::uint64_t sub_seed = DeriveSeed(seed, pass + 1);
    StreamPass record{g, buckets.stored(), pool.size(), 0, 0.0};
    ElementSet candidate;
    bool timed_out = false;
    switch (sub) {
      case SmpSubroutine::kRandomGreedy:
        candidate = RandomGreedySmp(oracle, pool, cap, sub_seed);
        break;
      case SmpSubroutine::kDoubleGreedy:
        candidate = DoubleGreedyUsm(oracle, pool, sub_seed);
        break;
      case SmpSubroutine::kExact:
      case SmpSubroutine::kFastExact: {
        SearchResult found =
            sub == SmpSubroutine::kExact
                ? ExactSmp(oracle, pool, cap, accept, options.timeout)
                : FastExactSmp(oracle, pool, cap, accept, options.timeout);
        candidate = std::move(found.set);
        timed_out = found.timed_out;
        record.nonmonotone = found.nonmonotone;
        break;
      }
    }
    const double value = oracle.Eval(candidate);
    record.smp_value = value;
    if (options.trace) {
      *options.trace << "g=" << g << " stored=" << record.stored
                     << " smp_value=" << value << '\n';
    }
    if (options.passes) options.passes->push_back(record);

    if (MeetsTarget(value, accept)) {
      return meter.Finish(std::move(candidate), Status::kSolved);
    }
    if (timed_out) {
      return meter.Finish(std::move(candidate), Status::kBudgetExhausted);
    }
    if (g >= static_cast<double>(n)) {
      return meter.Finish(std::move(candidate), Status::kInfeasibleDetected);
    }
    g = std::min(g * (1.0 + alpha), static_cast<double>(n));
  }
}

}  // namespace subcover
