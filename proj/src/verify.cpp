#include "dwlat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "dwlat/covering.hpp"
#include "dwlat/error.hpp"

namespace dwlat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<std::string> ids(const AffineDiagram& d, const std::vector<Weight>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(canonical_id(d, w));
  std::sort(out.begin(), out.end());
  return out;
}

void census_rec(const AffineDiagram& d, std::size_t i, std::int64_t left_level, std::int64_t left_sum,
                std::vector<std::int64_t>& cur, std::vector<std::vector<std::int64_t>>& out) {
  if (i == cur.size()) {
    if (left_level == 0) out.push_back(cur);
    return;
  }
  const std::int64_t c = d.comark(static_cast<int>(i));
  for (std::int64_t k = 0; k * c <= left_level && k <= left_sum; ++k) {
    cur[i] = k;
    census_rec(d, i + 1, left_level - k * c, left_sum - k, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<std::vector<std::int64_t>> label_census(const AffineDiagram& d, std::int64_t level, std::int64_t max_sum) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(d.size()), 0);
  census_rec(d, 0, level, max_sum, cur, out);
  return out;
}

std::vector<std::vector<std::int64_t>> sample_labels(const AffineDiagram& d, std::int64_t level, std::size_t count,
                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<std::int64_t> k(static_cast<std::size_t>(d.size()), 0);
    std::int64_t left = level;
    while (left > 0) {
      std::vector<int> fits;
      for (int j = 0; j < d.size(); ++j)
        if (d.comark(j) <= left) fits.push_back(j);
      const int j = fits[std::uniform_int_distribution<std::size_t>(0, fits.size() - 1)(rng)];
      ++k[static_cast<std::size_t>(j)];
      left -= d.comark(j);
    }
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<std::pair<Weight, Weight>> sample_pairs(const AffineDiagram& d, std::int64_t level, std::size_t count,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const auto tops = sample_labels(d, level, count, seed);
  std::vector<std::pair<Weight, Weight>> out;
  for (const auto& k : tops) {
    const Weight lambda = weight_from_labels(d, k);
    Weight mu = add_root(d, lambda, canonical_imaginary_root(d), -1);
    for (int attempt = 0; attempt < 200; ++attempt) {
      RootVector beta(static_cast<std::size_t>(d.size()));
      for (int i = 0; i < d.size(); ++i)
        beta[static_cast<std::size_t>(i)] = std::uniform_int_distribution<std::int64_t>(-d.mark(i), d.mark(i))(rng);
      if (beta.is_zero()) continue;
      Weight cand = add_root(d, lambda, beta);
      if (is_dominant(d, cand)) {
        mu = std::move(cand);
        break;
      }
    }
    out.emplace_back(lambda, std::move(mu));
  }
  return out;
}

VerificationReport verify_covering(const AffineDiagram& d, const std::vector<std::int64_t>& levels, std::size_t samples,
                                   std::uint64_t seed, std::size_t pairs) {
  VerificationReport rep;
  rep.type = d.type_id().str();
  rep.levels = levels;
  const auto cr = cover_root_set(d);
  const RootVector delta = canonical_imaginary_root(d);
  std::set<RootVector> diffs;
  double t_cover = 0, t_oracle = 0, t_bounds = 0;

  for (const std::int64_t m : levels) {
    if (m <= 0) continue;
    std::set<std::vector<std::int64_t>> todo;
    for (auto& k : label_census(d, m, 3)) todo.insert(std::move(k));
    for (auto& k : sample_labels(d, m, samples, seed + static_cast<std::uint64_t>(m))) todo.insert(std::move(k));

    for (const auto& k : todo) {
      const Weight lambda = weight_from_labels(d, k);
      ++rep.tested;
      auto t0 = Clock::now();
      const auto brute = brute_cocovers(d, lambda);
      t_oracle += ms_since(t0);
      t0 = Clock::now();
      const auto theory = cocovers(d, lambda);
      const bool delta_claim = is_delta_cocover(d, lambda);
      t_cover += ms_since(t0);

      std::vector<Weight> lows;
      for (const auto& e : theory) lows.push_back(e.lower);
      auto want = ids(d, brute.cocovers);
      auto got = ids(d, lows);
      if (want != got) rep.mismatches.push_back({"cocovers", lambda, want, got});
      for (const auto& b : brute.boundary) rep.boundary_flags.push_back(canonical_id(d, lambda) + " -> " + b.str());

      for (const auto& diff : brute.differences) {
        diffs.insert(diff);
        const bool member = std::any_of(cr.begin(), cr.end(), [&](const CoverRoot& c) { return c.root == diff; });
        if (!member) rep.mismatches.push_back({"cover_root_set", lambda, {diff.str()}, {}});
      }
      const bool delta_seen = std::find(brute.differences.begin(), brute.differences.end(), delta) != brute.differences.end();
      if (delta_seen != delta_claim)
        rep.mismatches.push_back({"delta", lambda, {delta_seen ? "true" : "false"}, {delta_claim ? "true" : "false"}});
    }

    auto t0 = Clock::now();
    for (const auto& [a, b] : sample_pairs(d, m, pairs, seed * 31 + static_cast<std::uint64_t>(m))) {
      ++rep.pairs_tested;
      const Bounds want = brute_bounds(d, a, b);
      const Weight lo = meet(d, a, b);
      const Weight hi = join(d, a, b);
      if (lo != want.glb) rep.mismatches.push_back({"meet", a, {canonical_id(d, want.glb)}, {canonical_id(d, lo)}});
      if (hi != want.lub) rep.mismatches.push_back({"join", a, {canonical_id(d, want.lub)}, {canonical_id(d, hi)}});
    }
    t_bounds += ms_since(t0);
  }
  rep.oracle_differences.assign(diffs.begin(), diffs.end());
  rep.elapsed_ms = {{"covering", t_cover}, {"oracle", t_oracle}, {"bounds", t_bounds}};
  return rep;
}

Json to_json(const AffineDiagram& d, const VerificationReport& r) {
  Json j;
  j["type"] = r.type;
  j["levels"] = r.levels;
  j["tested"] = r.tested;
  j["pairs_tested"] = r.pairs_tested;
  j["mismatches"] = Json::array();
  for (const auto& m : r.mismatches) {
    Json e;
    e["check"] = m.check;
    e["weight"] = to_json(d, m.weight);
    e["expected"] = m.expected;
    e["got"] = m.got;
    j["mismatches"].push_back(e);
  }
  j["boundary_flags"] = r.boundary_flags;
  j["passed"] = r.passed();
  return j;
}

}  // namespace dwlat
