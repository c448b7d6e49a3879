// Copyright 2026 The revfp Authors
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

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "json.hpp"
#include "pipeline/pipeline.hpp"

namespace revfp::pipeline {

std::vector<Pair> random_pairs(uint64_t seed, size_t n) {
  // mt19937_64 output is fixed by the standard; the mapping below is ours, so
  // a seed names the same pairs everywhere.
  std::mt19937_64 rng(seed);
  std::vector<Pair> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    uint64_t r1 = rng(), r2 = rng();
    uint32_t ea = 1 + static_cast<uint32_t>(r1 % 254);
    uint32_t eb;
    if ((r2 >> 60) & 3) {
      int e = static_cast<int>(ea) + static_cast<int>((r2 >> 40) % 61) - 30;
      eb = e >= 1 && e <= 254 ? static_cast<uint32_t>(e) : 1 + static_cast<uint32_t>((r2 >> 48) % 254);
    } else {
      eb = 1 + static_cast<uint32_t>((r2 >> 48) % 254);
    }
    uint32_t a = ref::encode({static_cast<uint32_t>(r1 >> 8) & 1, ea, static_cast<uint32_t>(r1 >> 9) & 0x7FFFFF});
    uint32_t b = ref::encode({static_cast<uint32_t>(r2) & 1, eb, static_cast<uint32_t>(r2 >> 1) & 0x7FFFFF});
    out.emplace_back(a, b);
  }
  return out;
}

namespace {

struct Job {
  size_t index;
  uint32_t a, b, expected;
};

VerifyReport run_jobs(const AdderArtifact& art, const std::vector<Job>& jobs, VerifyReport rep,
                      unsigned threads) {
  std::vector<LaneResult> res(jobs.size());
  const size_t chunks = (jobs.size() + 63) / 64;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(chunks, 1)));
  std::atomic<size_t> next{0};
  auto work = [&] {
    uint32_t a[64], b[64];
    for (size_t ch; (ch = next.fetch_add(1)) < chunks;) {
      size_t lo = ch * 64, hi = std::min(jobs.size(), lo + 64);
      for (size_t i = lo; i < hi; ++i) {
        a[i - lo] = jobs[i].a;
        b[i - lo] = jobs[i].b;
      }
      run_lanes(art, a, b, hi - lo, res.data() + lo);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (size_t i = 0; i < jobs.size(); ++i) {
    bool wrong = res[i].sum != jobs[i].expected;
    rep.mismatches += wrong;
    rep.dirty += !res[i].clean;
    if ((wrong || !res[i].clean) && !rep.first)
      rep.first = Mismatch{jobs[i].index, jobs[i].a, jobs[i].b, jobs[i].expected, res[i].sum, res[i].clean};
  }
  rep.tested = jobs.size();
  return rep;
}

}  // namespace

VerifyReport verify_pairs(const AdderArtifact& art, const std::vector<Pair>& pairs, unsigned threads) {
  VerifyReport rep;
  rep.total = pairs.size();
  std::vector<Job> jobs;
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto o = ref::oracle_add_rtz(pairs[i].first, pairs[i].second);
    if (o.status != ref::OracleStatus::Ok) {
      ++rep.excluded[std::string(ref::status_name(o.status))];
      continue;
    }
    jobs.push_back({i, pairs[i].first, pairs[i].second, o.word});
  }
  return run_jobs(art, jobs, std::move(rep), threads);
}

VerifyReport verify_vectors(const AdderArtifact& art, const std::vector<ref::Vector>& v, unsigned threads) {
  VerifyReport rep;
  rep.total = v.size();
  std::vector<Job> jobs;
  for (size_t i = 0; i < v.size(); ++i) {
    auto o = ref::oracle_add_rtz(v[i].a, v[i].b);
    if (o.status != ref::OracleStatus::Ok) {
      ++rep.excluded[std::string(ref::status_name(o.status))];
      continue;
    }
    if (o.word != v[i].expected) {
      // the file disagrees with the oracle; count it as a failure of the vector
      ++rep.mismatches;
      if (!rep.first) rep.first = Mismatch{i, v[i].a, v[i].b, v[i].expected, o.word, true};
    }
    jobs.push_back({i, v[i].a, v[i].b, v[i].expected});
  }
  size_t oracle_bad = rep.mismatches;
  auto first = rep.first;
  rep = run_jobs(art, jobs, std::move(rep), threads);
  rep.mismatches = std::max(rep.mismatches, oracle_bad);
  if (first && (!rep.first || first->index < rep.first->index)) rep.first = first;
  return rep;
}

std::string format_verify(const VerifyReport& r) {
  std::string out;
  out += "pairs: " + std::to_string(r.total) + "  tested: " + std::to_string(r.tested) + "\n";
  out += "excluded:";
  if (r.excluded.empty()) out += " none";
  for (const auto& [k, n] : r.excluded) out += " " + k + "=" + std::to_string(n);
  out += "\nmismatches: " + std::to_string(r.mismatches) + "  dirty: " + std::to_string(r.dirty) + "\n";
  if (r.first) {
    const auto& m = *r.first;
    out += "first counterexample: #" + std::to_string(m.index) + " a=" + ref::to_hex(m.a) +
           " b=" + ref::to_hex(m.b) + " expected=" + ref::to_hex(m.expected) +
           " got=" + ref::to_hex(m.got) + (m.clean ? "" : " (ancillae dirty)") + "\n";
  }
  out += std::string("result: ") + (r.pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string verify_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["total"] = r.total;
  j["tested"] = r.tested;
  j["excluded"] = r.excluded;
  j["mismatches"] = r.mismatches;
  j["dirty"] = r.dirty;
  if (r.first) {
    j["first"] = {{"index", r.first->index},       {"a", ref::to_hex(r.first->a)},
                  {"b", ref::to_hex(r.first->b)},  {"expected", ref::to_hex(r.first->expected)},
                  {"got", ref::to_hex(r.first->got)}, {"clean", r.first->clean}};
  }
  j["pass"] = r.pass();
  return j.dump(2) + "\n";
}

}  // namespace revfp::pipeline
