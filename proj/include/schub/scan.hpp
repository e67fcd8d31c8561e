#pragma once

// Resumable positivity scan over skew operators applied to Schubert
// polynomials.  Every task (w, v, u) applies the skew operator of the Bruhat
// pair (w, v) to the Schubert polynomial of u and records whether all
// coefficients are nonnegative.  Results stream to a JSON-lines file, one
// object per line, keyed by (n, w, v, u); a resumed run reparses the file,
// skips completed keys, and appends only the remainder.

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "schub/perm.hpp"
#include "schub/poly.hpp"
#include "schub/schubert.hpp"
#include "schub/skewop.hpp"

namespace schub {

enum class ScanMode { Edges, Full };

inline ScanMode scan_mode_from_string(const std::string& s) {
  if (s == "edges") return ScanMode::Edges;
  if (s == "full") return ScanMode::Full;
  throw std::invalid_argument("scan mode must be 'edges' or 'full', got '" + s + "'");
}

struct ScanRecord {
  int n = 0;
  Perm w, v, u;
  bool positive = false;
  std::optional<Poly> witness;  // present exactly when positive is false
  std::int64_t elapsed_ms = 0;
};

struct ScanSummary {
  std::int64_t checked = 0;    // tasks computed by this invocation
  std::int64_t skipped = 0;    // tasks already present in the output file
  std::int64_t positives = 0;  // verdicts over the whole task list, reused included
  std::int64_t negatives = 0;
};

namespace detail {

inline std::vector<int> one_line(const Perm& w) {
  std::vector<int> out(static_cast<std::size_t>(w.n()));
  for (int i = 1; i <= w.n(); ++i) out[static_cast<std::size_t>(i - 1)] = w(i);
  return out;
}

inline std::string scan_key(int n, const Perm& w, const Perm& v, const Perm& u) {
  std::ostringstream os;
  os << n << '|' << to_string(w) << '|' << to_string(v) << '|' << to_string(u);
  return os.str();
}

}  // namespace detail

inline std::string to_json_line(const ScanRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["w"] = detail::one_line(r.w);
  j["v"] = detail::one_line(r.v);
  j["u"] = detail::one_line(r.u);
  j["positive"] = r.positive;
  if (r.witness) j["witness"] = to_string(*r.witness);
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

/// Parse one line of a scan file.  Throws std::runtime_error on any malformed
/// input: bad JSON, missing fields, non-permutation entries, or a witness
/// whose presence contradicts the verdict.
inline ScanRecord scan_record_from_json_line(const std::string& line) {
  const auto corrupt = [&](const std::string& why) -> std::runtime_error {
    return std::runtime_error("corrupt scan file line (" + why + "): " + line);
  };
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception&) {
    throw corrupt("invalid JSON");
  }
  try {
    ScanRecord r;
    r.n = j.at("n").get<int>();
    r.w = Perm(j.at("w").get<std::vector<int>>());
    r.v = Perm(j.at("v").get<std::vector<int>>());
    r.u = Perm(j.at("u").get<std::vector<int>>());
    r.positive = j.at("positive").get<bool>();
    if (j.contains("witness")) r.witness = parse_poly(j.at("witness").get<std::string>());
    r.elapsed_ms = j.value("elapsed_ms", std::int64_t{0});
    if (r.positive == r.witness.has_value())
      throw corrupt("witness must be present exactly on negative verdicts");
    if (r.w.n() != r.n || r.v.n() != r.n || r.u.n() != r.n)
      throw corrupt("permutation rank differs from n");
    return r;
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception& e) {
    throw corrupt(e.what());
  }
}

namespace detail {

struct ScanTask {
  Perm w, v, u;
};

inline std::vector<ScanTask> scan_tasks(int n, ScanMode mode) {
  std::vector<ScanTask> tasks;
  const std::vector<Perm> perms = all_perms(n);
  if (mode == ScanMode::Full) {
    for (const Perm& w : perms)
      for (const Perm& v : perms) {
        if (!bruhat_leq(v, w)) continue;
        for (const Perm& u : perms) tasks.push_back({w, v, u});
      }
  } else {
    for (const Perm& w : perms)
      for (const auto& cover : bruhat_covers_down(w))
        for (const Perm& u : perms) tasks.push_back({w, cover.first, u});
  }
  return tasks;
}

inline ScanRecord scan_compute(int n, const ScanTask& t) {
  const auto t0 = std::chrono::steady_clock::now();
  PositivityVerdict verdict = conjecture1_check(t.w, t.v, t.u);
  const auto t1 = std::chrono::steady_clock::now();
  ScanRecord r;
  r.n = n;
  r.w = t.w;
  r.v = t.v;
  r.u = t.u;
  r.positive = verdict.positive;
  if (!verdict.positive) r.witness = std::move(verdict.value);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

}  // namespace detail

/// Run a positivity scan at rank n and stream results to out_path as JSON
/// lines.  With resume, previously recorded keys are parsed from the file and
/// skipped; new records are appended.  workers <= 0 picks a machine-dependent
/// count; the file and the returned summary are identical for any count
/// because a single writer emits records in task order.
inline ScanSummary run_scan(int n, ScanMode mode, const std::string& out_path,
                            bool resume, int workers = 0) {
  if (n < 1) throw std::invalid_argument("run_scan: rank must be >= 1");

  const std::vector<detail::ScanTask> tasks = detail::scan_tasks(n, mode);
  std::vector<std::string> keys;
  keys.reserve(tasks.size());
  for (const detail::ScanTask& t : tasks) keys.push_back(detail::scan_key(n, t.w, t.v, t.u));

  // Verdicts already on disk, keyed as above.
  std::map<std::string, bool> done;
  if (resume) {
    std::ifstream in(out_path);
    std::string line;
    while (in && std::getline(in, line)) {
      if (line.empty()) continue;
      const ScanRecord r = scan_record_from_json_line(line);
      const std::string key = detail::scan_key(r.n, r.w, r.v, r.u);
      if (!done.emplace(key, r.positive).second)
        throw std::runtime_error("corrupt scan file: key recorded twice: " + key);
    }
  }

  std::ofstream out(out_path, resume ? std::ios::app : std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open scan output file: " + out_path);

  ScanSummary summary;
  std::vector<std::size_t> pending;  // indices into tasks
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto it = done.find(keys[i]);
    if (it == done.end()) {
      pending.push_back(i);
    } else {
      ++summary.skipped;
      ++(it->second ? summary.positives : summary.negatives);
    }
  }

  const auto record_done = [&](const ScanRecord& r) {
    out << to_json_line(r) << '\n';
    out.flush();
    ++summary.checked;
    ++(r.positive ? summary.positives : summary.negatives);
  };

  int w_count = workers;
  if (w_count <= 0)
    w_count = static_cast<int>(std::max(1u, std::min(4u, std::thread::hardware_concurrency())));

  if (w_count <= 1 || pending.size() <= 1) {
    for (std::size_t i : pending) record_done(detail::scan_compute(n, tasks[i]));
    return summary;
  }

  // Static partition: worker t computes pending slots t, t + W, t + 2W, ...;
  // the calling thread writes completed slots strictly in task order.
  std::vector<std::optional<ScanRecord>> results(pending.size());
  std::mutex mtx;
  std::condition_variable cv;
  std::exception_ptr failure;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(w_count));
  for (int t = 0; t < w_count; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t slot = static_cast<std::size_t>(t); slot < pending.size();
             slot += static_cast<std::size_t>(w_count)) {
          ScanRecord r = detail::scan_compute(n, tasks[pending[slot]]);
          std::lock_guard<std::mutex> lock(mtx);
          results[slot] = std::move(r);
          cv.notify_all();
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mtx);
        if (!failure) failure = std::current_exception();
        cv.notify_all();
      }
    });
  }
  {
    std::unique_lock<std::mutex> lock(mtx);
    for (std::size_t slot = 0; slot < pending.size(); ++slot) {
      cv.wait(lock, [&] { return results[slot].has_value() || failure; });
      if (failure) break;
      record_done(*results[slot]);
      results[slot].reset();
    }
  }
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return summary;
}

}  // namespace schub
