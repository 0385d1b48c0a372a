#include "dpbps/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <optional>
#include <thread>
#include <tuple>

#include "dpbps/blowdown.hpp"
#include "dpbps/checks.hpp"
#include "dpbps/classes.hpp"
#include "dpbps/error.hpp"

namespace dpbps {

DivClass sorted_representative(const Surface& s, const DivClass& beta) {
  if (s.kind() != SurfaceKind::Blowup) return beta;
  DivClass out = beta;
  std::sort(out.coeffs.begin() + 1, out.coeffs.end(), std::greater<>());
  return out;
}

namespace {

// Reflection in h - e_i - e_j - e_k.
DivClass cremona(const DivClass& b, std::size_t i, std::size_t j, std::size_t k) {
  DivClass out = b;
  const std::int64_t m = b[0] - b[i] - b[j] - b[k];
  out.coeffs[0] += m;
  out.coeffs[i] += m;
  out.coeffs[j] += m;
  out.coeffs[k] += m;
  return out;
}

std::vector<DivClass> all_permutations(const DivClass& rep) {
  std::vector<DivClass> out;
  std::vector<std::int64_t> tail(rep.coeffs.begin() + 1, rep.coeffs.end());
  std::sort(tail.begin(), tail.end());
  do {
    DivClass c = rep;
    std::copy(tail.begin(), tail.end(), c.coeffs.begin() + 1);
    out.push_back(c);
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

std::vector<Surface> sources_for(const Surface& s) {
  std::vector<Surface> out;
  if (s.kind() == SurfaceKind::P1xP1) return {s};
  for (int r = 0; r <= s.r(); ++r) out.push_back(Surface::blowup(r));
  if (s.r() >= 2) out.push_back(Surface::p1xp1());
  return out;
}

void add_seeds_genus0(const Surface& src, std::int64_t max_degree, std::vector<DivClass>& seeds) {
  for (const auto& l : enumerate_lines(src)) seeds.push_back(l);
  for (const auto& c : enumerate_conics(src)) seeds.push_back(c);
  if (src.kind() == SurfaceKind::P2) {
    seeds.push_back(make_class(src, {1}));
    seeds.push_back(make_class(src, {2}));
  } else if (src.kind() == SurfaceKind::Blowup && src.r() == 1) {
    for (std::int64_t d = 1; 2 * d + 1 <= max_degree; ++d) seeds.push_back(make_class(src, {d, d - 1}));
  } else if (src.kind() == SurfaceKind::P1xP1) {
    for (std::int64_t k = 1; 2 * k + 2 <= max_degree; ++k) {
      seeds.push_back(make_class(src, {1, k}));
      seeds.push_back(make_class(src, {k, 1}));
    }
  }
}

}  // namespace

std::vector<DivClass> weyl_orbit_representatives(const Surface& s, const DivClass& beta) {
  require_class(s, beta);
  const DivClass start = sorted_representative(s, beta);
  if (s.kind() != SurfaceKind::Blowup || s.r() < 3) return {start};
  std::set<DivClass> seen{start};
  std::deque<DivClass> queue{start};
  const std::size_t r = static_cast<std::size_t>(s.r());
  while (!queue.empty()) {
    const DivClass cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 1; i <= r; ++i)
      for (std::size_t j = i + 1; j <= r; ++j)
        for (std::size_t k = j + 1; k <= r; ++k) {
          DivClass next = sorted_representative(s, cremona(cur, i, j, k));
          if (seen.insert(next).second) queue.push_back(std::move(next));
        }
  }
  return {seen.begin(), seen.end()};
}

std::vector<DivClass> sweep_classes(const SweepSpec& spec) {
  if (spec.max_degree < 1) throw Error(ErrorKind::InvalidClass, "max degree must be at least 1");
  const Surface& s = spec.surface;
  std::vector<std::pair<Surface, DivClass>> seeds;
  for (const Surface& src : sources_for(s)) {
    std::vector<DivClass> local;
    if (spec.genera.count(0)) add_seeds_genus0(src, spec.max_degree, local);
    const bool minus_k_allowed = !(src.r() == 8) || s.r() == 8;
    if (spec.genera.count(1) && minus_k_allowed) local.push_back(anticanonical_class(src));
    if (spec.genera.count(2) && src.kind() != SurfaceKind::P2)
      for (const auto& c : enumerate_conics(src)) local.push_back(c + anticanonical_class(src));
    for (auto& c : local) seeds.emplace_back(src, std::move(c));
  }

  std::set<DivClass> reps;
  std::set<DivClass> expanded;
  for (const auto& [src, seed] : seeds) {
    const DivClass beta = pull_back(src, seed, s);
    if (degree_w(s, beta) > spec.max_degree) continue;
    const DivClass rep = sorted_representative(s, beta);
    if (expanded.count(rep)) continue;
    const ClassProfile p = classify(s, rep);
    if (p.kind == ClassKind::OutOfScope || !spec.genera.count(static_cast<int>(p.pa))) continue;
    for (const auto& c : weyl_orbit_representatives(s, rep)) {
      expanded.insert(c);
      reps.insert(c);
    }
    if (s.kind() == SurfaceKind::P1xP1) reps.insert(beta);
  }

  std::vector<DivClass> out;
  for (const auto& rep : reps) {
    if (spec.full_orbits && s.kind() == SurfaceKind::Blowup) {
      for (auto& c : all_permutations(rep)) out.push_back(std::move(c));
    } else {
      out.push_back(rep);
    }
  }
  auto key = [&](const DivClass& c) { return std::make_tuple(arithmetic_genus(s, c), degree_w(s, c), c); };
  std::sort(out.begin(), out.end(), [&](const DivClass& a, const DivClass& b) { return key(a) < key(b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<DivClass> brute_force_in_scope(const Surface& s, std::int64_t max_degree) {
  std::set<DivClass> found;
  auto consider = [&](const DivClass& c) {
    if (degree_w(s, c) > max_degree || degree_w(s, c) < 1) return;
    const ClassProfile p = classify(s, c);
    if (p.kind != ClassKind::OutOfScope) found.insert(sorted_representative(s, c));
  };
  if (s.kind() == SurfaceKind::P1xP1) {
    for (std::int64_t a = -1; a <= max_degree; ++a)
      for (std::int64_t b = -1; b <= max_degree; ++b) consider(make_class(s, {a, b}));
  } else {
    const std::size_t r = static_cast<std::size_t>(s.r());
    std::vector<std::int64_t> v(r + 1);
    for (std::int64_t d = 0; d <= max_degree; ++d) {
      v[0] = d;
      // a_1 >= a_2 >= ... >= a_r in [-1, d]
      std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t pos, std::int64_t cap) {
        if (pos > r) {
          consider(DivClass(v));
          return;
        }
        for (std::int64_t a = -1; a <= cap; ++a) {
          v[pos] = a;
          fill(pos + 1, a);
        }
      };
      fill(1, d);
    }
  }
  return {found.begin(), found.end()};
}

void run_sweep(const SweepSpec& spec, const std::function<void(const InvariantReport&)>& emit) {
  const std::vector<DivClass> classes = sweep_classes(spec);
  const int workers = std::max(1, spec.threads);
  if (workers == 1) {
    for (const auto& c : classes) emit(run_checks(spec.surface, c));
    return;
  }
  std::vector<std::optional<InvariantReport>> results(classes.size());
  std::vector<std::exception_ptr> errors(classes.size());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= classes.size()) return;
      std::optional<InvariantReport> rep;
      std::exception_ptr err;
      try {
        rep = run_checks(spec.surface, classes[i]);
      } catch (...) {
        err = std::current_exception();
      }
      {
        std::lock_guard lock(mu);
        results[i] = std::move(rep);
        errors[i] = err;
        if (!results[i]) results[i].emplace();  // marks completion
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  std::exception_ptr first_error;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return results[i].has_value(); });
    InvariantReport rep = std::move(*results[i]);
    std::exception_ptr err = errors[i];
    lock.unlock();
    if (err) {
      if (!first_error) first_error = err;
      continue;
    }
    if (!first_error) emit(rep);
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace dpbps
