#include "shfc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "shfc/cohomology.hpp"
#include "shfc/constructions.hpp"
#include "shfc/corpus.hpp"
#include "shfc/errors.hpp"
#include "shfc/invariants.hpp"
#include "shfc/module_file.hpp"

namespace shfc {

bool VerificationReport::all_pass() const {
  return std::all_of(instances.begin(), instances.end(), [](const auto& x) { return x.pass; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const auto& x) { return !x.pass; }));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& x : instances) {
    list.push_back({{"inputs", x.inputs}, {"expected", x.expected}, {"observed", x.observed}, {"pass", x.pass}});
  }
  return {{"suite", suite}, {"seed", seed}, {"instances", list}, {"all_pass", all_pass()}};
}

void VerificationReport::append(VerificationReport other) {
  for (auto& x : other.instances) instances.push_back(std::move(x));
}

unsigned worker_count() {
  if (const char* env = std::getenv("SHFC_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  unsigned threads = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= count) return;
      try {
        fn(k);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

template <class Fn>
VerificationReport with_field(std::uint32_t characteristic, int n, Fn&& fn) {
  if (n < 1 || n > 7) throw DomainError("dimension must lie in 1..7");
  if (characteristic == 0) return fn(make_ring<RationalField>(0, n + 1));
  return fn(make_ring<PrimeField>(characteristic, n + 1));
}

/// One SheafCohomology per corpus label, shared across instances.
template <class K>
class CohomologyCache {
 public:
  explicit CohomologyCache(const Corpus<K>& corpus) : corpus_(corpus) {}

  std::shared_ptr<const SheafCohomology<K>> get(const Recipe& r) {
    std::string key = r.label();
    {
      std::lock_guard lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    auto coh = std::make_shared<const SheafCohomology<K>>(corpus_.build(r));
    std::lock_guard lock(mutex_);
    return cache_.emplace(key, std::move(coh)).first->second;
  }

 private:
  const Corpus<K>& corpus_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const SheafCohomology<K>>> cache_;
};

nlohmann::json ring_inputs(std::uint32_t characteristic, int n) {
  return {{"char", characteristic}, {"n", n}};
}

/// Runs every instance through fn, records exceptions as failures, and
/// keeps instance order.
template <class Fn>
std::vector<VerificationInstance> evaluate(std::size_t count, Fn&& fn) {
  std::vector<VerificationInstance> out(count);
  parallel_for(count, [&](std::size_t k) {
    try {
      out[k] = fn(k);
    } catch (const std::exception& e) {
      out[k].pass = false;
      out[k].observed = {{"error", e.what()}};
    }
  });
  return out;
}

template <class K>
void attach_modules(VerificationInstance& x, const Corpus<K>& corpus,
                    std::initializer_list<std::pair<const char*, const Recipe*>> recipes) {
  if (x.pass) return;
  nlohmann::json modules;
  for (const auto& [name, r] : recipes) modules[name] = module_to_json(corpus.build(*r));
  x.inputs["modules"] = modules;
}

std::string regularity_json(const Regularity& r) { return r.to_string(); }

Regularity add(const Regularity& a, const Regularity& b) {
  if (a.is_minus_infinity() || b.is_minus_infinity()) return Regularity::minus_infinity();
  return Regularity::finite(a.value() + b.value());
}

std::vector<std::pair<Recipe, Recipe>> draw_pairs(const auto& corpus, int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::pair<Recipe, Recipe>> pairs;
  for (int k = 0; k < count; ++k) {
    Recipe e = corpus.draw(rng);
    Recipe f = corpus.draw(rng);
    pairs.emplace_back(std::move(e), std::move(f));
  }
  return pairs;
}

}  // namespace

VerificationReport verify_subadditivity(int n, int num_pairs, std::uint64_t seed, std::uint32_t characteristic) {
  return with_field(characteristic, n, [&](auto ring) {
    using K = typename decltype(ring)::Field;
    Corpus<K> corpus(ring);
    CohomologyCache<K> cache(corpus);
    auto pairs = draw_pairs(corpus, num_pairs, seed);
    VerificationReport report{"subadditivity", seed, {}};
    report.instances = evaluate(pairs.size(), [&](std::size_t k) {
      const auto& [e, f] = pairs[k];
      VerificationInstance x;
      x.inputs = ring_inputs(characteristic, n);
      x.inputs["E"] = e.label();
      x.inputs["F"] = f.label();
      x.expected = "lambda(E x F) <= lambda(E) + lambda(F)";
      int le = level(*cache.get(e)).value;
      int lf = level(*cache.get(f)).value;
      int lef = level(SheafCohomology<K>(tensor(corpus.build(e), corpus.build(f)))).value;
      x.observed = {{"lambda_E", le}, {"lambda_F", lf}, {"lambda_EF", lef}};
      x.pass = lef <= le + lf;
      attach_modules(x, corpus, {{"E", &e}, {"F", &f}});
      return x;
    });
    return report;
  });
}

VerificationReport verify_regularity_tensor(int n, int num_pairs, std::uint64_t seed, std::uint32_t characteristic) {
  return with_field(characteristic, n, [&](auto ring) {
    using K = typename decltype(ring)::Field;
    Corpus<K> corpus(ring);
    CohomologyCache<K> cache(corpus);
    auto pairs = draw_pairs(corpus, num_pairs, seed);
    VerificationReport report{"regularity-tensor", seed, {}};
    report.instances = evaluate(pairs.size(), [&](std::size_t k) {
      const auto& [e, f] = pairs[k];
      VerificationInstance x;
      x.inputs = ring_inputs(characteristic, n);
      x.inputs["E"] = e.label();
      x.inputs["F"] = f.label();
      x.expected = "reg(E x F) <= reg(E) + reg(F); h^i(E x F) = 0 for i > lambda(E(-reg F))";
      auto ce = cache.get(e);
      auto cf = cache.get(f);
      SheafCohomology<K> cef(tensor(corpus.build(e), corpus.build(f)));
      Regularity re = sheaf_regularity(*ce);
      Regularity rf = sheaf_regularity(*cf);
      Regularity ref = sheaf_regularity(cef);
      bool reg_ok = ref <= add(re, rf);

      // With F = 0 the tensor product vanishes and the vanishing is empty.
      int bound = rf.is_finite() ? level(*ce, -rf.value()).value : 0;
      nlohmann::json nonzero = nlohmann::json::array();
      for (int i = bound + 1; i <= n; ++i) {
        long long h = cef.h(i, 0);
        if (h != 0) nonzero.push_back({{"i", i}, {"h", h}});
      }
      x.observed = {{"reg_E", regularity_json(re)},
                    {"reg_F", regularity_json(rf)},
                    {"reg_EF", regularity_json(ref)},
                    {"lambda_E_minus_regF", bound},
                    {"nonvanishing_above_bound", nonzero}};
      x.pass = reg_ok && nonzero.empty();
      attach_modules(x, corpus, {{"E", &e}, {"F", &f}});
      return x;
    });
    return report;
  });
}

VerificationReport verify_key_theorem(std::uint32_t p, int n, int num_pairs, std::uint64_t seed) {
  if (p == 0 || !is_prime(p)) throw DomainError("key-theorem needs a prime characteristic");
  if (n < 1 || n > 2) throw DomainError("key-theorem runs on P^1 and P^2");
  const long long cap = n == 1 ? 25 : 9;
  return with_field(p, n, [&](auto ring) {
    using K = typename decltype(ring)::Field;
    Corpus<K> corpus(ring);
    CohomologyCache<K> cache(corpus);

    auto frobenius_power = [&](const Regularity& r) {
      long long target = r.is_finite() ? std::max(r.value(), 1) : 1;
      long long q = 1;
      while (q < target) q *= p;
      return q;
    };

    std::vector<std::pair<Recipe, Recipe>> pairs = {
        {line_bundles({1}), line_bundles({-3})},
        {omega_recipe(1, 2), line_bundles({0})},
        {line_bundles({n}), line_bundles({0})},
    };
    SplitMix64 rng(seed);
    while (static_cast<int>(pairs.size()) < num_pairs + 3) {
      Recipe e = corpus.draw(rng);
      Recipe f = corpus.draw(rng);
      if (frobenius_power(sheaf_regularity(*cache.get(f))) > cap) continue;
      pairs.emplace_back(std::move(e), std::move(f));
    }

    VerificationReport report{"key-theorem", seed, {}};
    report.instances = evaluate(pairs.size(), [&](std::size_t k) {
      const auto& [e, f] = pairs[k];
      VerificationInstance x;
      x.inputs = ring_inputs(p, n);
      x.inputs["E"] = e.label();
      x.inputs["F"] = f.label();
      x.expected = "h^i(E^(p^N) x F) = 0 for i > lambda(E(-n)), p^N >= reg(F)";
      int c = level(*cache.get(e), -n).value;
      Regularity r = sheaf_regularity(*cache.get(f));
      long long q = frobenius_power(r);
      SheafCohomology<K> coh(tensor(q_power_pullback(corpus.build(e), static_cast<int>(q)), corpus.build(f)));
      nlohmann::json nonzero = nlohmann::json::array();
      for (int i = c + 1; i <= n; ++i) {
        long long h = coh.h(i, 0);
        if (h != 0) nonzero.push_back({{"i", i}, {"h", h}});
      }
      x.observed = {{"lambda_E_minus_n", c}, {"reg_F", regularity_json(r)}, {"p_N", q},
                    {"nonvanishing_above_bound", nonzero}};
      x.pass = nonzero.empty();
      attach_modules(x, corpus, {{"E", &e}, {"F", &f}});
      return x;
    });
    return report;
  });
}

VerificationReport verify_bott_vanishing(int n, std::uint32_t characteristic) {
  return with_field(characteristic, n, [&](auto ring) {
    using K = typename decltype(ring)::Field;
    std::vector<std::shared_ptr<const SheafCohomology<K>>> omegas(n + 1);
    parallel_for(n + 1, [&](std::size_t j) {
      omegas[j] = std::make_shared<const SheafCohomology<K>>(omega(ring, static_cast<int>(j)));
    });
    VerificationReport report{"bott", 0, {}};
    const int twists = n + 3;
    report.instances = evaluate((n + 1) * twists, [&](std::size_t k) {
      int j = static_cast<int>(k) / twists;
      int d = static_cast<int>(k) % twists + 1;
      VerificationInstance x;
      x.inputs = ring_inputs(characteristic, n);
      x.inputs["j"] = j;
      x.inputs["d"] = d;
      x.expected = "h^i(Omega^j(d)) = 0 for 0 < i <= n";
      std::vector<long long> h;
      for (int i = 1; i <= n; ++i) h.push_back(omegas[j]->h(i, d));
      x.observed = {{"h_positive", h}};
      x.pass = std::all_of(h.begin(), h.end(), [](long long v) { return v == 0; });
      return x;
    });
    return report;
  });
}

VerificationReport verify_beilinson(int n, int count, std::uint64_t seed, std::uint32_t characteristic) {
  return with_field(characteristic, n, [&](auto ring) {
    using K = typename decltype(ring)::Field;
    Corpus<K> corpus(ring);
    CohomologyCache<K> cache(corpus);
    std::vector<Presentation<K>> koszul;
    for (int m = 0; m <= n; ++m) koszul.push_back(corpus.koszul(m));
    SplitMix64 rng(seed);
    std::vector<Recipe> recipes;
    for (int k = 0; k < count; ++k) recipes.push_back(corpus.draw(rng));

    VerificationReport report{"beilinson", seed, {}};
    report.instances = evaluate(recipes.size(), [&](std::size_t k) {
      const Recipe& e = recipes[k];
      VerificationInstance x;
      x.inputs = ring_inputs(characteristic, n);
      x.inputs["E"] = e.label();
      x.expected = "e_ab = 0 for b > lambda(E); Euler identity for d in [-2, 2]";
      auto coh = cache.get(e);
      int lambda = level(*coh).value;
      BeilinsonTable t = beilinson_e1(corpus.build(e), std::span<const Presentation<K>>(koszul));
      bool euler = t.euler_identity(coh->hilbert_polynomial(), -2, 2);
      x.observed = {{"lambda", lambda}, {"top_row", t.top_row()}, {"e", t.e}, {"euler_identity", euler}};
      x.pass = t.top_row() <= lambda && euler;
      attach_modules(x, corpus, {{"E", &e}});
      return x;
    });
    return report;
  });
}

VerificationReport verify_oracle(int n, int count, std::uint64_t seed, std::uint32_t characteristic) {
  return with_field(characteristic, n, [&](auto ring) {
    using K = typename decltype(ring)::Field;
    SplitMix64 rng(seed);
    std::vector<std::vector<int>> sums;
    for (int k = 0; k < count; ++k) {
      std::vector<int> twists(rng.uniform(1, 3));
      for (int& a : twists) a = static_cast<int>(rng.uniform(-4, 4));
      sums.push_back(std::move(twists));
    }
    VerificationReport report{"oracle", seed, {}};
    report.instances = evaluate(sums.size(), [&](std::size_t k) {
      const auto& twists = sums[k];
      VerificationInstance x;
      x.inputs = ring_inputs(characteristic, n);
      x.inputs["twists"] = twists;
      x.expected = "engine h^i(d) equals the line bundle closed form for |d| <= n + 4";
      SheafCohomology<K> coh(line_bundle_sum(ring, std::span<const int>(twists)));
      nlohmann::json mismatches = nlohmann::json::array();
      int cells = 0;
      for (int i = 0; i <= n; ++i) {
        for (int d = -n - 4; d <= n + 4; ++d, ++cells) {
          long long engine = coh.h(i, d);
          long long oracle = line_bundle_oracle(n, twists, i, d);
          if (engine != oracle) mismatches.push_back({{"i", i}, {"d", d}, {"engine", engine}, {"oracle", oracle}});
        }
      }
      x.observed = {{"cells", cells}, {"mismatches", mismatches}};
      x.pass = mismatches.empty();
      return x;
    });
    return report;
  });
}

std::vector<std::string> suite_names() {
  return {"subadditivity", "key-theorem", "bott", "beilinson", "regularity-tensor", "oracle"};
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
  auto dims = [&](std::vector<int> defaults) {
    return options.dim ? std::vector<int>{*options.dim} : defaults;
  };
  const std::uint32_t characteristic = options.characteristic.value_or(kDefaultSuiteCharacteristic);
  const std::uint64_t seed = options.seed;
  VerificationReport report{name, seed, {}};
  if (name == "subadditivity") {
    for (int n : dims({2})) report.append(verify_subadditivity(n, options.count.value_or(100), seed, characteristic));
  } else if (name == "regularity-tensor") {
    for (int n : dims({2})) report.append(verify_regularity_tensor(n, options.count.value_or(100), seed, characteristic));
  } else if (name == "key-theorem") {
    std::vector<std::uint32_t> primes =
        options.characteristic ? std::vector<std::uint32_t>{*options.characteristic} : std::vector<std::uint32_t>{2, 3, 5};
    for (std::uint32_t p : primes) {
      for (int n : dims({1, 2})) report.append(verify_key_theorem(p, n, options.count.value_or(12), seed));
    }
  } else if (name == "bott") {
    for (int n : dims({1, 2, 3})) report.append(verify_bott_vanishing(n, characteristic));
  } else if (name == "beilinson") {
    for (int n : dims({2})) report.append(verify_beilinson(n, options.count.value_or(30), seed, characteristic));
  } else if (name == "oracle") {
    for (int n : dims({1, 2, 3})) report.append(verify_oracle(n, options.count.value_or(200), seed, characteristic));
  } else {
    throw DomainError("unknown suite '" + name + "'");
  }
  return report;
}

}  // namespace shfc
