#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ipcat/core/errors.hpp"

namespace ipcat {

enum class SampleMode { exhaustive, randomized };

inline std::string_view to_string(SampleMode m) {
  return m == SampleMode::exhaustive ? "exhaustive" : "randomized";
}

/// How much of a category a law checker is allowed to look at.
///
/// Exhaustive mode walks every hom-set in full and refuses infinite ones.
/// Randomized mode draws up to `max_morphisms_per_hom` distinct morphisms per
/// hom-set from a generator seeded by `seed` and the two endpoint objects, so
/// the same budget always yields the same samples.
struct SampleBudget {
  SampleMode mode = SampleMode::exhaustive;
  std::size_t max_objects = 64;
  std::size_t max_morphisms_per_hom = 8;
  std::uint64_t seed = 0x5eedULL;
  std::uint64_t hard_cap = 1'000'000;
  std::uint64_t max_tuples = 20'000;

  static SampleBudget exhaustive(std::uint64_t cap = 1'000'000) {
    SampleBudget b;
    b.mode = SampleMode::exhaustive;
    b.hard_cap = cap;
    return b;
  }

  static SampleBudget randomized(std::size_t per_hom, std::uint64_t seed = 0x5eedULL) {
    SampleBudget b;
    b.mode = SampleMode::randomized;
    b.max_morphisms_per_hom = per_hom;
    b.seed = seed;
    return b;
  }

  /// Throws BudgetExceeded when a law would need more than `hard_cap` cases.
  void charge(std::uint64_t tuples, std::string_view law) const {
    if (tuples > hard_cap) {
      throw BudgetExceeded(std::string(law) + ": " + std::to_string(tuples) +
                           " tuples exceed the hard cap of " + std::to_string(hard_cap));
    }
  }
};

namespace detail {

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Decides which tuples of a nested law loop get evaluated. Exhaustive mode
/// takes every tuple (after charging the total against the hard cap);
/// randomized mode keeps about max_tuples of them, chosen reproducibly from
/// the seed and the law name.
class TupleSampler {
 public:
  TupleSampler(const SampleBudget& b, std::uint64_t total, std::string_view law)
      : total_(total), keep_(total), state_(detail::splitmix64(b.seed ^ detail::fnv1a(law))) {
    if (b.mode == SampleMode::exhaustive) b.charge(total, law);
    else if (total > b.max_tuples) keep_ = b.max_tuples;
  }

  bool take() {
    if (keep_ >= total_) return true;
    state_ = detail::splitmix64(state_);
    return state_ % total_ < keep_;
  }

 private:
  std::uint64_t total_;
  std::uint64_t keep_;
  std::uint64_t state_;
};

}  // namespace ipcat
