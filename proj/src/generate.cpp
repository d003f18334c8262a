#include "nearposet/generate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "nearposet/error.hpp"

namespace nearposet::gen {

namespace {

std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

// Relation bits r[i*n + j] = (i <= j) under a relabelling.
std::uint64_t relation_key(const std::vector<Mask>& up, const std::vector<std::size_t>& perm) {
  const std::size_t n = up.size();
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for_each_bit(up[i], [&](std::size_t j) { key |= std::uint64_t{1} << (perm[i] * n + perm[j]); });
  }
  return key;
}

std::vector<Poset> generate_posets(std::size_t n) {
  // Every poset has a linear extension, so it suffices to enumerate
  // transitively closed relations with i <= j only for i < j.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::map<std::uint64_t, std::vector<Mask>> canonical;
  std::vector<std::size_t> perm(n);
  for (Mask choice = 0; choice < (Mask{1} << pairs.size()); ++choice) {
    std::vector<Mask> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = bit(i);
    for_each_bit(choice, [&](std::size_t k) { up[pairs[k].first] |= bit(pairs[k].second); });
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      for_each_bit(up[i], [&](std::size_t j) {
        if (!is_subset(up[j], up[i])) closed = false;
      });
    }
    if (!closed) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
      best = std::min(best, relation_key(up, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    canonical.emplace(best, up);
  }
  std::vector<Poset> out;
  for (const auto& [key, up] : canonical) out.emplace_back(letters(n), up);
  return out;
}

}  // namespace

const std::vector<Poset>& posets_up_to_iso(std::size_t n) {
  if (n > 6) throw BoundExceeded("poset enumeration supports at most 6 elements");
  static std::mutex mu;
  static std::map<std::size_t, std::vector<Poset>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generate_posets(n)).first;
  return it->second;
}

std::vector<FiniteFrame> distributive_lattices(std::size_t n) {
  std::vector<FiniteFrame> out;
  for (const Poset& p : posets_up_to_iso(n)) {
    try {
      out.emplace_back(p);
    } catch (const InvalidInput&) {
    }
  }
  return out;
}

std::vector<std::vector<Mask>> refinement_closed_families(const Poset& p) {
  // A family closed under refinement is determined by the down-sets it
  // contains, which form an up-set under inclusion.
  std::vector<Mask> downs;
  for_each_downset(p, [&](Mask d) {
    downs.push_back(d);
    return true;
  });
  std::vector<std::string> names;
  std::vector<Mask> up(downs.size(), 0);
  for (std::size_t i = 0; i < downs.size(); ++i) {
    names.push_back("d" + std::to_string(i));
    for (std::size_t j = 0; j < downs.size(); ++j) {
      if (is_subset(downs[i], downs[j])) up[i] |= bit(j);
    }
  }
  Poset lattice(names, up);
  std::vector<std::vector<Mask>> out;
  for_each_upset(lattice, [&](Mask u) {
    std::vector<Mask> gens;
    for_each_bit(u, [&](std::size_t i) {
      // Keep the minimal down-sets of the up-set.
      if ((lattice.down(i) & u) == bit(i)) gens.push_back(downs[i]);
    });
    out.push_back(std::move(gens));
    return true;
  });
  return out;
}

std::vector<Mask> random_family(std::mt19937_64& rng, const Poset& p, double density) {
  std::bernoulli_distribution take(density);
  std::vector<Mask> out;
  const Mask all = p.all();
  for (Mask c = 0;; ++c) {
    if (take(rng)) out.push_back(c);
    if (c == all) break;
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

bool separates_t1(std::size_t points, const std::vector<Mask>& sets) {
  for (std::size_t x = 0; x < points; ++x) {
    for (std::size_t y = 0; y < points; ++y) {
      if (x == y) continue;
      const bool found = std::any_of(sets.begin(), sets.end(), [&](Mask s) {
        return ((s >> x) & 1U) && !((s >> y) & 1U);
      });
      if (!found) return false;
    }
  }
  return true;
}

std::vector<std::vector<Mask>> t1_families(std::size_t points) {
  if (points > 3) throw BoundExceeded("exhaustive T1 families support at most 3 points");
  const std::size_t subsets = std::size_t{1} << points;
  std::vector<std::vector<Mask>> out;
  for (Mask fam = 0; fam < (Mask{1} << subsets); ++fam) {
    std::vector<Mask> sets;
    for_each_bit(fam, [&](std::size_t s) { sets.push_back(static_cast<Mask>(s)); });
    if (separates_t1(points, sets)) out.push_back(std::move(sets));
  }
  return out;
}

std::vector<Mask> random_t1_family(std::mt19937_64& rng, std::size_t points, std::size_t max_sets) {
  const std::size_t subsets = std::size_t{1} << points;
  std::vector<Mask> all(subsets);
  std::iota(all.begin(), all.end(), Mask{0});
  std::uniform_int_distribution<std::size_t> size_dist(std::min<std::size_t>(points, max_sets),
                                                       std::min(max_sets, subsets));
  while (true) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Mask> sets(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size_dist(rng)));
    if (separates_t1(points, sets)) {
      std::sort(sets.begin(), sets.end());
      return sets;
    }
  }
}

}  // namespace nearposet::gen
