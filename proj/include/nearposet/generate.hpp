#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nearposet/frames.hpp"
#include "nearposet/nearness.hpp"

// Instance generators shared by the test suites and the props command.
namespace nearposet::gen {

// Every poset on n elements up to isomorphism, elements named a, b, c, ...
// Supported for n <= 6; the result is cached.
const std::vector<Poset>& posets_up_to_iso(std::size_t n);

// Distributive lattices among posets_up_to_iso(n).
std::vector<FiniteFrame> distributive_lattices(std::size_t n);

// Every family closed under refinement on p, each given by its minimal
// down-sets (use with ThetaClosure::refinement). Includes the empty family.
std::vector<std::vector<Mask>> refinement_closed_families(const Poset& p);

// Each subset of P joins the family independently with the given probability.
std::vector<Mask> random_family(std::mt19937_64& rng, const Poset& p, double density);

// All T1 families of subsets of a set with `points` elements (points <= 3),
// as lists of point masks.
std::vector<std::vector<Mask>> t1_families(std::size_t points);

// A random T1 family with at most max_sets members.
std::vector<Mask> random_t1_family(std::mt19937_64& rng, std::size_t points, std::size_t max_sets);

// Whether a family of point masks separates points in the T1 sense.
bool separates_t1(std::size_t points, const std::vector<Mask>& sets);

}  // namespace nearposet::gen
