#pragma once

#include <span>
#include <string_view>

#include "sbci/algebra.hpp"

namespace sbci {

/// one-element, 2-chain, powerset-of-2, gd-fd-chain, perturbed-distributivity,
/// godel-3-chain, lukasiewicz-3-chain.
std::span<const std::string_view> fixture_names();
/// Throws Error for an unknown name.
FiniteAlgebra fixture(std::string_view name);

}  // namespace sbci
