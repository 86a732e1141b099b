#pragma once
// Fixed reference tables, one per isomorphism class of groups up to order 8.
// Conventions: identity is 0; Zn is i+j mod n; products linearize pairs as
// a*|B|+b; S3 lists the permutations of {0,1,2} in lexicographic order and
// composes them left-to-right via (p*q)(x) = p(q(x)); D4 lists the four
// rotations then the four reflections (index = flip*4 + rotation); Q8 is
// 1,-1,i,-i,j,-j,k,-k in that order.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skb/group.hpp"

namespace skb {

const std::vector<std::string>& catalog_ids();
std::optional<FiniteGroup> catalog_group(std::string_view id);
std::vector<FiniteGroup> catalog_groups_of_order(int n);
// id of the catalog entry with this exact table, if any
std::optional<std::string> catalog_id_of(const FiniteGroup& g);

}  // namespace skb
