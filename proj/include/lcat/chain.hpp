#pragma once

#include <string>
#include <vector>

#include "lcat/group.hpp"

namespace lcat {

/// A strictly increasing chain H_0 < ... < H_n of subgroups of one group.
/// These are the objects of the link orbit category; n is the chain length.
struct SubgroupChain {
  std::vector<Subgroup> subgroups;

  int length() const { return static_cast<int>(subgroups.size()) - 1; }
  const GroupPtr& group() const { return subgroups.front().parent; }
  const Subgroup& at(int i) const { return subgroups[i]; }
  bool operator==(const SubgroupChain& other) const { return subgroups == other.subgroups; }
};

// Validates strict proper containment along the chain; throws InvalidChain.
SubgroupChain make_chain(std::vector<Subgroup> subgroups);

// All strictly increasing chains, every nonempty length, ordered by
// (length, lexicographic subgroup indices). Deterministic.
std::vector<SubgroupChain> enumerate_chains(const GroupPtr& g);

// The multi-Weil group of a chain: the cosets of H_0 inside the intersection
// of all normalizers N_G(H_i). H_0 is normal in that intersection, so the
// cosets form a group; this is verified and an Error is thrown otherwise.
std::vector<Coset> multi_weil(const SubgroupChain& chain);

// "e<C2<C4"-style display label; `all` is the parent's all_subgroups list.
std::string chain_label(const SubgroupChain& chain, const std::vector<Subgroup>& all);

}  // namespace lcat
