#include "lcat/chain.hpp"

#include <algorithm>
#include <functional>

namespace lcat {

SubgroupChain make_chain(std::vector<Subgroup> subgroups) {
  if (subgroups.empty()) throw InvalidChain("a chain needs at least one subgroup");
  for (size_t i = 0; i + 1 < subgroups.size(); ++i) {
    if (!is_subchain_compatible(subgroups[i], subgroups[i + 1]) ||
        subgroups[i] == subgroups[i + 1])
      throw InvalidChain("chain is not strictly increasing at position " + std::to_string(i));
  }
  return SubgroupChain{std::move(subgroups)};
}

std::vector<SubgroupChain> enumerate_chains(const GroupPtr& g) {
  const std::vector<Subgroup> subs = all_subgroups(g);
  const int n = static_cast<int>(subs.size());

  // Containment DAG on subgroup indices (proper containment only).
  std::vector<std::vector<int>> above(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && subs[i].order() < subs[j].order() &&
          is_subchain_compatible(subs[i], subs[j]))
        above[i].push_back(j);

  std::vector<std::vector<int>> chains;  // index sequences
  std::vector<int> cur;
  std::function<void(int)> grow = [&](int last) {
    chains.push_back(cur);
    for (int nxt : above[last]) {
      cur.push_back(nxt);
      grow(nxt);
      cur.pop_back();
    }
  };
  for (int i = 0; i < n; ++i) {
    cur = {i};
    grow(i);
  }

  std::stable_sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<SubgroupChain> out;
  out.reserve(chains.size());
  for (const auto& idxs : chains) {
    std::vector<Subgroup> seq;
    seq.reserve(idxs.size());
    for (int i : idxs) seq.push_back(subs[i]);
    out.push_back(make_chain(std::move(seq)));
  }
  return out;
}

std::vector<Coset> multi_weil(const SubgroupChain& chain) {
  Subgroup meet = normalizer(chain.subgroups[0]);
  for (size_t i = 1; i < chain.subgroups.size(); ++i)
    meet = intersect(meet, normalizer(chain.subgroups[i]));
  // Every element of the intersection normalizes H_0, so H_0 is normal there.
  for (int x : meet.elements)
    if (!(conjugate_subgroup(x, chain.subgroups[0]) == chain.subgroups[0]))
      throw Error("multi-Weil base subgroup not normal in the normalizer intersection");
  return left_cosets_in(meet, chain.subgroups[0]);
}

std::string chain_label(const SubgroupChain& chain, const std::vector<Subgroup>& all) {
  std::string out;
  for (size_t i = 0; i < chain.subgroups.size(); ++i) {
    if (i) out += "<";
    out += subgroup_label(chain.subgroups[i], all);
  }
  return out;
}

}  // namespace lcat
