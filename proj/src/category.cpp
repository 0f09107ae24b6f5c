#include "lcat/category.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lcat {

std::vector<std::vector<int>> chain_inclusions(const SubgroupChain& k, const SubgroupChain& h) {
  // Definition-level search over all strictly increasing index maps; since a
  // chain never repeats a subgroup, at most one survives the matching filter.
  const int n = k.length(), m = h.length();
  std::vector<std::vector<int>> out;
  if (n > m) return out;
  std::vector<int> iota;
  std::function<void(int)> rec = [&](int j) {
    if (j == n + 1) {
      out.push_back(iota);
      return;
    }
    int from = iota.empty() ? 0 : iota.back() + 1;
    for (int pos = from; pos <= m; ++pos) {
      if (h.at(pos) == k.at(j)) {
        iota.push_back(pos);
        rec(j + 1);
        iota.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

std::vector<LinkMorphism> hom(const SubgroupChain& k, const SubgroupChain& h) {
  if (!same_group(k.group(), h.group()))
    throw ParentMismatch("hom between chains of different groups");
  std::vector<LinkMorphism> out;
  for (const auto& iota : chain_inclusions(k, h))
    for (const Coset& c : multi_weil(k))
      out.push_back(LinkMorphism{k, h, iota, c.representative});
  return out;
}

LinkMorphism identity_morphism(const SubgroupChain& chain) {
  std::vector<int> iota(chain.subgroups.size());
  for (size_t j = 0; j < iota.size(); ++j) iota[j] = static_cast<int>(j);
  Coset c = make_coset(chain.group()->identity, chain.subgroups[0]);
  return LinkMorphism{chain, chain, iota, c.representative};
}

LinkMorphism compose(const LinkMorphism& f, const LinkMorphism& h) {
  if (!(f.dst == h.src)) throw NotComposable("codomain of f differs from domain of h");
  std::vector<int> iota(f.iota.size());
  for (size_t j = 0; j < f.iota.size(); ++j) iota[j] = h.iota[f.iota[j]];
  const FiniteGroup& g = *f.src.group();
  Coset c = make_coset(g.mul(f.gamma, h.gamma), f.src.subgroups[0]);
  return LinkMorphism{f.src, h.dst, iota, c.representative};
}

bool is_valid_morphism(const LinkMorphism& m) {
  if (m.iota.size() != m.src.subgroups.size()) return false;
  for (size_t j = 0; j < m.iota.size(); ++j) {
    if (m.iota[j] < 0 || m.iota[j] > m.dst.length()) return false;
    if (j > 0 && m.iota[j] <= m.iota[j - 1]) return false;
    if (!(m.dst.at(m.iota[j]) == m.src.at(static_cast<int>(j)))) return false;
  }
  for (const Subgroup& s : m.src.subgroups)
    if (!(conjugate_subgroup(m.gamma, s) == s)) return false;
  return make_coset(m.gamma, m.src.subgroups[0]).representative == m.gamma;
}

int LinkOrbitCategory::object_index(const SubgroupChain& chain) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == chain) return static_cast<int>(i);
  return -1;
}

long LinkOrbitCategory::total_morphisms() const {
  long total = 0;
  for (const auto& row : homs)
    for (const auto& cell : row) total += static_cast<long>(cell.size());
  return total;
}

LinkOrbitCategory build_link_orbit_category(const GroupPtr& g) {
  LinkOrbitCategory cat;
  cat.group = g;
  cat.subgroups = all_subgroups(g);
  cat.objects = enumerate_chains(g);
  const int n = static_cast<int>(cat.objects.size());
  cat.homs.assign(n, std::vector<std::vector<LinkMorphism>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cat.homs[i][j] = hom(cat.objects[i], cat.objects[j]);
  return cat;
}

AxiomReport verify_axioms(const LinkOrbitCategory& cat) {
  AxiomReport report;
  const int n = static_cast<int>(cat.objects.size());
  auto fail = [&](std::string msg) {
    report.pass = false;
    if (report.failures.size() < 20) report.failures.push_back(std::move(msg));
  };

  auto find_in_hom = [&](const LinkMorphism& m, int src, int dst) {
    const auto& hs = cat.homs[src][dst];
    return std::find(hs.begin(), hs.end(), m) != hs.end();
  };

  // Identity laws.
  for (int i = 0; i < n; ++i) {
    LinkMorphism id = identity_morphism(cat.objects[i]);
    if (!find_in_hom(id, i, i)) fail("identity missing from hom(" + std::to_string(i) + ")");
    for (int j = 0; j < n; ++j) {
      for (const LinkMorphism& f : cat.homs[i][j]) {
        ++report.identity_checks;
        if (!(compose(identity_morphism(cat.objects[i]), f) == f)) fail("left identity law fails");
        if (!(compose(f, identity_morphism(cat.objects[j])) == f)) fail("right identity law fails");
      }
    }
  }

  // Closure of composition.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const LinkMorphism& f : cat.homs[a][b])
        for (int c = 0; c < n; ++c)
          for (const LinkMorphism& h : cat.homs[b][c]) {
            ++report.closure_checks;
            LinkMorphism fh = compose(f, h);
            if (!is_valid_morphism(fh) || !find_in_hom(fh, a, c))
              fail("composition leaves the hom-sets");
          }

  // Associativity over all composable triples.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (cat.homs[a][b].empty()) continue;
      for (int c = 0; c < n; ++c) {
        if (cat.homs[b][c].empty()) continue;
        for (int d = 0; d < n; ++d) {
          if (cat.homs[c][d].empty()) continue;
          for (const LinkMorphism& f : cat.homs[a][b])
            for (const LinkMorphism& g : cat.homs[b][c])
              for (const LinkMorphism& h : cat.homs[c][d]) {
                ++report.associativity_checks;
                if (!(compose(compose(f, g), h) == compose(f, compose(g, h))))
                  fail("associativity fails");
              }
        }
      }
    }

  // Counting formula.
  for (int i = 0; i < n; ++i) {
    const size_t weil = multi_weil(cat.objects[i]).size();
    for (int j = 0; j < n; ++j) {
      ++report.hom_count_checks;
      size_t expect = chain_inclusions(cat.objects[i], cat.objects[j]).size() * weil;
      if (cat.homs[i][j].size() != expect)
        fail("hom(" + std::to_string(i) + "," + std::to_string(j) + ") violates the counting formula");
    }
  }

  return report;
}

std::vector<OrbitMorphism> orbit_hom(const Subgroup& h, const Subgroup& k) {
  if (!same_group(h.parent, k.parent)) throw ParentMismatch("orbit hom across groups");
  const FiniteGroup& g = *h.parent;
  std::vector<OrbitMorphism> out;
  for (const Coset& c : left_cosets(k)) {
    const int gamma = c.representative;
    Subgroup conj = conjugate_subgroup(g.invert(gamma), h);
    if (is_subchain_compatible(conj, k)) out.push_back(OrbitMorphism{h, k, gamma});
  }
  return out;
}

long orbit_fixed_point_count(const Subgroup& h, const Subgroup& k) {
  const FiniteGroup& g = *h.parent;
  long fixed = 0;
  for (const Coset& c : left_cosets(k)) {
    bool all_fix = true;
    for (int x : h.elements) {
      if (make_coset(g.mul(x, c.representative), k).representative != c.representative) {
        all_fix = false;
        break;
      }
    }
    if (all_fix) ++fixed;
  }
  return fixed;
}

std::string category_dot(const LinkOrbitCategory& cat, bool include_self_maps) {
  std::ostringstream out;
  out << "digraph linkcat {\n";
  out << "  rankdir=BT;\n";
  for (size_t i = 0; i < cat.objects.size(); ++i) {
    out << "  n" << i << " [label=\"" << chain_label(cat.objects[i], cat.subgroups) << "\"];\n";
  }
  for (size_t i = 0; i < cat.objects.size(); ++i) {
    for (size_t j = 0; j < cat.objects.size(); ++j) {
      if (i == j && !include_self_maps) continue;
      const size_t count = cat.homs[i][j].size();
      if (count == 0) continue;
      out << "  n" << i << " -> n" << j << " [label=\"" << count << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace lcat
