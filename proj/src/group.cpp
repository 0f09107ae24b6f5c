#include "lcat/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace lcat {

namespace {

void validate_table(FiniteGroup& g) {
  const int n = g.order;
  if (n <= 0) throw NoIdentity("empty multiplication table");
  if (static_cast<int>(g.mult.size()) != n)
    throw NonAssociativeTable("multiplication table is not square");
  for (const auto& row : g.mult) {
    if (static_cast<int>(row.size()) != n)
      throw NonAssociativeTable("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw NonAssociativeTable("table entry out of range");
  }

  // Identity first: a two-sided identity, unique if it exists.
  int id = -1;
  for (int cand = 0; cand < n && id < 0; ++cand) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = g.mult[cand][a] == a && g.mult[a][cand] == a;
    if (ok) id = cand;
  }
  if (id < 0) throw NoIdentity("table has no two-sided identity");
  g.identity = id;

  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mult[a][b] == id && g.mult[b][a] == id) {
        g.inv[a] = b;
        break;
      }
    }
    if (g.inv[a] < 0)
      throw NoInverse("element " + std::to_string(a) + " has no two-sided inverse");
  }

  if (n <= kExhaustiveOrderBound) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mult[g.mult[a][b]][c] != g.mult[a][g.mult[b][c]])
            throw NonAssociativeTable("associativity fails at (" + std::to_string(a) +
                                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
    g.sampled_validation = false;
  } else {
    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int trial = 0; trial < 200000; ++trial) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (g.mult[g.mult[a][b]][c] != g.mult[a][g.mult[b][c]])
        throw NonAssociativeTable("associativity fails at sampled triple");
    }
    g.sampled_validation = true;
  }

  if (g.names.empty()) {
    g.names.resize(n);
    for (int a = 0; a < n; ++a) g.names[a] = a == id ? "e" : "g" + std::to_string(a);
  } else if (static_cast<int>(g.names.size()) != n) {
    throw InvalidInput("element name list has wrong length");
  }
}

GroupPtr finish(FiniteGroup g) {
  validate_table(g);
  return std::make_shared<const FiniteGroup>(std::move(g));
}

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // Identity permutation sorts first under next_permutation's order.
  return all;
}

std::string cycle_notation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::string out;
  for (int start = 0; start < n; ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += "(";
    int at = start;
    bool first = true;
    while (!seen[at]) {
      seen[at] = true;
      if (!first) out += " ";
      out += std::to_string(at + 1);
      first = false;
      at = perm[at];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

bool Subgroup::operator<(const Subgroup& other) const {
  if (elements.size() != other.elements.size()) return elements.size() < other.elements.size();
  return elements < other.elements;
}

GroupPtr make_cyclic(int n) {
  if (n < 1) throw InvalidInput("cyclic group order must be positive");
  FiniteGroup g;
  g.order = n;
  g.mult.assign(n, std::vector<int>(n));
  g.names.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
    g.names[a] = a == 0 ? "e" : "r" + std::to_string(a);
  }
  return finish(std::move(g));
}

GroupPtr make_dihedral(int n) {
  if (n < 1) throw InvalidInput("dihedral parameter must be positive");
  // Elements 0..n-1 are rotations r^i, n..2n-1 are reflections s r^i,
  // with the relation r s = s r^{-1}.
  const int order = 2 * n;
  FiniteGroup g;
  g.order = order;
  g.mult.assign(order, std::vector<int>(order));
  g.names.resize(order);
  auto flip = [&](int x) { return x >= n; };
  auto rot = [&](int x) { return x % n; };
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      int e1 = flip(a), i1 = rot(a);
      int e2 = flip(b), i2 = rot(b);
      int e = (e1 + e2) % 2;
      int i = (i2 + (e2 ? n - i1 : i1)) % n;
      g.mult[a][b] = i + n * e;
    }
    g.names[a] = a == 0 ? "e"
                        : (flip(a) ? (rot(a) == 0 ? "s" : "sr" + std::to_string(rot(a)))
                                   : "r" + std::to_string(a));
  }
  return finish(std::move(g));
}

GroupPtr make_symmetric(int n) {
  if (n < 1 || n > 4) throw InvalidInput("symmetric group supported for 1 <= n <= 4");
  auto perms = permutations_of(n);
  const int order = static_cast<int>(perms.size());
  FiniteGroup g;
  g.order = order;
  g.mult.assign(order, std::vector<int>(order));
  g.names.resize(order);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[perms[i]] = i;
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      // Composition convention: (a*b)(x) = a(b(x)).
      std::vector<int> ab(n);
      for (int x = 0; x < n; ++x) ab[x] = perms[a][perms[b][x]];
      g.mult[a][b] = index.at(ab);
    }
    g.names[a] = cycle_notation(perms[a]);
  }
  return finish(std::move(g));
}

GroupPtr make_quaternion8() {
  // Elements: 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k.
  auto axis = [](int x) { return x / 2; };  // 0:unit, 1:i, 2:j, 3:k
  auto sign = [](int x) { return x % 2; };
  // table[a][b] = (axis, sign) for the product of the positive units.
  static const int unit_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  FiniteGroup g;
  g.order = 8;
  g.mult.assign(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = unit_axis[axis(a)][axis(b)];
      int sg = (unit_sign[axis(a)][axis(b)] + sign(a) + sign(b)) % 2;
      g.mult[a][b] = 2 * ax + sg;
    }
  g.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return finish(std::move(g));
}

GroupPtr make_product(const GroupPtr& a, const GroupPtr& b) {
  const int n = a->order * b->order;
  FiniteGroup g;
  g.order = n;
  g.mult.assign(n, std::vector<int>(n));
  g.names.resize(n);
  auto idx = [&](int x, int y) { return x * b->order + y; };
  for (int x1 = 0; x1 < a->order; ++x1)
    for (int y1 = 0; y1 < b->order; ++y1)
      for (int x2 = 0; x2 < a->order; ++x2)
        for (int y2 = 0; y2 < b->order; ++y2)
          g.mult[idx(x1, y1)][idx(x2, y2)] = idx(a->mul(x1, x2), b->mul(y1, y2));
  for (int x = 0; x < a->order; ++x)
    for (int y = 0; y < b->order; ++y)
      g.names[idx(x, y)] = "(" + a->name(x) + "," + b->name(y) + ")";
  return finish(std::move(g));
}

GroupPtr make_trivial() { return make_cyclic(1); }

GroupPtr make_from_table(std::vector<std::vector<int>> mult, std::vector<std::string> names) {
  FiniteGroup g;
  g.order = static_cast<int>(mult.size());
  g.mult = std::move(mult);
  g.names = std::move(names);
  return finish(std::move(g));
}

GroupPtr named_group(const std::string& name) {
  if (name == "v4") return make_product(make_cyclic(2), make_cyclic(2));
  if (name == "q8") return make_quaternion8();
  if (name.size() >= 2 && (name[0] == 'c' || name[0] == 'd' || name[0] == 's')) {
    int n = 0;
    try {
      n = std::stoi(name.substr(1));
    } catch (const std::exception&) {
      throw InvalidInput("unknown group name: " + name);
    }
    if (name[0] == 'c') return make_cyclic(n);
    if (name[0] == 'd') return make_dihedral(n);
    return make_symmetric(n);
  }
  throw InvalidInput("unknown group name: " + name);
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->order == b->order && a->identity == b->identity && a->mult == b->mult;
}

namespace {

void require_same_parent(const Subgroup& h, const Subgroup& k) {
  if (!same_group(h.parent, k.parent))
    throw ParentMismatch("subgroups live in different groups");
}

}  // namespace

Subgroup make_subgroup(GroupPtr parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup h{std::move(parent), std::move(elements)};
  const FiniteGroup& g = *h.parent;
  for (int x : h.elements)
    if (x < 0 || x >= g.order) throw NotASubgroup("element index out of range");
  if (!h.contains(g.identity)) throw NotASubgroup("subgroup misses the identity");
  for (int a : h.elements) {
    if (!h.contains(g.invert(a))) throw NotASubgroup("subgroup not closed under inverses");
    for (int b : h.elements)
      if (!h.contains(g.mul(a, b))) throw NotASubgroup("subgroup not closed under products");
  }
  if (g.order % h.order() != 0)
    throw NotASubgroup("order does not divide group order");  // unreachable after closure
  return h;
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {g->identity}}; }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<int> all(g->order);
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{g, std::move(all)};
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& generators) {
  std::set<int> closure{g->identity};
  std::vector<int> todo(closure.begin(), closure.end());
  for (int x : generators)
    if (closure.insert(x).second) todo.push_back(x);
  while (!todo.empty()) {
    int a = todo.back();
    todo.pop_back();
    if (closure.insert(g->invert(a)).second) todo.push_back(g->invert(a));
    for (int b : std::vector<int>(closure.begin(), closure.end())) {
      for (int p : {g->mul(a, b), g->mul(b, a)})
        if (closure.insert(p).second) todo.push_back(p);
    }
  }
  return Subgroup{g, std::vector<int>(closure.begin(), closure.end())};
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  std::set<std::vector<int>> found;
  for (int x = 0; x < g->order; ++x) found.insert(generated_subgroup(g, {x}).elements);

  // Close the collection under pairwise joins; every subgroup is a join of
  // cyclic subgroups, so the fixed point is the full lattice.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(found.begin(), found.end());
    for (size_t i = 0; i < current.size(); ++i) {
      for (size_t j = i + 1; j < current.size(); ++j) {
        std::vector<int> gens = current[i];
        gens.insert(gens.end(), current[j].begin(), current[j].end());
        auto join = generated_subgroup(g, gens).elements;
        if (found.insert(join).second) grew = true;
      }
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& elems : found) out.push_back(Subgroup{g, elems});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> all_subgroups_bruteforce(const GroupPtr& g) {
  const int n = g->order;
  if (n > 24) throw InvalidInput("brute-force subgroup scan capped at order 24");
  // Scan subsets containing the identity whose size divides |G|.
  std::vector<int> rest;
  for (int x = 0; x < n; ++x)
    if (x != g->identity) rest.push_back(x);
  std::vector<Subgroup> out;
  std::vector<int> pick;
  auto is_closed = [&](const std::vector<int>& elems) {
    for (int a : elems) {
      if (!std::binary_search(elems.begin(), elems.end(), g->invert(a))) return false;
      for (int b : elems)
        if (!std::binary_search(elems.begin(), elems.end(), g->mul(a, b))) return false;
    }
    return true;
  };
  std::function<void(size_t, int)> rec = [&](size_t from, int need) {
    if (need == 0) {
      std::vector<int> elems = pick;
      elems.push_back(g->identity);
      std::sort(elems.begin(), elems.end());
      if (is_closed(elems)) out.push_back(Subgroup{g, elems});
      return;
    }
    for (size_t i = from; i < rest.size() && rest.size() - i >= static_cast<size_t>(need); ++i) {
      pick.push_back(rest[i]);
      rec(i + 1, need - 1);
      pick.pop_back();
    }
  };
  for (int size = 1; size <= n; ++size) {
    if (n % size != 0) continue;
    rec(0, size - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup normalizer(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  std::vector<int> elems;
  for (int x = 0; x < g.order; ++x)
    if (conjugate_subgroup(x, h) == h) elems.push_back(x);
  return Subgroup{h.parent, std::move(elems)};
}

Subgroup conjugate_subgroup(int g, const Subgroup& h) {
  const FiniteGroup& grp = *h.parent;
  if (g < 0 || g >= grp.order) throw InvalidInput("conjugating element out of range");
  std::vector<int> elems;
  elems.reserve(h.elements.size());
  const int ginv = grp.invert(g);
  for (int x : h.elements) elems.push_back(grp.mul(grp.mul(g, x), ginv));
  std::sort(elems.begin(), elems.end());
  return Subgroup{h.parent, std::move(elems)};
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  std::vector<int> elems;
  std::set_intersection(h.elements.begin(), h.elements.end(), k.elements.begin(),
                        k.elements.end(), std::back_inserter(elems));
  return Subgroup{h.parent, std::move(elems)};
}

bool is_subchain_compatible(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  return std::includes(k.elements.begin(), k.elements.end(), h.elements.begin(),
                       h.elements.end());
}

Coset make_coset(int g, const Subgroup& h) {
  const FiniteGroup& grp = *h.parent;
  if (g < 0 || g >= grp.order) throw InvalidInput("coset representative out of range");
  int rep = grp.order;
  for (int x : h.elements) rep = std::min(rep, grp.mul(g, x));
  return Coset{rep, h};
}

std::vector<int> coset_elements(const Coset& c) {
  const FiniteGroup& grp = *c.subgroup.parent;
  std::vector<int> elems;
  elems.reserve(c.subgroup.elements.size());
  for (int x : c.subgroup.elements) elems.push_back(grp.mul(c.representative, x));
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<Coset> left_cosets(const Subgroup& h) {
  return left_cosets_in(whole_group(h.parent), h);
}

std::vector<Coset> left_cosets_in(const Subgroup& ambient, const Subgroup& h) {
  require_same_parent(ambient, h);
  if (!is_subchain_compatible(h, ambient))
    throw NotASubgroup("coset subgroup is not contained in the ambient subgroup");
  std::vector<Coset> out;
  std::set<int> covered;
  for (int x : ambient.elements) {
    if (covered.count(x)) continue;
    Coset c = make_coset(x, h);
    for (int y : coset_elements(c)) covered.insert(y);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const Coset& a, const Coset& b) { return a.representative < b.representative; });
  return out;
}

std::string subgroup_label(const Subgroup& h, const std::vector<Subgroup>& all) {
  if (h.order() == 1) return "e";
  bool cyclic = false;
  for (int x : h.elements)
    if (generated_subgroup(h.parent, {x}) == h) cyclic = true;
  std::string base = (cyclic ? "C" : "U") + std::to_string(h.order());
  std::vector<const Subgroup*> same_order;
  for (const Subgroup& s : all)
    if (s.order() == h.order()) same_order.push_back(&s);
  if (same_order.size() <= 1) return base;
  for (size_t i = 0; i < same_order.size(); ++i)
    if (*same_order[i] == h) return base + static_cast<char>('a' + i);
  return base + "?";
}

}  // namespace lcat
