#include "lcat/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace lcat {

namespace {

// Union-find on dense ints.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

bool is_sorted_strict(const std::vector<int>& v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] >= v[i + 1]) return false;
  return true;
}

}  // namespace

ComplexPtr share(GSemiSimplicialSet&& x) {
  return std::make_shared<const GSemiSimplicialSet>(std::move(x));
}

long GSemiSimplicialSet::total_size() const {
  long total = 0;
  for (const auto& level : names) total += static_cast<long>(level.size());
  return total;
}

void validate_complex(const GSemiSimplicialSet& x) {
  if (!x.group) throw InvalidComplex("complex has no group");
  const int levels = static_cast<int>(x.names.size());
  if (static_cast<int>(x.faces.size()) != levels)
    throw InvalidComplex("faces and names disagree on the number of levels");
  if (static_cast<int>(x.action.size()) != x.group->order)
    throw InvalidComplex("action table has wrong group order");

  for (int d = 0; d < levels; ++d) {
    std::set<std::string> seen;
    for (const auto& n : x.names[d])
      if (!seen.insert(n).second) throw InvalidComplex("duplicate simplex name: " + n);
    if (x.faces[d].size() != x.names[d].size())
      throw InvalidComplex("face table size mismatch at dim " + std::to_string(d));
    for (const auto& fs : x.faces[d]) {
      if (d == 0) {
        if (!fs.empty()) throw InvalidComplex("vertices must have no faces");
        continue;
      }
      if (static_cast<int>(fs.size()) != d + 1)
        throw InvalidComplex("a " + std::to_string(d) + "-simplex needs " +
                             std::to_string(d + 1) + " faces");
      for (int f : fs)
        if (f < 0 || f >= x.size(d - 1)) throw InvalidComplex("face index out of range");
    }
  }

  for (int g = 0; g < x.group->order; ++g) {
    if (static_cast<int>(x.action[g].size()) != levels)
      throw InvalidComplex("action of element " + std::to_string(g) + " misses levels");
    for (int d = 0; d < levels; ++d) {
      const auto& perm = x.action[g][d];
      if (perm.size() != x.names[d].size())
        throw InvalidComplex("action permutation has wrong size");
      std::vector<bool> hit(perm.size(), false);
      for (int v : perm) {
        if (v < 0 || v >= x.size(d) || hit[v])
          throw InvalidComplex("action is not a permutation");
        hit[v] = true;
      }
    }
  }

  // Identity element acts as the identity, and the action is a homomorphism.
  for (int d = 0; d < levels; ++d)
    for (int i = 0; i < x.size(d); ++i)
      if (x.act(x.group->identity, d, i) != i)
        throw InvalidComplex("identity element does not act trivially");
  for (int a = 0; a < x.group->order; ++a)
    for (int b = 0; b < x.group->order; ++b) {
      const int ab = x.group->mul(a, b);
      for (int d = 0; d < levels; ++d)
        for (int i = 0; i < x.size(d); ++i)
          if (x.act(ab, d, i) != x.act(a, d, x.act(b, d, i)))
            throw InvalidComplex("action is not a group homomorphism");
    }

  // Action commutes with faces.
  for (int g = 0; g < x.group->order; ++g)
    for (int d = 1; d < levels; ++d)
      for (int i = 0; i < x.size(d); ++i)
        for (int j = 0; j <= d; ++j)
          if (x.face(d, x.act(g, d, i), j) != x.act(g, d - 1, x.face(d, i, j)))
            throw InvalidComplex("action does not commute with face maps");

  // Simplicial identities d_i d_j = d_{j-1} d_i for i < j.
  for (int d = 2; d < levels; ++d)
    for (int s = 0; s < x.size(d); ++s)
      for (int j = 1; j <= d; ++j)
        for (int i = 0; i < j; ++i)
          if (x.face(d - 1, x.face(d, s, j), i) != x.face(d - 1, x.face(d, s, i), j - 1))
            throw InvalidComplex("simplicial identity fails at dim " + std::to_string(d));
}

std::vector<SimplexId> all_simplices(const GSemiSimplicialSet& x) {
  std::vector<SimplexId> out;
  for (int d = 0; d <= x.dim(); ++d)
    for (int i = 0; i < x.size(d); ++i) out.push_back(SimplexId{d, i});
  return out;
}

std::vector<int> simplex_vertices(const GSemiSimplicialSet& x, SimplexId s) {
  std::vector<int> verts(s.dim + 1);
  for (int j = 0; j <= s.dim; ++j) {
    int d = s.dim, cur = s.idx;
    // Drop trailing positions down to j, then the leading ones.
    while (d > j) {
      cur = x.face(d, cur, d);
      --d;
    }
    while (d > 0) {
      cur = x.face(d, cur, 0);
      --d;
    }
    verts[j] = cur;
  }
  return verts;
}

std::set<SimplexId> iterated_faces(const GSemiSimplicialSet& x, SimplexId s) {
  std::set<SimplexId> out;
  std::vector<SimplexId> todo{s};
  while (!todo.empty()) {
    SimplexId cur = todo.back();
    todo.pop_back();
    if (cur.dim == 0) continue;
    for (int j = 0; j <= cur.dim; ++j) {
      SimplexId f{cur.dim - 1, x.face(cur.dim, cur.idx, j)};
      if (out.insert(f).second) todo.push_back(f);
    }
  }
  return out;
}

GSemiSimplicialSet empty_complex(GroupPtr g) {
  GSemiSimplicialSet x;
  x.group = std::move(g);
  x.action.assign(x.group->order, {});
  return x;
}

GSemiSimplicialSet point_complex(GroupPtr g, int max_dim) {
  GSemiSimplicialSet x;
  x.group = std::move(g);
  x.names.resize(max_dim + 1);
  x.faces.resize(max_dim + 1);
  for (int d = 0; d <= max_dim; ++d) {
    x.names[d] = {"pt" + std::to_string(d)};
    x.faces[d] = {d == 0 ? std::vector<int>{} : std::vector<int>(d + 1, 0)};
  }
  x.action.assign(x.group->order,
                  std::vector<std::vector<int>>(max_dim + 1, std::vector<int>{0}));
  validate_complex(x);
  return x;
}

GSemiSimplicialSet orbit_complex(const Subgroup& h) {
  const GroupPtr g = h.parent;
  auto cosets = left_cosets(h);
  GSemiSimplicialSet x;
  x.group = g;
  x.names.resize(1);
  x.faces.resize(1);
  std::map<int, int> rep_to_idx;
  for (size_t i = 0; i < cosets.size(); ++i) {
    x.names[0].push_back(g->name(cosets[i].representative));
    x.faces[0].push_back({});
    rep_to_idx[cosets[i].representative] = static_cast<int>(i);
  }
  x.action.assign(g->order, std::vector<std::vector<int>>(1));
  for (int a = 0; a < g->order; ++a) {
    x.action[a][0].resize(cosets.size());
    for (size_t i = 0; i < cosets.size(); ++i) {
      int image_rep = make_coset(g->mul(a, cosets[i].representative), h).representative;
      x.action[a][0][i] = rep_to_idx.at(image_rep);
    }
  }
  validate_complex(x);
  return x;
}

GSemiSimplicialSet from_sorted_simplices(GroupPtr g, int vertex_count,
                                         const std::vector<std::vector<int>>& vertex_action,
                                         const std::vector<std::vector<int>>& simplices,
                                         const std::vector<std::string>& vertex_names) {
  std::set<std::vector<int>> tuples;
  for (int v = 0; v < vertex_count; ++v) tuples.insert({v});
  for (const auto& s : simplices) {
    if (s.empty() || !is_sorted_strict(s) || s.front() < 0 || s.back() >= vertex_count)
      throw InvalidComplex("simplex tuples must be strictly increasing vertex lists");
    tuples.insert(s);
  }

  int max_dim = 0;
  for (const auto& t : tuples) max_dim = std::max(max_dim, static_cast<int>(t.size()) - 1);

  std::vector<std::map<std::vector<int>, int>> index(max_dim + 1);
  GSemiSimplicialSet x;
  x.group = g;
  x.names.resize(max_dim + 1);
  x.faces.resize(max_dim + 1);
  auto vname = [&](int v) {
    return vertex_names.empty() ? "v" + std::to_string(v) : vertex_names[v];
  };
  for (const auto& t : tuples) {
    const int d = static_cast<int>(t.size()) - 1;
    index[d][t] = static_cast<int>(x.names[d].size());
    std::string nm = vname(t[0]);
    for (size_t i = 1; i < t.size(); ++i) nm += "." + vname(t[i]);
    x.names[d].push_back(nm);
    x.faces[d].push_back({});
  }
  for (const auto& t : tuples) {
    const int d = static_cast<int>(t.size()) - 1;
    if (d == 0) continue;
    auto& fs = x.faces[d][index[d].at(t)];
    fs.resize(d + 1);
    for (int j = 0; j <= d; ++j) {
      std::vector<int> facet;
      for (int p = 0; p <= d; ++p)
        if (p != j) facet.push_back(t[p]);
      auto it = index[d - 1].find(facet);
      if (it == index[d - 1].end()) throw NotClosedUnderFaces("missing face of a simplex");
      fs[j] = it->second;
    }
  }

  x.action.assign(g->order, std::vector<std::vector<int>>(max_dim + 1));
  for (int a = 0; a < g->order; ++a) {
    for (int d = 0; d <= max_dim; ++d) x.action[a][d].resize(x.names[d].size());
    for (const auto& t : tuples) {
      std::vector<int> image;
      image.reserve(t.size());
      for (int v : t) image.push_back(vertex_action[a][v]);
      if (!is_sorted_strict(image))
        throw InvalidComplex("action does not respect the vertex order");
      const int d = static_cast<int>(t.size()) - 1;
      auto it = index[d].find(image);
      if (it == index[d].end())
        throw NotClosedUnderAction("action image of a simplex is missing");
      x.action[a][d][index[d].at(t)] = it->second;
    }
  }
  validate_complex(x);
  return x;
}

FromComplexResult from_complex(GroupPtr g, int vertex_count,
                               const std::vector<std::vector<int>>& vertex_action,
                               const std::vector<std::vector<int>>& simplices) {
  if (static_cast<int>(vertex_action.size()) != g->order)
    throw InvalidComplex("vertex action needs one permutation per group element");

  std::set<std::vector<int>> tuples;
  for (int v = 0; v < vertex_count; ++v) tuples.insert({v});
  for (const auto& s : simplices) {
    if (s.empty() || !is_sorted_strict(s) || s.front() < 0 || s.back() >= vertex_count)
      throw InvalidComplex("simplex tuples must be strictly increasing vertex lists");
    tuples.insert(s);
  }

  // Closure checks happen on the raw data, before any subdivision.
  for (const auto& t : tuples) {
    if (t.size() >= 2) {
      for (size_t j = 0; j < t.size(); ++j) {
        std::vector<int> facet;
        for (size_t p = 0; p < t.size(); ++p)
          if (p != j) facet.push_back(t[p]);
        if (!tuples.count(facet)) throw NotClosedUnderFaces("missing face of a simplex");
      }
    }
    for (int a = 0; a < g->order; ++a) {
      std::vector<int> image;
      for (int v : t) image.push_back(vertex_action[a][v]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (image.size() != t.size() || !tuples.count(image))
        throw NotClosedUnderAction("action image of a simplex is missing");
    }
  }

  bool order_ok = true;
  for (const auto& t : tuples) {
    for (int a = 0; a < g->order && order_ok; ++a) {
      std::vector<int> image;
      for (int v : t) image.push_back(vertex_action[a][v]);
      if (!is_sorted_strict(image)) order_ok = false;
    }
    if (!order_ok) break;
  }

  if (order_ok) {
    std::vector<std::vector<int>> list(tuples.begin(), tuples.end());
    return FromComplexResult{from_sorted_simplices(g, vertex_count, vertex_action, list),
                             false};
  }

  // Barycentric subdivision: one new vertex per simplex, flags as simplices.
  // Flags are ordered by dimension, which every group element preserves.
  std::vector<std::vector<int>> tuple_list(tuples.begin(), tuples.end());
  std::stable_sort(tuple_list.begin(), tuple_list.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::map<std::vector<int>, int> tuple_id;
  std::vector<std::string> bnames;
  for (size_t i = 0; i < tuple_list.size(); ++i) {
    tuple_id[tuple_list[i]] = static_cast<int>(i);
    std::string nm = "b" + std::to_string(tuple_list[i][0]);
    for (size_t p = 1; p < tuple_list[i].size(); ++p)
      nm += "_" + std::to_string(tuple_list[i][p]);
    bnames.push_back(nm);
  }

  std::vector<std::vector<int>> new_action(g->order, std::vector<int>(tuple_list.size()));
  for (int a = 0; a < g->order; ++a)
    for (size_t i = 0; i < tuple_list.size(); ++i) {
      std::vector<int> image;
      for (int v : tuple_list[i]) image.push_back(vertex_action[a][v]);
      std::sort(image.begin(), image.end());
      new_action[a][i] = tuple_id.at(image);
    }

  // All strict containment chains among tuples.
  std::vector<std::vector<int>> flags;
  std::vector<int> chain;
  std::function<void(int)> grow = [&](int last) {
    if (chain.size() >= 2) flags.push_back(chain);
    for (size_t nxt = 0; nxt < tuple_list.size(); ++nxt) {
      if (tuple_list[nxt].size() <= tuple_list[last].size()) continue;
      if (std::includes(tuple_list[nxt].begin(), tuple_list[nxt].end(),
                        tuple_list[last].begin(), tuple_list[last].end())) {
        chain.push_back(static_cast<int>(nxt));
        grow(static_cast<int>(nxt));
        chain.pop_back();
      }
    }
  };
  for (size_t i = 0; i < tuple_list.size(); ++i) {
    chain = {static_cast<int>(i)};
    grow(static_cast<int>(i));
  }

  return FromComplexResult{
      from_sorted_simplices(g, static_cast<int>(tuple_list.size()), new_action, flags, bnames),
      true};
}

Subgroup simplex_stabilizer(const GSemiSimplicialSet& x, SimplexId s) {
  std::vector<int> elems;
  for (int g = 0; g < x.group->order; ++g)
    if (x.act(g, s.dim, s.idx) == s.idx) elems.push_back(g);
  return Subgroup{x.group, std::move(elems)};
}

bool IsotropyStratum::contains(SimplexId s) const {
  return std::binary_search(simplices.begin(), simplices.end(), s);
}

IsotropyStratum exact_stratum(ComplexPtr x, const Subgroup& h) {
  if (!same_group(x->group, h.parent)) throw ParentMismatch("stratum subgroup of wrong group");
  IsotropyStratum out{x, h, {}};
  for (SimplexId s : all_simplices(*x))
    if (simplex_stabilizer(*x, s) == h) out.simplices.push_back(s);
  return out;
}

SubcomplexResult fixed_subset(const GSemiSimplicialSet& x, const Subgroup& h) {
  if (!same_group(x.group, h.parent))
    throw ParentMismatch("fixed subset subgroup of wrong group");
  std::vector<std::vector<bool>> keep(x.dim() + 1);
  for (int d = 0; d <= x.dim(); ++d) {
    keep[d].assign(x.size(d), true);
    for (int i = 0; i < x.size(d); ++i)
      for (int a : h.elements)
        if (x.act(a, d, i) != i) {
          keep[d][i] = false;
          break;
        }
  }

  bool g_closed = true;
  for (int g = 0; g < x.group->order && g_closed; ++g)
    for (int d = 0; d <= x.dim() && g_closed; ++d)
      for (int i = 0; i < x.size(d); ++i)
        if (keep[d][i] && !keep[d][x.act(g, d, i)]) {
          g_closed = false;
          break;
        }

  SubcomplexResult out;
  out.complex.group = g_closed ? x.group : make_trivial();
  out.complex.names.resize(x.dim() + 1);
  out.complex.faces.resize(x.dim() + 1);
  out.index_in_parent.resize(x.dim() + 1);
  std::vector<std::vector<int>> back(x.dim() + 1);
  for (int d = 0; d <= x.dim(); ++d) {
    back[d].assign(x.size(d), -1);
    for (int i = 0; i < x.size(d); ++i) {
      if (!keep[d][i]) continue;
      back[d][i] = static_cast<int>(out.complex.names[d].size());
      out.complex.names[d].push_back(x.names[d][i]);
      out.index_in_parent[d].push_back(i);
      if (d == 0) {
        out.complex.faces[d].push_back({});
      } else {
        std::vector<int> fs(d + 1);
        for (int j = 0; j <= d; ++j) fs[j] = back[d - 1][x.face(d, i, j)];
        out.complex.faces[d].push_back(std::move(fs));
      }
    }
  }
  while (!out.complex.names.empty() && out.complex.names.back().empty()) {
    out.complex.names.pop_back();
    out.complex.faces.pop_back();
    out.index_in_parent.pop_back();
  }

  const int levels = static_cast<int>(out.complex.names.size());
  out.complex.action.assign(out.complex.group->order, std::vector<std::vector<int>>(levels));
  for (int g = 0; g < out.complex.group->order; ++g)
    for (int d = 0; d < levels; ++d) {
      auto& perm = out.complex.action[g][d];
      perm.resize(out.complex.names[d].size());
      for (size_t i = 0; i < perm.size(); ++i) {
        int parent_idx = out.index_in_parent[d][i];
        perm[i] = g_closed ? back[d][x.act(g, d, parent_idx)] : static_cast<int>(i);
      }
    }
  validate_complex(out.complex);
  return out;
}

bool Pi0Result::transitive() const {
  if (count <= 1) return true;
  std::set<int> orbit{0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& perm : action) {
      if (!perm) continue;
      for (int c : std::vector<int>(orbit.begin(), orbit.end()))
        if (orbit.insert((*perm)[c]).second) grew = true;
    }
  }
  return static_cast<int>(orbit.size()) == count;
}

Pi0Result stratum_pi0(const IsotropyStratum& stratum) {
  const GSemiSimplicialSet& x = *stratum.space;
  const auto& members = stratum.simplices;
  const int n = static_cast<int>(members.size());
  std::map<SimplexId, int> pos;
  for (int i = 0; i < n; ++i) pos[members[i]] = i;

  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (SimplexId f : iterated_faces(x, members[i])) {
      auto it = pos.find(f);
      if (it != pos.end()) uf.unite(i, it->second);
    }

  Pi0Result out;
  std::map<int, int> root_label;
  for (int i = 0; i < n; ++i) {
    int root = uf.find(i);
    auto [it, fresh] = root_label.try_emplace(root, out.count);
    if (fresh) ++out.count;
    out.label[members[i]] = it->second;
  }

  out.action.resize(x.group->order);
  for (int g = 0; g < x.group->order; ++g) {
    bool preserved = true;
    for (int i = 0; i < n && preserved; ++i) {
      SimplexId img{members[i].dim, x.act(g, members[i].dim, members[i].idx)};
      if (!pos.count(img)) preserved = false;
    }
    if (!preserved) continue;
    std::vector<int> perm(out.count, -1);
    bool consistent = true;
    for (int i = 0; i < n && consistent; ++i) {
      SimplexId img{members[i].dim, x.act(g, members[i].dim, members[i].idx)};
      int from = out.label.at(members[i]), to = out.label.at(img);
      if (perm[from] == -1)
        perm[from] = to;
      else if (perm[from] != to)
        consistent = false;
    }
    if (consistent) out.action[g] = std::move(perm);
  }
  return out;
}

GSimplicialMap identity_map(ComplexPtr x) {
  GSimplicialMap f;
  f.src = x;
  f.dst = x;
  f.assignment.resize(x->dim() + 1);
  for (int d = 0; d <= x->dim(); ++d) {
    f.assignment[d].resize(x->size(d));
    std::iota(f.assignment[d].begin(), f.assignment[d].end(), 0);
  }
  return f;
}

void validate_map(const GSimplicialMap& f) {
  if (!f.src || !f.dst) throw InvalidComplex("map missing endpoints");
  const GSemiSimplicialSet& x = *f.src;
  const GSemiSimplicialSet& y = *f.dst;
  if (static_cast<int>(f.assignment.size()) != x.dim() + 1)
    throw InvalidComplex("assignment has wrong number of levels");
  for (int d = 0; d <= x.dim(); ++d) {
    if (static_cast<int>(f.assignment[d].size()) != x.size(d))
      throw InvalidComplex("assignment has wrong size at dim " + std::to_string(d));
    for (int v : f.assignment[d])
      if (v < 0 || v >= y.size(d))
        throw InvalidComplex("assignment out of range at dim " + std::to_string(d));
  }
  for (int d = 1; d <= x.dim(); ++d)
    for (int i = 0; i < x.size(d); ++i)
      for (int j = 0; j <= d; ++j)
        if (y.face(d, f.apply(d, i), j) != f.apply(d - 1, x.face(d, i, j)))
          throw InvalidComplex("map does not commute with face maps");
}

bool check_equivariant(const GSimplicialMap& f) {
  const GSemiSimplicialSet& x = *f.src;
  const GSemiSimplicialSet& y = *f.dst;
  if (!same_group(x.group, y.group))
    throw ParentMismatch("equivariance across different groups");
  for (int g = 0; g < x.group->order; ++g)
    for (int d = 0; d <= x.dim(); ++d)
      for (int i = 0; i < x.size(d); ++i)
        if (f.apply(d, x.act(g, d, i)) != y.act(g, d, f.apply(d, i))) return false;
  return true;
}

IsovarianceResult check_isovariant(const GSimplicialMap& f) {
  const GSemiSimplicialSet& x = *f.src;
  const GSemiSimplicialSet& y = *f.dst;
  if (!same_group(x.group, y.group))
    throw ParentMismatch("isovariance across different groups");
  for (int g = 0; g < x.group->order; ++g)
    for (int d = 0; d <= x.dim(); ++d)
      for (int i = 0; i < x.size(d); ++i)
        if (f.apply(d, x.act(g, d, i)) != y.act(g, d, f.apply(d, i)))
          return IsovarianceResult{false, SimplexId{d, i}, "not equivariant"};
  for (int d = 0; d <= x.dim(); ++d)
    for (int i = 0; i < x.size(d); ++i) {
      SimplexId s{d, i};
      if (!(simplex_stabilizer(x, s) == simplex_stabilizer(y, f.apply(s))))
        return IsovarianceResult{false, s, "stabilizer changes under the map"};
    }
  return IsovarianceResult{};
}

GSemiSimplicialSet isovariant_product_discrete(const GSemiSimplicialSet& x,
                                               const GSemiSimplicialSet& y) {
  if (!same_group(x.group, y.group)) throw ParentMismatch("product across different groups");
  if (x.dim() > 0 || y.dim() > 0)
    throw InvalidInput("isovariant_product_discrete expects discrete G-sets");
  GSemiSimplicialSet p = empty_complex(x.group);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < x.size(0); ++i) {
    Subgroup sx = simplex_stabilizer(x, {0, i});
    for (int j = 0; j < y.size(0); ++j)
      if (sx == simplex_stabilizer(y, {0, j})) pairs.emplace_back(i, j);
  }
  if (pairs.empty()) return p;
  p.names.resize(1);
  p.faces.resize(1);
  std::map<std::pair<int, int>, int> index;
  for (size_t k = 0; k < pairs.size(); ++k) {
    index[pairs[k]] = static_cast<int>(k);
    p.names[0].push_back("(" + x.names[0][pairs[k].first] + "," +
                         y.names[0][pairs[k].second] + ")");
    p.faces[0].push_back({});
  }
  p.action.assign(p.group->order, std::vector<std::vector<int>>(1));
  for (int g = 0; g < p.group->order; ++g) {
    p.action[g][0].resize(pairs.size());
    for (size_t k = 0; k < pairs.size(); ++k) {
      std::pair<int, int> img{x.act(g, 0, pairs[k].first), y.act(g, 0, pairs[k].second)};
      p.action[g][0][k] = index.at(img);
    }
  }
  validate_complex(p);
  return p;
}

Subgroup point_isotropy(const GSemiSimplicialSet& x, const PointInComplex& p) {
  if (p.carrier.dim < 0 || p.carrier.dim > x.dim() || p.carrier.idx < 0 ||
      p.carrier.idx >= x.size(p.carrier.dim))
    throw InvalidInput("point carrier out of range");
  if (static_cast<int>(p.coords.size()) != p.carrier.dim + 1 || !is_barycentric(p.coords))
    throw BadCoordinates("point coordinates are not barycentric");
  // Reduce to the face spanned by the nonzero coordinates; the action on an
  // ordered complex fixes a preserved simplex vertex-wise, so the stabilizer
  // of that face is the point's isotropy group.
  int d = p.carrier.dim, idx = p.carrier.idx;
  for (int pos = d; pos >= 0; --pos) {
    if (p.coords[pos] != 0) continue;
    idx = x.face(d, idx, pos);
    --d;
  }
  return simplex_stabilizer(x, SimplexId{d, idx});
}

bool isovariant_product_membership(const GSemiSimplicialSet& x, const GSemiSimplicialSet& y,
                                   const PointInComplex& px, const PointInComplex& py) {
  if (!same_group(x.group, y.group)) throw ParentMismatch("membership across different groups");
  return point_isotropy(x, px) == point_isotropy(y, py);
}

namespace {

struct MapSearch {
  ComplexPtr xp, yp;
  const GSemiSimplicialSet& x;
  const GSemiSimplicialSet& y;
  long budget;
  long nodes = 0;
  std::vector<std::vector<Subgroup>> x_stab, y_stab;
  std::vector<std::vector<int>> assign;
  std::vector<GSimplicialMap> results;

  MapSearch(ComplexPtr xp_, ComplexPtr yp_, long budget_)
      : xp(std::move(xp_)), yp(std::move(yp_)), x(*xp), y(*yp), budget(budget_) {
    x_stab.resize(x.dim() + 1);
    for (int d = 0; d <= x.dim(); ++d)
      for (int i = 0; i < x.size(d); ++i) x_stab[d].push_back(simplex_stabilizer(x, {d, i}));
    y_stab.resize(y.dim() + 1);
    for (int d = 0; d <= y.dim(); ++d)
      for (int i = 0; i < y.size(d); ++i) y_stab[d].push_back(simplex_stabilizer(y, {d, i}));
    assign.resize(x.dim() + 1);
    for (int d = 0; d <= x.dim(); ++d) assign[d].assign(x.size(d), -1);
  }

  // Assigns f(s)=t together with the whole G-orbit of s; records undo info.
  bool assign_orbit(int d, int i, int t, std::vector<int>& undo) {
    for (int g = 0; g < x.group->order; ++g) {
      int si = x.act(g, d, i);
      int ti = y.act(g, d, t);
      if (assign[d][si] == -1) {
        assign[d][si] = ti;
        undo.push_back(si);
      } else if (assign[d][si] != ti) {
        return false;
      }
    }
    return true;
  }

  void search(const std::vector<SimplexId>& order, size_t at) {
    if (at == order.size()) {
      GSimplicialMap f{xp, yp, assign};
      validate_map(f);
      if (check_isovariant(f).ok) results.push_back(std::move(f));
      return;
    }
    auto [d, i] = order[at];
    if (assign[d][i] != -1) {
      search(order, at + 1);
      return;
    }
    for (int t = 0; t < y.size(d); ++t) {
      if (++nodes > budget)
        throw SearchBudgetExceeded("isovariant map search budget exhausted");
      if (!(x_stab[d][i] == y_stab[d][t])) continue;
      if (d > 0) {
        bool faces_ok = true;
        for (int j = 0; j <= d && faces_ok; ++j)
          faces_ok = assign[d - 1][x.face(d, i, j)] == y.face(d, t, j);
        if (!faces_ok) continue;
      }
      std::vector<int> undo;
      if (assign_orbit(d, i, t, undo)) {
        search(order, at + 1);
      }
      for (int si : undo) assign[d][si] = -1;
    }
  }
};

}  // namespace

std::vector<GSimplicialMap> enumerate_isovariant_maps(ComplexPtr x, ComplexPtr y, long budget) {
  if (!same_group(x->group, y->group))
    throw ParentMismatch("map enumeration across different groups");
  if (x->total_size() > 0 && x->dim() > y->dim()) return {};
  MapSearch search(std::move(x), std::move(y), budget);
  search.search(all_simplices(search.x), 0);
  return std::move(search.results);
}

WeObstructionReport we_obstruction(const GSimplicialMap& f) {
  WeObstructionReport report;
  auto iso = check_isovariant(f);
  report.map_isovariant = iso.ok;
  if (!iso.ok) {
    report.fail = true;
    WeObstructionRow row;
    row.subgroup = trivial_subgroup(f.src->group);
    row.ok = false;
    row.note = "map is not isovariant (" + iso.reason + ")";
    report.rows.push_back(std::move(row));
    return report;
  }

  for (const Subgroup& h : all_subgroups(f.src->group)) {
    WeObstructionRow row;
    row.subgroup = h;
    IsotropyStratum src = exact_stratum(f.src, h);
    IsotropyStratum dst = exact_stratum(f.dst, h);
    Pi0Result sp = stratum_pi0(src), dp = stratum_pi0(dst);
    row.src_empty = src.empty();
    row.dst_empty = dst.empty();
    row.src_pi0 = sp.count;
    row.dst_pi0 = dp.count;
    if (row.src_empty != row.dst_empty) {
      row.ok = false;
      row.note = row.src_empty ? "source stratum empty, target stratum nonempty"
                               : "target stratum empty, source stratum nonempty";
    } else if (sp.count != dp.count) {
      row.ok = false;
      row.note = "component counts differ";
    } else {
      // The induced map on components must be a bijection intertwining the
      // label actions.
      std::vector<int> induced(sp.count, -1);
      bool bijective = true;
      for (SimplexId s : src.simplices) {
        int from = sp.label.at(s);
        int to = dp.label.at(f.apply(s));
        if (induced[from] == -1)
          induced[from] = to;
        else if (induced[from] != to)
          bijective = false;
      }
      std::set<int> hit;
      for (int v : induced) {
        if (v == -1) continue;
        if (!hit.insert(v).second) bijective = false;
      }
      if (static_cast<int>(hit.size()) != sp.count) bijective = false;
      if (!bijective) {
        row.ok = false;
        row.note = "induced map on components is not a bijection";
      } else {
        for (int g = 0; g < f.src->group->order && row.ok; ++g) {
          if (!sp.action[g] || !dp.action[g]) continue;
          for (int c = 0; c < sp.count; ++c)
            if ((*dp.action[g])[induced[c]] != induced[(*sp.action[g])[c]]) {
              row.ok = false;
              row.note = "induced map does not respect the action on components";
              break;
            }
        }
      }
    }
    if (!row.ok) report.fail = true;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace lcat
