#include "lcat/colimit.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace lcat {

namespace {

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

std::string chain_code(const std::vector<std::pair<int, int>>& chain) {
  std::string out;
  for (size_t i = 0; i < chain.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(chain[i].first) + std::to_string(chain[i].second);
  }
  return out;
}

}  // namespace

GSemiSimplicialSet plain_point() {
  return from_sorted_simplices(make_trivial(), 1, {{0}}, {});
}

GSemiSimplicialSet plain_interval() {
  return from_sorted_simplices(make_trivial(), 2, {{0, 1}}, {{0, 1}});
}

GSemiSimplicialSet plain_sphere(int k) {
  switch (k) {
    case -1: return empty_complex(make_trivial());
    case 0: return from_sorted_simplices(make_trivial(), 2, {{0, 1}}, {});
    case 1:
      return from_sorted_simplices(make_trivial(), 3, {{0, 1, 2}}, {{0, 1}, {0, 2}, {1, 2}});
    default: throw InvalidInput("spheres are triangulated for k <= 1 only");
  }
}

GSemiSimplicialSet plain_disk(int n) {
  switch (n) {
    case 0: return plain_point();
    case 1: return plain_interval();
    case 2:
      return from_sorted_simplices(make_trivial(), 3, {{0, 1, 2}},
                                   {{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
    default: throw InvalidInput("disks are triangulated for n <= 2 only");
  }
}

std::vector<std::vector<std::pair<int, int>>> covering_chains(int p, int q) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur{{0, 0}};
  std::function<void()> grow = [&]() {
    auto [a, b] = cur.back();
    if (a == p && b == q) {
      out.push_back(cur);
      return;
    }
    if (a < p) {
      cur.emplace_back(a + 1, b);
      grow();
      cur.pop_back();
    }
    if (b < q) {
      cur.emplace_back(a, b + 1);
      grow();
      cur.pop_back();
    }
    if (a < p && b < q) {
      cur.emplace_back(a + 1, b + 1);
      grow();
      cur.pop_back();
    }
  };
  grow();
  std::sort(out.begin(), out.end());
  return out;
}

ProductComplex product_with_plain(ComplexPtr x, const GSemiSimplicialSet& v) {
  for (int g = 0; g < v.group->order; ++g)
    for (int d = 0; d <= v.dim(); ++d)
      for (int i = 0; i < v.size(d); ++i)
        if (v.act(g, d, i) != i)
          throw InvalidInput("product factor must carry the trivial action");

  ProductComplex prod;
  GSemiSimplicialSet out;
  out.group = x->group;
  if (x->total_size() == 0 || v.total_size() == 0) {
    out.action.assign(out.group->order, {});
    prod.complex = share(std::move(out));
    return prod;
  }
  const int max_dim = x->dim() + v.dim();
  out.names.resize(max_dim + 1);
  out.faces.resize(max_dim + 1);
  prod.keys.resize(max_dim + 1);

  for (SimplexId sx : all_simplices(*x))
    for (SimplexId sv : all_simplices(v))
      for (const auto& chain : covering_chains(sx.dim, sv.dim)) {
        const int d = static_cast<int>(chain.size()) - 1;
        ProductKey key{sx, sv, chain};
        SimplexId id{d, static_cast<int>(prod.keys[d].size())};
        prod.index[key] = id;
        prod.keys[d].push_back(key);
        out.names[d].push_back(x->name(sx) + "*" + v.name(sv) + "@" + chain_code(chain));
        out.faces[d].push_back({});
      }

  // Face of a product simplex: drop a chain point; whenever that uncovers a
  // grid line, take the matching face of that factor and renumber.
  for (int d = 1; d <= max_dim; ++d) {
    for (size_t i = 0; i < prod.keys[d].size(); ++i) {
      const ProductKey& key = prod.keys[d][i];
      auto& fs = out.faces[d][i];
      fs.resize(d + 1);
      for (int drop = 0; drop <= d; ++drop) {
        std::vector<std::pair<int, int>> sub;
        for (int t = 0; t <= d; ++t)
          if (t != drop) sub.push_back(key.chain[t]);
        const int a_gone = key.chain[drop].first;
        const int b_gone = key.chain[drop].second;
        bool a_covered = false, b_covered = false;
        for (const auto& [a, b] : sub) {
          a_covered |= a == a_gone;
          b_covered |= b == b_gone;
        }
        SimplexId nx = key.x;
        if (!a_covered) {
          nx = SimplexId{nx.dim - 1, x->face(nx.dim, nx.idx, a_gone)};
          for (auto& [a, b] : sub)
            if (a > a_gone) --a;
        }
        SimplexId nv = key.v;
        if (!b_covered) {
          nv = SimplexId{nv.dim - 1, v.face(nv.dim, nv.idx, b_gone)};
          for (auto& [a, b] : sub)
            if (b > b_gone) --b;
        }
        fs[drop] = prod.index.at(ProductKey{nx, nv, sub}).idx;
      }
    }
  }

  out.action.assign(out.group->order, std::vector<std::vector<int>>(max_dim + 1));
  for (int g = 0; g < out.group->order; ++g)
    for (int d = 0; d <= max_dim; ++d) {
      out.action[g][d].resize(prod.keys[d].size());
      for (size_t i = 0; i < prod.keys[d].size(); ++i) {
        const ProductKey& key = prod.keys[d][i];
        ProductKey img{SimplexId{key.x.dim, x->act(g, key.x.dim, key.x.idx)}, key.v, key.chain};
        out.action[g][d][i] = prod.index.at(img).idx;
      }
    }

  validate_complex(out);
  prod.complex = share(std::move(out));
  return prod;
}

GSimplicialMap product_map_plain(const ProductComplex& src, const ProductComplex& dst,
                                 const GSimplicialMap& plain_map) {
  GSimplicialMap out;
  out.src = src.complex;
  out.dst = dst.complex;
  out.assignment.resize(src.complex->dim() + 1);
  for (int d = 0; d <= src.complex->dim(); ++d) {
    out.assignment[d].resize(src.complex->size(d));
    for (int i = 0; i < src.complex->size(d); ++i) {
      const ProductKey& key = src.keys[d][i];
      ProductKey img{key.x, plain_map.apply(key.v), key.chain};
      out.assignment[d][i] = dst.index.at(img).idx;
    }
  }
  validate_map(out);
  return out;
}

DisjointUnion disjoint_union(const std::vector<ComplexPtr>& parts) {
  if (parts.empty()) throw InvalidInput("disjoint union of nothing");
  const GroupPtr g = parts.front()->group;
  int max_dim = -1;
  for (const auto& p : parts) {
    if (!same_group(p->group, g)) throw ParentMismatch("disjoint union across groups");
    max_dim = std::max(max_dim, p->dim());
  }

  GSemiSimplicialSet out;
  out.group = g;
  out.names.resize(max_dim + 1);
  out.faces.resize(max_dim + 1);
  std::vector<std::vector<int>> offsets(parts.size(), std::vector<int>(max_dim + 1, 0));
  for (size_t k = 0; k < parts.size(); ++k) {
    const GSemiSimplicialSet& p = *parts[k];
    for (int d = 0; d <= p.dim(); ++d) {
      offsets[k][d] = static_cast<int>(out.names[d].size());
      for (int i = 0; i < p.size(d); ++i) {
        out.names[d].push_back("u" + std::to_string(k) + ":" + p.names[d][i]);
        if (d == 0) {
          out.faces[d].push_back({});
        } else {
          std::vector<int> fs(d + 1);
          for (int j = 0; j <= d; ++j) fs[j] = p.face(d, i, j) + offsets[k][d - 1];
          out.faces[d].push_back(std::move(fs));
        }
      }
    }
  }

  out.action.assign(g->order, std::vector<std::vector<int>>(max_dim + 1));
  for (int a = 0; a < g->order; ++a)
    for (int d = 0; d <= max_dim; ++d) {
      out.action[a][d].resize(out.names[d].size());
      for (size_t k = 0; k < parts.size(); ++k)
        for (int i = 0; i < parts[k]->size(d); ++i)
          out.action[a][d][offsets[k][d] + i] = parts[k]->act(a, d, i) + offsets[k][d];
    }
  validate_complex(out);

  DisjointUnion du;
  du.complex = share(std::move(out));
  for (size_t k = 0; k < parts.size(); ++k) {
    GSimplicialMap emb;
    emb.src = parts[k];
    emb.dst = du.complex;
    emb.assignment.resize(parts[k]->dim() + 1);
    for (int d = 0; d <= parts[k]->dim(); ++d) {
      emb.assignment[d].resize(parts[k]->size(d));
      for (int i = 0; i < parts[k]->size(d); ++i) emb.assignment[d][i] = offsets[k][d] + i;
    }
    validate_map(emb);
    du.embeddings.push_back(std::move(emb));
  }
  return du;
}

QuotientResult quotient_complex(ComplexPtr total,
                                const std::vector<std::pair<SimplexId, SimplexId>>& relations) {
  const GSemiSimplicialSet& x = *total;
  const int levels = x.dim() + 1;
  std::vector<UnionFind> uf;
  uf.reserve(levels);
  for (int d = 0; d < levels; ++d) uf.emplace_back(x.size(d));

  // Saturate the generated relation under faces and the action.
  std::vector<std::pair<SimplexId, SimplexId>> todo(relations.begin(), relations.end());
  while (!todo.empty()) {
    auto [s, t] = todo.back();
    todo.pop_back();
    if (s.dim != t.dim) throw Error("relation identifies simplices of different dimensions");
    if (!uf[s.dim].unite(s.idx, t.idx)) continue;
    if (s.dim > 0)
      for (int j = 0; j <= s.dim; ++j)
        todo.push_back({SimplexId{s.dim - 1, x.face(s.dim, s.idx, j)},
                        SimplexId{s.dim - 1, x.face(s.dim, t.idx, j)}});
    for (int g = 0; g < x.group->order; ++g)
      todo.push_back({SimplexId{s.dim, x.act(g, s.dim, s.idx)},
                      SimplexId{s.dim, x.act(g, s.dim, t.idx)}});
  }

  QuotientResult out;
  out.class_of.resize(levels);
  GSemiSimplicialSet q;
  q.group = x.group;
  q.names.resize(levels);
  q.faces.resize(levels);
  std::vector<std::vector<int>> rep(levels);  // class -> representative input idx
  for (int d = 0; d < levels; ++d) {
    out.class_of[d].assign(x.size(d), -1);
    for (int i = 0; i < x.size(d); ++i) {
      int root = uf[d].find(i);
      if (out.class_of[d][root] == -1) {
        out.class_of[d][root] = static_cast<int>(q.names[d].size());
        q.names[d].push_back(x.names[d][root]);
        rep[d].push_back(root);
        q.faces[d].push_back({});
      }
      out.class_of[d][i] = out.class_of[d][root];
    }
  }

  for (int d = 1; d < levels; ++d)
    for (size_t c = 0; c < rep[d].size(); ++c) {
      std::vector<int> fs(d + 1);
      for (int j = 0; j <= d; ++j) fs[j] = out.class_of[d - 1][x.face(d, rep[d][c], j)];
      q.faces[d][c] = std::move(fs);
    }

  q.action.assign(x.group->order, std::vector<std::vector<int>>(levels));
  for (int g = 0; g < x.group->order; ++g)
    for (int d = 0; d < levels; ++d) {
      q.action[g][d].resize(rep[d].size());
      for (size_t c = 0; c < rep[d].size(); ++c)
        q.action[g][d][c] = out.class_of[d][x.act(g, d, rep[d][c])];
    }

  validate_complex(q);
  out.complex = share(std::move(q));
  return out;
}

namespace {

GSimplicialMap compose_with_classes(const GSimplicialMap& emb, const QuotientResult& q) {
  GSimplicialMap out;
  out.src = emb.src;
  out.dst = q.complex;
  out.assignment.resize(emb.assignment.size());
  for (size_t d = 0; d < emb.assignment.size(); ++d) {
    out.assignment[d].resize(emb.assignment[d].size());
    for (size_t i = 0; i < emb.assignment[d].size(); ++i)
      out.assignment[d][i] = q.class_of[d][emb.assignment[d][i]];
  }
  validate_map(out);
  return out;
}

void check_pushout_legs(const PushoutData& d) {
  if (d.f.src != d.a || d.f.dst != d.b || d.g.src != d.a || d.g.dst != d.c)
    throw InvalidInput("pushout legs must run A -> B and A -> C over the given complexes");
  validate_map(d.f);
  validate_map(d.g);
  if (d.allow_equivariant_only) {
    if (!check_equivariant(d.f) || !check_equivariant(d.g))
      throw NotIsovariantAttachment("pushout legs must at least be equivariant");
  } else {
    if (!check_isovariant(d.f).ok || !check_isovariant(d.g).ok)
      throw NotIsovariantAttachment("pushout legs must be isovariant");
  }
}

}  // namespace

PushoutResult pushout(const PushoutData& d) {
  check_pushout_legs(d);
  DisjointUnion du = disjoint_union({d.b, d.c});
  std::vector<std::pair<SimplexId, SimplexId>> rel;
  for (SimplexId s : all_simplices(*d.a))
    rel.emplace_back(du.embeddings[0].apply(d.f.apply(s)),
                     du.embeddings[1].apply(d.g.apply(s)));
  QuotientResult q = quotient_complex(du.complex, rel);
  return PushoutResult{q.complex, compose_with_classes(du.embeddings[0], q),
                       compose_with_classes(du.embeddings[1], q)};
}

std::optional<GSimplicialMap> pushout_mediating(const PushoutResult& p, const GSimplicialMap& u,
                                                const GSimplicialMap& v) {
  if (u.src != p.from_b.src || v.src != p.from_c.src || u.dst != v.dst) return std::nullopt;
  const GSemiSimplicialSet& q = *p.complex;
  GSimplicialMap out;
  out.src = p.complex;
  out.dst = u.dst;
  out.assignment.assign(q.dim() + 1, {});
  for (int d = 0; d <= q.dim(); ++d) out.assignment[d].assign(q.size(d), -1);

  auto feed = [&](const GSimplicialMap& into_p, const GSimplicialMap& cocone) {
    for (int d = 0; d < static_cast<int>(into_p.assignment.size()); ++d)
      for (size_t i = 0; i < into_p.assignment[d].size(); ++i) {
        int cls = into_p.assignment[d][i];
        int val = cocone.assignment[d][i];
        if (out.assignment[d][cls] == -1)
          out.assignment[d][cls] = val;
        else if (out.assignment[d][cls] != val)
          throw Error("inconsistent cocone");
      }
  };
  try {
    feed(p.from_b, u);
    feed(p.from_c, v);
    for (int d = 0; d <= q.dim(); ++d)
      for (int i = 0; i < q.size(d); ++i)
        if (out.assignment[d][i] == -1) throw Error("pushout class not covered");
    validate_map(out);
  } catch (const Error&) {
    return std::nullopt;
  }
  return out;
}

CylinderParts cylinder(ComplexPtr a) {
  CylinderParts parts;
  GSemiSimplicialSet interval = plain_interval();
  parts.product = product_with_plain(a, interval);

  auto copy_at = [&](int vertex) {
    GSimplicialMap f;
    f.src = a;
    f.dst = parts.product.complex;
    f.assignment.resize(a->dim() + 1);
    for (int d = 0; d <= a->dim(); ++d) {
      f.assignment[d].resize(a->size(d));
      for (int i = 0; i < a->size(d); ++i) {
        std::vector<std::pair<int, int>> chain;
        for (int t = 0; t <= d; ++t) chain.emplace_back(t, 0);
        f.assignment[d][i] =
            parts.product.index.at(ProductKey{SimplexId{d, i}, SimplexId{0, vertex}, chain})
                .idx;
      }
    }
    validate_map(f);
    return f;
  };
  if (a->total_size() > 0) {
    parts.bottom = copy_at(0);
    parts.top = copy_at(1);
  } else {
    parts.bottom = GSimplicialMap{a, parts.product.complex, {}};
    parts.top = parts.bottom;
  }
  return parts;
}

CylinderSpace double_mapping_cylinder(const PushoutData& d) {
  check_pushout_legs(d);
  CylinderParts cyl = cylinder(d.a);
  DisjointUnion du = disjoint_union({cyl.product.complex, d.b, d.c});
  std::vector<std::pair<SimplexId, SimplexId>> rel;
  for (SimplexId s : all_simplices(*d.a)) {
    rel.emplace_back(du.embeddings[0].apply(cyl.bottom.apply(s)),
                     du.embeddings[1].apply(d.f.apply(s)));
    rel.emplace_back(du.embeddings[0].apply(cyl.top.apply(s)),
                     du.embeddings[2].apply(d.g.apply(s)));
  }
  QuotientResult q = quotient_complex(du.complex, rel);

  CylinderSpace out;
  out.complex = q.complex;
  out.from_b = compose_with_classes(du.embeddings[1], q);
  out.from_c = compose_with_classes(du.embeddings[2], q);

  const GSemiSimplicialSet& hc = *q.complex;
  out.cylinder_coordinate.resize(hc.dim() + 1);
  out.open_cylinder.resize(hc.dim() + 1);
  for (int dd = 0; dd <= hc.dim(); ++dd) {
    out.cylinder_coordinate[dd].assign(hc.size(dd), {Rational(1), Rational(0)});
    out.open_cylinder[dd].assign(hc.size(dd), false);
  }
  auto widen = [&](SimplexId cls, Rational lo, Rational hi) {
    auto& span = out.cylinder_coordinate[cls.dim][cls.idx];
    if (span.first > span.second) {
      span = {lo, hi};
    } else {
      span.first = std::min(span.first, lo);
      span.second = std::max(span.second, hi);
    }
  };
  // Cylinder part.
  for (int dd = 0; dd <= cyl.product.complex->dim(); ++dd)
    for (int i = 0; i < cyl.product.complex->size(dd); ++i) {
      SimplexId cls{dd, q.class_of[dd][du.embeddings[0].assignment[dd][i]]};
      const ProductKey& key = cyl.product.keys[dd][i];
      if (key.v.dim == 1) {
        widen(cls, Rational(0), Rational(1));
        out.open_cylinder[cls.dim][cls.idx] = true;
      } else {
        Rational at(key.v.idx);
        widen(cls, at, at);
      }
    }
  // B and C ends.
  for (int dd = 0; dd <= d.b->dim(); ++dd)
    for (int i = 0; i < d.b->size(dd); ++i)
      widen(SimplexId{dd, q.class_of[dd][du.embeddings[1].assignment[dd][i]]}, Rational(0),
            Rational(0));
  for (int dd = 0; dd <= d.c->dim(); ++dd)
    for (int i = 0; i < d.c->size(dd); ++i)
      widen(SimplexId{dd, q.class_of[dd][du.embeddings[2].assignment[dd][i]]}, Rational(1),
            Rational(1));
  return out;
}

bool cylinder_collapses_to_pushout(const PushoutData& d, const CylinderSpace& cyl,
                                   const PushoutResult& push) {
  // Rebuild the collapse at the class level: every cylinder class maps to the
  // pushout class of its A-, B- or C-part origin.
  const GSemiSimplicialSet& hc = *cyl.complex;
  std::vector<std::vector<std::optional<SimplexId>>> to(hc.dim() + 1);
  for (int dd = 0; dd <= hc.dim(); ++dd) to[dd].assign(hc.size(dd), std::nullopt);

  auto put = [&](SimplexId cls, SimplexId val) {
    auto& slot = to[cls.dim][cls.idx];
    if (!slot) {
      slot = val;
      return true;
    }
    return *slot == val;
  };

  bool ok = true;
  for (int dd = 0; dd <= d.b->dim() && ok; ++dd)
    for (int i = 0; i < d.b->size(dd) && ok; ++i)
      ok = put(cyl.from_b.apply(SimplexId{dd, i}), push.from_b.apply(SimplexId{dd, i}));
  for (int dd = 0; dd <= d.c->dim() && ok; ++dd)
    for (int i = 0; i < d.c->size(dd) && ok; ++i)
      ok = put(cyl.from_c.apply(SimplexId{dd, i}), push.from_c.apply(SimplexId{dd, i}));
  if (!ok) return false;

  // Open-cylinder classes collapse onto the image of their A-simplex. The
  // cylinder and quotient are deterministic, so rebuilding recovers the
  // class decomposition of cyl.complex.
  CylinderParts parts = cylinder(d.a);
  DisjointUnion du = disjoint_union({parts.product.complex, d.b, d.c});
  std::vector<std::pair<SimplexId, SimplexId>> rel;
  for (SimplexId s : all_simplices(*d.a)) {
    rel.emplace_back(du.embeddings[0].apply(parts.bottom.apply(s)),
                     du.embeddings[1].apply(d.f.apply(s)));
    rel.emplace_back(du.embeddings[0].apply(parts.top.apply(s)),
                     du.embeddings[2].apply(d.g.apply(s)));
  }
  QuotientResult q = quotient_complex(du.complex, rel);
  if (q.complex->names != hc.names) return false;
  for (int dd = 0; dd <= parts.product.complex->dim() && ok; ++dd)
    for (int i = 0; i < parts.product.complex->size(dd) && ok; ++i) {
      const ProductKey& key = parts.product.keys[dd][i];
      SimplexId cls{dd, q.class_of[dd][du.embeddings[0].assignment[dd][i]]};
      SimplexId target = push.from_b.apply(d.f.apply(key.x));
      ok = put(cls, target);
    }
  if (!ok) return false;

  // Total, surjective, equivariant, and faces map to iterated faces or self.
  std::set<SimplexId> image;
  for (int dd = 0; dd <= hc.dim(); ++dd)
    for (int i = 0; i < hc.size(dd); ++i) {
      if (!to[dd][i]) return false;
      image.insert(*to[dd][i]);
    }
  if (static_cast<long>(image.size()) != push.complex->total_size()) return false;

  for (int g = 0; g < hc.group->order; ++g)
    for (int dd = 0; dd <= hc.dim(); ++dd)
      for (int i = 0; i < hc.size(dd); ++i) {
        SimplexId moved = *to[dd][hc.act(g, dd, i)];
        SimplexId expect = *to[dd][i];
        expect.idx = push.complex->act(g, expect.dim, expect.idx);
        if (!(moved == expect)) return false;
      }

  for (int dd = 1; dd <= hc.dim(); ++dd)
    for (int i = 0; i < hc.size(dd); ++i) {
      SimplexId target = *to[dd][i];
      auto closure = iterated_faces(*push.complex, target);
      closure.insert(target);
      for (int j = 0; j <= dd; ++j) {
        SimplexId face_target = *to[dd - 1][hc.face(dd, i, j)];
        if (!closure.count(face_target)) return false;
      }
    }
  return true;
}

TelescopeResult mapping_telescope(const std::vector<GSimplicialMap>& maps) {
  if (maps.empty()) throw InvalidInput("telescope needs at least one map");
  for (size_t i = 0; i + 1 < maps.size(); ++i)
    if (maps[i].dst != maps[i + 1].src)
      throw InvalidInput("telescope maps must be composable");

  std::vector<CylinderParts> cyls;
  std::vector<ComplexPtr> parts;
  for (const auto& f : maps) {
    cyls.push_back(cylinder(f.src));
    parts.push_back(cyls.back().product.complex);
  }
  parts.push_back(maps.back().dst);

  DisjointUnion du = disjoint_union(parts);
  std::vector<std::pair<SimplexId, SimplexId>> rel;
  for (size_t i = 0; i < maps.size(); ++i) {
    for (SimplexId s : all_simplices(*maps[i].src)) {
      SimplexId top_here = du.embeddings[i].apply(cyls[i].top.apply(s));
      SimplexId image = maps[i].apply(s);
      SimplexId glued = i + 1 < maps.size()
                            ? du.embeddings[i + 1].apply(cyls[i + 1].bottom.apply(image))
                            : du.embeddings.back().apply(image);
      rel.emplace_back(top_here, glued);
    }
  }
  QuotientResult q = quotient_complex(du.complex, rel);

  TelescopeResult out;
  out.complex = q.complex;
  GSimplicialMap first;
  first.src = maps.front().src;
  first.dst = q.complex;
  first.assignment.resize(first.src->dim() + 1);
  for (int d = 0; d <= first.src->dim(); ++d) {
    first.assignment[d].resize(first.src->size(d));
    for (int i = 0; i < first.src->size(d); ++i) {
      SimplexId in_du = du.embeddings[0].apply(cyls[0].bottom.apply(SimplexId{d, i}));
      first.assignment[d][i] = q.class_of[d][in_du.idx];
    }
  }
  validate_map(first);
  out.from_first = std::move(first);
  return out;
}

ProductComplex attachment_source(const SubgroupChain& chain, int n) {
  LinkingRealization real = to_semisimplicial(chain);
  return product_with_plain(real.complex, plain_sphere(n - 1));
}

PushoutResult attach_cell(ComplexPtr x, const SubgroupChain& chain, int n,
                          const GSimplicialMap& attaching) {
  if (n < 0 || n > 2) throw InvalidInput("cells are triangulated for n <= 2 only");
  ProductComplex canonical = attachment_source(chain, n);
  if (attaching.src->names != canonical.complex->names ||
      attaching.src->faces != canonical.complex->faces ||
      attaching.src->action != canonical.complex->action)
    throw InvalidInput("attaching map must start from attachment_source(chain, n)");
  if (attaching.dst != x) throw InvalidInput("attaching map must land in the given complex");
  validate_map(attaching);
  if (!check_isovariant(attaching).ok)
    throw NotIsovariantAttachment("attaching map is not isovariant");

  LinkingRealization real = to_semisimplicial(chain);
  GSemiSimplicialSet sphere = plain_sphere(n - 1);
  GSemiSimplicialSet disk = plain_disk(n);
  ProductComplex disk_prod = product_with_plain(real.complex, disk);

  // Sphere simplices sit inside the disk with the same names.
  std::map<std::string, SimplexId> disk_by_name;
  for (SimplexId s : all_simplices(disk)) disk_by_name[disk.name(s)] = s;

  GSimplicialMap include;
  include.src = attaching.src;
  include.dst = disk_prod.complex;
  include.assignment.resize(attaching.src->dim() + 1);
  for (int d = 0; d <= attaching.src->dim(); ++d) {
    include.assignment[d].resize(attaching.src->size(d));
    for (int i = 0; i < attaching.src->size(d); ++i) {
      const ProductKey& key = canonical.keys[d][i];
      ProductKey img{key.x, disk_by_name.at(sphere.name(key.v)), key.chain};
      include.assignment[d][i] = disk_prod.index.at(img).idx;
    }
  }
  validate_map(include);

  PushoutData pd{attaching.src, x, disk_prod.complex, attaching, include, false};
  return pushout(pd);
}

GSemiSimplicialSet flip_disk() {
  GroupPtr c2 = make_cyclic(2);
  auto subs = all_subgroups(c2);
  SubgroupChain link = make_chain({subs[0], subs[1]});

  ComplexPtr x = share(empty_complex(c2));
  for (int copy = 0; copy < 2; ++copy) {
    ProductComplex src = attachment_source(link, 0);  // empty boundary
    GSimplicialMap attaching{src.complex, x, {}};
    x = attach_cell(x, link, 0, attaching).complex;
  }

  // After two disjoint attachments the arcs occupy [0, sz) and [sz, 2 sz)
  // in every level.
  LinkingRealization real = to_semisimplicial(link);
  ProductComplex bd = attachment_source(link, 1);
  GSimplicialMap attaching;
  attaching.src = bd.complex;
  attaching.dst = x;
  attaching.assignment.resize(bd.complex->dim() + 1);
  for (int d = 0; d <= bd.complex->dim(); ++d) {
    attaching.assignment[d].resize(bd.complex->size(d));
    for (int i = 0; i < bd.complex->size(d); ++i) {
      const ProductKey& key = bd.keys[d][i];
      int offset = key.v.idx == 0 ? 0 : real.complex->size(d);
      attaching.assignment[d][i] = offset + key.x.idx;
    }
  }
  validate_map(attaching);
  return *attach_cell(x, link, 1, attaching).complex;
}

int complex_pi0_count(const GSemiSimplicialSet& x) {
  std::vector<int> level_offset(x.dim() + 2, 0);
  for (int d = 0; d <= x.dim(); ++d) level_offset[d + 1] = level_offset[d] + x.size(d);
  if (level_offset.back() == 0) return 0;
  UnionFind uf(level_offset.back());
  for (int d = 1; d <= x.dim(); ++d)
    for (int i = 0; i < x.size(d); ++i)
      for (int j = 0; j <= d; ++j)
        uf.unite(level_offset[d] + i, level_offset[d - 1] + x.face(d, i, j));
  std::set<int> roots;
  for (int v = 0; v < level_offset.back(); ++v) roots.insert(uf.find(v));
  return static_cast<int>(roots.size());
}

namespace {

struct IsoSearch {
  ComplexPtr xp, yp;
  const GSemiSimplicialSet& x;
  const GSemiSimplicialSet& y;
  long budget;
  long nodes = 0;
  std::vector<std::vector<Subgroup>> x_stab, y_stab;
  std::vector<std::vector<int>> assign;
  std::vector<std::vector<int>> target_used;
  std::optional<GSimplicialMap> witness;

  IsoSearch(ComplexPtr xp_, ComplexPtr yp_, long budget_)
      : xp(std::move(xp_)), yp(std::move(yp_)), x(*xp), y(*yp), budget(budget_) {
    x_stab.resize(x.dim() + 1);
    for (int d = 0; d <= x.dim(); ++d)
      for (int i = 0; i < x.size(d); ++i) x_stab[d].push_back(simplex_stabilizer(x, {d, i}));
    y_stab.resize(y.dim() + 1);
    for (int d = 0; d <= y.dim(); ++d)
      for (int i = 0; i < y.size(d); ++i) y_stab[d].push_back(simplex_stabilizer(y, {d, i}));
    assign.resize(x.dim() + 1);
    target_used.resize(x.dim() + 1);
    for (int d = 0; d <= x.dim(); ++d) {
      assign[d].assign(x.size(d), -1);
      target_used[d].assign(y.size(d), -1);
    }
  }

  bool assign_orbit(int d, int i, int t, std::vector<int>& undo) {
    for (int g = 0; g < x.group->order; ++g) {
      int si = x.act(g, d, i);
      int ti = y.act(g, d, t);
      if (assign[d][si] == -1) {
        if (target_used[d][ti] != -1) return false;
        assign[d][si] = ti;
        target_used[d][ti] = si;
        undo.push_back(si);
      } else if (assign[d][si] != ti) {
        return false;
      }
    }
    return true;
  }

  bool search(const std::vector<SimplexId>& order, size_t at) {
    if (at == order.size()) {
      GSimplicialMap f{xp, yp, assign};
      validate_map(f);
      if (!check_equivariant(f)) return false;
      witness = std::move(f);
      return true;
    }
    auto [d, i] = order[at];
    if (assign[d][i] != -1) return search(order, at + 1);
    for (int t = 0; t < y.size(d); ++t) {
      if (++nodes > budget) throw SearchBudgetExceeded("isomorphism search budget exhausted");
      if (target_used[d][t] != -1) continue;
      if (!(x_stab[d][i] == y_stab[d][t])) continue;
      if (d > 0) {
        bool faces_ok = true;
        for (int j = 0; j <= d && faces_ok; ++j)
          faces_ok = assign[d - 1][x.face(d, i, j)] == y.face(d, t, j);
        if (!faces_ok) continue;
      }
      std::vector<int> undo;
      bool consistent = assign_orbit(d, i, t, undo);
      if (consistent && search(order, at + 1)) return true;
      for (int si : undo) {
        target_used[d][assign[d][si]] = -1;
        assign[d][si] = -1;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<GSimplicialMap> g_isomorphic(ComplexPtr x, ComplexPtr y, long budget) {
  if (!same_group(x->group, y->group)) return std::nullopt;
  if (x->dim() != y->dim()) return std::nullopt;
  for (int d = 0; d <= x->dim(); ++d)
    if (x->size(d) != y->size(d)) return std::nullopt;

  for (int d = 0; d <= x->dim(); ++d) {
    std::multiset<std::vector<int>> sx, sy;
    for (int i = 0; i < x->size(d); ++i) sx.insert(simplex_stabilizer(*x, {d, i}).elements);
    for (int i = 0; i < y->size(d); ++i) sy.insert(simplex_stabilizer(*y, {d, i}).elements);
    if (sx != sy) return std::nullopt;
  }

  IsoSearch search(std::move(x), std::move(y), budget);
  search.search(all_simplices(search.x), 0);
  return search.witness;
}

GeneratingSetListing generating_sets(const GroupPtr& g, int n_max) {
  GeneratingSetListing out;
  if (n_max < 0) return out;
  auto subs = all_subgroups(g);
  for (const SubgroupChain& chain : enumerate_chains(g)) {
    std::string label = chain_label(chain, subs);
    for (int n = 0; n <= n_max; ++n) {
      GeneratingCell cell;
      cell.chain = chain;
      cell.n = n;
      cell.name = "D[" + label + "] x (S^" + std::to_string(n - 1) + " -> D^" +
                  std::to_string(n) + ")";
      if (n <= 2) {
        cell.source = attachment_source(chain, n);
        LinkingRealization real = to_semisimplicial(chain);
        cell.target = product_with_plain(real.complex, plain_disk(n));
      }
      out.cofibrations.push_back(std::move(cell));
      out.acyclic_cofibration_names.push_back("D[" + label + "] x D^" + std::to_string(n) +
                                              " x ({0} -> [0,1])");
    }
  }
  return out;
}

namespace {

// One side (B or C) of a random pushout: a disjoint union of linking-simplex
// realizations receiving each A piece through a random link morphism.
struct RandomSide {
  ComplexPtr total;
  GSimplicialMap leg;
};

RandomSide random_side(ComplexPtr a_total, const DisjointUnion& a_union,
                       const std::vector<int>& a_chains,
                       const std::vector<LinkingRealization>& reals,
                       const LinkOrbitCategory& cat, std::mt19937_64& rng) {
  const int nobj = static_cast<int>(cat.objects.size());
  std::vector<int> target_of(a_chains.size());
  std::vector<const LinkMorphism*> morph_of(a_chains.size());
  for (size_t p = 0; p < a_chains.size(); ++p) {
    std::vector<std::pair<int, const LinkMorphism*>> options;
    for (int t = 0; t < nobj; ++t)
      for (const LinkMorphism& m : cat.homs[a_chains[p]][t]) options.emplace_back(t, &m);
    auto [t, m] = options[rng() % options.size()];
    target_of[p] = t;
    morph_of[p] = m;
  }

  // Pieces with the same target may share one copy, which makes the legs
  // genuinely non-injective in some trials.
  std::vector<int> slots;
  std::vector<int> slot_of(a_chains.size());
  bool merge = rng() % 2 == 0;
  for (size_t p = 0; p < a_chains.size(); ++p) {
    int found = -1;
    if (merge)
      for (size_t s = 0; s < slots.size(); ++s)
        if (slots[s] == target_of[p]) found = static_cast<int>(s);
    if (found == -1) {
      found = static_cast<int>(slots.size());
      slots.push_back(target_of[p]);
    }
    slot_of[p] = found;
  }
  if (rng() % 2 == 0) slots.push_back(static_cast<int>(rng() % nobj));  // spare piece

  std::vector<ComplexPtr> parts;
  for (int s : slots) parts.push_back(reals[s].complex);
  DisjointUnion side = disjoint_union(parts);

  GSimplicialMap leg;
  leg.src = a_total;
  leg.dst = side.complex;
  leg.assignment.resize(a_total->dim() + 1);
  for (int d = 0; d <= a_total->dim(); ++d) leg.assignment[d].assign(a_total->size(d), -1);
  for (size_t p = 0; p < a_chains.size(); ++p) {
    GSimplicialMap realized =
        realize_morphism(*morph_of[p], reals[a_chains[p]], reals[target_of[p]]);
    const GSimplicialMap& emb_a = a_union.embeddings[p];
    const GSimplicialMap& emb_b = side.embeddings[slot_of[p]];
    for (int d = 0; d < static_cast<int>(realized.assignment.size()); ++d)
      for (size_t i = 0; i < realized.assignment[d].size(); ++i)
        leg.assignment[d][emb_a.assignment[d][i]] =
            emb_b.assignment[d][realized.assignment[d][i]];
  }
  validate_map(leg);
  return RandomSide{side.complex, std::move(leg)};
}

}  // namespace

HocolimReport hocolim_pi0_property_test(std::uint64_t seed, int trials, const GroupPtr& g) {
  HocolimReport report;
  LinkOrbitCategory cat = build_link_orbit_category(g);
  std::vector<LinkingRealization> reals;
  for (const auto& chain : cat.objects) reals.push_back(to_semisimplicial(chain));
  auto subgroups = all_subgroups(g);

  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial) * 0x9e3779b97f4a7c15ull);
    const int pieces = 1 + static_cast<int>(rng() % 2);
    std::vector<int> a_chains;
    std::vector<ComplexPtr> a_parts;
    for (int p = 0; p < pieces; ++p) {
      int c = static_cast<int>(rng() % cat.objects.size());
      a_chains.push_back(c);
      a_parts.push_back(reals[c].complex);
    }
    DisjointUnion a_union = disjoint_union(a_parts);
    RandomSide b = random_side(a_union.complex, a_union, a_chains, reals, cat, rng);
    RandomSide c = random_side(a_union.complex, a_union, a_chains, reals, cat, rng);

    PushoutData data{a_union.complex, b.total, c.total, b.leg, c.leg, false};
    CylinderSpace hc = double_mapping_cylinder(data);

    bool all_match = true;
    for (const Subgroup& h : subgroups) {
      int built = stratum_pi0(exact_stratum(hc.complex, h)).count;

      // Double mapping cylinder of the strata, as component sets glued by
      // the component maps of f and g.
      IsotropyStratum sa = exact_stratum(a_union.complex, h);
      IsotropyStratum sb = exact_stratum(b.total, h);
      IsotropyStratum sc = exact_stratum(c.total, h);
      Pi0Result pa = stratum_pi0(sa), pb = stratum_pi0(sb), pc = stratum_pi0(sc);
      UnionFind uf(pa.count + pb.count + pc.count);
      for (SimplexId s : sa.simplices) {
        uf.unite(pa.label.at(s), pa.count + pb.label.at(b.leg.apply(s)));
        uf.unite(pa.label.at(s), pa.count + pb.count + pc.label.at(c.leg.apply(s)));
      }
      std::set<int> roots;
      for (int v = 0; v < pa.count + pb.count + pc.count; ++v) roots.insert(uf.find(v));
      int abstract_count = static_cast<int>(roots.size());

      if (built != abstract_count) {
        all_match = false;
        if (report.failures.size() < 10)
          report.failures.push_back("trial " + std::to_string(trial) +
                                    ", subgroup of order " + std::to_string(h.order()) + ": " +
                                    std::to_string(built) + " vs " +
                                    std::to_string(abstract_count));
      }
    }
    ++report.trials;
    if (all_match) ++report.agreements;
  }
  report.pass = report.agreements == report.trials;
  return report;
}

}  // namespace lcat
