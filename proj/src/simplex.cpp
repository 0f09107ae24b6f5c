#include "lcat/simplex.hpp"

#include <algorithm>
#include <map>

namespace lcat {

int stratum_index(const std::vector<Rational>& coords) {
  const int n = static_cast<int>(coords.size()) - 1;
  for (int i = n; i >= 0; --i)
    if (coords[i] != 0) return n - i;
  return 0;  // unreachable for barycentric input
}

SimplexPoint canonicalize(const SimplexPoint& p) {
  const int n = p.chain.length();
  if (static_cast<int>(p.coords.size()) != n + 1)
    throw BadCoordinates("coordinate count does not match the chain length");
  if (!is_barycentric(p.coords))
    throw BadCoordinates("coordinates must be nonnegative and sum to 1");
  if (p.g < 0 || p.g >= p.chain.group()->order)
    throw BadCoordinates("group coordinate out of range");
  const int k = stratum_index(p.coords);
  SimplexPoint out = p;
  out.g = make_coset(p.g, p.chain.at(k)).representative;
  return out;
}

SimplexPoint act(int a, const SimplexPoint& p) {
  SimplexPoint out = p;
  out.g = p.chain.group()->mul(a, p.g);
  return canonicalize(out);
}

Subgroup stabilizer(const SimplexPoint& p) {
  SimplexPoint c = canonicalize(p);
  return conjugate_subgroup(c.g, c.chain.at(stratum_index(c.coords)));
}

std::vector<Rational> iota_star(const std::vector<int>& iota, int m,
                                const std::vector<Rational>& t) {
  const int n = static_cast<int>(t.size()) - 1;
  if (static_cast<int>(iota.size()) != n + 1)
    throw BadInclusion("inclusion arity does not match the coordinate count");
  for (size_t j = 0; j < iota.size(); ++j) {
    if (iota[j] < 0 || iota[j] > m) throw BadInclusion("inclusion value out of range");
    if (j > 0 && iota[j] <= iota[j - 1])
      throw BadInclusion("inclusion is not strictly increasing");
  }
  std::vector<Rational> s(m + 1, Rational(0));
  for (int k = 0; k <= n; ++k) s[m - iota[k]] = t[n - k];
  return s;
}

SimplexPoint induced_map(const LinkMorphism& m, const SimplexPoint& p) {
  if (!(p.chain == m.src)) throw ChainMismatch("point does not live in the morphism's source");
  SimplexPoint out;
  out.chain = m.dst;
  out.g = p.chain.group()->mul(p.g, m.gamma);
  out.coords = iota_star(m.iota, m.dst.length(), p.coords);
  return canonicalize(out);
}

std::vector<SimplexPoint> sample_grid(const SubgroupChain& chain) {
  const int n = chain.length();
  const GroupPtr g = chain.group();
  std::vector<SimplexPoint> grid;
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::vector<int> spots;
    for (int i = 0; i <= n; ++i)
      if (mask & (1u << i)) spots.push_back(i);
    const int size = static_cast<int>(spots.size());
    // Barycenter of the face, then a distinct-weight point on the same face
    // (weights 1..size scaled), which catches coordinate permutations the
    // barycenter cannot see.
    std::vector<std::vector<Rational>> samples;
    std::vector<Rational> bary(n + 1, Rational(0));
    for (int i : spots) bary[i] = Rational(1, size);
    samples.push_back(bary);
    if (size > 1) {
      std::vector<Rational> weighted(n + 1, Rational(0));
      const int total = size * (size + 1) / 2;
      for (int w = 0; w < size; ++w) weighted[spots[w]] = Rational(w + 1, total);
      samples.push_back(weighted);
    }
    for (int a = 0; a < g->order; ++a)
      for (const auto& coords : samples)
        grid.push_back(canonicalize(SimplexPoint{chain, a, coords}));
  }
  auto cmp = [](const SimplexPoint& a, const SimplexPoint& b) {
    if (a.g != b.g) return a.g < b.g;
    return a.coords < b.coords;
  };
  std::sort(grid.begin(), grid.end(), cmp);
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

FunctorReport verify_functor(const GroupPtr& g) {
  FunctorReport report;
  auto fail = [&](std::string msg) {
    report.pass = false;
    if (report.failures.size() < 10) report.failures.push_back(std::move(msg));
  };

  LinkOrbitCategory cat = build_link_orbit_category(g);
  const int n = static_cast<int>(cat.objects.size());
  std::vector<std::vector<SimplexPoint>> grids(n);
  for (int i = 0; i < n; ++i) grids[i] = sample_grid(cat.objects[i]);

  for (int i = 0; i < n; ++i) {
    LinkMorphism id = identity_morphism(cat.objects[i]);
    ++report.identity_pairs;
    for (const SimplexPoint& p : grids[i]) {
      ++report.points_checked;
      if (!(induced_map(id, p) == p)) fail("identity morphism moves a point");
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (cat.homs[a][b].empty()) continue;
      for (int c = 0; c < n; ++c) {
        if (cat.homs[b][c].empty()) continue;
        for (const LinkMorphism& f : cat.homs[a][b])
          for (const LinkMorphism& h : cat.homs[b][c]) {
            ++report.composite_pairs;
            LinkMorphism fh = compose(f, h);
            for (const SimplexPoint& p : grids[a]) {
              ++report.points_checked;
              if (!(induced_map(fh, p) == induced_map(h, induced_map(f, p))))
                fail("induced map of a composite disagrees with the composite of induced maps");
            }
          }
      }
    }
  return report;
}

int CellModel::cell_index(const std::vector<int>& support, int coset_rep) const {
  const int d = static_cast<int>(support.size()) - 1;
  for (size_t i = 0; i < cells[d].size(); ++i)
    if (cells[d][i].support == support && cells[d][i].coset.representative == coset_rep)
      return static_cast<int>(i);
  return -1;
}

CellModel cell_model(const SubgroupChain& chain) {
  const int n = chain.length();
  const GroupPtr g = chain.group();
  CellModel model;
  model.chain = chain;
  model.cells.resize(n + 1);
  model.faces.resize(n + 1);

  std::vector<std::vector<int>> supports;
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::vector<int> s;
    for (int i = 0; i <= n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    supports.push_back(std::move(s));
  }
  std::sort(supports.begin(), supports.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  for (const auto& s : supports) {
    const int d = static_cast<int>(s.size()) - 1;
    const Subgroup& sub = chain.at(n - s.back());
    for (const Coset& c : left_cosets(sub))
      model.cells[d].push_back(StratifiedCell{s, c});
  }

  for (int d = 0; d <= n; ++d) {
    model.faces[d].resize(model.cells[d].size());
    if (d == 0) continue;
    for (size_t i = 0; i < model.cells[d].size(); ++i) {
      const StratifiedCell& cell = model.cells[d][i];
      auto& fs = model.faces[d][i];
      fs.resize(d + 1);
      for (int j = 0; j <= d; ++j) {
        std::vector<int> sub_support = cell.support;
        sub_support.erase(sub_support.begin() + j);
        const Subgroup& coarser = chain.at(n - sub_support.back());
        int rep = make_coset(cell.coset.representative, coarser).representative;
        fs[j] = model.cell_index(sub_support, rep);
      }
    }
  }

  model.action.assign(g->order, {});
  for (int a = 0; a < g->order; ++a) {
    model.action[a].resize(n + 1);
    for (int d = 0; d <= n; ++d) {
      model.action[a][d].resize(model.cells[d].size());
      for (size_t i = 0; i < model.cells[d].size(); ++i) {
        const StratifiedCell& cell = model.cells[d][i];
        int rep = make_coset(g->mul(a, cell.coset.representative), cell.coset.subgroup)
                      .representative;
        model.action[a][d][i] = model.cell_index(cell.support, rep);
      }
    }
  }
  return model;
}

namespace {

std::string cell_name(const StratifiedCell& cell) {
  std::string nm = "s";
  for (size_t i = 0; i < cell.support.size(); ++i) {
    if (i) nm += ".";
    nm += std::to_string(cell.support[i]);
  }
  return nm + "g" + std::to_string(cell.coset.representative);
}

}  // namespace

SimplexId LinkingRealization::base_cell() const {
  const int n = chain.length();
  std::vector<int> full(n + 1);
  for (int i = 0; i <= n; ++i) full[i] = i;
  int rep = make_coset(chain.group()->identity, chain.at(0)).representative;
  return SimplexId{n, model.cell_index(full, rep)};
}

LinkingRealization to_semisimplicial(const SubgroupChain& chain) {
  LinkingRealization out;
  out.chain = chain;
  out.model = cell_model(chain);

  GSemiSimplicialSet x;
  x.group = chain.group();
  const int levels = static_cast<int>(out.model.cells.size());
  x.names.resize(levels);
  x.faces = out.model.faces;
  x.action = out.model.action;
  for (int d = 0; d < levels; ++d)
    for (const StratifiedCell& cell : out.model.cells[d]) x.names[d].push_back(cell_name(cell));
  validate_complex(x);
  out.complex = share(std::move(x));
  return out;
}

GSimplicialMap realize_morphism(const LinkMorphism& m, const LinkingRealization& src,
                                const LinkingRealization& dst) {
  if (!(src.chain == m.src) || !(dst.chain == m.dst))
    throw ChainMismatch("realizations do not match the morphism endpoints");
  const int n = src.chain.length();
  const int md = dst.chain.length();
  const GroupPtr g = src.chain.group();

  GSimplicialMap f;
  f.src = src.complex;
  f.dst = dst.complex;
  f.assignment.resize(n + 1);
  for (int d = 0; d <= n; ++d) {
    f.assignment[d].resize(src.model.cells[d].size());
    for (size_t i = 0; i < src.model.cells[d].size(); ++i) {
      const StratifiedCell& cell = src.model.cells[d][i];
      std::vector<int> image_support;
      for (int spot : cell.support) image_support.push_back(md - m.iota[n - spot]);
      std::sort(image_support.begin(), image_support.end());
      const Subgroup& target_sub = dst.chain.at(md - image_support.back());
      int rep = make_coset(g->mul(cell.coset.representative, m.gamma), target_sub)
                    .representative;
      f.assignment[d][i] = dst.model.cell_index(image_support, rep);
    }
  }
  validate_map(f);
  return f;
}

LinkMorphism classify_link_map(const GSimplicialMap& f, const LinkingRealization& src,
                               const LinkingRealization& dst) {
  if (f.src != src.complex || f.dst != dst.complex)
    throw ChainMismatch("map endpoints do not match the given realizations");
  const int n = src.chain.length();
  const int md = dst.chain.length();

  SimplexId base = src.base_cell();
  SimplexId image = f.apply(base);
  const StratifiedCell& cell = dst.model.cells[image.dim][image.idx];

  // Support spots, largest first, give iota(0), iota(1), ...
  std::vector<int> iota(n + 1);
  for (int k = 0; k <= n; ++k) iota[k] = md - cell.support[n - k];
  LinkMorphism m{src.chain, dst.chain, iota, cell.coset.representative};
  if (!is_valid_morphism(m)) throw ChainMismatch("map does not classify as a link morphism");
  return m;
}

}  // namespace lcat
