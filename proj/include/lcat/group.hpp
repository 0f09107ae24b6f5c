#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lcat/errors.hpp"

namespace lcat {

/// A finite group as a validated multiplication table. Elements are dense
/// indices 0..order-1; generated groups always put the identity at index 0,
/// loaded tables keep whatever index the file declares. Immutable after
/// construction.
struct FiniteGroup {
  int order = 0;
  int identity = 0;
  std::vector<std::vector<int>> mult;  // mult[a][b] = a*b
  std::vector<int> inv;
  std::vector<std::string> names;
  // Associativity is checked exhaustively up to kExhaustiveOrderBound and by
  // random sampling above it; this flag records which path ran.
  bool sampled_validation = false;

  int mul(int a, int b) const { return mult[a][b]; }
  int invert(int a) const { return inv[a]; }
  const std::string& name(int a) const { return names[a]; }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr int kExhaustiveOrderBound = 64;

GroupPtr make_cyclic(int n);
GroupPtr make_dihedral(int n);  // symmetries of the n-gon, order 2n
GroupPtr make_symmetric(int n);  // n <= 4
GroupPtr make_quaternion8();
GroupPtr make_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr make_trivial();

// Validates the table: identity (NoIdentity), inverses (NoInverse), then
// associativity (NonAssociativeTable).
GroupPtr make_from_table(std::vector<std::vector<int>> mult,
                         std::vector<std::string> names = {});

// Built-in families used by the CLI: c2, c3, c4, v4, s3, s4, d4, q8, and the
// patterns cN / dN / sN. Throws InvalidInput for unknown names.
GroupPtr named_group(const std::string& name);

// True iff both pointers describe the same group (pointer or table equality).
bool same_group(const GroupPtr& a, const GroupPtr& b);

/// A subgroup as a sorted element set, validated on construction.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;  // sorted, contains identity

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
  bool operator==(const Subgroup& other) const { return elements == other.elements; }
  bool operator<(const Subgroup& other) const;
};

// Validates closure under multiplication and inversion; throws NotASubgroup.
Subgroup make_subgroup(GroupPtr parent, std::vector<int> elements);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& generators);

// All subgroups, sorted by (order, elements). Enumeration grows the set of
// cyclic subgroups under pairwise joins; see all_subgroups_bruteforce for the
// independent subset-scan oracle.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

// Subset-scan enumeration, exponential; usable as a test oracle for
// |G| <= 24 (only subset sizes dividing |G| are scanned).
std::vector<Subgroup> all_subgroups_bruteforce(const GroupPtr& g);

Subgroup normalizer(const Subgroup& h);
Subgroup conjugate_subgroup(int g, const Subgroup& h);
Subgroup intersect(const Subgroup& h, const Subgroup& k);

// H subset-of K, both subgroups of the same parent (ParentMismatch otherwise).
bool is_subchain_compatible(const Subgroup& h, const Subgroup& k);

/// A left coset g*H in canonical form: the representative is the minimal
/// element index of the coset.
struct Coset {
  int representative = 0;
  Subgroup subgroup;

  bool operator==(const Coset& other) const {
    return representative == other.representative && subgroup == other.subgroup;
  }
};

Coset make_coset(int g, const Subgroup& h);
std::vector<int> coset_elements(const Coset& c);

// The cosets of H in its parent group, sorted by representative.
std::vector<Coset> left_cosets(const Subgroup& h);

// The cosets of H inside an ambient subgroup containing H (used for
// multi-Weil groups, where the ambient group is an intersection of
// normalizers). Throws NotASubgroup if H is not contained in ambient.
std::vector<Coset> left_cosets_in(const Subgroup& ambient, const Subgroup& h);

// Display label for a subgroup: "e" for trivial, else C<order> when cyclic /
// U<order> otherwise, with a/b/c suffixes when several subgroups share an
// order. `all` must be the all_subgroups list of the parent.
std::string subgroup_label(const Subgroup& h, const std::vector<Subgroup>& all);

}  // namespace lcat
