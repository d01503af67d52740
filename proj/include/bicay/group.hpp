#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace bicay {

// Default upper bound on group order for anything constructed here.
inline constexpr int kDefaultGroupCap = 5000;

// Immutable finite group over element indices 0..order-1. The identity is
// always index 0. Cheap to copy (shared internal representation). Cyclic
// groups multiply by modular arithmetic, direct products multiply
// component-wise on index pairs, everything else uses a multiplication table.
class FiniteGroup {
 public:
  int order() const;
  int identity() const { return 0; }
  int multiply(int x, int y) const;
  int inverse(int x) const;
  const std::string& description() const;
  bool is_cyclic_fastpath() const;  // true when built by make_cyclic

  friend FiniteGroup make_cyclic(int n, int cap);
  friend FiniteGroup make_symmetric(int k, int cap);
  friend FiniteGroup make_dihedral(int order, int cap);
  friend FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                    int cap);
  friend FiniteGroup group_from_table(std::vector<int> table,
                                      std::string description);

  struct Rep;

 private:
  explicit FiniteGroup(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

FiniteGroup make_cyclic(int n, int cap = kDefaultGroupCap);
// Elements are the k! permutations of {1..k} ordered lexicographically by
// one-line notation; index 0 is the identity.
FiniteGroup make_symmetric(int k, int cap = kDefaultGroupCap);
// Dihedral group of the given (even) order 2m: indices 0..m-1 are rotations
// r^i, indices m..2m-1 are reflections s*r^(i-m). Built as an explicit
// multiplication table from the presentation r^m = s^2 = e, s*r*s = r^-1.
FiniteGroup make_dihedral(int order, int cap = kDefaultGroupCap);
// Index of (a_i, b_j) is i*|B| + j.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           int cap = kDefaultGroupCap);
// Takes a full n*n multiplication table (row-major, table[x*n+y] = x*y).
// Validates group axioms and that the identity sits at index 0.
FiniteGroup group_from_table(std::vector<int> table, std::string description);

// Descriptor grammar: "cyclic:<n>" | "sym:<k>" | "dihedral:<order>" |
// "product:<desc>x<desc>".
FiniteGroup parse_group_descriptor(const std::string& text,
                                   int cap = kDefaultGroupCap);

struct Subgroup {
  FiniteGroup parent;
  std::vector<int> members;  // sorted, contains 0
};

int element_order(const FiniteGroup& g, int x);
// All elements whose order lies in `orders`, sorted ascending.
std::vector<int> elements_of_order(const FiniteGroup& g,
                                   const std::set<int>& orders);
// All elements of order exactly 2, sorted ascending.
std::vector<int> involutions(const FiniteGroup& g);
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens);
// Left cosets x*H, each sorted, blocks ordered by least element.
std::vector<std::vector<int>> left_cosets(const FiniteGroup& g,
                                          const Subgroup& h);

// CRT coordinates of an element of Z_{p^2 q^2} as (k mod p^2, k mod q^2).
struct CrtCoordinates {
  int p = 0;
  int q = 0;
  int p_part = 0;  // in [0, p^2)
  int q_part = 0;  // in [0, q^2)
};

CrtCoordinates crt_split(int p, int q, int k);
int crt_merge(const CrtCoordinates& c);
bool is_prime(int n);

enum class ConnectionSetRole { S1, S2, S3 };

struct ConnectionSet {
  ConnectionSetRole role = ConnectionSetRole::S1;
  std::vector<int> elements;  // sorted, duplicate-free
};

// Validates range for all roles; identity-freeness and inverse-closure for
// roles S1/S2. Throws InvalidConnectionSet.
ConnectionSet make_connection_set(const FiniteGroup& g, ConnectionSetRole role,
                                  std::vector<int> elements);

// Canonical connection sets over Z_{p^2 q^2}: S1 = elements of order p or
// q, S2 = elements of order p^2 or q^2, S3 = {identity}.
struct P2Q2Preset {
  FiniteGroup group;
  ConnectionSet s1, s2, s3;
};
P2Q2Preset preset_connection_sets(int p, int q, int cap = kDefaultGroupCap);

}  // namespace bicay
