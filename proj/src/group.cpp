#include "bicay/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>
#include <utility>

#include "bicay/errors.hpp"

namespace bicay {

struct FiniteGroup::Rep {
  enum class Kind { Cyclic, Table, Product };
  Kind kind = Kind::Cyclic;
  int order = 1;
  std::string description;
  std::vector<int> table;    // Kind::Table, row-major
  std::vector<int> inverse;  // Kind::Table
  std::shared_ptr<const Rep> left, right;  // Kind::Product
};

namespace {

using Rep = FiniteGroup::Rep;

int rep_multiply(const Rep& r, int x, int y) {
  switch (r.kind) {
    case Rep::Kind::Cyclic:
      return (x + y) % r.order;
    case Rep::Kind::Table:
      return r.table[static_cast<std::size_t>(x) * r.order + y];
    case Rep::Kind::Product: {
      const int nb = r.right->order;
      const int a = rep_multiply(*r.left, x / nb, y / nb);
      const int b = rep_multiply(*r.right, x % nb, y % nb);
      return a * nb + b;
    }
  }
  return 0;
}

int rep_inverse(const Rep& r, int x) {
  switch (r.kind) {
    case Rep::Kind::Cyclic:
      return x == 0 ? 0 : r.order - x;
    case Rep::Kind::Table:
      return r.inverse[x];
    case Rep::Kind::Product: {
      const int nb = r.right->order;
      return rep_inverse(*r.left, x / nb) * nb + rep_inverse(*r.right, x % nb);
    }
  }
  return 0;
}

void check_cap(long long order, int cap, const std::string& what) {
  if (cap < 1) throw InvalidParameter("group cap must be positive");
  if (order > cap)
    throw InvalidParameter(what + ": order " + std::to_string(order) +
                           " exceeds cap " + std::to_string(cap));
}

// Fills Rep::inverse for a table rep; throws if some row has no identity.
void fill_table_inverses(Rep& r) {
  r.inverse.assign(r.order, -1);
  for (int x = 0; x < r.order; ++x) {
    for (int y = 0; y < r.order; ++y) {
      if (r.table[static_cast<std::size_t>(x) * r.order + y] == 0) {
        r.inverse[x] = y;
        break;
      }
    }
    if (r.inverse[x] < 0)
      throw InvalidParameter("multiplication table has no inverse for element " +
                             std::to_string(x));
  }
}

}  // namespace

int FiniteGroup::order() const { return rep_->order; }
int FiniteGroup::multiply(int x, int y) const {
  if (x < 0 || y < 0 || x >= rep_->order || y >= rep_->order)
    throw InvalidParameter("group element index out of range");
  return rep_multiply(*rep_, x, y);
}
int FiniteGroup::inverse(int x) const {
  if (x < 0 || x >= rep_->order)
    throw InvalidParameter("group element index out of range");
  return rep_inverse(*rep_, x);
}
const std::string& FiniteGroup::description() const { return rep_->description; }
bool FiniteGroup::is_cyclic_fastpath() const {
  return rep_->kind == Rep::Kind::Cyclic;
}

FiniteGroup make_cyclic(int n, int cap) {
  if (n < 1) throw InvalidParameter("cyclic group order must be >= 1");
  check_cap(n, cap, "cyclic:" + std::to_string(n));
  auto rep = std::make_shared<Rep>();
  rep->kind = Rep::Kind::Cyclic;
  rep->order = n;
  rep->description = "cyclic:" + std::to_string(n);
  return FiniteGroup(std::move(rep));
}

FiniteGroup make_symmetric(int k, int cap) {
  if (k < 1) throw InvalidParameter("symmetric group degree must be >= 1");
  long long fact = 1;
  for (int i = 2; i <= k; ++i) {
    fact *= i;
    if (fact > cap) break;
  }
  check_cap(fact, cap, "sym:" + std::to_string(k));
  const int n = static_cast<int>(fact);

  // All permutations of {1..k} in lexicographic one-line order.
  std::vector<std::vector<int>> perms;
  perms.reserve(n);
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 1);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;

  auto rep = std::make_shared<Rep>();
  rep->kind = Rep::Kind::Table;
  rep->order = n;
  rep->description = "sym:" + std::to_string(k);
  rep->table.resize(static_cast<std::size_t>(n) * n);
  std::vector<int> composed(k);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      // (x*y) applies y first, then x.
      for (int i = 0; i < k; ++i) composed[i] = perms[x][perms[y][i] - 1];
      rep->table[static_cast<std::size_t>(x) * n + y] = index.at(composed);
    }
  }
  fill_table_inverses(*rep);
  return FiniteGroup(std::move(rep));
}

FiniteGroup make_dihedral(int order, int cap) {
  if (order < 2 || order % 2 != 0)
    throw InvalidParameter("dihedral group order must be even and >= 2");
  check_cap(order, cap, "dihedral:" + std::to_string(order));
  const int m = order / 2;
  auto rep = std::make_shared<Rep>();
  rep->kind = Rep::Kind::Table;
  rep->order = order;
  rep->description = "dihedral:" + std::to_string(order);
  rep->table.resize(static_cast<std::size_t>(order) * order);
  // Element e*m + i encodes s^e r^i; relations r^m = s^2 = 1, r s = s r^-1,
  // hence (s^e1 r^i1)(s^e2 r^i2) = s^(e1^e2) r^(i2 + (e2 ? -i1 : i1)).
  for (int x = 0; x < order; ++x) {
    const int e1 = x / m, i1 = x % m;
    for (int y = 0; y < order; ++y) {
      const int e2 = y / m, i2 = y % m;
      const int e = e1 ^ e2;
      const int i = e2 == 0 ? (i1 + i2) % m : ((i2 - i1) % m + m) % m;
      rep->table[static_cast<std::size_t>(x) * order + y] = e * m + i;
    }
  }
  fill_table_inverses(*rep);
  return FiniteGroup(std::move(rep));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, int cap) {
  const long long n = static_cast<long long>(a.order()) * b.order();
  check_cap(n, cap, "product:" + a.description() + "x" + b.description());
  auto rep = std::make_shared<Rep>();
  rep->kind = Rep::Kind::Product;
  rep->order = static_cast<int>(n);
  rep->description = "product:" + a.description() + "x" + b.description();
  rep->left = a.rep_;
  rep->right = b.rep_;
  return FiniteGroup(std::move(rep));
}

FiniteGroup group_from_table(std::vector<int> table, std::string description) {
  const auto size = table.size();
  int n = 0;
  while (static_cast<std::size_t>(n) * n < size) ++n;
  if (static_cast<std::size_t>(n) * n != size || n == 0)
    throw InvalidParameter("multiplication table must be a nonempty square");
  for (int v : table)
    if (v < 0 || v >= n)
      throw InvalidParameter("multiplication table entry out of range");
  auto at = [&](int x, int y) {
    return table[static_cast<std::size_t>(x) * n + y];
  };
  for (int x = 0; x < n; ++x)
    if (at(0, x) != x || at(x, 0) != x)
      throw InvalidParameter("table identity must be element 0");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(x, at(y, z)))
          throw InvalidParameter("multiplication table is not associative");
  auto rep = std::make_shared<Rep>();
  rep->kind = Rep::Kind::Table;
  rep->order = n;
  rep->description = std::move(description);
  rep->table = std::move(table);
  fill_table_inverses(*rep);
  return FiniteGroup(std::move(rep));
}

namespace {
int parse_int_after(const std::string& text, std::size_t prefix_len) {
  int value = 0;
  const char* begin = text.data() + prefix_len;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw InvalidParameter("bad group descriptor: \"" + text + "\"");
  return value;
}
}  // namespace

FiniteGroup parse_group_descriptor(const std::string& text, int cap) {
  if (text.rfind("cyclic:", 0) == 0)
    return make_cyclic(parse_int_after(text, 7), cap);
  if (text.rfind("sym:", 0) == 0)
    return make_symmetric(parse_int_after(text, 4), cap);
  if (text.rfind("dihedral:", 0) == 0)
    return make_dihedral(parse_int_after(text, 9), cap);
  if (text.rfind("product:", 0) == 0) {
    const std::string rest = text.substr(8);
    for (std::size_t i = 1; i + 1 < rest.size(); ++i) {
      if (rest[i] != 'x') continue;
      try {
        FiniteGroup a = parse_group_descriptor(rest.substr(0, i), cap);
        FiniteGroup b = parse_group_descriptor(rest.substr(i + 1), cap);
        return direct_product(a, b, cap);
      } catch (const InvalidParameter&) {
        continue;  // try the next 'x' as the separator
      }
    }
    throw InvalidParameter("bad product descriptor: \"" + text + "\"");
  }
  throw InvalidParameter("unknown group descriptor: \"" + text + "\"");
}

int element_order(const FiniteGroup& g, int x) {
  if (x < 0 || x >= g.order())
    throw InvalidParameter("group element index out of range");
  if (g.is_cyclic_fastpath()) return g.order() / std::gcd(g.order(), x);
  int acc = x, ord = 1;
  while (acc != g.identity()) {
    acc = g.multiply(acc, x);
    ++ord;
  }
  return ord;
}

std::vector<int> elements_of_order(const FiniteGroup& g,
                                   const std::set<int>& orders) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (orders.count(element_order(g, x))) out.push_back(x);
  return out;
}

std::vector<int> involutions(const FiniteGroup& g) {
  return elements_of_order(g, {2});
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
  for (int x : gens)
    if (x < 0 || x >= g.order())
      throw InvalidParameter("subgroup generator out of range");
  std::vector<char> seen(g.order(), 0);
  seen[g.identity()] = 1;
  std::queue<int> frontier;
  frontier.push(g.identity());
  while (!frontier.empty()) {
    const int x = frontier.front();
    frontier.pop();
    for (int s : gens) {
      const int y = g.multiply(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        frontier.push(y);
      }
    }
  }
  Subgroup h{g, {}};
  for (int x = 0; x < g.order(); ++x)
    if (seen[x]) h.members.push_back(x);
  return h;
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g,
                                          const Subgroup& h) {
  if (h.parent.order() != g.order() ||
      h.parent.description() != g.description())
    throw InvalidParameter("coset computation with mismatched parent group");
  // Cheap closure sanity check: H must contain the identity and be closed.
  std::vector<char> in_h(g.order(), 0);
  for (int s : h.members) {
    if (s < 0 || s >= g.order())
      throw InvalidParameter("subgroup member out of range");
    in_h[s] = 1;
  }
  if (h.members.empty() || !in_h[g.identity()])
    throw InvalidParameter("subgroup must contain the identity");
  for (int a : h.members)
    for (int b : h.members)
      if (!in_h[g.multiply(a, b)])
        throw InvalidParameter("subgroup members are not closed");

  std::vector<std::vector<int>> blocks;
  std::vector<char> covered(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    std::vector<int> block;
    block.reserve(h.members.size());
    for (int s : h.members) {
      const int y = g.multiply(x, s);
      covered[y] = 1;
      block.push_back(y);
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CrtCoordinates crt_split(int p, int q, int k) {
  if (!is_prime(p) || !is_prime(q) || p == q)
    throw InvalidParameter("crt requires two distinct primes");
  const long long n = static_cast<long long>(p) * p * q * q;
  if (k < 0 || k >= n)
    throw InvalidParameter("crt element out of range");
  return CrtCoordinates{p, q, k % (p * p), k % (q * q)};
}

int crt_merge(const CrtCoordinates& c) {
  if (!is_prime(c.p) || !is_prime(c.q) || c.p == c.q)
    throw InvalidParameter("crt requires two distinct primes");
  const int pp = c.p * c.p, qq = c.q * c.q;
  if (c.p_part < 0 || c.p_part >= pp || c.q_part < 0 || c.q_part >= qq)
    throw InvalidParameter("crt coordinate out of range");
  // x = p_part + pp*t where t = (q_part - p_part) * inv(pp) mod qq.
  long long inv = 0;
  {
    long long a = pp % qq, m = qq, x0 = 0, x1 = 1;
    long long aa = a, mm = m;
    while (aa > 1) {
      const long long quot = aa / mm;
      long long tmp = aa - quot * mm;
      aa = mm;
      mm = tmp;
      tmp = x1 - quot * x0;
      x1 = x0;
      x0 = tmp;
    }
    inv = ((x1 % m) + m) % m;
  }
  const long long diff = ((c.q_part - c.p_part) % qq + qq) % qq;
  const long long t = diff * inv % qq;
  return static_cast<int>(c.p_part + static_cast<long long>(pp) * t);
}

ConnectionSet make_connection_set(const FiniteGroup& g, ConnectionSetRole role,
                                  std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  for (int x : elements)
    if (x < 0 || x >= g.order())
      throw InvalidConnectionSet("connection-set element out of range: " +
                                 std::to_string(x));
  if (role != ConnectionSetRole::S3) {
    for (int x : elements) {
      if (x == g.identity())
        throw InvalidConnectionSet(
            "side connection sets must not contain the identity");
      if (!std::binary_search(elements.begin(), elements.end(), g.inverse(x)))
        throw InvalidConnectionSet(
            "side connection sets must be inverse-closed (missing inverse of " +
            std::to_string(x) + ")");
    }
  }
  return ConnectionSet{role, std::move(elements)};
}

P2Q2Preset preset_connection_sets(int p, int q, int cap) {
  if (!is_prime(p) || !is_prime(q) || p == q)
    throw InvalidParameter("preset requires two distinct primes");
  const long long n = static_cast<long long>(p) * p * q * q;
  check_cap(n, cap, "preset p2q2");
  FiniteGroup g = make_cyclic(static_cast<int>(n), cap);
  P2Q2Preset preset{g,
                    make_connection_set(g, ConnectionSetRole::S1,
                                        elements_of_order(g, {p, q})),
                    make_connection_set(g, ConnectionSetRole::S2,
                                        elements_of_order(g, {p * p, q * q})),
                    make_connection_set(g, ConnectionSetRole::S3,
                                        {g.identity()})};
  return preset;
}

}  // namespace bicay
