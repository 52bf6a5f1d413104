#include "ss4/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ss4 {

namespace {

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// Permutations of {0..n-1} in lexicographic order of one-line notation, so
// the identity gets index 0. Composition (p*q)(x) = p(q(x)).
std::vector<std::vector<int>> symmetric_table(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  auto rank = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<int> comp(n);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
      t[a][b] = rank(comp);
    }
  }
  return t;
}

std::vector<std::vector<int>> product_table(const FiniteGroup& ga, const FiniteGroup& gb) {
  const int na = ga.order(), nb = gb.order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          t[a1 * nb + b1][a2 * nb + b2] = ga.mul(a1, a2) * nb + gb.mul(b1, b2);
  return t;
}

}  // namespace

void FiniteGroup::validate() const {
  const int n = n_;
  if (n < 1) throw std::invalid_argument("group: order must be positive");
  if (static_cast<int>(table_.size()) != n)
    throw std::invalid_argument("group: table has wrong number of rows");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("group: table row has wrong length");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group: table entry out of range");
  }
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) seen[table_[a][b]] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::invalid_argument("group: row " + std::to_string(a) + " is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) seen[table_[b][a]] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::invalid_argument("group: column " + std::to_string(a) + " is not a permutation");
  }
  for (int a = 0; a < n; ++a) {
    if (table_[0][a] != a || table_[a][0] != a)
      throw std::invalid_argument("group: index 0 is not a two-sided identity");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("group: associativity fails at triple (" +
                                      std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(c) + ")");
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
  FiniteGroup g;
  g.n_ = static_cast<int>(table.size());
  g.table_ = std::move(table);
  g.name_ = std::move(name);
  g.validate();
  g.inverse_.assign(g.n_, -1);
  for (int a = 0; a < g.n_; ++a) {
    for (int b = 0; b < g.n_; ++b) {
      if (g.table_[a][b] == 0 && g.table_[b][a] == 0) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] < 0)
      throw std::invalid_argument("group: element " + std::to_string(a) +
                                  " has no two-sided inverse");
  }
  return g;
}

FiniteGroup FiniteGroup::from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("group spec '" + spec + "': expected <kind>:<arg>");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "cyclic") {
    const int n = std::stoi(arg);
    if (n < 1) throw std::invalid_argument("group spec: cyclic order must be >= 1");
    return from_table(cyclic_table(n), spec);
  }
  if (kind == "sym") {
    const int n = std::stoi(arg);
    if (n < 1 || n > 5) throw std::invalid_argument("group spec: sym:<n> needs 1 <= n <= 5");
    return from_table(symmetric_table(n), spec);
  }
  if (kind == "prod") {
    // Split on a top-level comma; scan from the left tracking nothing fancy,
    // since only `prod:` specs contain commas the first comma that leaves a
    // parseable left side is taken greedily from the right.
    for (size_t i = arg.size(); i-- > 0;) {
      if (arg[i] != ',') continue;
      try {
        FiniteGroup a = from_spec(arg.substr(0, i));
        FiniteGroup b = from_spec(arg.substr(i + 1));
        return from_table(product_table(a, b), spec);
      } catch (const std::invalid_argument&) {
        continue;  // comma inside a nested spec, try the next one
      }
    }
    throw std::invalid_argument("group spec '" + spec + "': prod needs two specs");
  }
  if (kind == "file") return load(arg);
  throw std::invalid_argument("group spec '" + spec + "': unknown kind '" + kind + "'");
}

FiniteGroup FiniteGroup::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  std::string word;
  if (!(in >> word) || word != "group")
    throw std::runtime_error(path + ": expected 'group <n>' header");
  int n = 0;
  if (!(in >> n) || n < 1) throw std::runtime_error(path + ": bad group order");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(in >> table[a][b]))
        throw std::runtime_error(path + ": truncated table at row " + std::to_string(a));
  return from_table(std::move(table), "file:" + path);
}

std::string FiniteGroup::save_text() const {
  std::ostringstream os;
  os << "group " << n_ << "\n";
  for (const auto& row : table_) {
    for (int b = 0; b < n_; ++b) os << (b ? " " : "") << row[b];
    os << "\n";
  }
  return os.str();
}

}  // namespace ss4
