#include "ss4/cocycle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ss4 {

namespace {
int reduce_mod(long e, int modulus) {
  long r = e % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(r);
}
void check_element(const FiniteGroup& g, int a) {
  if (a < 0 || a >= g.order())
    throw std::invalid_argument("cochain: group element index out of range");
}
}  // namespace

FourCochain::FourCochain(GroupPtr group, int modulus)
    : group_(std::move(group)), modulus_(modulus) {
  if (!group_) throw std::invalid_argument("cochain: null group");
  if (modulus_ < 1) throw std::invalid_argument("cochain: modulus must be >= 1");
}

std::uint64_t FourCochain::key(int g, int h, int k, int l) const {
  const std::uint64_t n = static_cast<std::uint64_t>(group_->order());
  return ((static_cast<std::uint64_t>(g) * n + h) * n + k) * n + l;
}

int FourCochain::operator()(int g, int h, int k, int l) const {
  auto it = entries_.find(key(g, h, k, l));
  return it == entries_.end() ? 0 : it->second;
}

void FourCochain::set(int g, int h, int k, int l, long exponent) {
  for (int a : {g, h, k, l}) check_element(*group_, a);
  const int e = reduce_mod(exponent, modulus_);
  if (e == 0)
    entries_.erase(key(g, h, k, l));
  else
    entries_[key(g, h, k, l)] = e;
}

bool FourCochain::is_normalized() const {
  const int n = group_->order();
  for (const auto& [packed, e] : entries_) {
    std::uint64_t rest = packed;
    bool has_identity = false;
    for (int pos = 0; pos < 4; ++pos) {
      if (rest % n == 0) has_identity = true;
      rest /= n;
    }
    if (has_identity && e != 0) return false;
  }
  return true;
}

Cyclotomic FourCochain::phase(int g, int h, int k, int l, int sign) const {
  return Cyclotomic::zeta_pow(modulus_, static_cast<long>(sign) * (*this)(g, h, k, l));
}

std::vector<int> FourCochain::dense_table() const {
  const std::uint64_t n = static_cast<std::uint64_t>(group_->order());
  std::vector<int> table(n * n * n * n, 0);
  for (const auto& [packed, e] : entries_) table[packed] = e;
  return table;
}

std::vector<std::array<int, 5>> FourCochain::sorted_entries() const {
  const int n = group_->order();
  std::vector<std::array<int, 5>> rows;
  rows.reserve(entries_.size());
  for (const auto& [packed, e] : entries_) {
    std::uint64_t rest = packed;
    const int l = static_cast<int>(rest % n);
    rest /= n;
    const int k = static_cast<int>(rest % n);
    rest /= n;
    const int h = static_cast<int>(rest % n);
    rest /= n;
    const int g = static_cast<int>(rest % n);
    rows.push_back({g, h, k, l, e});
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

ThreeCochain::ThreeCochain(GroupPtr group, int modulus)
    : group_(std::move(group)), modulus_(modulus) {
  if (!group_) throw std::invalid_argument("cochain: null group");
  if (modulus_ < 1) throw std::invalid_argument("cochain: modulus must be >= 1");
}

std::uint64_t ThreeCochain::key(int g, int h, int k) const {
  const std::uint64_t n = static_cast<std::uint64_t>(group_->order());
  return (static_cast<std::uint64_t>(g) * n + h) * n + k;
}

int ThreeCochain::operator()(int g, int h, int k) const {
  auto it = entries_.find(key(g, h, k));
  return it == entries_.end() ? 0 : it->second;
}

void ThreeCochain::set(int g, int h, int k, long exponent) {
  for (int a : {g, h, k}) check_element(*group_, a);
  const int e = reduce_mod(exponent, modulus_);
  if (e == 0)
    entries_.erase(key(g, h, k));
  else
    entries_[key(g, h, k)] = e;
}

bool ThreeCochain::is_normalized() const {
  const int n = group_->order();
  for (const auto& [packed, e] : entries_) {
    std::uint64_t rest = packed;
    bool has_identity = false;
    for (int pos = 0; pos < 3; ++pos) {
      if (rest % n == 0) has_identity = true;
      rest /= n;
    }
    if (has_identity && e != 0) return false;
  }
  return true;
}

CocycleCheck check_cocycle(const FourCochain& pi) {
  const FiniteGroup& G = pi.group();
  const int n = G.order();
  const int N = pi.modulus();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m) {
            const long s = static_cast<long>(pi(h, k, l, m)) - pi(G.mul(g, h), k, l, m) +
                           pi(g, G.mul(h, k), l, m) - pi(g, h, G.mul(k, l), m) +
                           pi(g, h, k, G.mul(l, m)) - pi(g, h, k, l);
            if (reduce_mod(s, N) != 0) return {false, std::array<int, 5>{g, h, k, l, m}};
          }
  return {true, std::nullopt};
}

FourCochain coboundary(const ThreeCochain& eta) {
  const FiniteGroup& G = eta.group();
  const int n = G.order();
  FourCochain pi(eta.group_ptr(), eta.modulus());
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const long e = static_cast<long>(eta(h, k, l)) - eta(G.mul(g, h), k, l) +
                         eta(g, G.mul(h, k), l) - eta(g, h, G.mul(k, l)) + eta(g, h, k);
          pi.set(g, h, k, l, e);
        }
  return pi;
}

AveragedIdentityCheck averaged_identity_check(const FourCochain& pi) {
  const FiniteGroup& G = pi.group();
  const int n = G.order();
  const int N = pi.modulus();
  const Cyclotomic order = Cyclotomic::integer(n, N);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          // Per-m exponent of the five-facet side of the 1<->5 move.
          std::vector<long> counts(N, 0);
          for (int m = 0; m < n; ++m) {
            const long e = static_cast<long>(pi(h, k, l, m)) - pi(G.mul(g, h), k, l, m) +
                           pi(g, G.mul(h, k), l, m) - pi(g, h, G.mul(k, l), m) +
                           pi(g, h, k, G.mul(l, m));
            counts[reduce_mod(e, N)] += 1;
          }
          Cyclotomic sum(N);
          for (int e = 0; e < N; ++e)
            if (counts[e] != 0)
              sum += Cyclotomic::integer(counts[e], N) * Cyclotomic::zeta_pow(N, e);
          const Cyclotomic lhs = order * Cyclotomic::zeta_pow(N, pi(g, h, k, l));
          if (sum != lhs) return {false, std::array<int, 4>{g, h, k, l}};
        }
  return {true, std::nullopt};
}

Cyclotomic eval_phase(const FourCochain& pi, int g, int h, int k, int l, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("eval_phase: sign must be +1 or -1");
  return pi.phase(g, h, k, l, sign);
}

namespace {

template <typename SetEntry>
void parse_cochain_lines(const std::string& text, const std::string& header, int arity,
                         const FiniteGroup& group, int& modulus, SetEntry set_entry) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    auto fail = [&](const std::string& msg) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (word == header) {
      if (!(ls >> modulus) || modulus < 1) fail("bad modulus");
      have_header = true;
    } else if (word == "entry") {
      if (!have_header) fail("entry before '" + header + "' line");
      std::vector<int> args(arity);
      long e;
      for (int i = 0; i < arity; ++i)
        if (!(ls >> args[i])) fail("entry needs " + std::to_string(arity) + " indices");
      if (!(ls >> e)) fail("entry needs an exponent");
      for (int a : args)
        if (a < 0 || a >= group.order()) fail("group element index out of range");
      set_entry(args, e);
    } else {
      fail("unknown directive '" + word + "'");
    }
  }
  if (!have_header) throw std::runtime_error("missing '" + header + "' header");
}

}  // namespace

FourCochain load_cocycle(const std::string& text, GroupPtr group) {
  int modulus = 1;
  std::vector<std::pair<std::vector<int>, long>> pending;
  parse_cochain_lines(text, "cocycle", 4, *group, modulus,
                      [&](const std::vector<int>& a, long e) { pending.push_back({a, e}); });
  FourCochain pi(std::move(group), modulus);
  for (const auto& [a, e] : pending) pi.set(a[0], a[1], a[2], a[3], e);
  return pi;
}

FourCochain load_cocycle_file(const std::string& path, GroupPtr group) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cocycle file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_cocycle(buf.str(), std::move(group));
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string save_cocycle(const FourCochain& pi) {
  std::ostringstream os;
  os << "cocycle " << pi.modulus() << "\n";
  for (const auto& row : pi.sorted_entries())
    os << "entry " << row[0] << " " << row[1] << " " << row[2] << " " << row[3] << " " << row[4]
       << "\n";
  return os.str();
}

ThreeCochain load_cochain3(const std::string& text, GroupPtr group) {
  int modulus = 1;
  std::vector<std::pair<std::vector<int>, long>> pending;
  parse_cochain_lines(text, "cochain3", 3, *group, modulus,
                      [&](const std::vector<int>& a, long e) { pending.push_back({a, e}); });
  ThreeCochain eta(std::move(group), modulus);
  for (const auto& [a, e] : pending) eta.set(a[0], a[1], a[2], e);
  return eta;
}

ThreeCochain load_cochain3_file(const std::string& path, GroupPtr group) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cochain file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_cochain3(buf.str(), std::move(group));
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string save_cochain3(const ThreeCochain& eta) {
  std::ostringstream os;
  os << "cochain3 " << eta.modulus() << "\n";
  const FiniteGroup& G = eta.group();
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      for (int k = 0; k < G.order(); ++k)
        if (const int e = eta(g, h, k); e != 0)
          os << "entry " << g << " " << h << " " << k << " " << e << "\n";
  return os.str();
}

}  // namespace ss4
