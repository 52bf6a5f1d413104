#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ss4/cyclotomic.hpp"
#include "ss4/group.hpp"

namespace ss4 {

/// Exponent-valued 4-cochain pi: G^4 -> Z/N, stored sparsely with default 0.
class FourCochain {
 public:
  FourCochain(GroupPtr group, int modulus);

  static FourCochain trivial(GroupPtr group, int modulus = 1) {
    return FourCochain(std::move(group), modulus);
  }

  const FiniteGroup& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  int modulus() const { return modulus_; }

  int operator()(int g, int h, int k, int l) const;
  void set(int g, int h, int k, int l, long exponent);

  /// True when every entry with an identity argument vanishes.
  bool is_normalized() const;

  /// zeta_N^(sign * pi(g,h,k,l)).
  Cyclotomic phase(int g, int h, int k, int l, int sign) const;

  /// Dense |G|^4 exponent table indexed g + n*(h + n*(k + n*l)).
  std::vector<int> dense_table() const;

  size_t entry_count() const { return entries_.size(); }
  /// Entries as (g,h,k,l,e) rows sorted by key, for serialization.
  std::vector<std::array<int, 5>> sorted_entries() const;

 private:
  std::uint64_t key(int g, int h, int k, int l) const;

  GroupPtr group_;
  int modulus_;
  std::unordered_map<std::uint64_t, int> entries_;
};

/// Exponent-valued 3-cochain eta: G^3 -> Z/N.
class ThreeCochain {
 public:
  ThreeCochain(GroupPtr group, int modulus);

  const FiniteGroup& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  int modulus() const { return modulus_; }

  int operator()(int g, int h, int k) const;
  void set(int g, int h, int k, long exponent);
  bool is_normalized() const;

 private:
  std::uint64_t key(int g, int h, int k) const;

  GroupPtr group_;
  int modulus_;
  std::unordered_map<std::uint64_t, int> entries_;
};

struct CocycleCheck {
  bool ok = true;
  std::optional<std::array<int, 5>> violation;  // first failing (g,h,k,l,m)
};

/// The 6-term simplicial condition, additively:
/// pi(h,k,l,m) - pi(gh,k,l,m) + pi(g,hk,l,m) - pi(g,h,kl,m) + pi(g,h,k,lm)
/// - pi(g,h,k,l) = 0 mod N for all quintuples.
CocycleCheck check_cocycle(const FourCochain& pi);

/// (d eta)(g,h,k,l) = eta(h,k,l) - eta(gh,k,l) + eta(g,hk,l) - eta(g,h,kl)
/// + eta(g,h,k); always a cocycle.
FourCochain coboundary(const ThreeCochain& eta);

struct AveragedIdentityCheck {
  bool ok = true;
  std::optional<std::array<int, 4>> violation;  // first failing (g,h,k,l)
};

/// The averaged consequence of the cocycle condition that drives the 1<->5
/// move, evaluated exactly in Q(zeta_N): zeta^pi(g,h,k,l) equals the mean
/// over m of
///   zeta^pi(h,k,l,m) * zeta^-pi(gh,k,l,m) * zeta^pi(g,hk,l,m)
///   * zeta^-pi(g,h,kl,m) * zeta^pi(g,h,k,lm).
AveragedIdentityCheck averaged_identity_check(const FourCochain& pi);

/// zeta_N^(sign * pi(g,h,k,l)); sign in {+1,-1}.
Cyclotomic eval_phase(const FourCochain& pi, int g, int h, int k, int l, int sign);

/// Cocycle file: `cocycle <N>` then `entry <g> <h> <k> <l> <e>` lines.
FourCochain load_cocycle(const std::string& text, GroupPtr group);
FourCochain load_cocycle_file(const std::string& path, GroupPtr group);
std::string save_cocycle(const FourCochain& pi);

/// 3-cochain file: `cochain3 <N>` then `entry <g> <h> <k> <e>` lines.
ThreeCochain load_cochain3(const std::string& text, GroupPtr group);
ThreeCochain load_cochain3_file(const std::string& path, GroupPtr group);
std::string save_cochain3(const ThreeCochain& eta);

}  // namespace ss4
