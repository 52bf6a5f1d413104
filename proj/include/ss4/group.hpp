#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ss4 {

/// A finite group given by its multiplication table. Index 0 is always the
/// identity. The table is validated exhaustively at construction: rows and
/// columns must be permutations, the identity must act trivially, every
/// element needs a two-sided inverse and associativity is checked on all
/// triples.
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::string name = "");

  /// Accepted specs: `cyclic:<n>`, `sym:<n>` (n <= 5), `prod:<a>,<b>`
  /// (nesting allowed; the *last* top-level comma splits), `file:<path>`.
  static FiniteGroup from_spec(const std::string& spec);

  /// Table file: header `group <n>`, then n rows of n indices.
  static FiniteGroup load(const std::string& path);
  std::string save_text() const;

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int identity() const { return 0; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  FiniteGroup() = default;
  void validate() const;

  int n_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

}  // namespace ss4
