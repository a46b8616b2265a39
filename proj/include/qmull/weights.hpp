#pragma once

#include <string>
#include <vector>

#include "qmull/qarith.hpp"

namespace qmull {

// Parity split (m|n): indices 1..m are even, m+1..m+n odd.
struct Split {
  int m = 0;
  int n = 0;
  int size() const { return m + n; }
  int parity(int i) const { return i > m ? 1 : 0; }  // 1-based index
  Split swapped() const { return {n, m}; }
  friend bool operator==(const Split&, const Split&) = default;
};

class Weight {
 public:
  Weight() = default;
  Weight(Split split, std::vector<int> entries);
  static Weight zero(Split split) { return Weight(split, std::vector<int>(static_cast<std::size_t>(split.size()), 0)); }
  // epsilon_i, 1-based
  static Weight unit(Split split, int i);

  const Split& split() const { return split_; }
  const std::vector<int>& entries() const { return e_; }
  int size() const { return split_.size(); }
  int operator[](int i) const;  // 1-based
  int& at(int i);               // 1-based
  int parity(int i) const { return split_.parity(i); }

  std::vector<int> even_block() const;
  std::vector<int> odd_block() const;
  int degree() const;  // coordinate sum

  bool is_nonnegative() const;
  bool is_composition() const { return is_nonnegative(); }
  // both blocks weakly decreasing
  bool is_dominant() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.e_ <=> b.e_; }

  // "a1,...,am|b1,...,bn"
  std::string to_string() const;
  static Weight parse(const std::string& s);

 private:
  Split split_;
  std::vector<int> e_;
};

// positive root alpha_{i,j} when i < j
struct Root {
  int i = 0;
  int j = 0;
  bool positive() const { return i < j; }
  int parity(const Split& s) const { return (s.parity(i) + s.parity(j)) % 2; }
  bool odd(const Split& s) const { return parity(s) == 1; }
  Weight as_weight(const Split& s) const;  // eps_i - eps_j
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // validates, trims zeros

  const std::vector<int>& parts() const { return p_; }
  int length() const { return static_cast<int>(p_.size()); }
  int size() const;  // |lambda|
  int operator[](int i) const;  // 1-based, 0 beyond length
  bool empty() const { return p_.empty(); }

  Partition transpose() const;
  bool is_restricted(const Order& l) const;  // lambda_i - lambda_{i+1} < l
  bool is_regular(const Order& l) const;     // no l equal nonzero parts

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.p_ <=> b.p_; }

  std::string to_string() const;  // "2,1"; empty partition is ""
  static Partition parse(const std::string& s);

 private:
  std::vector<int> p_;
};

int super_dot(const Weight& mu, const Weight& nu);
bool root_order_leq(const Weight& mu, const Weight& lambda);
bool componentwise_leq(const std::vector<int>& mu, const std::vector<int>& lambda);
std::vector<int> dagger(const std::vector<int>& v);
Weight super_dagger(const Weight& lambda);

std::vector<Weight> enumerate_compositions(int m, int n, int r);
std::vector<Weight> enumerate_dominant(int m, int n, int r);
std::vector<Partition> partitions(int r);
// partitions of r with at most k parts
std::vector<Partition> partitions_bounded(int r, int max_parts);
std::vector<Partition> l_restricted_partitions(int r, const Order& l);

std::vector<int> parse_int_list(const std::string& s);
std::string format_int_list(const std::vector<int>& v);

}  // namespace qmull
