#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fqg {

enum class GroupKind { Split, NonSplit };

std::string_view kind_name(GroupKind k);

/// <x, y | x^n = 1 = y^2, xy = yx^s> (Split) or
/// <x, y | x^2n = 1, y^2 = x^n, xy = yx^s> (NonSplit), over F_q.
class GroupPresentation {
 public:
  /// Validates and normalizes. Throws SNotInvolutive, OrderNotCoprime,
  /// EvenCharacteristic, InvalidArgument.
  static GroupPresentation make(GroupKind kind, uint64_t n, int64_t s, uint64_t q);
  /// "split:n=4,s=3" or "nonsplit:n=2,s=3". Throws ParseError.
  static std::pair<GroupKind, std::pair<uint64_t, int64_t>> parse(std::string_view text);

  GroupKind kind() const { return kind_; }
  uint64_t n() const { return n_; }
  /// Order of x.
  uint64_t N() const { return N_; }
  /// Residue of s in (0, N].
  uint64_t s() const { return s_; }
  /// s + N when the 2-adic construction needs it, otherwise s().
  uint64_t s_adjusted() const { return s_adj_; }
  uint64_t q() const { return q_; }
  /// gcd(N, s - 1).
  uint64_t d() const { return d_; }
  uint64_t order() const { return 2 * N_; }
  bool abelian() const { return s_ % N_ == 1 % N_; }

  std::string to_string() const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

 private:
  GroupKind kind_ = GroupKind::Split;
  uint64_t n_ = 1, N_ = 1, s_ = 1, s_adj_ = 1, q_ = 3, d_ = 1;
};

/// Normal forms x^i y^j as (i, j), ordered by j then i; element index is j*N + i.
std::vector<std::pair<uint64_t, unsigned>> group_elements(const GroupPresentation& g);

}  // namespace fqg
