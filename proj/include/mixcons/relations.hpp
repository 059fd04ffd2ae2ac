#pragma once

#include <cstdint>
#include <stdexcept>

namespace mixcons {

/// Binary relation on the universe {0, ..., n-1}, n <= 8, stored as an n*n bit matrix.
/// Middle sets for product and sum are bitmasks over the universe.
class FiniteRelation {
 public:
  FiniteRelation(unsigned universe, std::uint64_t bits = 0) : n_(universe), bits_(bits & mask()) {
    if (universe == 0 || universe > 8) throw std::invalid_argument("universe size must be 1..8");
  }

  unsigned universe() const { return n_; }
  std::uint64_t bits() const { return bits_; }

  bool contains(unsigned x, unsigned y) const { return (bits_ >> index(x, y)) & 1u; }
  void insert(unsigned x, unsigned y) { bits_ |= std::uint64_t{1} << index(x, y); }

  FiniteRelation complement() const { return FiniteRelation(n_, ~bits_); }

  FiniteRelation inverse() const {
    FiniteRelation out(n_);
    for (unsigned x = 0; x < n_; ++x)
      for (unsigned y = 0; y < n_; ++y)
        if (contains(x, y)) out.insert(y, x);
    return out;
  }

  /// {(x, z) : (x, y) in R and (y, z) in S for some y in middle}
  FiniteRelation product(const FiniteRelation& s, std::uint32_t middle) const {
    FiniteRelation out(n_);
    for (unsigned x = 0; x < n_; ++x)
      for (unsigned z = 0; z < n_; ++z)
        for (unsigned y = 0; y < n_; ++y)
          if (((middle >> y) & 1u) && contains(x, y) && s.contains(y, z)) {
            out.insert(x, z);
            break;
          }
    return out;
  }

  /// {(x, z) : (x, y) in R or (y, z) in S for all y in middle}
  FiniteRelation sum(const FiniteRelation& s, std::uint32_t middle) const {
    FiniteRelation out(n_);
    for (unsigned x = 0; x < n_; ++x)
      for (unsigned z = 0; z < n_; ++z) {
        bool all = true;
        for (unsigned y = 0; y < n_ && all; ++y)
          if ((middle >> y) & 1u) all = contains(x, y) || s.contains(y, z);
        if (all) out.insert(x, z);
      }
    return out;
  }

  friend bool operator==(const FiniteRelation&, const FiniteRelation&) = default;

 private:
  std::uint64_t mask() const {
    const unsigned cells = n_ * n_;
    return cells >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;
  }
  unsigned index(unsigned x, unsigned y) const { return x * n_ + y; }

  unsigned n_;
  std::uint64_t bits_;
};

}  // namespace mixcons
