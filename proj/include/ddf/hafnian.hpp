#ifndef DDF_HAFNIAN_HPP
#define DDF_HAFNIAN_HPP

#include <utility>
#include <vector>

#include "ddf/exact.hpp"
#include "ddf/objects.hpp"

namespace ddf {

// Upper triangular array T = (x_ij), 1 <= i < j <= 2n; n(2n-1) entries.
class UpperTriangularArray {
 public:
  explicit UpperTriangularArray(int half_size);

  // Array with constant rows x_ij := x_i (x has length 2n-1).
  static UpperTriangularArray constant_rows(const std::vector<ExactInt>& x);

  int half_size() const { return n_; }
  const ExactInt& at(int i, int j) const;  // 1-based, i < j
  ExactInt& at(int i, int j);

 private:
  int n_;
  std::vector<ExactInt> entries_;
};

// Unsigned matching sum: over all (2n-1)!! matchings, the product of the
// matched entries. Iterates matchings through the family enumerator so each
// term is auditable.
ExactInt hafnian_bruteforce(const UpperTriangularArray& t);

// Signed matching sum; the sign is the parity of a(1)b(1)...a(n)b(n).
ExactInt pfaffian_bruteforce(const UpperTriangularArray& t);

// Hafnian of a constant-row array from the row values alone: the sum over
// increasing sequences a with 1 <= a(i) <= 2i-1 of prod (2i - a(i)) x_{a(i)}.
ExactInt hafnian_constant_rows(const std::vector<ExactInt>& x);

// Pfaffian of a constant-row array: x1 x3 x5 ... x_{2n-1}.
ExactInt pfaffian_constant_rows(const std::vector<ExactInt>& x);

// Position code a (upstep positions) and height code b (upstep top heights)
// of an unlabeled Dyck path; b(i) = 2i - a(i).
std::pair<std::vector<int>, std::vector<int>> dyck_codes(
    const std::string& dyck_steps);

// Sign of the permutation a(1)b(1)...a(n)b(n) by inversion count.
int matching_sign(const PerfectMatching& m);

}  // namespace ddf

#endif
