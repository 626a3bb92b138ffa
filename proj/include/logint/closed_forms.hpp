#pragma once

#include "logint/numeric.hpp"
#include "logint/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace logint {

inline constexpr long max_family_m = 64;

// cos((2k+1) pi / m)
BigReal phi(long m, long k, const Precision& p);
// Number of k values entering the finite sums: floor(m/2) for even m,
// (m-1)/2 for odd m.
long phi_count(long m);

// sum_k log(1 - 2x(1-x)(phi_k + 1)) - m log x, 0 < x < 1.
BigReal lemma1_rhs(long m, const BigReal& x, const Precision& p);

// Right-hand sides of the family identities. m is in [1, 64].
BigReal theorem1_rhs(long m, const Rational& q, const Precision& p);  // q > 1
BigReal aux_a_rhs(long m, const Rational& q, const Precision& p);     // q > 1
BigReal aux_b_rhs(const Rational& q, const Precision& p);             // q > 1
BigReal aux_c_rhs(const Rational& q, const Precision& p);             // q > 1
BigReal theorem24_rhs(long m, const Precision& p);
BigReal theorem25_rhs(long m, const Precision& p);
BigReal theorem26_rhs(long m, const Precision& p);
BigReal theorem27_rhs(const Rational& q, const Precision& p);  // q > 1/2
BigReal theorem28_rhs(const Rational& q, const Precision& p);  // q > 1/2
BigReal theorem29_rhs(long m, const Precision& p);             // m odd
BigReal theorem210_rhs(long m, const Precision& p);
BigReal theorem211_rhs(long m, const Precision& p);

// Throws DomainError unless args are a valid parameter point of the family.
void check_family_args(std::string_view name, const std::vector<Rational>& args);
// Dispatch by family name (see family_table()).
BigReal evaluate_family(std::string_view name, const std::vector<Rational>& args, const Precision& p);

enum class BinomKind { C2_LOG, C3_LOG, C42_LOG, GF_H2N_HN, GF_CATALAN, GF_ODD_RECIP };
enum class BinomMode { direct, closed };

BinomKind parse_binom_kind(std::string_view name);
std::string_view binom_kind_name(BinomKind k);

//   C2_LOG       sum_{p>=1} C(2p,p) x^p / p
//   C3_LOG       sum_{p>=1} C(3p,p) x^p / p
//   C42_LOG      sum_{n>=1} C(4n,2n) x^n / n
//   GF_H2N_HN    sum_{k>=0} C(2k,k) (H_2k - H_k) x^k
//   GF_CATALAN   sum_{n>=0} C(2n,n) x^n / (n+1)
//   GF_ODD_RECIP sum_{k>=1} x^k / ((2k+1) C(2k,k))
// Throws DomainError outside the region of convergence.
BigReal binom_series(BinomKind kind, const BigReal& x, const Precision& p, BinomMode mode);

}  // namespace logint
