#include "logint/special.hpp"

#include "logint/errors.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace logint {

namespace {

// even_[k] holds B_{2k}.
struct BernoulliTable {
    std::shared_mutex mutex;
    std::vector<mpq_class> even{mpq_class(1)};
};

BernoulliTable& table() {
    static BernoulliTable t;
    return t;
}

// Extends the table through B_{2k} using
// B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j.
void extend_to(BernoulliTable& t, long k) {
    const mpq_class b1(-1, 2);
    for (long kk = static_cast<long>(t.even.size()); kk <= k; ++kk) {
        long n = 2 * kk;
        mpq_class acc = t.even[0];  // C(n+1,0) B_0
        mpz_class c = n + 1;        // C(n+1,1)
        acc += mpq_class(c) * b1;
        // walk j = 2, 4, ..., n-2 updating C(n+1, j) incrementally
        mpz_class binom = c;
        for (long j = 2; j < n; j += 2) {
            binom = binom * (n + 1 - (j - 1)) / j;  // C(n+1, j) from C(n+1, j-1)
            acc += mpq_class(binom) * t.even[static_cast<std::size_t>(j / 2)];
            binom = binom * (n + 1 - j) / (j + 1);  // C(n+1, j+1)
        }
        mpq_class bn = -acc / (n + 1);
        bn.canonicalize();
        t.even.push_back(bn);
    }
}

}  // namespace

Rational bernoulli(long n) {
    if (n < 0) throw DomainError("Bernoulli index must be nonnegative");
    if (n == 1) return Rational(-1, 2);
    if (n % 2 == 1) return Rational(0);
    long k = n / 2;
    auto& t = table();
    {
        std::shared_lock lock(t.mutex);
        if (static_cast<long>(t.even.size()) > k) return Rational(t.even[static_cast<std::size_t>(k)]);
    }
    std::unique_lock lock(t.mutex);
    extend_to(t, k);
    return Rational(t.even[static_cast<std::size_t>(k)]);
}

}  // namespace logint
