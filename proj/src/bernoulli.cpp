#include "hermlat/bernoulli.hpp"

#include <map>
#include <mutex>

namespace hermlat {

namespace {

Int binomial(long n, long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// B_0 .. B_j with B_1 = -1/2.
std::vector<Rat> bernoulli_numbers(int j) {
    std::vector<Rat> B(j + 1);
    B[0] = 1;
    for (int m = 1; m <= j; ++m) {
        Rat acc(0);
        for (int k = 0; k < m; ++k) acc += Rat(binomial(m + 1, k)) * B[k];
        B[m] = -acc / Rat(m + 1);
    }
    return B;
}

}  // namespace

std::vector<Rat> bernoulli_poly(int j) {
    if (j < 0) throw std::invalid_argument("bernoulli_poly: j must be nonnegative");
    auto B = bernoulli_numbers(j);
    std::vector<Rat> coeff(j + 1);
    for (int k = 0; k <= j; ++k) coeff[k] = Rat(binomial(j, k)) * B[j - k];
    return coeff;
}

Rat bernoulli_number_at_one(int j) {
    if (j < 1) throw std::invalid_argument("bernoulli_number_at_one: j must be positive");
    if (j == 1) return make_rat(1, 2);
    auto B = bernoulli_numbers(j);
    return B[j];  // B_j(1) = B_j for j >= 2
}

Rat gen_bernoulli(const Field& F, int j) {
    if (j < 1) throw std::invalid_argument("gen_bernoulli: j must be positive");
    if (j % 2 == 0) return bernoulli_number_at_one(j);

    static std::map<std::pair<long, int>, Rat> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({F.disc, j});
        if (it != cache.end()) return it->second;
    }

    // Sum over one common denominator: with coefficients c_k of B_j,
    //   B_j(a/d) = sum_k c_k a^k d^(j-k) / d^j,
    // so |d|^(j-1) * sum chi(a) B_j(a/d) = (integer sum) / (d * lcm of c_k dens).
    long d = F.abs_disc();
    auto coeff = bernoulli_poly(j);
    Int den_lcm(1);
    for (auto& c : coeff) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den(c).get_mpz_t());
    std::vector<Int> scaled(coeff.size());
    for (size_t k = 0; k < coeff.size(); ++k) {
        Rat s = coeff[k] * Rat(den_lcm);
        scaled[k] = num(s);
    }
    Int total(0);
    Int D(d);
    for (long a = 1; a <= d; ++a) {
        int ca = chi_ext(F, Int(a));
        if (ca == 0) continue;
        Int poly(0);
        Int apow(1);
        for (int k = 0; k <= j; ++k) {
            poly += scaled[k] * apow * int_pow(D, j - k);
            apow *= a;
        }
        total += ca * poly;
    }
    Rat value = make_rat(total, Int(d) * den_lcm);

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(F.disc, j), value);
    return value;
}

Rat l_value_neg(const Field& F, int j) {
    if (j < 1) throw std::invalid_argument("l_value_neg: j must be positive");
    return rat_abs(gen_bernoulli(F, j)) / Rat(j);
}

}  // namespace hermlat
