#include "monocert/rng.hpp"

namespace monocert {

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) { return next() % bound; }

Rational Rng::rational(long max_num, long max_den) {
    long num = static_cast<long>(below(static_cast<std::uint64_t>(2 * max_num + 1))) - max_num;
    long den = static_cast<long>(below(static_cast<std::uint64_t>(max_den))) + 1;
    return rat(num, den);
}

FiniteVec Rng::finite_vec(int max_support, long max_num, long max_den) {
    FiniteVec v;
    for (int n = 1; n <= max_support; ++n) {
        if (below(2) == 0) continue;
        v.set(n, rational(max_num, max_den));
    }
    return v;
}

}  // namespace monocert
