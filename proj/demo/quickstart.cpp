// Small tour of the library: a distribution table, its generating function,
// one bijection and a real-rootedness check.

#include <iostream>

#include "bdes/bdes.hpp"

int main() {
    using namespace bdes;

    const auto pats = PatternSet::parse("231");
    for (int n = 0; n <= 6; ++n) {
        auto t = distribution_table(n, pats, StatName::Kind::bdes);
        std::cout << "n=" << n << ":";
        for (auto c : t.counts) std::cout << ' ' << c;
        std::cout << '\n';
    }

    // B(t,x;123) through x^6
    std::cout << expand(GfKind::B123, 6).to_string();

    const auto pi = Permutation::parse("31254");
    std::cout << pi.to_string() << " -> " << omega_f(pi).steps << '\n';

    auto poly = UniPoly::from_integers(distribution_table(8, pats, StatName::Kind::bdes).counts);
    std::cout << poly.to_string() << (is_real_rooted(poly) ? " is" : " is not") << " real-rooted\n";
}
