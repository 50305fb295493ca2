// Small tour of the library: a Kreweras complement, a boxed-star inverse,
// free Poisson moments, a product of free elements and a compression.

#include <iostream>

#include <ncfree/ncfree.hpp>

using namespace ncfree;

int main() {
    const auto pi = parse_nc_partition("1,4,8|2,3|5,6|7", 8);
    std::cout << "K(" << format_partition(pi) << ") = " << format_partition(kreweras(pi)) << "\n";

    const auto m = boxstar_inverse(zeta(1, 6));
    std::cout << "Moeb coefficients:";
    for (int k = 1; k <= 6; ++k) std::cout << " " << to_string(m.coef(Word(std::vector<int>(k, 1))));
    std::cout << "\n";

    // Free Poisson(1, 1) as the square of a standard semicircular.
    const auto fp = free_poisson(1, 1, 5);
    std::cout << "free Poisson moments:";
    for (int k = 1; k <= 5; ++k) std::cout << " " << to_string(fp.moment(Word(std::vector<int>(k, 1))));
    std::cout << "\n";

    // Product of a free pair: semicircular times free Poisson.
    const auto ab = multiply_free_tuples(semicircular(1, 6), free_poisson(1, 1, 6));
    std::cout << "moments of a b:";
    for (int k = 1; k <= 6; ++k) std::cout << " " << to_string(ab.moment(Word(std::vector<int>(k, 1))));
    std::cout << "\n";

    const auto compressed = compress(semicircular(1, 6), Scalar(1, 4));
    std::cout << "semicircular compressed by 1/4 has variance " << to_string(compressed.moment({1, 1})) << "\n";
}
