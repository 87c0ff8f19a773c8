#include "propwheel/koszul.hpp"

#include <stdexcept>

namespace propwheel {

int koszul_sign(const Permutation& p, const GradedWord& degrees) {
    if (p.size() != static_cast<int>(degrees.size()))
        throw std::invalid_argument("arity mismatch between permutation and degree word");
    int parity = 0;
    for (int a = 1; a <= p.size(); ++a)
        for (int b = a + 1; b <= p.size(); ++b)
            if (p(a) > p(b)) parity += degrees[a - 1] * degrees[b - 1];
    return parity % 2 == 0 ? 1 : -1;
}

int koszul_move_sign(const GradedWord& degrees, int from, int to) {
    int n = static_cast<int>(degrees.size());
    if (from < 1 || from > n || to < 1 || to > n)
        throw std::invalid_argument("koszul_move_sign position out of range");
    int parity = 0;
    if (from < to) {
        for (int k = from + 1; k <= to; ++k) parity += degrees[from - 1] * degrees[k - 1];
    } else {
        for (int k = to; k < from; ++k) parity += degrees[from - 1] * degrees[k - 1];
    }
    return parity % 2 == 0 ? 1 : -1;
}

}  // namespace propwheel
