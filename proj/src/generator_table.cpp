#include "propwheel/generator_table.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace propwheel {

namespace {

int parity_sign(long long parity) { return ((parity % 2) + 2) % 2 == 0 ? 1 : -1; }

// Koszul sign of evaluating a tensor product of homogeneous maps on a tensor
// word: applying map b (degree d_b) across the elements fed to maps 1..b-1
// costs (-1)^{d_b * (sum of their input degrees)}.
int graded_tensor_evaluation_sign(const std::vector<int>& map_degrees,
                                  const std::vector<std::vector<int>>& input_degrees) {
    if (map_degrees.size() != input_degrees.size())
        throw std::invalid_argument("map/input block count mismatch");
    long long parity = 0;
    long long prefix = 0;
    for (std::size_t b = 0; b < map_degrees.size(); ++b) {
        parity += static_cast<long long>(map_degrees[b]) * prefix;
        for (int d : input_degrees[b]) prefix += d;
    }
    return parity_sign(parity);
}

}  // namespace

int suspension_composition_sign(int m, int n, int i) {
    if (m < 1 || n < 1 || i < 1 || i > m)
        throw std::invalid_argument("bad arities in suspension composition");
    // Inner layer: id^(i-1) (x) nu_n (x) id^(m-i) applied to m+n-1 letters of
    // homological degree one.
    std::vector<int> map_degrees;
    std::vector<std::vector<int>> inputs;
    for (int b = 1; b <= m; ++b) {
        if (b == i) {
            map_degrees.push_back(1 - n);
            inputs.push_back(std::vector<int>(static_cast<std::size_t>(n), 1));
        } else {
            map_degrees.push_back(0);
            inputs.push_back({1});
        }
    }
    int sign = graded_tensor_evaluation_sign(map_degrees, inputs);
    // Outer layer: nu_m alone on the m resulting letters; a single map block
    // never crosses anything, so no further sign.
    sign *= graded_tensor_evaluation_sign({1 - m}, {std::vector<int>(static_cast<std::size_t>(m), 1)});
    return sign;
}

int GeneratorTable::corolla_slot_sign(int m, int n, int i) {
    if (m < 1 || n < 1 || i < 1 || i > m)
        throw std::invalid_argument("bad arities in corolla_slot_sign");
    return parity_sign(static_cast<long long>(n - 1) * (i - 1));
}

int GeneratorTable::wheel_slot_sign(int m, int n, int i) {
    if (m < 1 || n < 1 || i < 1 || i > m)
        throw std::invalid_argument("bad arities in wheel_slot_sign");
    return parity_sign(static_cast<long long>(n - 1) * i);
}

bool GeneratorTable::validate_against_suspension(int max_arity) {
    for (int m = 1; m <= max_arity; ++m)
        for (int n = 1; n <= max_arity; ++n)
            for (int i = 1; i <= m; ++i)
                if (suspension_composition_sign(m, n, i) != corolla_slot_sign(m, n, i))
                    return false;
    return true;
}

}  // namespace propwheel
