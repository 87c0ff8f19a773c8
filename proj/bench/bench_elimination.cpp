#include <chrono>
#include <iostream>
#include <random>

#include "propwheel/matrix.hpp"

using namespace propwheel;

namespace {

// Matrices shaped like the bar differentials: a handful of small integer
// entries per row. Dense random fractions are useless as a benchmark here,
// exact elimination on them drowns in coefficient growth that the real
// workload never exhibits.
QMatrix sparse_matrix(std::mt19937& rng, int rows, int cols, int per_row) {
    std::uniform_int_distribution<int> col(0, cols - 1);
    std::uniform_int_distribution<int> val(1, 4);
    std::uniform_int_distribution<int> sign(0, 1);
    QMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < per_row; ++k)
            m.at(r, col(rng)) = Rat((sign(rng) ? 1 : -1) * val(rng));
    return m;
}

double time_once(QMatrix m, bool parallel) {
    const auto start = std::chrono::steady_clock::now();
    if (parallel)
        m.rref_parallel();
    else
        m.rref_serial();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::mt19937 rng(argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : 99u);
    std::cout << "rows x cols  nnz/row  serial_s  parallel_s  speedup\n";
    for (const auto& [rows, cols, per_row] :
         {std::tuple{100, 140, 6}, std::tuple{200, 260, 6}, std::tuple{300, 400, 6}}) {
        const QMatrix m = sparse_matrix(rng, rows, cols, per_row);
        QMatrix check_s = m;
        QMatrix check_p = m;
        check_s.rref_serial();
        check_p.rref_parallel();
        if (check_s != check_p) {
            std::cerr << "serial and parallel elimination disagree\n";
            return 1;
        }
        const double ts = time_once(m, false);
        const double tp = time_once(m, true);
        std::cout << rows << " x " << cols << "  " << per_row << "  " << ts << "  " << tp
                  << "  " << (tp > 0 ? ts / tp : 0.0) << "\n";
    }
    return 0;
}
