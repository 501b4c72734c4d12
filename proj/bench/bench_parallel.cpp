#include "flatgraph/generate.hpp"
#include "flatgraph/wbw.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace flatgraph;

namespace {

double ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, int vertices, double serial, double parallel) {
    std::printf("%-28s %6d %10.1f ms %10.1f ms %6.2fx\n", name, vertices, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 400;
    Rand r(7);
    PlaneMap m = random_triangulation(r, n);
    std::printf("random triangulation: %d vertices, %d edges\n\n", m.vertex_count,
                m.edge_count());

    std::vector<std::vector<int>> ds, dp;
    double ts = ms([&] { ds = wbw_all_pairs_serial(m); });
    double tp = ms([&] { dp = wbw_all_pairs(m); });
    if (ds != dp) {
        std::fprintf(stderr, "wbw_all_pairs mismatch\n");
        return 1;
    }
    row("wbw_all_pairs", m.vertex_count, ts, tp);

    for (int lambda : {2, 3, 4}) {
        AbstractGraph gs, gp;
        char name[32];
        std::snprintf(name, sizeof name, "lambda_power (lambda=%d)", lambda);
        ts = ms([&] { gs = lambda_power_serial(m, lambda); });
        tp = ms([&] { gp = lambda_power(m, lambda); });
        if (!(gs == gp)) {
            std::fprintf(stderr, "lambda_power mismatch at lambda=%d\n", lambda);
            return 1;
        }
        row(name, m.vertex_count, ts, tp);
    }
    return 0;
}
