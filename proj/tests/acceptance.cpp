// One line per check suite; exit status 1 when any of them is red.
// Usage: acceptance [report.json]

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "veech/verify/suites.hpp"

using namespace veech;

namespace {

const char* kTitles[] = {
    "central derivation on the hexagon",
    "infinite derivability",
    "direction recognition",
    "generation and substitutions",
    "square torus",
    "hexagon to parallelogram dictionary",
    "Bouw-Moller constants",
    "Bouw-Moller derivation",
    "Teichmueller disk",
    "structural tables",
};

}  // namespace

int main(int argc, char** argv) {
    nlohmann::json all = nlohmann::json::array();
    int red = 0;
    const auto& order = verify::suite_order();
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        verify::Report r;
        std::string error;
        try {
            r = verify::run_suite(order[i], {});
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = error.empty() && r.ok();
        if (!ok) ++red;
        std::string detail;
        if (!error.empty()) detail = "error: " + error;
        for (const auto& p : r.properties)
            if (!p.ok()) detail += (detail.empty() ? "" : "; ") + p.name + " (" + std::to_string(p.pass) + "/" + std::to_string(p.pass + p.fail) + ")";
        std::printf("[%s] %2zu %-40s %6.1fs%s%s\n", ok ? "PASS" : "FAIL", i + 1, kTitles[i], secs, detail.empty() ? "" : "  ", detail.c_str());
        std::fflush(stdout);
        if (error.empty()) all.push_back(r.to_json());
    }
    std::printf("%d of %zu suites pass\n", static_cast<int>(order.size()) - red, order.size());
    if (argc > 1) std::ofstream(argv[1]) << all.dump(2) << "\n";
    return red == 0 ? 0 : 1;
}
