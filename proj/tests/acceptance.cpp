// Acceptance run: the full suite with seed 7 on 4 threads and again on 1
// thread, one PASS/FAIL line per criterion, the last comparing the two reports.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <orient/orient.hpp>

int main()
{
    using namespace orient;
    const std::map<int, double> budget{{1, 30}, {2, 120}, {3, 120}, {4, 300}, {5, 600}, {6, 120},
                                       {7, 60}, {8, 60},  {9, 60},  {10, 120}, {11, 180}};
    suite_options opt;
    opt.full = true;
    opt.seed = 7;
    opt.threads = 4;
    suite_report four, one;
    try {
        four = run_suite(opt);
        opt.threads = 1;
        one = run_suite(opt);
    } catch (const std::exception& e) {
        std::cout << "FAIL suite could not run: " << e.what() << "\n";
        return 2;
    }

    bool all = true;
    for (const auto& c : four.checks) {
        bool in_time = c.seconds <= budget.at(c.id);
        bool pass = c.pass && in_time;
        all = all && pass;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", c.seconds, budget.at(c.id));
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << " (" << timing << ")";
        if (!in_time) std::cout << " over budget";
        std::cout << "\n";
        if (!c.counterexample.empty()) std::cout << "     counterexample: " << c.counterexample << "\n";
    }
    auto a = format_report(four, true);
    auto b = format_report(one, true);
    bool same = a == b && format_report(four, false) == format_report(one, false);
    all = all && same;
    std::cout << (same ? "PASS" : "FAIL") << " criterion 12 determinism (--full --seed 7, threads 4 vs 1: "
              << (same ? "byte-identical reports" : "reports differ") << ")\n";
    std::cout << "\n" << format_report(four, false);
    return all ? 0 : 1;
}
