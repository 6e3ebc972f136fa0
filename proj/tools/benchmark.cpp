// Timing harness: parallel stripe enumeration vs the serial reference,
// the maximality test vs the brute-force overform search, and the density
// truncation loop.  Exits nonzero on any cross-check disagreement.
#include <chrono>
#include <iomanip>
#include <iostream>

#include "thuegap/density.hpp"
#include "thuegap/forms.hpp"
#include "thuegap/int_util.hpp"
#include "thuegap/solve.hpp"

using namespace thuegap;

namespace {

template <typename F>
double seconds(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void row(const std::string& name, double parallel, double serial) {
    std::cout << std::left << std::setw(34) << name << std::right << std::fixed
              << std::setprecision(3) << std::setw(9) << parallel << " s"
              << std::setw(9) << serial << " s";
    if (serial > 0 && parallel > 0)
        std::cout << "   x" << std::setprecision(2) << serial / parallel;
    std::cout << "\n";
}

}  // namespace

int main() {
    int failures = 0;
    std::cout << std::left << std::setw(34) << "benchmark" << std::right
              << std::setw(11) << "primary" << std::setw(11) << "reference" << "\n";

    {
        BinaryForm F({1, 0, 0, 1});
        mpz_class h = 28, B = 1500;
        SolutionSet a, b;
        double tp = seconds([&] { a = enumerate_solutions(F, h, B); });
        double ts = seconds([&] { b = enumerate_solutions_reference(F, h, B); });
        if (a.solutions.size() != b.solutions.size()) {
            std::cout << "MISMATCH: enumeration disagrees\n";
            ++failures;
        }
        row("box search (cubic, box 1500)", tp, ts);
    }
    {
        BinaryForm F({2, -3, 0, 5, -1, 4});
        mpz_class h = 17, B = 400;
        SolutionSet a, b;
        double tp = seconds([&] { a = enumerate_solutions(F, h, B); });
        double ts = seconds([&] { b = enumerate_solutions_reference(F, h, B); });
        if (a.solutions.size() != b.solutions.size()) {
            std::cout << "MISMATCH: enumeration disagrees\n";
            ++failures;
        }
        row("box search (quintic, box 400)", tp, ts);
    }
    {
        Rng rng(20260818);
        std::vector<BinaryForm> forms;
        for (int i = 0; i < 1500; ++i) {
            std::vector<mpz_class> c(4);
            for (auto& x : c) x = mpz_class(static_cast<long>(rng.range(-30, 30)));
            if (c[0] == 0) c[0] = 1;
            forms.emplace_back(c);
        }
        std::vector<mpz_class> ps = {2, 3, 5};
        int fast_count = 0, ref_count = 0;
        double tp = seconds([&] {
            for (const auto& F : forms)
                if (discriminant(F) != 0)
                    for (const auto& p : ps) fast_count += is_maximal_at_p(F, p);
        });
        double ts = seconds([&] {
            for (const auto& F : forms)
                if (discriminant(F) != 0)
                    for (const auto& p : ps) ref_count += is_maximal_at_p_reference(F, p);
        });
        if (fast_count != ref_count) {
            std::cout << "MISMATCH: maximality disagrees (" << fast_count << " vs "
                      << ref_count << ")\n";
            ++failures;
        }
        row("maximality (1500 cubics x 3 p)", tp, ts);
    }
    {
        DensityValue d;
        double t = seconds(
            [&] { d = density_lower_bound(3, 4, DensityKind::g_cubic, 100000); });
        row("density G-cubic cutoff 1e5", t, 0.0);
        if (!(d.truncated_product.lo > 0)) {
            std::cout << "MISMATCH: density lower bound not positive\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
