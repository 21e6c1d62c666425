// Acceptance suite: runs every certification criterion end to end and
// prints one PASS/FAIL line per criterion. All tolerances are exact
// integer equalities. Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "symtc/bounds.hpp"
#include "symtc/pipeline.hpp"
#include "test_helpers.hpp"

using namespace symtc;
using symtc::testing::sset_of;

namespace {

int g_failures = 0;

class Criterion {
public:
    explicit Criterion(std::string title) : title_(std::move(title)) {}

    void require(bool ok, const std::string& what) {
        if (!ok) {
            failed_.push_back(what);
        }
    }

    template <typename T>
    void require_eq(const T& got, const T& expect, const std::string& what) {
        if (!(got == expect)) {
            std::ostringstream s;
            s << what << " (got " << render(got) << ", expected " << render(expect) << ")";
            failed_.push_back(s.str());
        }
    }

    ~Criterion() {
        if (failed_.empty()) {
            std::cout << "[PASS] " << title_ << "\n";
        } else {
            ++g_failures;
            std::cout << "[FAIL] " << title_ << "\n";
            for (const auto& f : failed_) std::cout << "       - " << f << "\n";
        }
    }

private:
    template <typename T>
    static std::string render(const T& v) {
        std::ostringstream s;
        s << v;
        return s.str();
    }
    static std::string render(const std::vector<int>& v) {
        std::ostringstream s;
        s << "(";
        for (size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
        s << ")";
        return s.str();
    }

    std::string title_;
    std::vector<std::string> failed_;
};

void criterion_1_spheres() {
    Criterion c("criterion 1: sphere certification, interval [2,2] for n = 1, 2, 3");
    using clock = std::chrono::steady_clock;
    for (int n = 1; n <= 3; ++n) {
        auto t0 = clock::now();
        SquareRings r = build_square_rings(sset_of(make_sphere(n)));
        BoundsReport rep = bounds_report(r, n - 1, true, "sphere:" + std::to_string(n));
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        c.require_eq(rep.interval_lo, 2, "sphere:" + std::to_string(n) + " interval low");
        c.require_eq(rep.interval_hi, 2, "sphere:" + std::to_string(n) + " interval high");
        if (n == 1) {
            // the kernel route is insufficient; the relative route certifies
            c.require_eq(rep.sigma_kernel_lower, 1, "sphere:1 kernel bound");
            c.require_eq(rep.sigma_relative_lower, 2, "sphere:1 relative bound");
        } else {
            c.require_eq(rep.sigma_kernel_lower, 2,
                         "sphere:" + std::to_string(n) + " kernel bound");
        }
        double budget = (n == 3) ? 300.0 : 5.0;
        c.require(secs < budget, "sphere:" + std::to_string(n) + " runtime " +
                                     std::to_string(secs) + "s exceeds budget");
    }
}

void criterion_2_moebius() {
    Criterion c("criterion 2: Moebius pair structure of (SP^2(S^1), dS^1)");
    SquareRings r = build_square_rings(sset_of(make_sphere(1)));
    c.require_eq(r.ring_sp2->betti_vector(), std::vector<int>{1, 1, 0}, "betti SP2(S1)");
    c.require_eq(r.ring_dx->betti_vector(), std::vector<int>{1, 1}, "betti dX");
    c.require(r.restriction.mats[1].rows() == 1 && r.restriction.mats[1].cols() == 1 &&
                  !r.restriction.mats[1].get(0, 0),
              "restriction H^1(SP2) -> H^1(dX) is zero");
    c.require_eq(cup_length(GradedSubspace::positive_part(r.ring_sp2)), 1,
                 "absolute positive-degree cup-length");
    const F2Matrix& t = r.ring_relative->tensor(1, 1);
    c.require(t.rows() == 1 && t.cols() == 1 && t.get(0, 0),
              "relative product H^1 x H^1 -> H^2 is nonzero");
}

void criterion_3_euler() {
    Criterion c("criterion 3: euler identity chi(SP^2 X) = (chi(X)^2 + chi(X))/2");
    auto check = [&](const Complex& cx, const std::string& label) {
        auto x = sset_of(cx);
        EquivariantPair sq = symmetric_square(x);
        int chi = euler_characteristic(*x);
        c.require_eq(euler_characteristic(*sq.quotient), (chi * chi + chi) / 2,
                     label + " euler identity");
    };
    for (const char* name :
         {"point", "interval", "sphere:0", "sphere:1", "sphere:2", "sphere:3", "torus", "rp2"})
        check(generate(name), name);
    std::mt19937 rng(987654321);
    for (int trial = 0; trial < 20; ++trial)
        check(symtc::testing::random_complex(rng), "random#" + std::to_string(trial));
}

void criterion_4_oracle() {
    Criterion c("criterion 4: cup_length equals brute-force tuple search");
    auto check = [&](const GradedSubspace& v, const std::string& label) {
        int dim = 0;
        for (size_t k = 1; k < v.spans.size(); ++k) dim += v.spans[k].rows();
        if (dim > 6) return;  // outside the criterion's size envelope
        c.require_eq(cup_length(v), cup_length_brute_force(v), label);
    };
    for (const char* name : {"point", "sphere:1", "sphere:2", "torus", "rp2"}) {
        SquareRings r = build_square_rings(sset_of(generate(name)));
        std::string base(name);
        check(GradedSubspace::positive_part(r.ring_x), base + " H*(X) positive part");
        check(GradedSubspace::positive_part(r.ring_sp2), base + " H*(SP2) positive part");
        check(GradedSubspace::kernel_of(r.restriction), base + " kernel of restriction");
        check(GradedSubspace::positive_part(r.ring_relative), base + " relative positive part");
    }
}

void criterion_5_exactness() {
    Criterion c("criterion 5: exactness image(rel->abs) = ker(restriction), kernel <= relative");
    for (const char* name : {"point", "interval", "sphere:1", "sphere:2", "sphere:3", "torus", "rp2"}) {
        SquareRings r = build_square_rings(sset_of(generate(name)));
        c.require(exactness_holds(r.rel_to_abs, r.restriction),
                  std::string(name) + " exactness in every grade");
        if (component_count(*r.x) == 1)
            c.require(lower_bound_sigma_kernel(r) <= lower_bound_sigma_relative(r),
                      std::string(name) + " kernel bound <= relative bound");
    }
}

void criterion_6_formula() {
    Criterion c("criterion 6: upper bound formula values");
    for (int n = 1; n <= 10; ++n)
        c.require_eq(upper_bound_sigma(n, n - 1), 2,
                     "upper(n, n-1) for n=" + std::to_string(n));
    for (int m = 1; m <= 5; ++m)
        c.require_eq(upper_bound_sigma(2 * m, 1), 2 * m,
                     "upper(2m, 1) for m=" + std::to_string(m));
}

void criterion_7_classical() {
    Criterion c("criterion 7: classical comparisons");
    c.require_eq(lower_bound_tc(sset_of(make_torus())), 2, "zero-divisor bound of the torus");
    BoundsReport a = bounds_report(sset_of(make_sphere(2)), 1, true, "S2");
    BoundsReport b = bounds_report(sset_of(symtc::testing::make_octahedron()), 1, true, "S2");
    c.require(a == b, "two triangulations of S^2 produce identical reports");
    c.require_eq(report_to_json(a), report_to_json(b), "identical serialized reports");
}

}  // namespace

int main() {
    criterion_1_spheres();
    criterion_2_moebius();
    criterion_3_euler();
    criterion_4_oracle();
    criterion_5_exactness();
    criterion_6_formula();
    criterion_7_classical();
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
