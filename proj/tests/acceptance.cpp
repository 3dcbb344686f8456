// One PASS/FAIL line per acceptance criterion. All comparisons inside the
// properties are exact; the only numeric thresholds are the counts below.

#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include "padic/verify.hpp"

using namespace padic;

namespace {

// Minimum structured-grid size per map for the fixed-locus criterion.
constexpr std::size_t kMinGridDisks = 300;
// Families that must be verified per prime for the common-fixed-point criterion.
constexpr std::size_t kMinFamilies = 20;

struct Task {
    std::string id;
    unsigned long p;
    std::optional<long> disc;
};

struct Outcome {
    bool ok = true;
    std::vector<std::string> details;
    std::vector<PropertyResult> results;
};

Outcome run(const std::vector<Task>& tasks, std::uint64_t seed = 0) {
    Outcome o;
    for (const auto& t : tasks) {
        SuiteConfig cfg;
        cfg.p = t.p;
        cfg.disc = t.disc;
        cfg.seed = seed;
        PropertyResult r = run_property(t.id, cfg);
        std::string where = t.id + "@p=" + std::to_string(t.p) + ",D=" + std::to_string(t.disc.value_or(default_disc(t.p)));
        if (r.status != Status::PASS) {
            o.ok = false;
            o.details.push_back(where + " " + to_string(r.status) + ": " + (r.counterexample.empty() ? r.note : r.counterexample));
        }
        o.results.push_back(r);
    }
    return o;
}

std::vector<Task> at_primes(const std::string& id, std::initializer_list<unsigned long> ps) {
    std::vector<Task> v;
    for (auto p : ps) v.push_back({id, p, std::nullopt});
    return v;
}

std::vector<Task> concat(std::initializer_list<std::vector<Task>> parts) {
    std::vector<Task> v;
    for (const auto& part : parts) v.insert(v.end(), part.begin(), part.end());
    return v;
}

std::size_t total_trials(const Outcome& o) {
    std::size_t n = 0;
    for (const auto& r : o.results) n += r.trials;
    return n;
}

int failures = 0;

void report(int number, const std::string& title, const Outcome& o, const std::string& extra = "") {
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << total_trials(o)
              << " trials" << (extra.empty() ? "" : "; " + extra) << ")\n";
    for (const auto& d : o.details) std::cout << "     " << d << "\n";
}

}  // namespace

int main() {
    const auto all = {2ul, 3ul, 5ul};

    report(1, "unitary equivalences", run(at_primes("moebius.unitary_equivalences", all)));
    report(2, "Gauss displacement equals 2 log_p |g|", run(at_primes("berkovich.gauss_displacement", all)));
    report(3, "Lipschitz bound and sharp witness", run(at_primes("moebius.lipschitz", all)));

    {
        Outcome o = run(concat({at_primes("moebius.rho0_exact", {3, 5}), at_primes("moebius.rho0_bracket_p2", {2})}));
        std::string note;
        for (const auto& r : o.results) {
            if (r.id == "moebius.rho0_bracket_p2") note = "p=2: " + r.note;
        }
        report(4, "rho0(g, I) = M(g) for p = 3, 5; M/2 <= rho0 <= 2M for p = 2", o, note);
    }

    report(5, "epsilon, epsilon1, epsilon2 and |g - I| inequalities",
           run(concat({at_primes("moebius.epsilon", all), at_primes("moebius.epsilon1", all),
                       at_primes("moebius.epsilon2", all), at_primes("moebius.rho0_vs_norm", all)})));
    report(6, "distance to the unitary group is 0 or 1 with witnesses", run(at_primes("moebius.distance_to_unitary", all)));

    {
        std::vector<Task> tasks;
        for (unsigned long p : {3ul, 2ul}) {
            for (long d : {-1L, -3L, static_cast<long>(p)}) tasks.push_back({"geometry.decomposition", p, d});
        }
        Outcome o = run(tasks);
        std::size_t unsupported = 0;
        for (const auto& r : o.results) unsupported += r.unsupported;
        report(7, "g = u f decomposition postconditions", o, std::to_string(unsupported) + " draws needed an extension");
    }

    report(8, "involution census reproduces the classes", run(at_primes("geometry.involution_census", {2, 3})));

    {
        Outcome o = run(at_primes("geometry.fixed_locus", all));
        std::size_t smallest = static_cast<std::size_t>(-1);
        std::regex grid("at least ([0-9]+) disks per map");
        for (const auto& r : o.results) {
            std::smatch m;
            if (std::regex_search(r.note, m, grid)) {
                smallest = std::min<std::size_t>(smallest, std::stoul(m[1]));
            } else {
                smallest = 0;
            }
        }
        if (smallest < kMinGridDisks) {
            o.ok = false;
            o.details.push_back("grid has only " + std::to_string(smallest) + " disks per map");
        }
        report(9, "fixed-locus descriptors match the act oracle with sharp boundary", o,
               "smallest grid " + std::to_string(smallest) + " disks");
    }

    {
        Outcome o = run(at_primes("groups.common_fixed_point", all));
        for (const auto& r : o.results) {
            std::size_t verified = r.trials - r.unsupported;
            if (verified < kMinFamilies) {
                o.ok = false;
                o.details.push_back("only " + std::to_string(verified) + " families verified");
            }
        }
        report(10, "common fixed point for all-elliptic families, NotAllElliptic on injection", o);
    }

    report(11, "all-ones continued fraction: gaps 1, divergence certificate, nested values",
           run(concat({at_primes("cfrac.unit_case", all), at_primes("cfrac.nested_oracle", all)})));
    report(12, "three-point limits and rho0 convergence", run(at_primes("moebius.three_point_convergence", all)));

    {
        SuiteConfig cfg;
        cfg.p = 3;
        cfg.seed = 12345;
        SuiteReport a = run_suite(cfg);
        SuiteReport b = run_suite(cfg);
        Outcome o;
        o.ok = a.text() == b.text() && a.to_json().dump() == b.to_json().dump();
        if (!o.ok) o.details.push_back("transcripts differ");
        for (const auto& r : a.results) o.results.push_back(r);
        report(13, "verify-suite transcript is byte-identical across runs", o,
                std::to_string(a.text().size()) + " bytes, suite " + std::to_string(a.count(Status::PASS)) + " passed " +
                    std::to_string(a.count(Status::FAIL)) + " failed");
    }

    std::cout << "acceptance: " << (13 - failures) << " of 13 criteria passed\n";
    return failures == 0 ? 0 : 1;
}
