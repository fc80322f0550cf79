// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion re-derives its expectations independently
// of the construction path it checks (brute-force oracles, value scans,
// residue certificates).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ivpoly/construct.hpp"
#include "ivpoly/json_io.hpp"

using namespace ivpoly;

namespace {

struct Harness {
    int failures = 0;

    void run(const std::string& name, double time_limit_s,
             const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && time_limit_s > 0 && elapsed > time_limit_s) {
            ok = false;
            detail = "time limit exceeded";
        }
        if (!ok) ++failures;
        std::printf("%s %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), elapsed,
                    detail.empty() ? "" : " — ", detail.c_str());
        std::fflush(stdout);
    }
};

std::set<FactorizationKey> keys_of(const std::vector<Factorization>& facts,
                                   const FactoredInput& input) {
    std::set<FactorizationKey> keys;
    for (const Factorization& f : facts) keys.insert(canonical_key(f, input));
    return keys;
}

bool prescribed_criterion(const std::vector<int>& ms, const std::vector<int>& want_lengths,
                          int want_degree, std::string& detail) {
    PrescribedLengthsArtifact art = construct_prescribed(LengthSpec(ms));
    if (want_degree > 0 && art.H.degree() != want_degree) {
        detail = "degree " + std::to_string(art.H.degree());
        return false;
    }
    if (art.lengths != want_lengths) {
        detail = "unexpected lengths";
        return false;
    }
    if (static_cast<int>(art.factorizations.size()) != static_cast<int>(want_lengths.size())) {
        detail = "factorization count " + std::to_string(art.factorizations.size());
        return false;
    }
    FactoredInput input{art.lift->lifted, art.design->params.c, {}};
    input.c_factorization.push_back({art.design->params.p, 1});
    for (const PrimePower& pp : art.design->params.extra_factors)
        input.c_factorization.push_back(pp);
    auto oracle = enumerate_factorizations_bruteforce(input);
    if (keys_of(oracle, input) != keys_of(art.factorizations, input)) {
        detail = "oracle mismatch";
        return false;
    }
    Report rep = verify_prescribed(art);
    if (!rep.all_passed()) {
        for (const Check& c : rep.checks)
            if (!c.passed) detail += c.name + " ";
        return false;
    }
    return true;
}

ResidueDesign built_design(const std::vector<int>& ms, const ChooseOptions& opts = {}) {
    LengthSpec spec(ms);
    return build_design(spec, choose_parameters(spec, opts));
}

}  // namespace

int main() {
    Harness h;

    h.run("criterion 1: prescribed lengths {2,2}, degree 7, oracle-exact", 10.0,
          [&](std::string& detail) {
              if (!prescribed_criterion({1, 1}, {2, 2}, 7, detail)) return false;
#ifdef IVPOLY_CLI_PATH
              std::string cmd = std::string(IVPOLY_CLI_PATH) + " construct-lengths 2,2 2>&1";
              FILE* pipe = popen(cmd.c_str(), "r");
              if (!pipe) {
                  detail = "cannot spawn CLI";
                  return false;
              }
              std::string out;
              char buf[512];
              while (fgets(buf, sizeof buf, pipe)) out += buf;
              if (pclose(pipe) != 0 ||
                  out.find("n=2 lengths=[2,2] degree=7 factorizations=2") == std::string::npos) {
                  detail = "CLI summary mismatch: " + out;
                  return false;
              }
#endif
              return true;
          });

    h.run("criterion 2: prescribed lengths {2,3}, oracle-exact", 60.0, [&](std::string& detail) {
        return prescribed_criterion({1, 2}, {2, 3}, 11, detail);
    });

    h.run("criterion 3: prescribed lengths {2,2,3}, N=10, p=13, oracle-exact", 600.0,
          [&](std::string& detail) {
              LengthSpec spec({1, 1, 2});
              if (compute_N(spec) != 10) {
                  detail = "N != 10";
                  return false;
              }
              DesignParams params = choose_parameters(spec);
              if (params.p != 13) {
                  detail = "p != 13";
                  return false;
              }
              PrescribedLengthsArtifact art = construct_prescribed(spec);
              if (art.lift->lifted.size() != 5) {
                  detail = "expected 5 parts";
                  return false;
              }
              return prescribed_criterion({1, 1, 2}, {2, 2, 3}, 0, detail);
          });

    h.run("criterion 4: fixed-divisor oracle equivalence, 200 random polynomials", 10.0,
          [&](std::string& detail) {
              std::mt19937_64 rng(0xacceb7);
              std::uniform_int_distribution<int> deg(0, 8);
              std::uniform_int_distribution<long> coeff(-10000, 10000);
              for (int t = 0; t < 200; ++t) {
                  std::vector<Int> coeffs(deg(rng) + 1);
                  for (Int& c : coeffs) c = coeff(rng);
                  ZPoly g(std::move(coeffs));
                  if (g.is_zero()) {
                      --t;
                      continue;
                  }
                  if (fixed_divisor(g) != fixed_divisor_bruteforce(g, 40)) {
                      detail = "oracle mismatch on sample " + std::to_string(t);
                      return false;
                  }
                  Int content = g.content();
                  std::vector<Int> prim = g.coeffs();
                  for (Int& c : prim) c /= content;
                  ZPoly gp{std::move(prim)};
                  Int d = fixed_divisor(gp);
                  if (gp.degree() >= 2)
                      for (const Int& q : primes_in_range(2, gp.degree()))
                          while (d % q == 0) d /= q;
                  if (d != 1) {
                      detail = "prime bound violated on sample " + std::to_string(t);
                      return false;
                  }
              }
              return true;
          });

    h.run("criterion 5: lift preservation, all 3^|I| subset splits", 180.0,
          [&](std::string& detail) {
              struct Case {
                  std::vector<int> ms;
                  int family;  // |I| = 1 + sum m
              };
              for (const Case& c : {Case{{1, 1}, 3}, Case{{1, 2}, 4}, Case{{1, 1, 2}, 5}}) {
                  ResidueDesign d = built_design(c.ms);
                  std::vector<ZPoly> family = {s_poly(d)};
                  for (const BlockIndex& idx : d.all_indices())
                      family.push_back(block_poly(d, idx));
                  if (static_cast<int>(family.size()) != c.family) {
                      detail = "family size";
                      return false;
                  }
                  auto [lifted, cert] = lift(family);
                  Report rep = verify_lift(cert);
                  const Check* subsets = rep.find("subset_products");
                  long combos = 1;
                  for (int i = 0; i < c.family; ++i) combos *= 3;
                  if (!rep.all_passed() || !subsets ||
                      subsets->detail != "combinations=" + std::to_string(combos)) {
                      detail = "family " + std::to_string(c.family);
                      return false;
                  }
              }
              return true;
          });

    h.run("criterion 6: split-valuation certificates on every built design", 120.0,
          [&](std::string& detail) {
              std::vector<std::pair<std::vector<int>, ChooseOptions>> cases;
              cases.push_back({{1, 1}, {}});
              cases.push_back({{1, 2}, {}});
              cases.push_back({{1, 1, 2}, {}});
              ChooseOptions composite;
              composite.c_extra = {{3, 2}};
              cases.push_back({{1, 1}, composite});

              for (const auto& [ms, opts] : cases) {
                  ResidueDesign d = built_design(ms, opts);
                  std::vector<Int> T = design_value_multiset(d);
                  SplitCertificate cp = design_split_certificate(d, d.params.p);
                  if (cp.e != 1 || cp.z != d.S[1] || !certify_split_valuation(T, d.params.p, cp) ||
                      split_fixdiv_valuation(T, d.params.p) != 1) {
                      detail = "p-certificate failed";
                      return false;
                  }
                  for (const PrimePower& pp : d.params.extra_factors) {
                      SplitCertificate cq = design_split_certificate(d, pp.q);
                      if (cq.e != pp.e || cq.z != 1 || !certify_split_valuation(T, pp.q, cq) ||
                          split_fixdiv_valuation(T, pp.q) != pp.e) {
                          detail = "q-certificate failed";
                          return false;
                      }
                  }
              }
              return true;
          });

    for (int n = 1; n <= 3; ++n) {
        std::vector<int> want = {2};
        if (n + 1 != 2) want.push_back(n + 1);
        std::ostringstream name;
        name << "criterion 7." << n << ": transfer family n=" << n << ", lengths {2," << (n + 1)
             << "}";
        h.run(name.str(), 60.0, [&, n, want](std::string& detail) {
            TransferArtifact art = construct_transfer(n);
            Report rep = verify_transfer(art);
            if (!rep.all_passed()) {
                for (const Check& c : rep.checks)
                    if (!c.passed) detail += c.name + " ";
                return false;
            }
            auto facts = enumerate_factorizations(transfer_xh_input(art)).factorizations;
            if (lengths_set(facts) != want) {
                detail = "lengths mismatch";
                return false;
            }
            return true;
        });
    }

    h.run("criterion 8: mutation suite, six named detections", 300.0, [&](std::string& detail) {
        // 1. wrong c
        {
            PrescribedLengthsArtifact bad = construct_prescribed(LengthSpec({1, 1}));
            bad.design->params.c *= bad.design->params.p;
            Report rep = verify_prescribed(bad);
            if (rep.all_passed() || rep.find("numerator_fixdiv_gcd")->passed) {
                detail = "wrong c undetected";
                return false;
            }
        }
        // 2. deleted factorization
        {
            PrescribedLengthsArtifact bad = construct_prescribed(LengthSpec({1, 1}));
            bad.factorizations.pop_back();
            bad.lengths.pop_back();
            Report rep = verify_prescribed(bad);
            if (rep.find("factorizations_match_oracle")->passed) {
                detail = "deleted factorization undetected";
                return false;
            }
        }
        // 3. perturbed a_1
        {
            TransferArtifact bad = construct_transfer(2);
            bad.a[0] += 1;
            Report rep = verify_transfer(bad);
            if (rep.find("identity")->passed) {
                detail = "perturbed a_1 undetected";
                return false;
            }
        }
        // 4. broken design condition (2)
        {
            PrescribedOptions opts;
            opts.c_extra = {{3, 2}};
            PrescribedLengthsArtifact bad = construct_prescribed(LengthSpec({1, 1}), opts);
            bad.design->S[3] += 9 * 14;  // moves s_3 mod p only
            Report rep = verify_prescribed(bad);
            if (rep.find("design.condition2")->passed) {
                detail = "broken condition (2) undetected";
                return false;
            }
        }
        // 5. non-Eisenstein lift
        {
            PrescribedLengthsArtifact bad = construct_prescribed(LengthSpec({1, 1}));
            bad.lift->lifted[0] = bad.lift->originals[0];
            for (Int& g : bad.lift->offsets[0]) g = 0;
            Report rep = verify_prescribed(bad);
            if (rep.find("lift.eisenstein")->passed) {
                detail = "non-Eisenstein lift undetected";
                return false;
            }
        }
        // 6. altered constant term
        {
            PrescribedLengthsArtifact bad = construct_prescribed(LengthSpec({1, 1}));
            std::vector<Int> coeffs = bad.lift->lifted[1].coeffs();
            coeffs[0] += 1;
            bad.lift->lifted[1] = ZPoly(coeffs);
            bad.lift->offsets[1][0] += 1;
            Report rep = verify_prescribed(bad);
            if (rep.find("lift.offset_congruence")->passed ||
                rep.find("lift.eisenstein")->passed) {
                detail = "altered constant term undetected";
                return false;
            }
        }
        return true;
    });

    std::printf("%s: %d criterion(s) failed\n", h.failures ? "FAIL" : "OK", h.failures);
    return h.failures ? 1 : 0;
}
