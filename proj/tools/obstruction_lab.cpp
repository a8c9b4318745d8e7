// Command-line front end: exact verification reports for the branched-cover
// linking algebra, the cobordism ledger, the d-invariant bound, the
// companion-family selection, and bipolarity certificates. All numeric
// output is exact; exit status is 0 iff every verdict passes.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "oblab/bipolarity.hpp"
#include "oblab/branched_cover.hpp"
#include "oblab/cobordism.hpp"
#include "oblab/dinvariant.hpp"
#include "oblab/family.hpp"
#include "oblab/json_io.hpp"

namespace {

using oblab::Int;
using oblab::Json;
using oblab::Rat;

constexpr const char* kSchema = "1";

long thread_cap() {
  if (const char* env = std::getenv("OBSTRUCTION_LAB_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) return v;
  }
  long hw = static_cast<long>(std::thread::hardware_concurrency());
  return hw >= 1 ? hw : 1;
}

/// Run job(i) for i in [0, n) on up to thread_cap() workers; results are
/// assembled by index, so output order is deterministic.
template <typename Job>
void parallel_for(long n, Job job) {
  long workers = std::min(thread_cap(), n);
  if (workers <= 1) {
    for (long i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  for (long w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (long i = next.fetch_add(1); i < n; i = next.fetch_add(1)) job(i);
    });
  for (auto& t : pool) t.join();
}

struct Verdicts {
  Json map = Json::object();
  bool all = true;
  void add(const std::string& name, bool ok) {
    map[name] = ok ? "pass" : "fail";
    all = all && ok;
  }
};

std::vector<long> parse_m_range(const std::string& rangeText, bool oddOnly) {
  long lo = 0, hi = 0;
  auto dots = rangeText.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stol(rangeText);
    } else {
      lo = std::stol(rangeText.substr(0, dots));
      hi = std::stol(rangeText.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--m", "expected <m> or <lo>..<hi>");
  }
  std::vector<long> ms;
  for (long m = lo; m <= hi; ++m)
    if (!oddOnly || m % 2 == 1) ms.push_back(m);
  if (ms.empty()) throw CLI::ValidationError("--m", "empty range");
  return ms;
}

Json metabolizer_json(const oblab::Metabolizer& met) {
  Json j;
  j["generators"] = Json::array(
      {Json::array({oblab::int_json(met.gen1[0]), oblab::int_json(met.gen1[1])}),
       Json::array(
           {oblab::int_json(met.gen2[0]), oblab::int_json(met.gen2[1])})});
  if (!met.label.empty()) j["label"] = met.label;
  return j;
}

Json branched_cover_report(long m, Verdicts& verdicts, bool corruptPinv) {
  Json j;
  j["m"] = m;
  std::string tag = "m" + std::to_string(m) + ".";
  oblab::SurgeryLinkingData d = oblab::surgery_linking_data(m);
  bool inverseOk = oblab::verify_inverse(m);
  if (corruptPinv) {
    // soundness probe: a perturbed inverse must break the product identity
    d.Pinv(0, 1) += Rat(1, oblab::mersenne_c(m));
    Rat s = 0;
    for (std::size_t k = 0; k < d.P.rows(); ++k)
      s += d.Pinv(0, k) * Rat(d.P(k, 0));
    j["corruptPinvProbe"] = (s != Rat(1));
    inverseOk = false;  // a corrupted run must not report success
  }
  verdicts.add(tag + "inverse", inverseOk);

  oblab::TorsionFormGroup g = oblab::homology(m);
  j["order"] = oblab::int_json(g.q * g.q);
  Json divisors = Json::array();
  for (const Int& dv : g.divisors) divisors.push_back(oblab::int_json(dv));
  j["elementaryDivisors"] = divisors;
  Json form = Json::array();
  for (int r = 0; r < 2; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 2; ++c) {
      Rat v(g.formNumerator(r, c), g.q);
      v.canonicalize();
      row.push_back(oblab::rat_json(oblab::rational_mod_Z(v)));
    }
    form.push_back(std::move(row));
  }
  j["linkingForm"] = form;
  j["x2Corrected"] = g.x2Corrected;
  verdicts.add(tag + "divisors",
               g.divisors[g.divisors.size() - 2] == g.q &&
                   g.divisors.back() == g.q);
  verdicts.add(tag + "formDiagonal",
               g.formNumerator(0, 0) == 0 && g.formNumerator(1, 1) == 0);
  verdicts.add(tag + "offDiagonalUnit", gcd(g.formNumerator(0, 1), g.q) == 1);

  oblab::IntMatrix seifert{{0, 2}, {1, 0}};
  std::vector<Int> viaSeifert = oblab::homology_via_seifert(seifert, m);
  std::vector<Int> nontrivial;
  for (const Int& dv : g.divisors)
    if (dv != 1) nontrivial.push_back(dv);
  verdicts.add(tag + "seifertAgreement", viaSeifert == nontrivial);

  Json mets = Json::array();
  bool sawX1 = false, sawX2 = false;
  auto list = oblab::metabolizers(oblab::linking_group(g));
  for (const auto& met : list) {
    sawX1 = sawX1 || met.label == "<x1>";
    sawX2 = sawX2 || met.label == "<x2>";
    mets.push_back(metabolizer_json(met));
  }
  j["metabolizers"] = mets;
  verdicts.add(tag + "distinguishedMetabolizers", sawX1 && sawX2);

  j["spincOffset"] = oblab::spinc_offset_check(m);
  verdicts.add(tag + "spincOffset", oblab::spinc_offset_check(m));
  return j;
}

Json cobordism_report(long m, Verdicts& verdicts, const std::string& scope) {
  Json j;
  j["m"] = m;
  std::string tag = "m" + std::to_string(m) + ".";
  oblab::ConditionOneReport one = oblab::condition_one(m);
  j["conditionOneSum"] = oblab::rat_json(one.sum);
  j["conditionOneNonzeroTerms"] = one.nonzeroTerms;
  verdicts.add(tag + "conditionOne", one.verdict);
  oblab::ConditionTwoReport two = oblab::condition_two(m);
  j["conditionTwoAssignmentsChecked"] = two.assignmentsChecked;
  j["conditionTwoAllAssignments"] = two.allAssignments;
  j["conditionTwoRestrictedFamilies"] = two.restrictedFamilies;
  bool twoOk = scope == "families" ? two.restrictedFamilies
                                   : two.allAssignments;
  verdicts.add(tag + "conditionTwo", twoOk && two.topRangeValues);
  oblab::CharacteristicReport ch = oblab::characteristic_check(m);
  j["E0E0"] = oblab::int_json(ch.e00);
  j["wHatSquare"] = oblab::rat_json(ch.wHatSquare);
  verdicts.add(tag + "characteristicSquare", ch.squareOk);
  verdicts.add(tag + "characteristicParity",
               ch.paritiesOk && ch.parityColumnOk);
  oblab::LedgerReport led = oblab::ledger(m);
  j["ledger"] = Json{{"signW0", oblab::rat_json(led.signW0)},
                     {"b2W0", led.b2W0},
                     {"b2Wprime", led.b2Wprime},
                     {"signWprime", led.signWprime},
                     {"b2What", led.b2What},
                     {"signWhat", led.signWhat},
                     {"b2W", led.b2W},
                     {"signW", led.signW}};
  verdicts.add(tag + "ledgerDefinite", led.negativeDefinite);
  verdicts.add(tag + "ledgerNumbers",
               led.b2W == 3 * m - 3 && led.signW == -(3 * m - 3));
  return j;
}

Json theorem_report(long m, Verdicts& verdicts) {
  std::string tag = "m" + std::to_string(m) + ".";
  oblab::TheoremAssembly t = oblab::theorem_assembly(m);
  Json j;
  j["m"] = m;
  j["oddPrimePower"] = t.hypothesisOk;
  j["dL31"] = oblab::rat_json(t.dL31);
  j["dA"] = oblab::rat_json(t.dA);
  j["dBbound"] = oblab::rat_json(t.dBbound);
  j["ymBound"] = oblab::rat_json(t.ymBound);
  j["c1Square"] = oblab::rat_json(t.c1Square);
  j["b2"] = t.b2;
  j["rhsBound"] = oblab::rat_json(t.rhsBound);
  j["finalBound"] = oblab::rat_json(t.finalBound);
  Rat target(-3, 2);
  target.canonicalize();
  verdicts.add(tag + "finalBound", t.finalBound == target);
  verdicts.add(tag + "hypothesis", t.hypothesisOk);
  return j;
}

int emit(Json& report, const Verdicts& verdicts) {
  report["verdicts"] = verdicts.map;
  report["allPass"] = verdicts.all;
  std::cout << report.dump(2) << "\n";
  return verdicts.all ? 0 : 1;
}

int cmd_verify_all(const std::string& mRange, bool oddOnly, bool corrupt) {
  std::vector<long> ms = parse_m_range(mRange, oddOnly);
  Json report;
  report["schema"] = kSchema;
  report["command"] = "verify-all";
  std::vector<Json> coverParts(ms.size()), cobordismParts(ms.size()),
      theoremParts(ms.size());
  std::vector<Verdicts> parts(ms.size());
  std::vector<std::string> failures(ms.size());
  parallel_for(static_cast<long>(ms.size()), [&](long idx) {
    long m = ms[static_cast<std::size_t>(idx)];
    try {
      coverParts[idx] =
          branched_cover_report(m, parts[idx], corrupt && idx == 0);
      if (m >= 3 && m % 2 == 1) {
        cobordismParts[idx] = cobordism_report(m, parts[idx], "all");
        theoremParts[idx] = theorem_report(m, parts[idx]);
      }
    } catch (const std::exception& ex) {
      failures[idx] = ex.what();
    }
  });
  Verdicts verdicts;
  Json covers = Json::array(), cobs = Json::array(), thms = Json::array();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (!failures[i].empty()) {
      verdicts.add("m" + std::to_string(ms[i]) + ".error", false);
      continue;
    }
    for (auto it = parts[i].map.begin(); it != parts[i].map.end(); ++it)
      verdicts.add(it.key(), it.value() == "pass");
    covers.push_back(coverParts[i]);
    if (!cobordismParts[i].is_null()) cobs.push_back(cobordismParts[i]);
    if (!theoremParts[i].is_null()) thms.push_back(theoremParts[i]);
  }
  report["branchedCover"] = covers;
  report["cobordism"] = cobs;
  report["theorem"] = thms;
  return emit(report, verdicts);
}

int cmd_branched_cover(const std::string& mRange, bool oddOnly) {
  Json report;
  report["schema"] = kSchema;
  report["command"] = "branched-cover";
  Verdicts verdicts;
  Json list = Json::array();
  for (long m : parse_m_range(mRange, oddOnly))
    list.push_back(branched_cover_report(m, verdicts, false));
  report["reports"] = list;
  return emit(report, verdicts);
}

int cmd_cobordism(const std::string& mRange, const std::string& scope) {
  Json report;
  report["schema"] = kSchema;
  report["command"] = "cobordism";
  Verdicts verdicts;
  Json list = Json::array();
  for (long m : parse_m_range(mRange, /*oddOnly=*/true))
    list.push_back(cobordism_report(m, verdicts, scope));
  report["reports"] = list;
  return emit(report, verdicts);
}

int cmd_theorem(long m) {
  Json report;
  report["schema"] = kSchema;
  report["command"] = "theorem";
  Verdicts verdicts;
  report["report"] = theorem_report(m, verdicts);
  return emit(report, verdicts);
}

int cmd_family(const std::vector<long>& primes, long n) {
  Json report;
  report["schema"] = kSchema;
  report["command"] = "family";
  Verdicts verdicts;
  oblab::FamilySelection sel = oblab::choose_family_parameters(primes, n);
  Json entries = Json::array();
  for (std::size_t i = 0; i < sel.entries.size(); ++i) {
    const oblab::SelectionEntry& e = sel.entries[i];
    Json je;
    je["prime"] = e.prime;
    je["a"] = e.a;
    je["b"] = e.b;
    je["certLo"] = oblab::rat_json(e.cert_lo);
    je["certHi"] = oblab::rat_json(e.cert_hi);
    je["multiplicity"] = oblab::int_json(e.profile.multiplicity);
    // bound at its own prime; vanishing at all earlier primes
    Json vanishes = Json::array();
    bool rowOk = true;
    for (std::size_t k = 0; k < i; ++k) {
      bool v = oblab::rho_vanishes(e.profile, primes[k]);
      vanishes.push_back(Json{{"prime", primes[k]}, {"vanishes", v}});
      rowOk = rowOk && v;
    }
    je["vanishesAtEarlierPrimes"] = vanishes;
    Rat bound = oblab::rho_lower_bound(e.profile, e.prime);
    je["lowerBoundAtOwnPrime"] = oblab::rat_json(bound);
    rowOk = rowOk && !oblab::rho_vanishes(e.profile, e.prime);
    if (n >= 2) {
      Rat needed(4 * oblab::required_multiplicity(n, e.prime), Int(e.prime));
      needed.canonicalize();
      rowOk = rowOk && bound >= needed;
      oblab::BudgetReport budget = oblab::case1_budget(n, bound, 1);
      je["budget"] = Json{{"total", oblab::int_json(budget.totalBudget)},
                          {"obstruction", oblab::rat_json(budget.obstruction)},
                          {"contradiction", budget.contradiction}};
      rowOk = rowOk && budget.contradiction;
    }
    verdicts.add("p" + std::to_string(e.prime), rowOk);
    entries.push_back(std::move(je));
  }
  report["entries"] = entries;
  if (n >= 2) report["totalBudget"] = oblab::int_json(oblab::total_budget(n));
  return emit(report, verdicts);
}

int cmd_certify(long n, long i, const std::string& replayPath) {
  Json report;
  report["schema"] = kSchema;
  report["command"] = "certify";
  Verdicts verdicts;
  if (!replayPath.empty()) {
    std::ifstream in(replayPath);
    if (!in) {
      std::cerr << "cannot open " << replayPath << "\n";
      return 2;
    }
    Json doc = Json::parse(in);
    oblab::FactBase facts = oblab::fact_base_from_json(doc.at("facts"));
    oblab::Certificate cert =
        oblab::certificate_from_json(doc.at("certificate"));
    report["knot"] = cert.knot;
    verdicts.add("replay", oblab::replay(cert, facts));
    return emit(report, verdicts);
  }
  oblab::FactBase facts = oblab::example_fact_base(i);
  oblab::ExampleCertificates ex = oblab::certify_example_knots(n, i, facts);
  report["facts"] = oblab::fact_base_json(facts);
  report["negative"] = oblab::certificate_json(ex.negative);
  report["positive"] = oblab::certificate_json(ex.positive);
  verdicts.add("negativeLevel", ex.negative.level == oblab::Level::at(n));
  verdicts.add("positiveForall", ex.positive.level.forall);
  verdicts.add("negativeReplay", oblab::replay(ex.negative, facts));
  verdicts.add("positiveReplay", oblab::replay(ex.positive, facts));
  // round trip through JSON must replay identically
  oblab::Certificate back =
      oblab::certificate_from_json(oblab::certificate_json(ex.negative));
  verdicts.add("roundTrip", oblab::replay(back, facts));
  return emit(report, verdicts);
}

int cmd_d_lens(long p, long q, long i, bool haveI) {
  Json report;
  report["schema"] = kSchema;
  report["command"] = "d-lens";
  report["p"] = p;
  report["q"] = q;
  Verdicts verdicts;
  if (haveI) {
    report["i"] = i;
    report["d"] = oblab::rat_json(oblab::lens_d(p, q, i));
  } else {
    Json values = Json::array();
    for (long k = 0; k < p; ++k)
      values.push_back(oblab::rat_json(oblab::lens_d(p, q, k)));
    report["d"] = values;
    oblab::SpinIndexResult spin = oblab::spin_index(p, q);
    report["spinIndices"] = spin.indices;
    report["spinUnique"] = spin.unique;
  }
  verdicts.add("computed", true);
  return emit(report, verdicts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for knot-concordance obstruction "
               "arithmetic"};
  app.require_subcommand(1);

  std::string mRange = "2..13";
  bool oddOnly = false;
  bool corrupt = false;
  std::string scope = "all";
  std::vector<long> primes;
  long level = 0;
  long certN = 2, certI = 1;
  std::string replayPath;
  long dp = 3, dq = 1, di = 0;

  CLI::App* verifyAll = app.add_subcommand("verify-all", "run the full suite");
  verifyAll->add_option("--m", mRange, "cover degree range, e.g. 3..13");
  verifyAll->add_flag("--odd", oddOnly, "restrict to odd m");
  verifyAll->add_flag("--corrupt-pinv", corrupt,
                      "soundness probe: inject a corrupted inverse");

  CLI::App* cover = app.add_subcommand("branched-cover", "cover reports");
  cover->add_option("--m", mRange, "cover degree range");
  cover->add_flag("--odd", oddOnly, "restrict to odd m");

  CLI::App* cob = app.add_subcommand("cobordism", "linking conditions/ledger");
  cob->add_option("--m", mRange, "cover degree range (odd only)");
  cob->add_option("--scope", scope, "assignment scope: all | families")
      ->check(CLI::IsMember({"all", "families"}));

  CLI::App* thm = app.add_subcommand("theorem", "assembled uniform bound");
  long thmM = 3;
  thm->add_option("--m", thmM, "cover degree (odd prime power)")->required();

  CLI::App* fam = app.add_subcommand("family", "companion-family selection");
  fam->add_option("--primes", primes, "increasing odd primes")
      ->required()
      ->delimiter(',');
  fam->add_option("--n", level, "filtration level (>= 2 enables budgets)");

  CLI::App* cert = app.add_subcommand("certify", "bipolarity certificates");
  cert->add_option("--n", certN, "level (>= 2)");
  cert->add_option("--i", certI, "family index");
  cert->add_option("--replay", replayPath,
                   "replay a {facts, certificate} JSON file");

  CLI::App* dlens = app.add_subcommand("d-lens", "lens-space correction terms");
  dlens->add_option("p", dp, "order")->required();
  dlens->add_option("q", dq, "twist")->required();
  CLI::Option* iOpt = dlens->add_option("i", di, "spin-c index");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verifyAll->parsed()) return cmd_verify_all(mRange, oddOnly, corrupt);
    if (cover->parsed()) return cmd_branched_cover(mRange, oddOnly);
    if (cob->parsed()) return cmd_cobordism(mRange, scope);
    if (thm->parsed()) return cmd_theorem(thmM);
    if (fam->parsed()) return cmd_family(primes, level);
    if (cert->parsed()) return cmd_certify(certN, certI, replayPath);
    if (dlens->parsed()) return cmd_d_lens(dp, dq, di, iOpt->count() > 0);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
