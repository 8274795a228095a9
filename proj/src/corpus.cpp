#include "odplab/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "odplab/classes.hpp"
#include "odplab/delta.hpp"
#include "odplab/epset.hpp"
#include "odplab/frink.hpp"

namespace odplab {

namespace {

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> base;
  for (int n = 1; n <= 4; ++n)
    base.push_back({"powerset-" + std::to_string(n), powerset_odp(n)});
  base.push_back({"even-4", even_sets_odp(4)});
  base.push_back({"even-6", even_sets_odp(6)});
  for (int n = 1; n <= 4; ++n) {
    auto subs = enumerate_delta_subgroups(n);
    for (std::size_t i = 0; i < subs.size(); ++i)
      base.push_back({"subgroup-n" + std::to_string(n) + "-" +
                          std::to_string(i),
                      family_instance(subs[i])});
  }
  std::vector<CorpusEntry> all = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      std::size_t sz = (std::size_t)base[i].inst.poset.size() *
                       (std::size_t)base[j].inst.poset.size();
      if (sz >= 512) continue;
      all.push_back({"product(" + base[i].name + "," + base[j].name + ")",
                     product_odp(base[i].inst, base[j].inst)});
    }
  return all;
}

void parallel_over(std::size_t n, unsigned jobs,
                   const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
      fn(i);
  };
  std::vector<std::thread> pool;
  unsigned count = std::min<std::size_t>(jobs, n);
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

std::string witness_str(const Violation& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v.witness[i]);
  }
  s += ")";
  if (!v.detail.empty()) s += " " + v.detail;
  return s;
}

std::string first_violation(const std::string& name,
                            const ViolationReport& rep) {
  if (rep.ok()) return "";
  if (rep.violations.empty()) return name + ": violations counted but unstored";
  const Violation& v = rep.violations.front();
  return name + ": " + v.axiom + " at " + witness_str(v);
}

/// Everything the unbounded criteria reuse, computed once per instance.
struct InstanceAnalysis {
  std::string ortho_fail, ident_fail;
  std::vector<Bitset> maximal;
  bool budget_hit = false;
  SelectivityCheck sel;
  PairCheck r, t;
  BoundTables tables;
  bool lattice = false;
  bool boolean_alg = false;
  std::string error;
};

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

struct Criterion {
  CriterionOutcome out;
  explicit Criterion(int id) { out.id = id; }
  void fail(const std::string& why) {
    if (out.pass || out.detail.empty()) {
      out.pass = false;
      out.detail = why;
    }
  }
  bool failed() const { return !out.pass && !out.detail.empty(); }
  CriterionOutcome finish(const Timer& t, double limit,
                          const std::string& ok_msg) {
    out.seconds = t.seconds();
    if (!failed()) {
      out.pass = true;
      out.detail = ok_msg;
      if (limit > 0 && out.seconds >= limit) {
        out.pass = false;
        out.detail = "over the " + std::to_string((int)limit) +
                     " s budget (" + std::to_string(out.seconds) + " s)";
      }
    }
    return out;
  }
};

/// All proper Frink ideals by the 2^m definition filter; callers need
/// m <= 12.
std::vector<Bitset> all_proper_ideals(const FinOrthoPoset& p) {
  const int m = p.size();
  std::vector<Bitset> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Bitset s(m);
    for (int b = 0; b < m; ++b)
      if (mask >> b & 1) s.set(b);
    if (!is_frink_ideal(p, s)) continue;
    if (s.test(p.top())) continue;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Bitset> maximal_of(const std::vector<Bitset>& proper) {
  std::vector<Bitset> out;
  for (const Bitset& a : proper) {
    bool topmost = true;
    for (const Bitset& b : proper)
      if (a != b && a.subset_of(b)) {
        topmost = false;
        break;
      }
    if (topmost) out.push_back(a);
  }
  std::sort(out.begin(), out.end(),
            [](const Bitset& a, const Bitset& b) { return a.lex_before(b); });
  return out;
}

bool delta_closed_ideal(const DeltaTable& d, const Bitset& ideal) {
  std::vector<int> members;
  for (std::size_t i = ideal.first(); i < ideal.universe();
       i = ideal.next(i + 1))
    members.push_back((int)i);
  for (int x : members)
    for (int y : members)
      if (!ideal.test(d.at(x, y))) return false;
  return true;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = build_corpus();
  return c;
}

std::vector<CriterionOutcome> run_acceptance(unsigned jobs) {
  const auto& corp = corpus();
  const std::size_t n = corp.size();
  std::vector<CriterionOutcome> results;

  // Criterion 1: the difference-structure axiom suite is exhaustive and
  // clean on every corpus instance.
  {
    Criterion c(1);
    Timer t;
    std::vector<std::string> fails(n);
    parallel_over(n, jobs, [&](std::size_t i) {
      try {
        auto rep = verify_odp(corp[i].inst.poset, corp[i].inst.delta);
        if (!rep.ok())
          fails[i] = first_violation(corp[i].name, rep);
        else if (rep.sampled)
          fails[i] = corp[i].name + ": associativity sampled, not exhaustive";
      } catch (const std::exception& e) {
        fails[i] = corp[i].name + ": " + e.what();
      }
    });
    for (const auto& f : fails)
      if (!f.empty()) c.fail(f);
    results.push_back(c.finish(
        t, 60.0,
        "difference axioms hold on all " + std::to_string(n) + " instances"));
  }

  // Shared per-instance analysis for the unbounded criteria.
  std::vector<InstanceAnalysis> an(n);
  parallel_over(n, jobs, [&](std::size_t i) {
    InstanceAnalysis& a = an[i];
    const Instance& inst = corp[i].inst;
    try {
      a.ortho_fail =
          first_violation(corp[i].name, check_orthomodularity(inst.poset));
      a.ident_fail = first_violation(
          corp[i].name,
          delta_identities_report(inst.poset, inst.delta).violations);
      try {
        a.maximal = enumerate_maximal_ideals(inst.poset);
        a.sel = selectivity_of(inst.poset, a.maximal);
      } catch (const BudgetExceeded&) {
        a.budget_hit = true;
      }
      a.r = in_class_R(inst.poset);
      a.t = in_class_T(inst.poset);
      a.tables = bound_tables(inst.poset);
      a.lattice = is_lattice(a.tables);
      a.boolean_alg = is_boolean(a.tables);
    } catch (const std::exception& e) {
      a.error = corp[i].name + ": " + e.what();
    }
  });
  auto any_error = [&](Criterion& c) {
    for (const auto& a : an)
      if (!a.error.empty()) c.fail(a.error);
  };

  // Criterion 2: orthomodularity falls out of the axioms on every instance.
  {
    Criterion c(2);
    Timer t;
    any_error(c);
    for (const auto& a : an)
      if (!a.ortho_fail.empty()) c.fail(a.ortho_fail);
    results.push_back(
        c.finish(t, 0, "orthomodularity holds on all instances"));
  }

  // Criterion 3: the derived identities hold everywhere.
  {
    Criterion c(3);
    Timer t;
    any_error(c);
    for (const auto& a : an)
      if (!a.ident_fail.empty()) c.fail(a.ident_fail);
    results.push_back(c.finish(
        t, 0, "x d x = 0 and x d 0 = 0 d x = x hold on all instances"));
  }

  // Criterion 4: ideal enumeration matches the subset-filter oracle on
  // every instance small enough to filter (<= 12 elements). The proper
  // ideals are kept for criteria 5 and 6.
  std::vector<std::vector<Bitset>> proper_ideals(n);
  std::size_t small_count = 0;
  {
    Criterion c(4);
    Timer t;
    std::vector<std::string> fails(n);
    parallel_over(n, jobs, [&](std::size_t i) {
      if (corp[i].inst.poset.size() > 12) return;
      try {
        proper_ideals[i] = all_proper_ideals(corp[i].inst.poset);
        auto expect = maximal_of(proper_ideals[i]);
        auto got = enumerate_maximal_ideals(corp[i].inst.poset);
        if (got != expect)
          fails[i] = corp[i].name + ": enumeration found " +
                     std::to_string(got.size()) + " maximal ideals, oracle " +
                     std::to_string(expect.size());
      } catch (const std::exception& e) {
        fails[i] = corp[i].name + ": " + e.what();
      }
    });
    for (std::size_t i = 0; i < n; ++i) {
      if (!fails[i].empty()) c.fail(fails[i]);
      if (!proper_ideals[i].empty()) ++small_count;
    }
    results.push_back(c.finish(
        t, 120.0,
        "maximal-ideal enumeration matches the subset filter on " +
            std::to_string(small_count) + " small instances"));
  }

  // Criterion 5: selective ideals are maximal wherever found, and every
  // proper ideal of a small instance extends to a maximal one.
  {
    Criterion c(5);
    Timer t;
    any_error(c);
    std::vector<std::string> fails(n);
    parallel_over(n, jobs, [&](std::size_t i) {
      const FinOrthoPoset& p = corp[i].inst.poset;
      try {
        for (const Bitset& ideal : proper_ideals[i]) {
          if (is_selective(p, ideal) && !is_maximal(p, ideal)) {
            fails[i] = corp[i].name + ": selective ideal is not maximal";
            return;
          }
          Bitset ext = extend_to_maximal(p, ideal);
          if (!ideal.subset_of(ext) || !is_maximal(p, ext)) {
            fails[i] = corp[i].name + ": extension failed on a proper ideal";
            return;
          }
        }
        for (const Bitset& ideal : an[i].maximal)
          if (is_selective(p, ideal) && !is_maximal(p, ideal)) {
            fails[i] = corp[i].name + ": selective ideal is not maximal";
            return;
          }
      } catch (const std::exception& e) {
        fails[i] = corp[i].name + ": " + e.what();
      }
    });
    for (const auto& f : fails)
      if (!f.empty()) c.fail(f);
    results.push_back(c.finish(
        t, 0, "selective implies maximal; all proper ideals extend"));
  }

  // Criterion 6: every enumerated ideal is closed under the difference.
  {
    Criterion c(6);
    Timer t;
    any_error(c);
    std::vector<std::string> fails(n);
    parallel_over(n, jobs, [&](std::size_t i) {
      const DeltaTable& d = corp[i].inst.delta;
      for (const Bitset& ideal : proper_ideals[i])
        if (!delta_closed_ideal(d, ideal)) {
          fails[i] = corp[i].name + ": proper ideal not difference-closed";
          return;
        }
      for (const Bitset& ideal : an[i].maximal)
        if (!delta_closed_ideal(d, ideal)) {
          fails[i] = corp[i].name + ": maximal ideal not difference-closed";
          return;
        }
    });
    for (const auto& f : fails)
      if (!f.empty()) c.fail(f);
    results.push_back(
        c.finish(t, 0, "all enumerated ideals are difference-closed"));
  }

  // Criterion 7: the inclusion chain (R implies S implies T) over the full
  // corpus, with zero undecided instances allowed.
  {
    Criterion c(7);
    Timer t;
    any_error(c);
    std::size_t unknown = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (an[i].budget_hit) {
        ++unknown;
        continue;
      }
      if (an[i].r.holds && !an[i].sel.holds)
        c.fail(corp[i].name + ": in the first class but not the selective one");
      if (an[i].sel.holds && !an[i].t.holds)
        c.fail(corp[i].name + ": selective but outside the weakest class");
    }
    if (unknown > 0)
      c.fail(std::to_string(unknown) + " instances hit the ideal budget");
    results.push_back(
        c.finish(t, 0, "class chain holds with 0 undecided instances"));
  }

  // Criterion 8: the infinite families separate the classes.
  {
    Criterion c(8);
    Timer t;
    try {
      CosetFamily rfam = build_r_family();
      CosetFamily tfam = build_t_family();
      RCheckResult rc = class_R_check(rfam);
      if (rc.verdict != Verdict::Proven)
        c.fail(std::string("first family expected PROVEN, got ") +
               verdict_name(rc.verdict));
      auto wit = class_witness_search(tfam, 12, FamilyClass::R);
      if (!wit) {
        c.fail("no first-class witness found in the 12-bound fragment");
      } else {
        const EPSet va = member_value(tfam, wit->first);
        const EPSet vb = member_value(tfam, wit->second);
        if (va != ep_A1() || vb != ep_A2())
          c.fail("witness differs from the expected pair: got " +
                 va.literal() + ", " + vb.literal());
        if (!meets_zero(tfam, va, vb) || is_subset(va, complement(vb)))
          c.fail("reported witness does not violate the implication");
      }
      if (auto none = class_witness_search(tfam, 30, FamilyClass::T))
        c.fail("stronger-implication witness exists: a = " +
               member_value(tfam, none->first).literal() + ", b = " +
               member_value(tfam, none->second).literal() +
               " (a meets both b and its complement only at zero, yet a is "
               "not below the complement of b)");
    } catch (const std::exception& e) {
      c.fail(e.what());
    }
    results.push_back(c.finish(
        t, 60.0, "PROVEN / witness (A1, A2) / no counterexample at bound 30"));
  }

  // Criterion 9: instances in the weakest class that are lattices are
  // Boolean.
  {
    Criterion c(9);
    Timer t;
    any_error(c);
    for (std::size_t i = 0; i < n; ++i)
      if (an[i].t.holds && an[i].lattice && !an[i].boolean_alg)
        c.fail(corp[i].name + ": lattice in the weakest class, not Boolean");
    results.push_back(
        c.finish(t, 0, "every lattice instance in the class is Boolean"));
  }

  // Criterion 10: set representation is faithful on first-class instances,
  // and the even-4 structure reports an empty ideal family.
  {
    Criterion c(10);
    Timer t;
    any_error(c);
    std::vector<std::string> fails(n);
    parallel_over(n, jobs, [&](std::size_t i) {
      try {
        if (corp[i].name == "even-4") {
          auto rep = representation(corp[i].inst.poset, corp[i].inst.delta);
          if (!rep.ideals.empty())
            fails[i] = "even-4: expected an empty selective-ideal family";
          return;
        }
        if (!an[i].r.holds) return;
        auto rep = representation(corp[i].inst.poset, corp[i].inst.delta);
        if (!rep.order_embedding || !rep.perp_ok || !rep.delta_ok)
          fails[i] = corp[i].name + ": representation flags " +
                     std::to_string(rep.order_embedding) +
                     std::to_string(rep.perp_ok) +
                     std::to_string(rep.delta_ok);
      } catch (const std::exception& e) {
        fails[i] = corp[i].name + ": " + e.what();
      }
    });
    for (const auto& f : fails)
      if (!f.empty()) c.fail(f);
    results.push_back(c.finish(
        t, 0, "representation faithful on first-class instances; even-4 empty"));
  }

  // Criterion 11: in the first class, compatibility coincides with meet
  // existence on every pair.
  {
    Criterion c(11);
    Timer t;
    any_error(c);
    std::vector<std::string> fails(n);
    parallel_over(n, jobs, [&](std::size_t i) {
      if (!an[i].error.empty() || !an[i].r.holds) return;
      const FinOrthoPoset& p = corp[i].inst.poset;
      const BoundTables& tbl = an[i].tables;
      for (int a = 0; a < p.size(); ++a)
        for (int b = a; b < p.size(); ++b) {
          bool comp = compatible(p, tbl, a, b);
          bool has_meet = tbl.meet_of(a, b) >= 0;
          if (comp != has_meet) {
            fails[i] = corp[i].name + ": pair (" + std::to_string(a) + "," +
                       std::to_string(b) + ") compatible=" +
                       std::to_string(comp) + " meet=" +
                       std::to_string(has_meet);
            return;
          }
        }
    });
    for (const auto& f : fails)
      if (!f.empty()) c.fail(f);
    results.push_back(c.finish(
        t, 0, "compatibility matches meet existence on first-class instances"));
  }

  // Criterion 12: periodic-set arithmetic agrees with truncation, and the
  // lower-bound procedure agrees with the fragment oracle.
  {
    Criterion c(12);
    Timer t;
    try {
      std::mt19937_64 rng(12);
      constexpr unsigned K = 600;
      for (int round = 0; round < 1000 && !c.failed(); ++round) {
        EPSet s1 = random_epset(rng), s2 = random_epset(rng);
        auto t1 = s1.truncate(K), t2 = s2.truncate(K);
        auto tc = complement(s1).truncate(K);
        auto tu = union_of(s1, s2).truncate(K);
        auto ti = intersect(s1, s2).truncate(K);
        auto td = symdiff(s1, s2).truncate(K);
        for (unsigned i = 0; i < K; ++i) {
          if (tc[i] != !t1[i]) c.fail("complement disagrees with truncation");
          if (tu[i] != (t1[i] || t2[i])) c.fail("union disagrees");
          if (ti[i] != (t1[i] && t2[i])) c.fail("intersection disagrees");
          if (td[i] != (t1[i] != t2[i])) c.fail("symdiff disagrees");
        }
      }
      CosetFamily tfam = build_t_family();
      for (unsigned bound : {12u, 24u, 36u}) {
        // Test sets: all base-pair intersections plus seeded random
        // member-pair intersections.
        std::vector<EPSet> tests;
        for (const EPSet& a : tfam.base)
          for (const EPSet& b : tfam.base) tests.push_back(intersect(a, b));
        EPSet w = intersect(tfam.support, EPSet::range_below(bound));
        std::vector<std::uint64_t> positions;
        for (unsigned i = 0; i < bound; ++i)
          if (w.member(i)) positions.push_back(i);
        auto random_member = [&]() {
          int d = (int)(rng() % tfam.base.size());
          std::vector<std::uint64_t> f;
          for (std::uint64_t pos : positions)
            if (rng() & 1) f.push_back(pos);
          return symdiff(tfam.base[d], EPSet::from_elements(f));
        };
        for (int round = 0; round < 100; ++round)
          tests.push_back(intersect(random_member(), random_member()));
        for (const EPSet& s : tests) {
          if (c.failed()) break;
          bool oracle = fragment_has_lower_bound(tfam, s, bound);
          auto wit = nonzero_lower_bound_witness(tfam, s);
          if (oracle && !wit)
            c.fail("bound " + std::to_string(bound) +
                   ": oracle found a member the procedure missed for " +
                   s.literal());
          if (wit) {
            EPSet v = member_value(tfam, *wit);
            if (!family_contains(tfam, v))
              c.fail("procedure witness is not a family member");
            if (!v.first_element())
              c.fail("procedure witness is the zero member");
            if (!is_subset(v, s))
              c.fail("procedure witness is not below the test set");
            auto tv = v.truncate(K), ts = s.truncate(K);
            for (unsigned i = 0; i < K; ++i)
              if (tv[i] && !ts[i])
                c.fail("witness fails the pointwise truncation check");
          }
        }
      }
    } catch (const std::exception& e) {
      c.fail(e.what());
    }
    results.push_back(c.finish(
        t, 120.0,
        "arithmetic matches truncation; lower-bound procedure matches oracle"));
  }

  // Criterion 13: classification goldens on the named structures.
  {
    Criterion c(13);
    Timer t;
    any_error(c);
    auto find = [&](const std::string& name) -> const InstanceAnalysis* {
      for (std::size_t i = 0; i < n; ++i)
        if (corp[i].name == name) return &an[i];
      return nullptr;
    };
    const InstanceAnalysis* e4 = find("even-4");
    if (!e4) {
      c.fail("even-4 missing from the corpus");
    } else {
      if (e4->r.holds || e4->r.witness != std::optional<std::pair<int, int>>({1, 2}))
        c.fail("even-4: first-class witness should be (1,2)");
      if (e4->t.holds || e4->t.witness != std::optional<std::pair<int, int>>({1, 2}))
        c.fail("even-4: weak-class witness should be (1,2)");
      if (e4->budget_hit || e4->sel.holds || e4->sel.ideal_count != 6 ||
          e4->sel.selective_count != 0)
        c.fail("even-4: expected 6 maximal ideals, none selective");
      if (e4->sel.pair != std::optional<std::pair<int, int>>({2, 5}))
        c.fail("even-4: non-selective pair should be (2,5)");
      if (!e4->lattice || e4->boolean_alg)
        c.fail("even-4: expected a non-Boolean lattice");
    }
    for (int k = 1; k <= 4; ++k) {
      const InstanceAnalysis* pw = find("powerset-" + std::to_string(k));
      if (!pw) {
        c.fail("powerset-" + std::to_string(k) + " missing from the corpus");
        continue;
      }
      if (!pw->r.holds || !pw->t.holds || pw->budget_hit || !pw->sel.holds ||
          !pw->lattice || !pw->boolean_alg)
        c.fail("powerset-" + std::to_string(k) + ": expected all-true");
      if (pw->sel.ideal_count != (std::size_t)k ||
          pw->sel.selective_count != (std::size_t)k)
        c.fail("powerset-" + std::to_string(k) + ": expected " +
               std::to_string(k) + " maximal ideals, all selective");
    }
    results.push_back(
        c.finish(t, 0, "even-4 and powerset goldens match exactly"));
  }

  return results;
}

bool corpus_check(std::ostream& out, unsigned jobs, bool with_timings) {
  auto results = run_acceptance(jobs);
  bool all = true;
  std::size_t passed = 0;
  for (const auto& r : results) {
    all = all && r.pass;
    passed += r.pass ? 1 : 0;
    std::ostringstream line;
    line << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": "
         << r.detail;
    if (with_timings)
      line << " [" << std::fixed << std::setprecision(2) << r.seconds
           << " s]";
    out << line.str() << "\n";
  }
  out << "acceptance: " << passed << "/" << results.size()
      << " criteria passed\n";
  return all;
}

}  // namespace odplab
