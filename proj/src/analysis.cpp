#include "cellrook/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "cellrook/errors.hpp"
#include "cellrook/shape_io.hpp"

namespace cellrook {

bool is_palindromic(const SwitchingPolynomial& poly) {
  const int d = poly.degree();
  for (int i = 0; i <= d / 2; ++i)
    if (poly.coeffs[i] != poly.coeffs[d - i]) return false;
  return true;
}

bool VerificationReport::all_passed() const {
  for (const auto& [name, check] : checks)
    if (check.status == CheckStatus::Fail) return false;
  return true;
}

std::vector<std::string> VerificationReport::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& [name, check] : checks)
    if (check.status == CheckStatus::Fail) out.push_back(name);
  return out;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["rank"] = rank;
  j["poly"] = poly.coeffs;
  j["stable"] = domino_stable;
  j["palindromic"] = palindromic;
  nlohmann::ordered_json c;
  for (const auto& [name, check] : checks) {
    switch (check.status) {
      case CheckStatus::Pass:
        c[name] = "pass";
        break;
      case CheckStatus::Fail:
        c[name] = "fail";
        break;
      case CheckStatus::Skipped:
        c[name] = "skipped";
        break;
    }
  }
  j["checks"] = c;
  return j.dump();
}

namespace {

void set_check(VerificationReport& r, const std::string& name, bool ok,
               const std::string& fail_reason) {
  r.checks[name] = {ok ? CheckStatus::Pass : CheckStatus::Fail,
                    ok ? std::string{} : fail_reason};
}

void skip_check(VerificationReport& r, const std::string& name,
                const std::string& reason) {
  r.checks[name] = {CheckStatus::Skipped, reason};
}

// Lexicographically first d-rook configuration; exists whenever d equals
// the rook number.
RookConfig top_representative(const CellCollection& P, int d) {
  RookConfig out;
  std::vector<char> hused(P.horizontal_runs().size(), 0);
  std::vector<char> vused(P.vertical_runs().size(), 0);
  // Greedy over sorted cells works only sometimes; recurse properly.
  struct Search {
    const CellCollection& P;
    int d;
    RookConfig& out;
    std::vector<char>&hu, &vu;
    RookConfig cur;
    bool found = false;
    void rec(int first) {
      if (static_cast<int>(cur.size()) == d) {
        out = cur;
        found = true;
        return;
      }
      const int need = d - static_cast<int>(cur.size());
      for (int i = first; i + need <= P.rank() && !found; ++i) {
        const int h = P.hrun_of(i), v = P.vrun_of(i);
        if (hu[h] || vu[v]) continue;
        hu[h] = vu[v] = 1;
        cur.push_back(P.cells()[i]);
        rec(i + 1);
        cur.pop_back();
        hu[h] = vu[v] = 0;
      }
    }
  } search{P, d, out, hused, vused, {}, false};
  search.rec(0);
  return out;
}

}  // namespace

VerificationReport verify(const CellCollection& P, AlignmentMode mode) {
  VerificationReport r;
  r.id = shape_id(P);
  r.rank = P.rank();
  r.poly = switching_polynomial(P);
  r.palindromic = is_palindromic(r.poly);
  const StabilityResult st = is_domino_stable(P, mode);
  r.domino_stable = st.stable;

  const int d = r.poly.degree();
  const bool top_unique = r.poly.coeffs[d] == 1;

  set_check(r, "theorem", r.palindromic == r.domino_stable,
            std::string("palindromic=") + (r.palindromic ? "true" : "false") +
                " but domino_stable=" + (st.stable ? "true" : "false") +
                (st.stable ? "" : " (" + st.detail + ")"));

  if (st.stable) {
    set_check(r, "top_class_unique", top_unique,
              "r_d = " + std::to_string(r.poly.coeffs[d]) + ", expected 1");
    std::uint64_t expected = 0;
    for (const StableSquare& s : stable_squares(P))
      expected += static_cast<std::uint64_t>(s.gluing->width());
    set_check(r, "rook_number_formula",
              static_cast<std::uint64_t>(d) == expected,
              "rook number " + std::to_string(d) +
                  " != sum of stable square sides " +
                  std::to_string(expected));
  } else {
    skip_check(r, "top_class_unique", "not domino-stable");
    skip_check(r, "rook_number_formula", "not domino-stable");
  }

  if (!st.stable && top_unique && d >= 2) {
    set_check(r, "strict_inequality", r.poly.coeffs[1] < r.poly.coeffs[d - 1],
              "r_1 = " + std::to_string(r.poly.coeffs[1]) +
                  " not < r_{d-1} = " + std::to_string(r.poly.coeffs[d - 1]));
  } else {
    skip_check(r, "strict_inequality",
               st.stable ? "domino-stable" : "top class not unique");
  }

  if (top_unique) {
    const RookConfig T = top_representative(P, d);
    std::vector<char> hcov(P.horizontal_runs().size(), 0);
    std::vector<char> vcov(P.vertical_runs().size(), 0);
    for (const Cell& c : T) {
      hcov[P.hrun_of(c)] = 1;
      vcov[P.vrun_of(c)] = 1;
    }
    const bool covered =
        std::find(hcov.begin(), hcov.end(), 0) == hcov.end() &&
        std::find(vcov.begin(), vcov.end(), 0) == vcov.end();
    set_check(r, "coverage_lemma", covered,
              "some run carries no rook of the top configuration");

    bool pairs_ok = true;
    std::string why;
    for (int i = 0; i < P.rank() && pairs_ok; ++i) {
      const Cell c = P.cells()[i];
      if (std::binary_search(T.begin(), T.end(), c)) continue;
      int attackers = 0;
      for (const Cell& t : T)
        if (P.hrun_of(t) == P.hrun_of(i) || P.vrun_of(t) == P.vrun_of(i))
          ++attackers;
      if (attackers != 2) {
        pairs_ok = false;
        why = "cell " + to_string(c) + " is attacked by " +
              std::to_string(attackers) + " rooks of the top configuration";
      }
    }
    set_check(r, "attack_pair", pairs_ok, why);
  } else {
    skip_check(r, "coverage_lemma", "top class not unique");
    skip_check(r, "attack_pair", "top class not unique");
  }

  bool any_residue = false;
  for (const Residue& res : residues(P))
    if (!res.empty()) any_residue = true;
  set_check(r, "residue_existence", any_residue, "every residue is empty");

  return r;
}

namespace {

struct Aggregator {
  explicit Aggregator(const CorpusOptions& options) : options(options) {}

  const CorpusOptions& options;
  CorpusSummary summary;
  std::mutex mutex;
  std::atomic<bool> abort{false};

  bool selected(const std::string& check) const {
    return options.checks.empty() ||
           std::find(options.checks.begin(), options.checks.end(), check) !=
               options.checks.end();
  }

  void process(const CellCollection& P) {
    if (abort.load(std::memory_order_relaxed)) return;
    const VerificationReport report = verify(P, options.alignment);

    bool failed = false;
    for (const auto& [name, check] : report.checks)
      if (check.status == CheckStatus::Fail && selected(name)) failed = true;

    bool nongrid = false;
    for (const Residue& res : residues(P))
      if (!res.empty() && !res.is_grid) nongrid = true;

    bool disagree = false;
    if (options.audit_alignment) {
      const AlignmentMode other = options.alignment == AlignmentMode::Run
                                      ? AlignmentMode::Coordinate
                                      : AlignmentMode::Run;
      disagree = is_domino_stable(P, other).stable != report.domino_stable;
    }

    std::lock_guard<std::mutex> lock(mutex);
    ++summary.total;
    if (report.domino_stable) ++summary.stable;
    if (report.palindromic) ++summary.palindromic;
    if (nongrid) ++summary.nongrid_residue_shapes;
    if (disagree) ++summary.alignment_disagreements;
    if (failed) {
      ++summary.failed_shapes;
      summary.counterexamples.push_back(to_grid_text(P));
      for (const auto& [name, check] : report.checks)
        if (check.status == CheckStatus::Fail) ++summary.check_failures[name];
      if (!options.keep_going) abort.store(true, std::memory_order_relaxed);
    }
    if (options.on_report) options.on_report(P, report);
  }

  CorpusSummary finish() {
    std::sort(summary.counterexamples.begin(), summary.counterexamples.end());
    if (!summary.counterexamples.empty() && !options.keep_going)
      throw CounterexampleError("verification failed for a shape",
                                summary.counterexamples.front());
    return std::move(summary);
  }
};

}  // namespace

CorpusSummary verify_corpus(const std::vector<CellCollection>& shapes,
                            const CorpusOptions& options) {
  Aggregator agg(options);
  if (options.jobs <= 1 || shapes.size() < 2) {
    for (const CellCollection& P : shapes) agg.process(P);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const int jobs = std::min<std::size_t>(options.jobs, shapes.size());
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < shapes.size();
             i = next.fetch_add(1))
          agg.process(shapes[i]);
      });
    }
    for (auto& w : workers) w.join();
  }
  return agg.finish();
}

CorpusSummary verify_corpus(int rank, Universe universe,
                            const CorpusOptions& options) {
  Aggregator agg(options);
  enumerate_shapes_parallel(rank, universe, options.jobs,
                            [&](CellCollection&& P) { agg.process(P); });
  return agg.finish();
}

}  // namespace cellrook
