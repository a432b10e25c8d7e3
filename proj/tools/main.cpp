// Command-line front end: generation of the partition families,
// verification campaigns for the classification sweeps and the polynomial
// identities, and the bounded searches. Every data section is
// byte-deterministic for fixed inputs and flags.
//
// Exit codes: 0 success, 1 assertion failure, 2 usage error, 3 resource cap.

#include <bit>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "repart/constructions.hpp"
#include "repart/core_sets.hpp"
#include "repart/genfun.hpp"
#include "repart/repfn.hpp"
#include "repart/verifier.hpp"
#include "repart/version.hpp"

namespace {

using repart::IntersectionSpec;
using repart::IntSet;
using repart::PartitionPair;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

std::string version_banner()
{
  return std::string(repart::kToolName) + " " + std::string(repart::kVersion);
}

ordered_json json_header(const std::string& campaign)
{
  ordered_json j;
  j["tool"] = repart::kToolName;
  j["version"] = repart::kVersion;
  j["campaign"] = campaign;
  return j;
}

ordered_json set_to_json(const IntSet& s)
{
  return ordered_json(s.elements());
}

void emit(const ordered_json& j)
{
  std::cout << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct GenOptions {
  std::string kind;
  std::uint64_t l = 1;
  std::uint64_t n = 0;
  std::uint64_t blocks = 1;
  std::string format = "text";
};

std::string pair_text(const PartitionPair& pair)
{
  std::string out = "C=" + pair.c().to_text() + " D=" + pair.d().to_text();
  const IntersectionSpec& spec = pair.intersection();
  if (spec.kind() == IntersectionSpec::Kind::kFinite &&
      spec.finite_values().size() == 1)
    out += " r=" + std::to_string(spec.finite_values()[0]);
  out += " m=" + std::to_string(pair.m());
  if (spec.kind() == IntersectionSpec::Kind::kPeriodic)
    out += " intersection=" + spec.materialize(pair.m()).to_text();
  return out;
}

ordered_json pair_json(const PartitionPair& pair)
{
  ordered_json j;
  j["C"] = set_to_json(pair.c());
  j["D"] = set_to_json(pair.d());
  j["m"] = pair.m();
  j["intersection"] = set_to_json(pair.intersection().materialize(pair.m()));
  return j;
}

int run_gen(const GenOptions& opt)
{
  if (opt.kind == "evil" || opt.kind == "odious") {
    IntSet s = opt.kind == "evil"
                   ? repart::evil_set(static_cast<unsigned>(opt.l))
                   : repart::odious_set(static_cast<unsigned>(opt.l));
    if (opt.format == "json") {
      ordered_json j = json_header("gen-" + opt.kind);
      j["l"] = opt.l;
      j["set"] = set_to_json(s);
      emit(j);
    } else {
      std::cout << s.to_text() << "\n";
    }
    return kExitOk;
  }

  PartitionPair pair = [&] {
    if (opt.kind == "dombi") return repart::dombi_partition(opt.n);
    if (opt.kind == "tm-pair")
      return repart::finite_tm_partition(static_cast<unsigned>(opt.l));
    if (opt.kind == "chen-lev")
      return repart::chen_lev_pair(static_cast<unsigned>(opt.l));
    // lift: block-tile the chen-lev base pair of the same l
    PartitionPair base = repart::chen_lev_pair(static_cast<unsigned>(opt.l));
    std::uint64_t r = base.intersection().finite_values()[0];
    return repart::lift_partition(base.c(), base.d(), r, base.m(), opt.blocks);
  }();

  if (opt.format == "json") {
    ordered_json j = json_header("gen-" + opt.kind);
    if (opt.kind == "dombi")
      j["n"] = opt.n;
    else
      j["l"] = opt.l;
    if (opt.kind == "lift") j["blocks"] = opt.blocks;
    j.update(pair_json(pair));
    emit(j);
  } else {
    std::cout << pair_text(pair) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct Row {
  std::vector<std::pair<std::string, std::string>> cells;

  void add(const std::string& key, const std::string& value)
  {
    cells.emplace_back(key, value);
  }
  void add(const std::string& key, std::uint64_t value)
  {
    cells.emplace_back(key, std::to_string(value));
  }
  void add(const std::string& key, bool value)
  {
    cells.emplace_back(key, value ? "true" : "false");
  }
};

struct Report {
  std::string campaign;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Row> rows;
  bool conforms = false;

  void param(const std::string& key, const std::string& value)
  {
    params.emplace_back(key, value);
  }
  void param(const std::string& key, std::uint64_t value)
  {
    params.emplace_back(key, std::to_string(value));
  }
};

ordered_json json_cell(const std::string& v)
{
  if (v == "true" || v == "false") return v == "true";
  if (!v.empty() && v.find_first_not_of("0123456789") == std::string::npos)
    return std::stoull(v);
  return v;
}

void render_report(const Report& report, const std::string& format)
{
  if (format == "json") {
    ordered_json j = json_header(report.campaign);
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : report.params) params[k] = json_cell(v);
    j["params"] = params;
    ordered_json rows = ordered_json::array();
    for (const Row& row : report.rows) {
      ordered_json jr = ordered_json::object();
      for (const auto& [k, v] : row.cells) jr[k] = json_cell(v);
      rows.push_back(jr);
    }
    j["rows"] = rows;
    j["conforms"] = report.conforms;
    emit(j);
    return;
  }

  if (format == "csv") {
    std::cout << "# " << version_banner() << " verify=" << report.campaign;
    for (const auto& [k, v] : report.params) std::cout << " " << k << "=" << v;
    std::cout << "\n";
    if (!report.rows.empty()) {
      const Row& head = report.rows.front();
      for (std::size_t i = 0; i < head.cells.size(); ++i)
        std::cout << (i ? "," : "") << head.cells[i].first;
      std::cout << "\n";
      for (const Row& row : report.rows) {
        for (std::size_t i = 0; i < row.cells.size(); ++i)
          std::cout << (i ? "," : "") << row.cells[i].second;
        std::cout << "\n";
      }
    }
    std::cout << "# conforms," << (report.conforms ? "true" : "false") << "\n";
    return;
  }

  std::cout << "# " << version_banner() << " verify=" << report.campaign;
  for (const auto& [k, v] : report.params) std::cout << " " << k << "=" << v;
  std::cout << "\n";
  for (const Row& row : report.rows) {
    bool first = true;
    for (const auto& [k, v] : row.cells) {
      std::cout << (first ? "" : " ") << k << "=" << v;
      first = false;
    }
    std::cout << "\n";
  }
  std::cout << "conforms: " << (report.conforms ? "yes" : "no")
            << " (rows=" << report.rows.size() << ")\n";
}

Report verify_thm3(std::uint64_t m_max)
{
  repart::Theorem3Report result = repart::classify_theorem3(m_max);
  Report report;
  report.campaign = "thm3";
  report.param("m_max", m_max);
  report.param("horizon", "2m");
  for (const auto& hit : result.hits) {
    Row row;
    row.add("m", hit.m);
    row.add("l", static_cast<std::uint64_t>(std::bit_width(hit.m)));
    row.add("matches_thue_morse", hit.matches_thue_morse);
    report.rows.push_back(row);
  }
  report.conforms = result.conforms;
  return report;
}

Report verify_thm6(std::uint64_t m_max)
{
  repart::Theorem6Report result = repart::classify_theorem6(m_max);
  Report report;
  report.campaign = "thm6";
  report.param("m_max", m_max);
  report.param("horizon", "2m");
  for (const auto& hit : result.hits) {
    Row row;
    row.add("m", hit.m);
    row.add("r", hit.r);
    row.add("matches_chen_lev", hit.matches_chen_lev);
    report.rows.push_back(row);
  }
  report.conforms = result.conforms;
  return report;
}

Report verify_cor1(std::uint64_t m_max)
{
  Report report;
  report.campaign = "cor1";
  report.param("m_max", m_max);
  report.conforms = true;
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    if (std::has_single_bit(m + 1)) continue;  // full equality holds there
    auto witness = repart::corollary1_witness(m);
    Row row;
    row.add("m", m);
    row.add("witness", witness ? std::to_string(*witness) : std::string("none"));
    report.rows.push_back(row);
    if (!witness || *witness <= m || *witness >= 2 * m) report.conforms = false;
  }
  return report;
}

Report verify_claims34(std::uint64_t m_max)
{
  repart::Claim34Report result = repart::claim34_check(m_max);
  Report report;
  report.campaign = "claims34";
  report.param("m_max", m_max);
  for (const auto& hit : result.hits) {
    Row row;
    row.add("m", hit.m);
    row.add("side", hit.in_evil ? std::string("A") : std::string("B"));
    row.add("all_ones", hit.all_ones);
    report.rows.push_back(row);
  }
  report.conforms = result.conforms;
  return report;
}

Report verify_eq4(std::uint64_t count, std::uint64_t bound_max,
                  std::uint64_t seed)
{
  Report report;
  report.campaign = "eq4";
  report.param("count", count);
  report.param("bound", bound_max);
  report.param("seed", seed);
  report.conforms = true;
  std::mt19937_64 rng(seed);
  std::uint64_t failures = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t bound = rng() % (bound_max + 1);
    IntSet s(bound);
    for (std::uint64_t v = 0; v <= bound; ++v)
      if (rng() & 1) s.insert(v);
    if (repart::eq4_check(s, 2 * bound + 2)) {
      ++failures;
      report.conforms = false;
    }
  }
  Row row;
  row.add("checked", count);
  row.add("failures", failures);
  report.rows.push_back(row);
  return report;
}

Report verify_eq5(std::uint64_t l_max, std::uint64_t perturbations)
{
  Report report;
  report.campaign = "eq5";
  report.param("l_max", l_max);
  report.param("perturbations", perturbations);
  report.conforms = true;
  for (std::uint64_t l = 1; l <= l_max; ++l) {
    PartitionPair pair = repart::chen_lev_pair(static_cast<unsigned>(l));
    std::uint64_t r = pair.intersection().finite_values()[0];
    bool zero = repart::eq5_residual(pair.c(), pair.m(), r).is_zero();
    Row row;
    row.add("l", l);
    row.add("m", pair.m());
    row.add("r", r);
    row.add("residual_zero", zero);
    report.rows.push_back(row);
    if (!zero) report.conforms = false;
  }
  // toggle one membership bit of the base pair; the residual must move off 0
  PartitionPair base = repart::chen_lev_pair(1);
  std::uint64_t r = base.intersection().finite_values()[0];
  std::uint64_t nonzero = 0;
  for (std::uint64_t i = 0; i < perturbations; ++i) {
    std::uint64_t pos = i % (base.m() + 1);
    IntSet mutated(base.m());
    for (std::uint64_t v = 0; v <= base.m(); ++v) {
      bool member = base.c().contains(v);
      if (v == pos) member = !member;
      if (member) mutated.insert(v);
    }
    if (!repart::eq5_residual(mutated, base.m(), r).is_zero()) ++nonzero;
  }
  Row row;
  row.add("perturbed", perturbations);
  row.add("nonzero_residuals", nonzero);
  report.rows.push_back(row);
  if (nonzero != perturbations) report.conforms = false;
  return report;
}

Report verify_lemma1(std::uint64_t l_max, std::uint64_t blocks)
{
  Report report;
  report.campaign = "lemma1";
  report.param("l_max", l_max);
  report.param("blocks", blocks);
  report.conforms = true;
  for (std::uint64_t l = 1; l <= l_max; ++l) {
    PartitionPair base = repart::chen_lev_pair(static_cast<unsigned>(l));
    std::uint64_t r = base.intersection().finite_values()[0];
    Row row;
    row.add("l", l);
    row.add("m", base.m());
    row.add("r", r);
    row.add("blocks", blocks);
    bool ok = true;
    try {
      PartitionPair lifted =
          repart::lift_partition(base.c(), base.d(), r, base.m(), blocks);
      // lift_partition already revalidates cover, intersection and
      // representation equality; re-derive the mismatch scan so the report
      // carries it explicitly.
      ok = !repart::first_mismatch(lifted.c(), lifted.d(), lifted.m())
                .has_value();
      row.add("universe_top", lifted.m());
    } catch (const std::exception&) {
      ok = false;
    }
    row.add("ok", ok);
    report.rows.push_back(row);
    if (!ok) report.conforms = false;
  }
  return report;
}

Report verify_eq1(std::uint64_t n)
{
  Report report;
  report.campaign = "eq1";
  report.param("n", n);
  PartitionPair prefix = repart::dombi_partition(n);
  auto mismatch = repart::first_mismatch(prefix.c(), prefix.d(), n);
  Row row;
  row.add("n", n);
  row.add("first_mismatch",
          mismatch ? std::to_string(*mismatch) : std::string("none"));
  report.rows.push_back(row);
  report.conforms = !mismatch.has_value();
  return report;
}

// ---------------------------------------------------------------------------
// search / rep
// ---------------------------------------------------------------------------

int run_search(const std::string& spec_text, std::uint64_t n, bool n_given,
               std::uint64_t m, bool m_given, std::uint64_t cap,
               const std::string& format)
{
  IntersectionSpec spec = IntersectionSpec::parse_text(spec_text);
  if (spec.kind() == IntersectionSpec::Kind::kFinite) {
    if (!m_given) throw std::invalid_argument("search: finite specs need --m");
    std::uint64_t horizon = n_given ? n : 2 * m;
    repart::ForcingOutcome outcome = repart::forced_extension(m, spec, horizon);
    if (format == "json") {
      ordered_json j = json_header("search");
      j["spec"] = spec_text;
      j["m"] = m;
      j["horizon"] = horizon;
      j["status"] = outcome.unique() ? "unique" : "contradiction";
      if (outcome.unique())
        j.update(pair_json(*outcome.pair));
      else
        j["failure_index"] = *outcome.failure_index;
      emit(j);
    } else if (outcome.unique()) {
      std::cout << "status=unique\n" << pair_text(*outcome.pair) << "\n";
    } else {
      std::cout << "status=contradiction failure_index="
                << *outcome.failure_index << "\n";
    }
    return kExitOk;
  }

  repart::ProgressionReport result = repart::progression_search(spec, n, cap);
  if (format == "json") {
    ordered_json j = json_header("search");
    j["spec"] = spec_text;
    j["n"] = n;
    j["n_star"] = result.n_star;
    j["C"] = set_to_json(result.witness_c);
    j["D"] = set_to_json(result.witness_d);
    j["nodes"] = result.nodes;
    j["prunes"] = result.prunes;
    emit(j);
  } else {
    std::cout << "n_star=" << result.n_star << "\n"
              << "C=" << result.witness_c.to_text() << "\n"
              << "D=" << result.witness_d.to_text() << "\n"
              << "nodes=" << result.nodes << " prunes=" << result.prunes
              << "\n";
  }
  return kExitOk;
}

int run_rep(const std::string& set_text, const std::string& other_text,
            std::uint64_t n, const std::string& format)
{
  IntSet s = IntSet::parse_text(set_text);
  repart::RepTable table =
      other_text.empty()
          ? repart::repfn_table(s, n)
          : repart::cross_rep_table(s, IntSet::parse_text(other_text), n);
  if (format == "json") {
    ordered_json j = json_header(other_text.empty() ? "rep" : "cross-rep");
    j["n_max"] = n;
    j["values"] = table.values;
    emit(j);
  } else {
    std::cout << "n,count\n";
    for (std::uint64_t i = 0; i < table.values.size(); ++i)
      std::cout << i << "," << table.values[i] << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"partitions of integer intervals with identical "
               "representation functions"};
  app.set_version_flag("--version", version_banner());
  app.require_subcommand(1);

  // gen ----------------------------------------------------------------
  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "emit a construction");
  gen->require_subcommand(1);
  auto add_gen_kind = [&](const std::string& kind, const std::string& help) {
    CLI::App* sub = gen->add_subcommand(kind, help);
    if (kind == "dombi")
      sub->add_option("--n", gen_opt.n, "prefix bound N");
    else
      sub->add_option("--l", gen_opt.l, "construction parameter l");
    if (kind == "lift")
      sub->add_option("--blocks", gen_opt.blocks,
                      "number of width-(m+1) blocks");
    sub->add_option("--format", gen_opt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->callback([&gen_opt, kind] { gen_opt.kind = kind; });
    return sub;
  };
  add_gen_kind("evil", "A_l, the evil numbers in [0, 2^l-1]");
  add_gen_kind("odious", "B_l, the odious numbers in [0, 2^l-1]");
  add_gen_kind("dombi", "the evil/odious partition of [0, N]");
  add_gen_kind("tm-pair", "(A_l, B_l) as a partition pair");
  add_gen_kind("chen-lev", "the single-intersection pair over [0, 2^(2l+1)-2]");
  add_gen_kind("lift", "block lifting of the chen-lev pair to several blocks");

  // verify -------------------------------------------------------------
  std::string verify_format = "text";
  std::uint64_t thm3_m_max = 64, thm6_m_max = 40, cor1_m_max = 256;
  std::uint64_t claims34_m_max = 65536;
  std::uint64_t eq4_count = 1000, eq4_bound = 256, eq4_seed = 1;
  std::uint64_t eq5_l_max = 3, eq5_perturbations = 100;
  std::uint64_t lemma1_l_max = 2, lemma1_blocks = 32;
  std::uint64_t eq1_n = 1000000;
  const std::uint64_t sweep_cap = 1 << 20;

  CLI::App* verify =
      app.add_subcommand("verify", "run a verification campaign");
  verify->require_subcommand(1);
  std::string verify_target;
  auto add_verify_target = [&](const std::string& name,
                               const std::string& help) {
    CLI::App* sub = verify->add_subcommand(name, help);
    sub->add_option("--format", verify_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->callback([&verify_target, name] { verify_target = name; });
    return sub;
  };
  add_verify_target("thm3", "empty-intersection classification sweep")
      ->add_option("--m-max", thm3_m_max, "largest interval endpoint");
  add_verify_target("thm6", "single-intersection classification sweep")
      ->add_option("--m-max", thm6_m_max, "largest interval endpoint");
  add_verify_target("cor1", "evil/odious prefix mismatch witnesses")
      ->add_option("--m-max", cor1_m_max, "largest prefix bound");
  add_verify_target("claims34", "forced-predecessor parity sweep")
      ->add_option("--m-max", claims34_m_max, "largest M");
  {
    CLI::App* sub = add_verify_target("eq4", "polynomial vs convolution tables");
    sub->add_option("--count", eq4_count, "random sets to check");
    sub->add_option("--bound", eq4_bound, "largest universe bound");
    sub->add_option("--seed", eq4_seed, "RNG seed");
  }
  {
    CLI::App* sub =
        add_verify_target("eq5", "solution-pair polynomial identity");
    sub->add_option("--l-max", eq5_l_max, "largest l");
    sub->add_option("--perturbations", eq5_perturbations,
                    "membership toggles that must break the identity");
  }
  {
    CLI::App* sub = add_verify_target("lemma1", "block lifting checks");
    sub->add_option("--l-max", lemma1_l_max, "largest l");
    sub->add_option("--blocks", lemma1_blocks, "blocks per lift");
  }
  add_verify_target("eq1", "evil/odious prefix equality at scale")
      ->add_option("--n", eq1_n, "table length");

  // search ---------------------------------------------------------------
  std::string search_spec;
  std::uint64_t search_n = 24, search_m = 0,
                search_cap = repart::kDefaultSearchCap;
  bool search_m_given = false;
  bool search_n_given = false;
  std::string search_format = "text";
  CLI::App* search = app.add_subcommand(
      "search", "bounded search for partitions with a prescribed intersection");
  search->add_option("spec", search_spec,
                     "'finite:r1,r2,...' or 'periodic:offset,period'")
      ->required();
  search->add_option("--n", search_n, "prefix length / horizon")
      ->each([&search_n_given](const std::string&) { search_n_given = true; });
  search->add_option("--m", search_m, "interval endpoint (finite specs)")
      ->each([&search_m_given](const std::string&) { search_m_given = true; });
  search->add_option("--cap", search_cap, "DFS prefix-length cap");
  search->add_option("--format", search_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // rep --------------------------------------------------------------------
  std::string rep_set, rep_other, rep_format = "csv";
  std::uint64_t rep_n = 0;
  CLI::App* rep = app.add_subcommand("rep", "emit a representation table");
  rep->add_option("--set", rep_set, "canonical set text")->required();
  rep->add_option("--other", rep_other,
                  "second set (emits the cross-representation table)");
  rep->add_option("--n", rep_n, "inclusive table bound")->required();
  rep->add_option("--format", rep_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_opt);
    if (verify->parsed()) {
      Report report;
      if (verify_target == "thm3") {
        if (thm3_m_max > sweep_cap)
          throw repart::CapExceeded("verify thm3: m-max exceeds sweep cap");
        report = verify_thm3(thm3_m_max);
      } else if (verify_target == "thm6") {
        if (thm6_m_max > sweep_cap)
          throw repart::CapExceeded("verify thm6: m-max exceeds sweep cap");
        report = verify_thm6(thm6_m_max);
      } else if (verify_target == "cor1") {
        if (cor1_m_max > sweep_cap)
          throw repart::CapExceeded("verify cor1: m-max exceeds sweep cap");
        report = verify_cor1(cor1_m_max);
      } else if (verify_target == "claims34") {
        report = verify_claims34(claims34_m_max);
      } else if (verify_target == "eq4") {
        report = verify_eq4(eq4_count, eq4_bound, eq4_seed);
      } else if (verify_target == "eq5") {
        report = verify_eq5(eq5_l_max, eq5_perturbations);
      } else if (verify_target == "lemma1") {
        report = verify_lemma1(lemma1_l_max, lemma1_blocks);
      } else {
        report = verify_eq1(eq1_n);
      }
      render_report(report, verify_format);
      return report.conforms ? kExitOk : kExitAssertionFailure;
    }
    if (search->parsed())
      return run_search(search_spec, search_n, search_n_given, search_m,
                        search_m_given, search_cap, search_format);
    if (rep->parsed()) return run_rep(rep_set, rep_other, rep_n, rep_format);
  } catch (const repart::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssertionFailure;
  }
  return kExitUsage;
}
