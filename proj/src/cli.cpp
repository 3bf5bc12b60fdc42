#include "lrpic/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "lrpic/error.hpp"
#include "lrpic/json_io.hpp"
#include "lrpic/lr.hpp"
#include "lrpic/wordcrystal.hpp"

namespace lrpic::cli {

namespace {

constexpr std::string_view kPartitionGrammar =
    "comma-separated weakly decreasing nonnegative integers, e.g. 3,1,1";
constexpr std::string_view kOrderGrammar = "jay | eff | index:<k>";

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string lambda;
  std::string mu;
  std::string nu;
  std::string order = "jay";
  std::string skew_order = "jay";
  std::string format = "text";
  int rank = 0;
  int max_size = 0;
  std::size_t limit = 0;

  CLI::Option* lambda_opt = nullptr;
  CLI::Option* mu_opt = nullptr;
  CLI::Option* nu_opt = nullptr;
  CLI::Option* rank_opt = nullptr;
  CLI::Option* order_opt = nullptr;
  CLI::Option* skew_order_opt = nullptr;
  CLI::Option* max_size_opt = nullptr;
  CLI::Option* limit_opt = nullptr;

  bool json() const { return format == "json"; }
  std::optional<std::size_t> limit_value() const {
    return limit_opt && limit_opt->count() ? std::optional<std::size_t>(limit) : std::nullopt;
  }
  std::optional<int> rank_value() const {
    return rank_opt && rank_opt->count() ? std::optional<int>(rank) : std::nullopt;
  }
};

Partition partition_flag(CLI::Option* opt, const std::string& value,
                         std::string_view flag) {
  if (!opt || opt->count() == 0) throw UsageError(std::string(flag) + " is required (" +
                                                  std::string(kPartitionGrammar) + ")");
  return parse_partition(value, flag);
}

LRInstance instance_from(const Options& o) {
  Partition lambda = partition_flag(o.lambda_opt, o.lambda, "--lambda");
  Partition mu = partition_flag(o.mu_opt, o.mu, "--mu");
  Partition nu = partition_flag(o.nu_opt, o.nu, "--nu");
  try {
    return LRInstance(std::move(lambda), std::move(mu), std::move(nu), o.rank_value());
  } catch (const Error& e) {
    throw UsageError(std::string("invalid instance: ") + e.what());
  }
}

TotalOrder resolve_order(const std::string& name, const std::vector<Cell>& domain, std::string_view flag) {
  if (name == "jay") return jay_order(domain);
  if (name == "eff") return eff_order(domain);
  constexpr std::string_view prefix = "index:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string_view digits = std::string_view(name).substr(prefix.size());
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      auto orders = enumerate_admissible_orders(domain, k + 1);
      if (k < orders.size()) return orders[k];
      throw UsageError(std::string(flag) + " " + name + ": only " + std::to_string(orders.size()) +
                       " admissible orders exist");
    }
  }
  throw UsageError(std::string(flag) + " " + name + ": expected " + std::string(kOrderGrammar));
}

std::string describe_order(const TotalOrder& order) {
  std::string out;
  for (Cell c : order.cells()) {
    if (!out.empty()) out += ' ';
    out += to_string(c);
  }
  return out;
}

int cmd_count(const Options& o, std::ostream& out) {
  const LRInstance inst = instance_from(o);
  const CountTriple counts = lr_coefficient_all_methods(inst);
  const BijectionReport bijection = verify_bijection(inst);
  if (o.json()) {
    out << count_report(inst, counts, bijection).dump() << '\n';
  } else {
    out << "pictures=" << counts.pictures << " crystals=" << counts.crystals << " lattice=" << counts.lattice
        << '\n';
  }
  return counts.agree() && bijection.ok ? kExitOk : kExitVerificationFailed;
}

int cmd_pictures(const Options& o, std::ostream& out) {
  const LRInstance inst = instance_from(o);
  const TotalOrder mu_order = resolve_order(o.order, cells(inst.mu()), "--order");
  const TotalOrder skew_order = resolve_order(o.skew_order, inst.skew().cells(), "--skew-order");
  const auto pictures = enumerate_pictures(inst.mu(), inst.skew(), mu_order, skew_order);
  if (o.json()) {
    out << json(pictures).dump() << '\n';
  } else {
    for (const auto& f : pictures) out << render(f) << '\n';
    out << "total=" << pictures.size() << '\n';
  }
  return kExitOk;
}

int cmd_crystals(const Options& o, std::ostream& out) {
  const LRInstance inst = instance_from(o);
  const TotalOrder mu_order = resolve_order(o.order, cells(inst.mu()), "--order");
  const auto crystals = lr_filter(inst, mu_order);
  if (o.json()) {
    out << json(crystals).dump() << '\n';
  } else {
    for (const auto& t : crystals) out << render(t) << '\n';
    out << "total=" << crystals.size() << '\n';
  }
  return kExitOk;
}

int cmd_phi(const Options& o, std::ostream& out) {
  const LRInstance inst = instance_from(o);
  json rows = json::array();
  for (const auto& f : enumerate_pictures(inst.mu(), inst.skew())) {
    const Tableau t = phi(f, inst);
    if (o.json()) {
      rows.push_back({{"picture", f}, {"tableau", t}});
    } else {
      out << render(f) << "\n=>\n" << render(t) << '\n';
    }
  }
  if (o.json()) out << rows.dump() << '\n';
  return kExitOk;
}

int cmd_psi(const Options& o, std::ostream& out) {
  const LRInstance inst = instance_from(o);
  json rows = json::array();
  for (const auto& t : lr_crystals(inst)) {
    const Picture f = psi(t, inst);
    if (o.json()) {
      rows.push_back({{"tableau", t}, {"picture", f}});
    } else {
      out << render(t) << "=>\n" << render(f) << "\n\n";
    }
  }
  if (o.json()) out << rows.dump() << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Partition mu = partition_flag(o.mu_opt, o.mu, "--mu");
  const bool have_instance = o.lambda_opt->count() || o.nu_opt->count();
  std::optional<LRInstance> inst;
  if (have_instance) inst = instance_from(o);
  const int max_entry = inst ? inst->rank_bound() : o.rank_value().value_or(std::max(1, mu.length()));
  if (max_entry < mu.length()) {
    throw UsageError("--rank " + std::to_string(max_entry) + " is smaller than the " +
                     std::to_string(mu.length()) + " rows of --mu");
  }
  const TotalOrder order = resolve_order(o.order, cells(mu), "--order");

  bool ok = true;
  json report;
  const EmbeddingReport embedding = verify_embedding(mu, max_entry, order);
  ok = ok && embedding.ok;
  report["embedding"] = {{"ok", embedding.ok}, {"tableaux", embedding.tableaux}, {"max_entry", max_entry}};
  if (embedding.counterexample) {
    const auto& ce = *embedding.counterexample;
    report["embedding"]["counterexample"] = {
        {"tableau", ce.tableau}, {"index", ce.index}, {"operator", ce.lowering ? "f" : "e"}, {"image", ce.image}};
  }
  if (!o.json()) {
    out << "embedding: " << (embedding.ok ? "ok" : "FAILED") << " (" << embedding.tableaux
        << " tableaux, max entry " << max_entry << ")\n";
    if (embedding.counterexample) {
      out << "  counterexample: " << (embedding.counterexample->lowering ? "f_" : "e_")
          << embedding.counterexample->index << " on\n" << render(embedding.counterexample->tableau);
    }
  }

  if (inst) {
    const BijectionReport bijection = verify_bijection(*inst);
    std::size_t add_failures = 0;
    std::size_t destination_failures = 0;
    for (const auto& f : enumerate_pictures(inst->mu(), inst->skew())) {
      if (!lemma_add_check(f, *inst)) ++add_failures;
    }
    for (const auto& t : lr_crystals(*inst)) {
      if (!lemma_destination_check(t, *inst)) ++destination_failures;
    }
    ok = ok && bijection.ok && add_failures == 0 && destination_failures == 0;
    report["instance"] = *inst;
    report["bijection"] = bijection.ok ? "ok" : "failed";
    report["counterexample"] = bijection.ok ? json(nullptr) : json(bijection.counterexample);
    report["counts"] = {{"pictures", bijection.pictures}, {"crystals", bijection.crystals}};
    report["lemma_failures"] = {{"addition", add_failures}, {"destination", destination_failures}};
    if (!o.json()) {
      out << "bijection: " << (bijection.ok ? "ok" : "FAILED") << " (pictures=" << bijection.pictures
          << " crystals=" << bijection.crystals << ")\n";
      if (!bijection.ok) out << "  counterexample: " << bijection.counterexample << '\n';
      out << "lemmas: addition failures=" << add_failures << " destination failures=" << destination_failures
          << '\n';
    }
  }
  if (o.json()) out << report.dump() << '\n';
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const Partition lambda = partition_flag(o.lambda_opt, o.lambda, "--lambda");
  const Partition mu = partition_flag(o.mu_opt, o.mu, "--mu");
  if (!o.rank_value()) throw UsageError("--rank is required for decompose");
  const int rank = *o.rank_value();
  if (rank < std::max({1, lambda.length(), mu.length()})) {
    throw UsageError("--rank " + std::to_string(rank) + " is smaller than the rows of --lambda or --mu");
  }
  const TotalOrder order = resolve_order(o.order, cells(mu), "--order");
  const auto parts = decompose_tensor(lambda, mu, rank, order);
  if (o.json()) {
    json rows = json::array();
    for (const auto& [nu, mult] : parts) rows.push_back({{"nu", nu}, {"multiplicity", mult}});
    out << rows.dump() << '\n';
  } else {
    // Largest partitions first, matching partitions_of.
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      out << '(' << to_string(it->first) << ") x" << it->second << '\n';
    }
  }
  return kExitOk;
}

int cmd_orders(const Options& o, std::ostream& out) {
  std::vector<Cell> domain;
  if (o.nu_opt->count()) {
    const Partition nu = partition_flag(o.nu_opt, o.nu, "--nu");
    const Partition lambda = o.lambda_opt->count() ? parse_partition(o.lambda, "--lambda") : Partition{};
    if (!lambda.contained_in(nu)) throw UsageError("--lambda must be contained in --nu");
    domain = SkewShape(nu, lambda).cells();
  } else {
    domain = cells(partition_flag(o.mu_opt, o.mu, "--mu or --nu"));
  }
  const auto orders = enumerate_admissible_orders(domain, o.limit_value());
  if (o.json()) {
    out << json(orders).dump() << '\n';
  } else {
    for (std::size_t k = 0; k < orders.size(); ++k) out << "index:" << k << "  " << describe_order(orders[k]) << '\n';
    out << "total=" << orders.size() << '\n';
  }
  return kExitOk;
}

struct ConjectureRow {
  std::size_t skew_index;
  std::size_t mu_index;
  ConjectureReport report;
};

struct ConjectureTable {
  std::vector<ConjectureRow> rows;
  std::size_t holds = 0;
  bool classic_consistent = true;  // every (J, J) row holds
};

ConjectureTable conjecture_table(const LRInstance& inst, std::optional<std::size_t> limit) {
  ConjectureTable table;
  const auto skew_cells = inst.skew().cells();
  const auto mu_cells = cells(inst.mu());
  const auto skew_orders = enumerate_admissible_orders(skew_cells, limit);
  const auto mu_orders = enumerate_admissible_orders(mu_cells, limit);
  const TotalOrder skew_jay = jay_order(skew_cells);
  const TotalOrder mu_jay = jay_order(mu_cells);
  for (std::size_t a = 0; a < skew_orders.size(); ++a) {
    for (std::size_t b = 0; b < mu_orders.size(); ++b) {
      ConjectureRow row{a, b, conjecture_experiment(inst, skew_orders[a], mu_orders[b])};
      if (row.report.holds()) ++table.holds;
      if (skew_orders[a] == skew_jay && mu_orders[b] == mu_jay && !row.report.holds()) {
        table.classic_consistent = false;
      }
      table.rows.push_back(row);
    }
  }
  return table;
}

json report_json(const ConjectureReport& r) {
  return {{"crystals", r.crystals},
          {"pictures", r.pictures},
          {"injective", r.injective},
          {"image_matches", r.image_matches},
          {"verdict", r.holds() ? "holds" : "fails"}};
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  if (o.max_size_opt->count()) {
    json rows = json::array();
    std::size_t pairs = 0;
    std::size_t holds = 0;
    bool consistent = true;
    if (!o.json()) out << "lambda\tmu\tnu\tpairs\tholds\tfails\n";
    for (const auto& inst : all_instances(o.max_size)) {
      const ConjectureTable table = conjecture_table(inst, o.limit_value());
      pairs += table.rows.size();
      holds += table.holds;
      consistent = consistent && table.classic_consistent;
      const std::size_t fails = table.rows.size() - table.holds;
      if (o.json()) {
        rows.push_back({{"instance", inst}, {"pairs", table.rows.size()}, {"holds", table.holds}, {"fails", fails}});
      } else {
        out << '(' << to_string(inst.lambda()) << ")\t(" << to_string(inst.mu()) << ")\t(" << to_string(inst.nu())
            << ")\t" << table.rows.size() << '\t' << table.holds << '\t' << fails << '\n';
      }
    }
    if (o.json()) {
      out << json{{"instances", rows}, {"pairs", pairs}, {"holds", holds}, {"fails", pairs - holds},
                  {"classic_consistent", consistent}}
                 .dump()
          << '\n';
    } else {
      out << "total pairs=" << pairs << " holds=" << holds << " fails=" << pairs - holds
          << " classic rows consistent=" << (consistent ? "yes" : "no") << '\n';
    }
    return consistent ? kExitOk : kExitVerificationFailed;
  }

  const LRInstance inst = instance_from(o);
  if (o.order_opt->count() || o.skew_order_opt->count()) {
    const TotalOrder mu_order = resolve_order(o.order, cells(inst.mu()), "--order");
    const TotalOrder skew_order = resolve_order(o.skew_order, inst.skew().cells(), "--skew-order");
    const ConjectureReport r = conjecture_experiment(inst, skew_order, mu_order);
    if (o.json()) {
      json j = report_json(r);
      j["instance"] = inst;
      j["skew_order"] = skew_order;
      j["mu_order"] = mu_order;
      out << j.dump() << '\n';
    } else {
      out << "crystals=" << r.crystals << " pictures=" << r.pictures << " injective=" << (r.injective ? "yes" : "no")
          << " image_matches=" << (r.image_matches ? "yes" : "no") << " verdict=" << (r.holds() ? "holds" : "fails")
          << '\n';
    }
    return kExitOk;
  }

  const ConjectureTable table = conjecture_table(inst, o.limit_value());
  if (o.json()) {
    json rows = json::array();
    for (const auto& row : table.rows) {
      json j = report_json(row.report);
      j["skew_order"] = "index:" + std::to_string(row.skew_index);
      j["mu_order"] = "index:" + std::to_string(row.mu_index);
      rows.push_back(std::move(j));
    }
    out << json{{"instance", inst}, {"rows", rows}, {"holds", table.holds},
                {"classic_consistent", table.classic_consistent}}
               .dump()
        << '\n';
  } else {
    out << "skew_order\tmu_order\tcrystals\tpictures\tinjective\timage_matches\tverdict\n";
    for (const auto& row : table.rows) {
      const auto& r = row.report;
      out << "index:" << row.skew_index << "\tindex:" << row.mu_index << '\t' << r.crystals << '\t' << r.pictures
          << '\t' << (r.injective ? "yes" : "no") << '\t' << (r.image_matches ? "yes" : "no") << '\t'
          << (r.holds() ? "holds" : "fails") << '\n';
    }
    out << "pairs=" << table.rows.size() << " holds=" << table.holds << '\n';
  }
  return table.classic_consistent ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (!o.max_size_opt->count()) throw UsageError("--max-size is required for sweep");
  const SweepSummary summary = sweep(o.max_size);

  struct SizeRow {
    std::size_t instances = 0;
    std::size_t nonzero = 0;
    std::size_t mismatches = 0;
    std::size_t failures = 0;
  };
  std::map<int, SizeRow> by_size;
  json failures = json::array();
  for (const auto& e : summary.entries) {
    SizeRow& row = by_size[e.instance.nu().size()];
    ++row.instances;
    if (e.counts.lattice > 0) ++row.nonzero;
    if (!e.counts.agree()) ++row.mismatches;
    if (!e.bijection.ok) ++row.failures;
    if (!e.counts.agree() || !e.bijection.ok) failures.push_back(count_report(e.instance, e.counts, e.bijection));
  }

  if (o.json()) {
    json sizes = json::array();
    for (const auto& [n, row] : by_size) {
      sizes.push_back({{"size", n},
                       {"instances", row.instances},
                       {"nonzero", row.nonzero},
                       {"count_mismatches", row.mismatches},
                       {"bijection_failures", row.failures}});
    }
    out << json{{"max_size", o.max_size},
                {"instances", summary.entries.size()},
                {"count_mismatches", summary.count_mismatches},
                {"bijection_failures", summary.bijection_failures},
                {"by_size", sizes},
                {"failures", failures}}
               .dump()
        << '\n';
  } else {
    out << "size\tinstances\tnonzero\tmismatches\tbijection_failures\n";
    for (const auto& [n, row] : by_size) {
      out << n << '\t' << row.instances << '\t' << row.nonzero << '\t' << row.mismatches << '\t' << row.failures
          << '\n';
    }
    out << "total instances=" << summary.entries.size() << " mismatches=" << summary.count_mismatches
        << " bijection_failures=" << summary.bijection_failures << '\n';
    for (const auto& f : failures) out << "FAIL " << f.dump() << '\n';
  }
  return summary.ok() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

Partition parse_partition(std::string_view text, std::string_view flag) {
  auto fail = [&](const std::string& why) {
    return std::invalid_argument(std::string(flag) + " '" + std::string(text) + "': " + why + " (expected " +
                                 std::string(kPartitionGrammar) + ")");
  };
  std::vector<int> parts;
  if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      const std::string_view token =
          text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw fail("'" + std::string(token) + "' is not an integer");
      }
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    throw fail(e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pictures and Littlewood-Richardson crystals of type A", "lrpic"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  struct Verb {
    const char* name;
    const char* help;
    int (*handler)(const Options&, std::ostream&);
  };
  const Verb verbs[] = {
      {"count", "Count pictures, LR crystals and lattice fillings", cmd_count},
      {"pictures", "List the pictures mu -> nu \\ lambda", cmd_pictures},
      {"crystals", "List the Littlewood-Richardson crystals", cmd_crystals},
      {"phi", "Tabulate Phi over all pictures", cmd_phi},
      {"psi", "Tabulate Psi over all LR crystals", cmd_psi},
      {"verify", "Check the crystal embedding, and with an instance the bijection and lemmas", cmd_verify},
      {"decompose", "Decompose B(lambda) (x) B(mu)", cmd_decompose},
      {"orders", "List admissible orders on mu or on nu \\ lambda", cmd_orders},
      {"conjecture", "Run the admissible-order picture experiment", cmd_conjecture},
      {"sweep", "Exhaustive count and bijection check over all instances up to --max-size", cmd_sweep},
  };

  std::vector<std::pair<CLI::App*, const Verb*>> subs;
  for (const Verb& verb : verbs) {
    CLI::App* sub = app.add_subcommand(verb.name, verb.help);
    subs.emplace_back(sub, &verb);
  }
  // Every verb accepts the same flag set; each handler checks what it needs.
  // CLI11 binds one Option per subcommand, so remember the selected one's.
  std::map<CLI::App*, Options> per_verb;
  for (auto& [sub, verb] : subs) {
    Options& v = per_verb[sub];
    v.lambda_opt = sub->add_option("--lambda", v.lambda, "lambda, e.g. 3,1,1");
    v.mu_opt = sub->add_option("--mu", v.mu, "mu, e.g. 3,2");
    v.nu_opt = sub->add_option("--nu", v.nu, "nu, e.g. 4,3,2,1");
    v.rank_opt = sub->add_option("--rank", v.rank, "largest allowed entry (n+1)")->check(CLI::PositiveNumber);
    v.order_opt = sub->add_option("--order", v.order, "admissible order on mu: jay | eff | index:<k>");
    v.skew_order_opt =
        sub->add_option("--skew-order", v.skew_order, "admissible order on nu \\ lambda: jay | eff | index:<k>");
    sub->add_option("--format", v.format, "output encoding")->check(CLI::IsMember({"text", "json"}));
    v.max_size_opt = sub->add_option("--max-size", v.max_size, "largest |nu| for sweeps")->check(CLI::NonNegativeNumber);
    v.limit_opt = sub->add_option("--limit", v.limit, "truncate order enumeration");
  }

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("lrpic");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  for (auto& [sub, verb] : subs) {
    if (!sub->parsed()) continue;
    try {
      return verb->handler(per_verb[sub], out);
    } catch (const std::invalid_argument& e) {
      // UsageError, parse_partition failures, and lrpic::Error from bad input.
      err << "usage error: " << e.what() << "\n\n" << sub->help();
      return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace lrpic::cli
