#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>

#include "periodica/catalog.hpp"
#include "periodica/classification.hpp"
#include "periodica/coset_table.hpp"
#include "periodica/counting.hpp"
#include "periodica/error.hpp"
#include "periodica/group_io.hpp"
#include "periodica/integer_matrix.hpp"
#include "periodica/necklace.hpp"
#include "periodica/presentation.hpp"
#include "periodica/reduction.hpp"
#include "periodica/serialize.hpp"
#include "periodica/shift_oracle.hpp"
#include "periodica/verify.hpp"

namespace periodica::cli {

namespace {

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string command;
  // group source: exactly one of these
  std::string builtin, cayley, perms, presentation, zd;
  bool all_builtin = false;
  std::string subgroup;
  std::string q = "2";
  std::string format;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t lattice_limit = kDefaultLatticeLimit;
  unsigned jobs = 1;
  std::uint64_t q_max = 5;
  std::uint64_t alpha_max = 10;
  std::uint64_t n = 1;
  bool list = false;
  std::size_t max_index = 4;
  std::vector<std::string> checks;
};

[[noreturn]] void input_error(const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); }

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    input_error("bad " + what + " '" + text + "'");
  }
  if (used != text.size() || text.front() == '-') input_error("bad " + what + " '" + text + "'");
  return v;
}

// "3", "2..5" or "2,3,5"
std::vector<std::uint64_t> parse_q_list(const std::string& text) {
  std::vector<std::uint64_t> qs;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    auto lo = parse_uint(text.substr(0, dots), "q");
    auto hi = parse_uint(text.substr(dots + 2), "q");
    if (lo > hi) input_error("empty q range '" + text + "'");
    if (hi - lo > 1000) input_error("q range '" + text + "' is too long");
    for (auto q = lo; q <= hi; ++q) qs.push_back(q);
  } else {
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) qs.push_back(parse_uint(part, "q"));
  }
  if (qs.empty()) input_error("no value of q given");
  for (auto q : qs) {
    if (q < 2) throw Error(ErrorCode::AlphabetTooSmall, "q must be at least 2");
  }
  return qs;
}

std::uint64_t single_q(const RunConfig& cfg) {
  auto qs = parse_q_list(cfg.q);
  if (qs.size() != 1) input_error("this command takes a single q");
  return qs.front();
}

Format output_format(const RunConfig& cfg, Format fallback) {
  if (cfg.format.empty()) return fallback;
  if (cfg.format == "text") return Format::Text;
  if (cfg.format == "json") return Format::Json;
  if (cfg.format == "csv") return Format::Csv;
  input_error("unknown format '" + cfg.format + "'");
}

std::string join_elements(const std::vector<Element>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string braces(const std::vector<Element>& v) { return "{" + join_elements(v, ",") + "}"; }

// ---- group sources ----

struct Resolved {
  FiniteGroup group;
  std::optional<Subgroup> subgroup;  // set when the source fixes H
};

std::size_t source_count(const RunConfig& cfg) {
  return !cfg.builtin.empty() + !cfg.cayley.empty() + !cfg.perms.empty() + !cfg.presentation.empty() +
         !cfg.zd.empty() + cfg.all_builtin;
}

Subgroup subgroup_from_ids(const FiniteGroup& g, const std::string& text) {
  std::vector<Element> gens;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
    if (part.empty()) continue;
    auto id = parse_uint(part, "element");
    if (id >= g.order()) input_error("element " + part + " is not in a group of order " + std::to_string(g.order()));
    gens.push_back(static_cast<Element>(id));
  }
  return generated_subgroup(g, gens);
}

std::string file_label(const std::string& path) { return std::filesystem::path(path).stem().string(); }

Resolved resolve(const RunConfig& cfg, bool finite_only) {
  if (source_count(cfg) != 1) {
    input_error("give exactly one of --builtin, --cayley, --perms, --presentation, --zd");
  }
  std::optional<FiniteGroup> g;
  if (!cfg.builtin.empty()) g = builtin_group(cfg.builtin);
  if (!cfg.cayley.empty()) g = read_cayley_group(read_file(cfg.cayley), file_label(cfg.cayley));
  if (!cfg.perms.empty()) {
    auto gens = parse_permutation_text(read_file(cfg.perms));
    g = group_from_permutations(gens.generators, gens.degree, file_label(cfg.perms));
  }
  if (g) {
    std::optional<Subgroup> h;
    if (!cfg.subgroup.empty()) h = subgroup_from_ids(*g, cfg.subgroup);
    return {std::move(*g), std::move(h)};
  }
  if (!cfg.presentation.empty()) {
    auto p = parse_presentation(cfg.presentation);
    if (!cfg.subgroup.empty()) {
      if (!p.subgroup_words.empty()) input_error("H is given both in the presentation and by --subgroup");
      p = parse_presentation(p.to_string() + " ; H = " + cfg.subgroup);
    }
    if (finite_only && !p.subgroup_words.empty()) {
      input_error("this command works on the group itself; drop the subgroup clause");
    }
    auto r = reduce_presentation(p, cfg.max_cosets);
    return {std::move(r.group), std::move(r.subgroup)};
  }
  if (finite_only) input_error("--zd describes an infinite group; this command needs a finite one");
  if (!cfg.subgroup.empty()) input_error("with --zd the matrix itself is the subgroup");
  auto r = reduce_sublattice(IntegerMatrix::parse(cfg.zd));
  return {std::move(r.group), std::move(r.subgroup)};
}

// ---- commands ----

void write_report(const CountReport& r, Format f, std::ostream& out) {
  if (f == Format::Json) {
    out << to_json(r).dump(2) << '\n';
    return;
  }
  if (f == Format::Csv) {
    out << "group,subgroup,q,index,class_size,psi,psi_class,alpha\n";
    out << '"' << r.group_label << "\"," << join_elements(r.subgroup_members, " ") << ',' << r.q << ','
        << r.index << ',' << r.class_size << ',' << r.psi << ',' << r.psi_class << ',' << r.alpha << '\n';
    return;
  }
  out << "group: " << r.group_label << '\n'
      << "subgroup: " << braces(r.subgroup_members) << '\n'
      << "q: " << r.q << '\n'
      << "index: " << r.index << '\n'
      << "class size: " << r.class_size << '\n'
      << "psi: " << r.psi << '\n'
      << "psi_class: " << r.psi_class << '\n'
      << "alpha: " << r.alpha << '\n'
      << "terms (mu(H,K) q^[G:K]):\n";
  for (const auto& t : r.terms) {
    out << "  K=" << braces(t.subgroup_members) << " mu=" << t.mu << " index=" << t.index << '\n';
  }
}

int cmd_psi(const RunConfig& cfg, std::ostream& out) {
  auto q = single_q(cfg);
  auto r = resolve(cfg, false);
  auto lattice = all_subgroups(r.group, cfg.lattice_limit);
  auto h = r.subgroup ? *r.subgroup : trivial_subgroup(r.group);
  write_report(psi(lattice, h, q), output_format(cfg, Format::Text), out);
  return kOk;
}

int cmd_alpha(const RunConfig& cfg, std::ostream& out) {
  auto q = single_q(cfg);
  auto r = resolve(cfg, false);
  auto lattice = all_subgroups(r.group, cfg.lattice_limit);
  std::vector<CountReport> reports;
  if (r.subgroup) {
    reports.push_back(psi(lattice, *r.subgroup, q));
  } else {
    for (std::size_t c = 0; c < lattice.class_count(); ++c) {
      reports.push_back(psi(lattice, lattice.conjugacy_class(c).front(), q));
    }
  }
  auto f = output_format(cfg, Format::Text);
  if (f == Format::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& rep : reports) {
      auto j = to_json(rep);
      j.erase("terms");
      arr.push_back(j);
    }
    out << arr.dump(2) << '\n';
  } else if (f == Format::Csv) {
    out << "subgroup,index,class_size,psi_class,alpha\n";
    for (const auto& rep : reports) {
      out << join_elements(rep.subgroup_members, " ") << ',' << rep.index << ',' << rep.class_size << ','
          << rep.psi_class << ',' << rep.alpha << '\n';
    }
  } else {
    out << "group: " << r.group.label() << "  q: " << q << '\n';
    BigInt orbits = 0;
    for (const auto& rep : reports) {
      out << "H=" << braces(rep.subgroup_members) << " index=" << rep.index << " class_size=" << rep.class_size
          << " psi_class=" << rep.psi_class << " alpha=" << rep.alpha << '\n';
      orbits += rep.alpha;
    }
    if (!r.subgroup) out << "orbits: " << orbits << '\n';
  }
  return kOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  if (cfg.q_max < 2) throw Error(ErrorCode::AlphabetTooSmall, "--q-max must be at least 2");
  auto table = table_small_values(cfg.q_max);
  auto f = output_format(cfg, Format::Csv);
  if (f == Format::Json) {
    out << to_json(table).dump(2) << '\n';
  } else if (f == Format::Csv) {
    out << table_csv(table);
  } else {
    out << "alpha_[1](G; q)\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      out << table.rows[r];
      for (const auto& v : table.alpha[r]) out << '\t' << v;
      out << '\n';
    }
  }
  return kOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.alpha_max == 0) input_error("--alpha-max must be positive");
  if (cfg.alpha_max > 10) err << "warning: alpha-max above 10 needs catalog groups beyond the builtins\n";
  auto result = classify_small_alpha(cfg.alpha_max, builtin_catalog(), cfg.jobs);
  if (output_format(cfg, Format::Text) == Format::Json) {
    out << to_json(result).dump(2) << '\n';
    return kOk;
  }
  for (std::uint64_t v = 1; v <= cfg.alpha_max; ++v) {
    auto hits = result.attaining(v);
    out << "alpha = " << v << ": ";
    if (hits.empty()) out << "unattained";
    for (std::size_t i = 0; i < hits.size(); ++i) {
      out << (i ? ", " : "") << "(G/H = " << hits[i].group << ", q = " << hits[i].q << ")";
    }
    out << '\n';
  }
  const auto& cert = result.certificate;
  out << "scan certificate (alpha >= (q^n - q^(n-1))/n with n = [G:H]):\n";
  for (const auto& row : cert.rows) {
    out << "  q = " << row.q << ": orders 2.." << row.last_order << " scanned, n = " << row.stop_order
        << " gives bound " << row.stop_bound.to_string() << " > " << cfg.alpha_max << '\n';
  }
  out << "  q = " << cert.stop_q << ": bound at n = 2 is " << cert.stop_bound.to_string() << " > "
      << cfg.alpha_max << ", so no larger q qualifies\n"
      << "  cells examined: " << cert.cells_examined << '\n';
  return kOk;
}

int cmd_aut(const RunConfig& cfg, std::ostream& out) {
  auto q = single_q(cfg);
  auto r = resolve(cfg, true);
  auto aut = aut_structure(all_subgroups(r.group, cfg.lattice_limit), q);
  if (output_format(cfg, Format::Text) == Format::Json) {
    out << to_json(aut).dump(2) << '\n';
    return kOk;
  }
  out << "Aut(A^G) for G = " << aut.group_label << ", q = " << q << ":\n";
  for (const auto& f : aut.factors) {
    out << "  [G:H]=" << f.index << "  (" << f.quotient.name() << ") wr Sym(" << f.alpha << ")\n";
  }
  return kOk;
}

int cmd_lowindex(const RunConfig& cfg, std::ostream& out) {
  if (cfg.presentation.empty() || source_count(cfg) != 1) input_error("lowindex needs --presentation");
  auto p = parse_presentation(cfg.presentation);
  auto classes = low_index_subgroups(p, cfg.max_index);
  if (output_format(cfg, Format::Text) == Format::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : classes) arr.push_back(to_json(c, p));
    out << arr.dump(2) << '\n';
    return kOk;
  }
  std::vector<std::size_t> totals(cfg.max_index + 1, 0);
  for (const auto& c : classes) {
    totals[c.index] += c.conjugates;
    out << "index " << c.index << ", " << c.conjugates << " conjugate(s):";
    auto perms = c.table.generator_permutations();
    for (std::size_t g = 0; g < perms.size(); ++g) {
      out << ' ' << p.generators[g] << "->[" ;
      for (std::size_t i = 0; i < perms[g].size(); ++i) out << (i ? " " : "") << perms[g][i];
      out << ']';
    }
    out << '\n';
  }
  for (std::size_t n = 1; n <= cfg.max_index; ++n) {
    out << "subgroups of index " << n << ": " << totals[n] << '\n';
  }
  return kOk;
}

int cmd_necklaces(const RunConfig& cfg, std::ostream& out) {
  auto q = single_q(cfg);
  if (cfg.n == 0 || cfg.n > 64) input_error("--n must be between 1 and 64");
  auto count = lyndon_count(cfg.n, q);
  std::vector<Word32> words;
  if (cfg.list) {
    words = lyndon_words(cfg.n, q, cfg.budget);
    if (BigInt(words.size()) != count) {
      throw Error(ErrorCode::DivisibilityViolation, "listed words disagree with the count");
    }
  }
  auto spell = [&](const Word32& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (q <= 10) {
        s += static_cast<char>('0' + w[i]);
      } else {
        s += (i ? "." : "") + std::to_string(w[i]);
      }
    }
    return s;
  };
  auto f = output_format(cfg, Format::Text);
  if (f == Format::Json) {
    nlohmann::ordered_json j = {{"n", cfg.n}, {"q", q}, {"aperiodic_necklaces", to_string(count)}};
    if (cfg.list) {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& w : words) arr.push_back(spell(w));
      j["lyndon_words"] = arr;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "aperiodic necklaces (Lyndon words) of length " << cfg.n << " over " << q << " letters: " << count
        << '\n';
    for (const auto& w : words) out << spell(w) << '\n';
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions options;
  options.qs = parse_q_list(cfg.q);
  options.checks = cfg.checks;
  options.oracle = {cfg.budget, cfg.jobs};
  std::vector<SubgroupLattice> lattices;
  if (cfg.all_builtin) {
    if (source_count(cfg) != 1) input_error("--all-builtin cannot be combined with another group");
    for (const auto& name : builtin_names()) lattices.push_back(all_subgroups(builtin_group(name), cfg.lattice_limit));
  } else {
    lattices.push_back(all_subgroups(resolve(cfg, true).group, cfg.lattice_limit));
  }
  auto f = output_format(cfg, Format::Text);
  auto report = nlohmann::ordered_json::array();
  std::size_t failed = 0;
  for (const auto& l : lattices) {
    for (const auto& r : verify_group(l, options)) {
      failed += r.status == CheckStatus::Fail;
      if (f == Format::Json) {
        report.push_back({{"group", l.group().label()},
                          {"check", r.name},
                          {"status", check_status_name(r.status)},
                          {"cases", r.cases},
                          {"detail", r.detail}});
      } else {
        out << check_status_name(r.status) << ' ' << l.group().label() << ' ' << r.name << " (" << r.cases
            << " cases)";
        if (!r.detail.empty()) out << ": " << r.detail;
        out << '\n';
      }
    }
  }
  if (f == Format::Json) {
    out << report.dump(2) << '\n';
  } else {
    out << (failed ? std::to_string(failed) + " check(s) failed" : std::string("all checks passed")) << '\n';
  }
  return failed ? kCheckFailed : kOk;
}

// ---- argument parsing ----

void add_source(CLI::App* cmd, RunConfig& cfg, bool with_subgroup) {
  cmd->add_option("--builtin", cfg.builtin, "builtin group name (Z2..Z12, Z2xZ2, Z2xZ4, Z3xZ3, S3, D4, Q8, S4)");
  cmd->add_option("--cayley", cfg.cayley, "file with a Cayley table");
  cmd->add_option("--perms", cfg.perms, "file with permutation generators in cycle notation");
  cmd->add_option("--presentation", cfg.presentation, "group presentation, e.g. \"< a, b | a^2, b^3, (a b)^2 >\"");
  if (with_subgroup) {
    cmd->add_option("--zd", cfg.zd, "sublattice of Z^d as matrix rows, e.g. \"2,1;0,3\"");
    cmd->add_option("--subgroup", cfg.subgroup,
                    "H: element ids generating it, or words for a presentation (default: trivial)");
  }
  cmd->add_option("--lattice-limit", cfg.lattice_limit, "largest group order whose lattice is built");
  cmd->add_option("--max-cosets", cfg.max_cosets, "coset enumeration limit");
}

void add_format(CLI::App* cmd, RunConfig& cfg, const std::string& choices) {
  cmd->add_option("--format", cfg.format, "output format: " + choices);
}

std::uint64_t budget_from_environment() {
  const char* env = std::getenv("PERIODICA_BUDGET");
  if (!env || !*env) return kDefaultEnumerationBudget;
  return parse_uint(env, "PERIODICA_BUDGET");
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "psi") return cmd_psi(cfg, out);
  if (cfg.command == "alpha") return cmd_alpha(cfg, out);
  if (cfg.command == "table") return cmd_table(cfg, out);
  if (cfg.command == "classify") return cmd_classify(cfg, out, err);
  if (cfg.command == "aut") return cmd_aut(cfg, out);
  if (cfg.command == "lowindex") return cmd_lowindex(cfg, out);
  if (cfg.command == "necklaces") return cmd_necklaces(cfg, out);
  return cmd_verify(cfg, out);
}

int exit_code(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::Input: return kInputError;
    case ErrorCategory::Limit: return kLimitError;
    case ErrorCategory::Inconclusive: return kInconclusive;
    case ErrorCategory::Internal: return kCheckFailed;
  }
  return kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Counts configurations of the full shift A^G by least period."};
  app.name("periodica");
  app.require_subcommand(1);
  std::optional<std::uint64_t> budget;
  app.add_option("--budget", budget, "enumeration budget (default 2^24, or PERIODICA_BUDGET)");
  app.add_option("--jobs", cfg.jobs, "worker threads; never changes the output")->check(CLI::Range(1U, 256U));

  auto* psi_cmd = app.add_subcommand("psi", "configurations whose stabiliser is exactly H");
  add_source(psi_cmd, cfg, true);
  psi_cmd->add_option("--q", cfg.q, "alphabet size");
  add_format(psi_cmd, cfg, "text, json, csv");

  auto* alpha_cmd = app.add_subcommand("alpha", "orbit counts per conjugacy class of subgroups");
  add_source(alpha_cmd, cfg, true);
  alpha_cmd->add_option("--q", cfg.q, "alphabet size");
  add_format(alpha_cmd, cfg, "text, json, csv");

  auto* table_cmd = app.add_subcommand("table", "aperiodic orbit counts for the groups of order at most 7");
  table_cmd->add_option("--q-max", cfg.q_max, "largest alphabet size");
  add_format(table_cmd, cfg, "csv (default), json, text");

  auto* classify_cmd = app.add_subcommand("classify", "all (G/H, q) with a given small alpha");
  classify_cmd->add_option("--alpha-max", cfg.alpha_max, "largest value listed");
  add_format(classify_cmd, cfg, "text, json");

  auto* aut_cmd = app.add_subcommand("aut", "wreath product factors of Aut(A^G) for finite G");
  add_source(aut_cmd, cfg, false);
  aut_cmd->add_option("--q", cfg.q, "alphabet size");
  add_format(aut_cmd, cfg, "text, json");

  auto* low_cmd = app.add_subcommand("lowindex", "subgroups of small index up to conjugacy");
  low_cmd->add_option("--presentation", cfg.presentation, "group presentation")->required();
  low_cmd->add_option("--max-index", cfg.max_index, "largest index");
  add_format(low_cmd, cfg, "text, json");

  auto* neck_cmd = app.add_subcommand("necklaces", "aperiodic necklaces, alpha_[1](Z_n; q)");
  neck_cmd->add_option("--n", cfg.n, "necklace length")->required();
  neck_cmd->add_option("--q", cfg.q, "alphabet size");
  neck_cmd->add_flag("--list", cfg.list, "print the Lyndon words");
  add_format(neck_cmd, cfg, "text, json");

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite against brute force");
  add_source(verify_cmd, cfg, false);
  verify_cmd->add_flag("--all-builtin", cfg.all_builtin, "every builtin group");
  verify_cmd->add_option("--q", cfg.q, "alphabet sizes: 3, 2..4 or 2,3,5");
  verify_cmd->add_option("--check", cfg.checks, "run only these checks")->take_all();
  add_format(verify_cmd, cfg, "text, json");

  std::ostringstream buffer;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    cfg.budget = budget ? *budget : budget_from_environment();
    int code = dispatch(cfg, buffer, err);
    out << buffer.str();
    return code;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error (" << cfg.command << "): " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "error (" << cfg.command << "): " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace periodica::cli
