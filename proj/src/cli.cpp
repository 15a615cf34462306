#include "pborel/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pborel/betti.hpp"
#include "pborel/borel.hpp"
#include "pborel/builtins.hpp"
#include "pborel/stretch.hpp"
#include "pborel/verify.hpp"

namespace pborel::cli {

namespace {

using nlohmann::json;

MonomialIdeal load_input(const std::string& arg) {
  if (arg.rfind("builtin:", 0) == 0) {
    const std::string name = arg.substr(8);
    if (auto I = builtin_ideal(name)) return *I;
    std::string names;
    for (const auto& n : builtin_names()) names += (names.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown builtin '" + name + "' (available: " + names + ")");
  }
  return load_ideal_file(arg);
}

void emit_ideal(const MonomialIdeal& I, const std::string& path, std::ostream& out,
                const std::string& preamble = {}) {
  if (path.empty()) {
    out << preamble;
    write_ideal(out, I);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write '" + path + "'");
  f << preamble;
  write_ideal(f, I);
}

std::string fmt_degree(const Monomial& m) {
  std::string s = "(";
  const auto& e = m.exponents();
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(e[k]);
  }
  return s + ")";
}

json ideal_to_json(const MonomialIdeal& I) {
  json gens = json::array();
  for (const Monomial& g : I.generators()) gens.push_back(g.exponents());
  return json{{"n", I.var_count()}, {"generators", gens}};
}

unsigned default_threads() {
  if (const char* env = std::getenv("PBOREL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

std::vector<FieldSpec> to_fields(const std::vector<std::uint64_t>& chars) {
  std::vector<FieldSpec> fields;
  fields.reserve(chars.size());
  for (std::uint64_t c : chars) fields.push_back(FieldSpec::of_characteristic(c));
  return fields;
}

// ---- betti output formats -------------------------------------------------

void print_graded_grid(std::ostream& out, const BettiTable& table) {
  const auto graded = table.graded();
  std::uint32_t max_i = 0;
  std::map<Exponent, std::map<std::uint32_t, std::uint64_t>> rows;
  std::map<std::uint32_t, std::uint64_t> totals;
  for (const auto& [key, value] : graded) {
    max_i = std::max(max_i, key.first);
    rows[key.second][key.first] = value;
    totals[key.first] += value;
  }
  out << "characteristic " << table.field().characteristic << " (" << table.field().label()
      << ")\n";
  if (graded.empty()) {
    out << "  (zero table)\n";
    return;
  }

  std::size_t label_w = 5;  // "total"
  for (const auto& [deg, row] : rows)
    label_w = std::max(label_w, 4 + std::to_string(deg).size());
  std::size_t cell_w = 1;
  for (std::uint32_t i = 0; i <= max_i; ++i)
    cell_w = std::max(cell_w, std::to_string(i).size() + 2);
  for (const auto& [i, v] : totals) cell_w = std::max(cell_w, std::to_string(v).size());

  auto pad = [&out](const std::string& s, std::size_t w) {
    for (std::size_t k = s.size(); k < w; ++k) out << ' ';
    out << s;
  };
  pad("", label_w + 2);
  for (std::uint32_t i = 0; i <= max_i; ++i) pad("i=" + std::to_string(i), cell_w + 2);
  out << "\n";
  pad("total", label_w + 2);
  for (std::uint32_t i = 0; i <= max_i; ++i) {
    const auto it = totals.find(i);
    pad(it == totals.end() ? "." : std::to_string(it->second), cell_w + 2);
  }
  out << "\n";
  for (const auto& [deg, row] : rows) {
    pad("deg " + std::to_string(deg), label_w + 2);
    for (std::uint32_t i = 0; i <= max_i; ++i) {
      const auto it = row.find(i);
      pad(it == row.end() ? "." : std::to_string(it->second), cell_w + 2);
    }
    out << "\n";
  }
}

void print_multigraded_records(std::ostream& out, const BettiTable& table) {
  for (const auto& [key, value] : table.entries()) {
    out << "char=" << table.field().characteristic << " i=" << key.first
        << " deg=" << key.second.total_degree() << " b=" << fmt_degree(key.second)
        << " value=" << value << "\n";
  }
}

json table_to_json(const BettiTable& table, bool multigraded) {
  json entries = json::array();
  if (multigraded) {
    for (const auto& [key, value] : table.entries()) {
      entries.push_back(json{{"i", key.first},
                             {"b", key.second.exponents()},
                             {"deg", key.second.total_degree()},
                             {"value", value}});
    }
  } else {
    for (const auto& [key, value] : table.graded()) {
      entries.push_back(json{{"i", key.first}, {"deg", key.second}, {"value", value}});
    }
  }
  return json{{"characteristic", table.field().characteristic},
              {"grading", multigraded ? "multigraded" : "graded"},
              {"entries", entries}};
}

std::vector<std::tuple<std::uint32_t, Monomial, std::uint64_t, std::uint64_t>> table_diff(
    const BettiTable& a, const BettiTable& b) {
  std::vector<std::tuple<std::uint32_t, Monomial, std::uint64_t, std::uint64_t>> diff;
  std::set<BettiTable::Key> keys;
  for (const auto& [key, value] : a.entries()) keys.insert(key);
  for (const auto& [key, value] : b.entries()) keys.insert(key);
  for (const auto& key : keys) {
    const std::uint64_t va = a.at(key.first, key.second);
    const std::uint64_t vb = b.at(key.first, key.second);
    if (va != vb) diff.push_back({key.first, key.second, va, vb});
  }
  return diff;
}

// ---- subcommand bodies ----------------------------------------------------

struct ConstructArgs {
  std::string input, output, format = "text";
  std::uint64_t p = 0;
  std::vector<std::uint64_t> e;
  bool trace = false, trace_ideals = false, early_exit = false;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  if (!is_prime(a.p)) throw std::invalid_argument("p must be prime, got " + std::to_string(a.p));
  const MonomialIdeal I = load_input(a.input);
  ConstructOptions opts;
  if (!a.e.empty()) opts.exponent_override = a.e;
  opts.early_exit = a.early_exit;
  const auto [J, trace] = pardue_construct(I, a.p, opts);

  if (a.format == "json") {
    json stages = json::array();
    for (const StageRecord& s : trace.stages) {
      json rec{{"i", s.stage},
               {"r", s.reg_bound},
               {"e", s.exponent},
               {"power", s.power},
               {"generators", s.ideal_after.generators().size()}};
      if (a.trace_ideals) rec["ideal"] = ideal_to_json(s.ideal_after);
      stages.push_back(rec);
    }
    json doc{{"p", a.p}, {"stages", stages}, {"output", ideal_to_json(J)}};
    if (a.output.empty()) {
      out << doc.dump(2) << "\n";
    } else {
      std::ofstream f(a.output);
      if (!f) throw std::invalid_argument("cannot write '" + a.output + "'");
      f << doc.dump(2) << "\n";
    }
    return kExitOk;
  }

  std::string preamble;
  if (a.trace || a.trace_ideals) {
    std::ostringstream pre;
    pre << "# construct: p=" << a.p << " stages=" << trace.stages.size() << "\n";
    for (const StageRecord& s : trace.stages) {
      pre << "# stage " << s.stage << ": r=" << s.reg_bound << " e=" << s.exponent
          << " p^e=" << s.power << " generators=" << s.ideal_after.generators().size() << "\n";
      if (a.trace_ideals) {
        std::istringstream rows(format_ideal(s.ideal_after));
        std::string row;
        while (std::getline(rows, row)) pre << "#   " << row << "\n";
      }
    }
    preamble = pre.str();
  }
  emit_ideal(J, a.output, out, preamble);
  return kExitOk;
}

struct BorelCheckArgs {
  std::string input;
  std::uint64_t p = 0;
};

int cmd_borel_check(const BorelCheckArgs& a, std::ostream& out) {
  require_characteristic(a.p);
  const MonomialIdeal I = load_input(a.input);
  if (const auto w = is_p_borel_fixed(I, a.p)) {
    out << "NOT BOREL-FIXED (p=" << a.p << ")\n";
    out << "witness: generator=" << w->generator.str() << " i=" << w->i << " j=" << w->j
        << " s=" << w->s << " t=" << w->t << " missing=" << w->missing.str() << "\n";
    return kExitCheckFailed;
  }
  out << "BOREL-FIXED (p=" << a.p << ")\n";
  return kExitOk;
}

struct BettiArgs {
  std::string input, format = "grid";
  std::vector<std::uint64_t> chars;
  bool multigraded = false, diff = false;
  unsigned threads = 0;
};

int cmd_betti(const BettiArgs& a, std::ostream& out) {
  const MonomialIdeal I = load_input(a.input);
  const std::vector<std::uint64_t> chars = a.chars.empty() ? std::vector<std::uint64_t>{0}
                                                           : a.chars;
  const auto fields = to_fields(chars);
  const unsigned threads = a.threads ? a.threads : default_threads();

  std::vector<BettiTable> tables;
  tables.reserve(fields.size());
  for (const FieldSpec& F : fields) tables.push_back(betti_table(I, F, threads));

  if (a.diff) {
    if (tables.size() != 2)
      throw std::invalid_argument("--diff needs exactly two --char values");
    for (const auto& [i, b, va, vb] : table_diff(tables[0], tables[1])) {
      out << "DIFF i=" << i << " b=" << fmt_degree(b) << " |b|=" << b.total_degree() << ": char"
          << chars[0] << "=" << va << " char" << chars[1] << "=" << vb << "\n";
    }
    return kExitOk;
  }

  if (a.format == "json") {
    json docs = json::array();
    for (const BettiTable& t : tables) docs.push_back(table_to_json(t, a.multigraded));
    out << docs.dump(2) << "\n";
    return kExitOk;
  }
  for (std::size_t k = 0; k < tables.size(); ++k) {
    if (k) out << "\n";
    if (a.multigraded || a.format == "records") {
      print_multigraded_records(out, tables[k]);
    } else {
      print_graded_grid(out, tables[k]);
    }
  }
  return kExitOk;
}

int report_exit(const VerificationReport& report, std::ostream& out, bool verbose) {
  report.print(out, verbose);
  return report.passed() ? kExitOk : kExitCheckFailed;
}

struct StretchArgs {
  std::string input, output;
  std::size_t z = 0;
  std::uint64_t step = 0;
  std::vector<std::uint64_t> d;
};

StretchSpec make_stretch_spec(const StretchArgs& a) {
  if ((a.step != 0) == (!a.d.empty()))
    throw std::invalid_argument("give exactly one of --step or --d");
  if (a.step != 0) return StretchSpec::arithmetic(a.z, a.step);
  return StretchSpec::sequence(a.z, a.d);
}

// ---- repro-rp2 --------------------------------------------------------------

int cmd_repro_rp2(const std::vector<std::uint64_t>& extra_chars, bool verbose,
                  std::ostream& out) {
  const MonomialIdeal I = *builtin_ideal("rp2");

  out << "== constructing J from the builtin rp2 ideal (p=2) ==\n";
  const auto [J, trace] = pardue_construct(I, 2);
  for (const StageRecord& s : trace.stages) {
    out << "stage " << s.stage << ": r=" << s.reg_bound << " e=" << s.exponent
        << " p^e=" << s.power << " generators=" << s.ideal_after.generators().size() << "\n";
  }
  out << "J has " << J.generators().size() << " generators; lcm degree " << lcm_degree(J)
      << "\n\n";

  out << "== Borel-fixedness (p=2) ==\n";
  if (const auto w = is_p_borel_fixed(I, 2)) {
    out << "input ideal: NOT BOREL-FIXED, witness missing=" << w->missing.str()
        << " (generator=" << w->generator.str() << " i=" << w->i << " j=" << w->j
        << " s=" << w->s << ")\n";
  } else {
    out << "input ideal: BOREL-FIXED\n";
  }
  if (const auto w = is_p_borel_fixed(J, 2)) {
    out << "constructed J: NOT BOREL-FIXED, missing=" << w->missing.str() << "\n";
    out << "ABORT: the construction must produce a Borel-fixed ideal\n";
    return kExitCheckFailed;
  }
  out << "constructed J: BOREL-FIXED\n\n";

  std::vector<std::uint64_t> chars{0, 2, 3};
  for (std::uint64_t c : extra_chars) {
    if (std::find(chars.begin(), chars.end(), c) == chars.end()) chars.push_back(c);
  }
  const auto fields = to_fields(chars);

  out << "== graded Betti numbers of the input ideal ==\n";
  std::vector<BettiTable> tables_I;
  for (const FieldSpec& F : fields) tables_I.push_back(betti_table(I, F));
  for (const BettiTable& t : tables_I) print_graded_grid(out, t);
  out << "\n";

  out << "== Betti numbers of J ==\n";
  std::vector<BettiTable> tables_J;
  for (const FieldSpec& F : fields) tables_J.push_back(betti_table(J, F));
  const Monomial b2729 = psi_map(Monomial(std::vector<Exponent>(6, 1)),
                                 RegionSpec::from_trace(trace));
  for (std::size_t k = 0; k < fields.size(); ++k) {
    out << fields[k].label() << " totals:";
    std::map<std::uint32_t, std::uint64_t> totals;
    for (const auto& [key, value] : tables_J[k].graded()) totals[key.first] += value;
    for (const auto& [i, v] : totals) out << " " << v;
    out << "  | beta_{2," << b2729.total_degree() << "}=" << tables_J[k].at(2, b2729)
        << " beta_{3," << b2729.total_degree() << "}=" << tables_J[k].at(3, b2729) << "\n";
  }
  out << "\n";

  out << "== multigraded differences of J: characteristic 0 vs 2 ==\n";
  const auto diff = table_diff(tables_J[0], tables_J[1]);
  for (const auto& [i, b, va, vb] : diff) {
    out << "DIFF i=" << i << " b=" << fmt_degree(b) << " |b|=" << b.total_degree()
        << ": char0=" << va << " char2=" << vb << "\n";
  }
  out << "\n";

  out << "== theorem verification ==\n";
  const auto thm = verify_main_theorem(I, J, RegionSpec::from_trace(trace), fields);
  thm.print(out, verbose);
  out << "\n";

  out << "== field-independent summaries of J ==\n";
  const auto props = verify_char_independence_props(J, 2, fields);
  props.print(out, verbose);
  out << "\n";

  if (!thm.passed() || !props.passed() || diff.empty()) {
    out << "ABORT: reproduction incomplete\n";
    return kExitCheckFailed;
  }

  std::set<std::pair<std::uint32_t, Exponent>> where;
  for (const auto& [i, b, va, vb] : diff) where.insert({i, b.total_degree()});
  out << "CONJECTURE VIOLATED AT (i,|b|) ∈ {";
  bool first = true;
  for (const auto& [i, deg] : where) {
    if (!first) out << ",";
    out << "(" << i << "," << deg << ")";
    first = false;
  }
  out << "}\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"monomial ideal toolkit: Borel-fixedness in characteristic p and "
               "field-dependent Betti tables"};
  app.require_subcommand(1);

  const std::string input_help =
      "ideal file in the shared text format, or builtin:<name> "
      "(rp2, maximal3, cycle5, staircase2, triangle3)";

  // construct
  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a p-Borel-fixed ideal from the input");
  construct->add_option("input", ca.input, input_help)->required();
  construct->add_option("-p,--prime", ca.p, "prime characteristic")->required();
  construct->add_option("--e", ca.e, "override exponents e_1,...,e_{n-1}")->delimiter(',');
  construct->add_option("-o,--output", ca.output, "write the result here instead of stdout");
  construct->add_flag("--trace", ca.trace, "include per-stage r_i, e_i as comments");
  construct->add_flag("--trace-ideals", ca.trace_ideals, "also include intermediate ideals");
  construct->add_flag("--early-exit", ca.early_exit, "stop once already Borel-fixed");
  construct->add_option("--format", ca.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // borel-check
  BorelCheckArgs ba;
  auto* borel = app.add_subcommand("borel-check", "test p-Borel-fixedness, print a witness if not");
  borel->add_option("input", ba.input, input_help)->required();
  borel->add_option("-p,--characteristic", ba.p, "0 or a prime")->required();

  // betti
  BettiArgs ta;
  auto* betti = app.add_subcommand("betti", "Betti tables over one or more fields");
  betti->add_option("input", ta.input, input_help)->required();
  betti->add_option("--char", ta.chars, "field characteristic (repeatable; default 0)");
  auto* mg = betti->add_flag("--multigraded", ta.multigraded, "full multidegree refinement");
  betti->add_flag("--graded", "N-graded aggregation (default)")->excludes(mg);
  betti->add_flag("--diff", ta.diff, "print only entries differing between two characteristics");
  betti->add_option("--format", ta.format, "grid|records|json")
      ->check(CLI::IsMember({"grid", "records", "json"}));
  betti->add_option("--threads", ta.threads, "parallel Betti evaluations");

  // verify
  auto* verify = app.add_subcommand("verify", "machine-check the library's structural claims");
  verify->require_subcommand(1);
  bool verbose = false;
  verify->add_flag("-v,--verbose", verbose, "print every comparison, not just failures");

  std::string vt_input, vt_constructed;
  std::uint64_t vt_p = 0;
  std::vector<std::uint64_t> vt_e, vt_chars{0, 2, 3};
  std::uint64_t vt_r1 = 0;
  auto* vtheorem = verify->add_subcommand(
      "theorem", "Betti correspondence between an ideal and its construction");
  vtheorem->add_option("input", vt_input, input_help)->required();
  vtheorem->add_option("--constructed", vt_constructed,
                       "previously constructed ideal (default: construct now)");
  vtheorem->add_option("-p,--prime", vt_p, "prime characteristic")->required();
  vtheorem->add_option("--e", vt_e, "exponents e_1,...,e_{n-1}")->delimiter(',');
  vtheorem->add_option("--r1", vt_r1, "region A radius (default: lcm degree of the input)");
  vtheorem->add_option("--char", vt_chars, "fields to check (default 0,2,3)");

  StretchArgs vs;
  std::vector<std::uint64_t> vs_chars{0, 2, 3};
  std::size_t vs_cap = 4096;
  auto* vstretch = verify->add_subcommand("stretch", "stretching remaps Betti degrees and nothing else");
  vstretch->add_option("input", vs.input, input_help)->required();
  vstretch->add_option("-z,--zvar", vs.z, "distinguished variable (1-based)")->required();
  vstretch->add_option("--step", vs.step, "arithmetic degree map l -> l*step");
  vstretch->add_option("--d", vs.d, "explicit degree sequence d_0,d_1,...")->delimiter(',');
  vstretch->add_option("--char", vs_chars, "fields to check (default 0,2,3)");
  vstretch->add_option("--cap", vs_cap, "lcm lattice size cap");

  std::string vg_input;
  std::size_t vg_j = 0;
  std::uint64_t vg_e = 0, vg_p = 0;
  std::vector<std::uint64_t> vg_chars{0, 2};
  auto* vstage = verify->add_subcommand("stage", "one construction stage: saturation + table split");
  vstage->add_option("input", vg_input, input_help)->required();
  vstage->add_option("-j,--var", vg_j, "stage variable (1-based)")->required();
  vstage->add_option("-e,--exponent", vg_e, "stage exponent e_j")->required();
  vstage->add_option("-p,--prime", vg_p, "prime characteristic")->required();
  vstage->add_option("--char", vg_chars, "fields to check (default 0,2)");

  std::string vc_input;
  std::uint64_t vc_p = 0;
  std::vector<std::uint64_t> vc_chars{0, 2, 3};
  auto* vchar = verify->add_subcommand("charprops",
                                       "regularity and projective dimension across fields");
  vchar->add_option("input", vc_input, input_help)->required();
  vchar->add_option("-p,--prime", vc_p, "prime the input is meant to be Borel-fixed for")
      ->required();
  vchar->add_option("--char", vc_chars, "fields to check (default 0,2,3)");

  // repro-rp2
  std::vector<std::uint64_t> rp_chars;
  bool rp_verbose = false;
  auto* repro = app.add_subcommand("repro-rp2",
                                   "one-shot reproduction of the rp2 counter-example pipeline");
  repro->add_option("--char", rp_chars, "additional characteristics beyond 0,2,3");
  repro->add_flag("-v,--verbose", rp_verbose, "print every verification comparison");

  // stretch / colon / saturate
  StretchArgs sa;
  auto* stretch = app.add_subcommand("stretch", "apply the stretch operator to an ideal");
  stretch->add_option("input", sa.input, input_help)->required();
  stretch->add_option("-z,--zvar", sa.z, "distinguished variable (1-based)")->required();
  stretch->add_option("--step", sa.step, "arithmetic degree map l -> l*step");
  stretch->add_option("--d", sa.d, "explicit degree sequence d_0,d_1,...")->delimiter(',');
  stretch->add_option("-o,--output", sa.output, "write the result here instead of stdout");

  std::string co_input, co_output;
  std::size_t co_j = 0;
  std::uint64_t co_t = 0;
  auto* colon = app.add_subcommand("colon", "colon ideal (I : x_j^t)");
  colon->add_option("input", co_input, input_help)->required();
  colon->add_option("-j,--var", co_j, "variable (1-based)")->required();
  colon->add_option("-t,--power", co_t, "power t")->required();
  colon->add_option("-o,--output", co_output, "write the result here instead of stdout");

  std::string su_input, su_output;
  std::size_t su_j = 0;
  auto* saturate = app.add_subcommand("saturate", "saturation (I : x_j^inf)");
  saturate->add_option("input", su_input, input_help)->required();
  saturate->add_option("-j,--var", su_j, "variable (1-based)")->required();
  saturate->add_option("-o,--output", su_output, "write the result here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArgument;
  }

  try {
    if (*construct) return cmd_construct(ca, out);
    if (*borel) return cmd_borel_check(ba, out);
    if (*betti) return cmd_betti(ta, out);
    if (*vtheorem) {
      if (!is_prime(vt_p)) throw std::invalid_argument("p must be prime");
      const MonomialIdeal I = load_input(vt_input);
      MonomialIdeal J = MonomialIdeal::zero(I.var_count());
      RegionSpec spec;
      if (vt_constructed.empty()) {
        ConstructOptions opts;
        if (!vt_e.empty()) opts.exponent_override = vt_e;
        auto [built, trace] = pardue_construct(I, vt_p, opts);
        J = std::move(built);
        spec = RegionSpec::from_trace(trace);
      } else {
        J = load_input(vt_constructed);
        if (vt_e.empty())
          throw std::invalid_argument("--e is required when --constructed is given");
        spec.p = vt_p;
        spec.e = vt_e;
        spec.r1 = vt_r1 ? vt_r1 : lcm_degree(I);
      }
      if (vt_r1) spec.r1 = vt_r1;
      return report_exit(verify_main_theorem(I, J, spec, to_fields(vt_chars)), out, verbose);
    }
    if (*vstretch) {
      const MonomialIdeal I = load_input(vs.input);
      return report_exit(
          verify_stretch_proposition(I, make_stretch_spec(vs), to_fields(vs_chars), vs_cap),
          out, verbose);
    }
    if (*vstage) {
      const MonomialIdeal I = load_input(vg_input);
      return report_exit(verify_stage_dichotomy(I, vg_j, vg_e, vg_p, to_fields(vg_chars)), out,
                         verbose);
    }
    if (*vchar) {
      const MonomialIdeal I = load_input(vc_input);
      return report_exit(verify_char_independence_props(I, vc_p, to_fields(vc_chars)), out,
                         verbose);
    }
    if (*repro) return cmd_repro_rp2(rp_chars, rp_verbose, out);
    if (*stretch) {
      const MonomialIdeal I = load_input(sa.input);
      emit_ideal(stretch_phi(I, make_stretch_spec(sa)), sa.output, out);
      return kExitOk;
    }
    if (*colon) {
      const MonomialIdeal I = load_input(co_input);
      emit_ideal(colon_power(I, co_j, co_t), co_output, out);
      return kExitOk;
    }
    if (*saturate) {
      const MonomialIdeal I = load_input(su_input);
      emit_ideal(saturate_var(I, su_j), su_output, out);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::overflow_error& e) {
    err << "overflow: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArgument;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArgument;
  }
  return kExitBadArgument;
}

}  // namespace pborel::cli
