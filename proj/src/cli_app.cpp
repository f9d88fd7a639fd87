#include "stir/cli_app.hpp"

#include "stir/allen.hpp"
#include "stir/reasoner.hpp"
#include "stir/tbox.hpp"
#include "stir/witness.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace stir {

namespace {

bool read_input(const std::string& path, std::istream& in, std::string* text,
                std::string* error) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    *text = buf.str();
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    *error = "cannot open " + path;
    return false;
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  *text = buf.str();
  return true;
}

int run_derive_tables(std::ostream& out) {
  out << std::left << std::setw(6) << "atom" << std::setw(15) << "name"
      << std::setw(13) << "rbb" << std::setw(13) << "rbe" << std::setw(13) << "reb"
      << std::setw(13) << "ree" << "\n";
  for (AllenAtom a : all_allen_atoms()) {
    EndpointRole derived = translate_atom(a);
    out << std::left << std::setw(6) << atom_name(a) << std::setw(15)
        << atom_long_name(a) << std::setw(13) << derived.rbb.str() << std::setw(13)
        << derived.rbe.str() << std::setw(13) << derived.reb.str() << std::setw(13)
        << derived.ree.str();
    if (published_entry_is_erratum(a))
      out << "ERRATUM (published: " << published_translation(a).str() << ")";
    out << "\n";
  }
  return 0;
}

int run_check_or_validate(const RunConfig& cfg, std::istream& in, std::ostream& out,
                          std::ostream& err) {
  std::string text, io_error;
  if (!read_input(cfg.input, in, &text, &io_error)) {
    err << "error: " << io_error << "\n";
    return 2;
  }
  ParseResult parsed = parse_tbox(text);
  if (!parsed.tbox) {
    for (const Diagnostic& d : parsed.errors)
      err << cfg.input << ":" << d.str() << "\n";
    return 2;
  }
  std::vector<Diagnostic> diagnostics = validate(*parsed.tbox);

  if (cfg.command == RunConfig::Command::Validate) {
    if (diagnostics.empty()) {
      out << "ok: " << parsed.tbox->axioms.size() << " axiom(s), domain "
          << parsed.tbox->domain->name() << "\n";
      return 0;
    }
    for (const Diagnostic& d : diagnostics) out << cfg.input << ":" << d.str() << "\n";
    return 2;
  }

  if (!diagnostics.empty()) {
    for (const Diagnostic& d : diagnostics) err << cfg.input << ":" << d.str() << "\n";
    return 2;
  }

  DecideOptions opts;
  opts.seed = cfg.seed;
  if (cfg.trace) opts.trace = [&out](const std::string& line) { out << line << "\n"; };
  Verdict v = decide(*parsed.tbox, opts);

  if (!v.sat) {
    out << "UNSAT\n";
    out << "conflict: " << v.conflict << "\n";
    return 1;
  }
  out << "SAT\n";
  if (cfg.witness && v.witness) {
    if (cfg.format == "json")
      out << emit_witness_json(*v.witness);
    else
      out << emit_witness_text(*v.witness);
  }
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case RunConfig::Command::DeriveTables:
      return run_derive_tables(out);
    case RunConfig::Command::Check:
    case RunConfig::Command::Validate:
      return run_check_or_validate(cfg, in, out, err);
  }
  return 2;
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Satisfiability reasoner for interval terminologies with "
               "qualitative spatial constraints"};
  app.require_subcommand(1);

  CLI::App* check = app.add_subcommand(
      "check", "Decide satisfiability of a terminology file ('-' = stdin)");
  check->add_option("input", cfg.input, "terminology file path")->required();
  check->add_flag("--witness", cfg.witness, "emit a model witness when satisfiable");
  check->add_option("--format", cfg.format, "witness format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--trace", cfg.trace, "log each search branch");
  check->add_option("--seed", cfg.seed,
                    "search-order randomization seed (0 = canonical order)");

  CLI::App* val = app.add_subcommand(
      "validate", "Parse and well-formedness-check a terminology file");
  val->add_option("input", cfg.input, "terminology file path")->required();

  CLI::App* tables = app.add_subcommand(
      "derive-tables",
      "Print the endpoint translation of the 13 interval atoms, flagging "
      "corrections to the commonly published table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;  // 0 covers --help/--version
  }

  if (tables->parsed())
    cfg.command = RunConfig::Command::DeriveTables;
  else if (val->parsed())
    cfg.command = RunConfig::Command::Validate;
  else if (check->parsed())
    cfg.command = RunConfig::Command::Check;
  return run(cfg, in, out, err);
}

}  // namespace stir
