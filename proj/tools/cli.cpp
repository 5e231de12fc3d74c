#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "chamber/composer.hpp"
#include "chamber/dsl.hpp"
#include "chamber/errors.hpp"
#include "chamber/index_engine.hpp"
#include "chamber/render.hpp"
#include "chamber/report.hpp"

namespace chamber::cli {

namespace {

struct Options {
  bool quiet = false;
  bool json = false;

  std::string file;
  std::string corpus;
  std::string patterns;
  std::string chain;
  std::string output;
  std::string format = "ascii";
  std::string corpus_name;
  std::size_t chamber = 0;
  unsigned total = 0;
};

struct InputError {
  std::string message;
};

// Bad flag combination or flag value that the parser cannot catch itself.
struct UsageError {
  std::string message;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(item);
  return parts;
}

ChamberLink complicated_from(const std::string& pattern_list) {
  const auto names = split_commas(pattern_list);
  if (names.size() != complicated_chambers) {
    throw UsageError{"--pattern needs 8 comma-separated patterns, got " + std::to_string(names.size())};
  }
  std::array<Pattern, complicated_chambers> patterns{};
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto p = parse_pattern(names[i]);
    if (!p) throw UsageError{"unknown pattern '" + names[i] + "' (spans, whitehead, squareknot, antoine)"};
    patterns[i] = *p;
  }
  return generate_complicated(patterns);
}

ChamberLink corpus_input(const Options& opt) {
  try {
    if (!opt.patterns.empty()) {
      if (opt.corpus != "complicated") throw UsageError{"--pattern only applies to --corpus complicated"};
      return complicated_from(opt.patterns);
    }
    return load_corpus(opt.corpus);
  } catch (const UnknownName& e) {
    throw InputError{e.what()};
  }
}

// Reads and parses the input named by --corpus or the positional file.
// Diagnostics go to `err`.
ChamberLink load_input(const Options& opt, std::ostream& err) {
  if (!opt.corpus.empty()) return corpus_input(opt);
  if (!opt.patterns.empty()) throw UsageError{"--pattern only applies to --corpus complicated"};
  if (opt.file.empty()) throw UsageError{"no input: give a .cld file or --corpus NAME"};
  std::ifstream in(opt.file, std::ios::binary);
  if (!in) throw InputError{"cannot open '" + opt.file + "'"};
  std::ostringstream text;
  text << in.rdbuf();
  ParseResult result = parse({text.str(), opt.file});
  for (const auto& d : result.diagnostics) err << format_diagnostic(d, opt.file) << '\n';
  if (!result.ok()) throw InputError{};
  return std::move(*result.link);
}

void print_report(std::ostream& out, const ChamberLink& link, const IndexReport& report) {
  out << "link " << link.name() << ": " << link.chamber_count() << " chamber"
      << (link.chamber_count() == 1 ? "" : "s") << ", disc counts";
  for (auto n : report.disc_counts) out << ' ' << n;
  out << '\n';
  out << "components: " << report.components.size() << " (windings";
  for (const auto& c : report.components) out << ' ' << c.winding;
  out << ")\n";
  out << "algebraic: signed total " << report.algebraic_total_signed << '\n';
  if (const auto* exact = std::get_if<ExactIndex>(&report.geometric)) {
    out << "geometric index: " << exact->value << " (certified)\n";
    for (const auto& c : report.certificates) out << "  " << describe(c) << '\n';
  } else {
    const auto& b = std::get<IndexBounds>(report.geometric);
    out << "geometric index: in [" << b.lower << ", " << b.upper << "], parity " << report.parity
        << " (not certified)\n";
    for (const auto& r : report.refusals) out << "  refusal: " << describe(r) << '\n';
  }
}

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  const ChamberLink link = load_input(opt, err);
  if (!opt.quiet) {
    const auto counts = disc_counts(link);
    out << "ok: " << link.name() << ", " << link.chamber_count() << " chamber"
        << (link.chamber_count() == 1 ? "" : "s") << ", disc counts";
    for (auto n : counts) out << ' ' << n;
    out << '\n';
  }
  return exit_ok;
}

int cmd_index(const Options& opt, std::ostream& out, std::ostream& err) {
  const ChamberLink link = load_input(opt, err);
  const IndexReport report = geometric_index(link);
  if (opt.json) {
    out << to_json(make_document(link.name(), report));
  } else if (!opt.quiet) {
    print_report(out, link, report);
  }
  return report.is_exact() ? exit_ok : exit_uncertified;
}

IndexExpr leaf_for(const std::string& name) {
  if (name == "core") return IndexExpr::identity();
  const ChamberLink link = load_corpus(name);
  return IndexExpr::leaf(geometric_index(link), name);
}

int cmd_compose(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto names = split_commas(opt.chain);
  if (names.empty()) throw InputError{"--chain needs at least one name"};
  std::vector<IndexExpr> leaves;
  for (const auto& name : names) {
    try {
      leaves.push_back(leaf_for(name));
    } catch (const UnknownName& e) {
      throw InputError{e.what()};
    }
  }
  IndexFacts facts;
  try {
    facts = evaluate(nest_chain(leaves));
  } catch (const MultiComponentCompanion& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid_input;
  }
  if (opt.json) {
    out << facts_to_json(names, facts);
  } else if (!opt.quiet) {
    out << "chain:";
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? " in " : " ") << names[i];
    out << '\n';
    out << "geometric index: " << to_string(facts.geometric) << '\n';
    out << "algebraic index: " << facts.algebraic << '\n';
  }
  return exit_ok;
}

int cmd_split(const Options& opt, std::ostream& out, std::ostream& err) {
  const ChamberLink link = load_input(opt, err);
  ChamberLink split = [&] {
    try {
      return split_antoine_at(link, opt.chamber);
    } catch (const NotSplittable& e) {
      throw InputError{std::string("cannot split chamber ") + std::to_string(opt.chamber) + ": " + e.what()};
    }
  }();
  const std::string text = emit(split);
  if (opt.output.empty()) {
    out << text;
    return exit_ok;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw InputError{"cannot write '" + opt.output + "'"};
  file << text;
  if (!opt.quiet) {
    out << "wrote " << opt.output << " (" << split.chamber_count() << " chambers)\n";
  }
  return exit_ok;
}

int cmd_render(const Options& opt, std::ostream& out, std::ostream& err) {
  const ChamberLink link = load_input(opt, err);
  out << (opt.format == "svg" ? render_svg(link) : render_ascii(link));
  return exit_ok;
}

int cmd_check_parallel(const Options& opt, std::ostream& out) {
  const auto conclusions = separating_torus_conclusions(opt.total);
  if (opt.json) {
    out << conclusions_to_json(opt.total, conclusions);
    return exit_ok;
  }
  if (conclusions.zero_total) {
    out << "total 0: no factorization constraint\n";
    return exit_ok;
  }
  for (const auto& f : conclusions.factors) {
    out << f.inner << " x " << f.outer << ": ";
    if (f.parallel_to_inner && f.parallel_to_outer) {
      out << "separating torus parallel to the inner boundary and to the outer boundary";
    } else if (f.parallel_to_inner) {
      out << "separating torus parallel to the inner boundary";
    } else if (f.parallel_to_outer) {
      out << "separating torus parallel to the outer boundary";
    } else {
      out << "no parallelism forced";
    }
    out << '\n';
  }
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Certified geometric index of links in a solid torus", "chamber"};
  app.require_subcommand(1);
  app.add_flag("-q,--quiet", opt.quiet, "Suppress informational output");
  app.add_flag("--json", opt.json, "Machine-readable output where supported");

  auto add_input = [&](CLI::App* sub, bool allow_corpus) {
    sub->add_option("file", opt.file, "Input .cld file");
    if (allow_corpus) {
      sub->add_option("--corpus", opt.corpus, "Use a shipped corpus link instead of a file");
      sub->add_option("--pattern", opt.patterns,
                      "With --corpus complicated: 8 comma-separated patterns (spans|whitehead|squareknot|antoine)");
    }
    sub->fallthrough();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check a .cld file; diagnostics go to stderr");
  add_input(validate_cmd, true);

  auto* index_cmd = app.add_subcommand("index", "Compute algebraic and geometric index");
  add_input(index_cmd, true);

  auto* compose_cmd = app.add_subcommand("compose", "Nest corpus links and multiply their indices");
  compose_cmd->add_option("--chain", opt.chain, "Innermost first, e.g. whitehead,whitehead")->required();
  compose_cmd->fallthrough();

  auto* split_cmd = app.add_subcommand("split-antoine", "Cut an Antoine chamber into two Whitehead chambers");
  add_input(split_cmd, false);
  split_cmd->add_option("--chamber", opt.chamber, "0-based chamber index")->required();
  split_cmd->add_option("-o,--output", opt.output, "Output .cld (stdout when omitted)");

  auto* corpus_cmd = app.add_subcommand("corpus", "Shipped example links");
  corpus_cmd->require_subcommand(1);
  corpus_cmd->fallthrough();
  auto* corpus_list = corpus_cmd->add_subcommand("list", "List corpus names");
  corpus_list->fallthrough();
  auto* corpus_show = corpus_cmd->add_subcommand("show", "Print the canonical text of one entry");
  corpus_show->add_option("name", opt.corpus_name)->required();
  corpus_show->fallthrough();

  auto* render_cmd = app.add_subcommand("render", "Draw a chamber schematic");
  add_input(render_cmd, true);
  render_cmd->add_option("--format", opt.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));

  auto* parallel_cmd = app.add_subcommand("check-parallel", "Boundary-parallel conclusions for a total index");
  parallel_cmd->add_option("--total", opt.total, "Total geometric index")->required();
  parallel_cmd->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return exit_usage;
  }

  try {
    if (*validate_cmd) return cmd_validate(opt, out, err);
    if (*index_cmd) return cmd_index(opt, out, err);
    if (*compose_cmd) return cmd_compose(opt, out, err);
    if (*split_cmd) return cmd_split(opt, out, err);
    if (*render_cmd) return cmd_render(opt, out, err);
    if (*parallel_cmd) return cmd_check_parallel(opt, out);
    if (*corpus_list) {
      for (const auto& name : corpus_names()) out << name << '\n';
      return exit_ok;
    }
    if (*corpus_show) {
      out << corpus_source(opt.corpus_name);
      return exit_ok;
    }
  } catch (const InputError& e) {
    if (!e.message.empty()) err << "error: " << e.message << '\n';
    return exit_invalid_input;
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return exit_usage;
  } catch (const UnknownName& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid_input;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid_input;
  }
  return exit_usage;
}

}  // namespace chamber::cli
