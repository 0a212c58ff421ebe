#include "cli.hpp"

#include <blowchern/blowup.hpp>
#include <blowchern/catalog.hpp>
#include <blowchern/error.hpp>
#include <blowchern/model_io.hpp>
#include <blowchern/serialize.hpp>
#include <blowchern/verify.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace blowchern::cli {

namespace {

struct Options {
  std::string model;
  std::string convention = "calibrated";
  std::string format = "text";
  std::string via = "both";
};

struct LoadedModel {
  std::string name;
  EmbeddingModel model;
};

// A parse diagnostic together with the file it came from.
struct FileError {
  std::string file;
  ParseError error;
};

LoadedModel load(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return {std::filesystem::path(source).stem().string(), parse_model(buf.str())};
    } catch (const ParseError& e) {
      throw FileError{source, e};
    }
  }
  if (is_catalog_name(source) || source.starts_with("pn_point")) return {source, catalog(source)};
  throw Error(ErrorKind::UnknownModel, "'" + source + "' is neither a model file nor a catalog name");
}

std::string first_difference(const BlowupElement& a, const BlowupElement& b) {
  for (int w = 0; w <= std::max(a.top_weight(), b.top_weight()); ++w) {
    const BlowupElement pa = a.component(w), pb = b.component(w);
    if (!(pa == pb))
      return "weight " + std::to_string(w) + ": closed " + format_blowup_element(pa) + " vs thom " +
             format_blowup_element(pb);
  }
  return "no difference";
}

int command_chern(const Options& o, bool numbers, std::ostream& out, std::ostream& err) {
  const LoadedModel m = load(o.model);
  const BlowupContext ctx = build_blowup(m.model, parse_convention(o.convention));
  const OutputFormat fmt = parse_output_format(o.format);
  if (o.via != "closed" && o.via != "thom" && o.via != "both")
    throw Error(ErrorKind::InvalidArgument, "--via must be closed, thom or both");

  std::optional<BlowupElement> total;
  if (o.via != "thom") total = blowup_total_chern(ctx);
  if (o.via != "closed") {
    const BlowupElement thom = blowup_total_chern_via_thom(ctx);
    if (total && !(*total == thom)) {
      err << "error: the closed formula and the Thom-space chain disagree; first difference in "
          << first_difference(*total, thom) << "\n";
      return kVerificationFailed;
    }
    total = thom;
  }
  ChernResult r;
  r.model = m.name;
  r.convention = ctx.convention();
  if (numbers) {
    r.chern_numbers = blowup_chern_numbers(*total);
  } else {
    r.total = total;
    // the Euler number comes for free whenever M carries a pairing
    const int n = ctx.truncation();
    if (ctx.embedding().ambient.pairing && n >= 1) r.chern_numbers = blowup_chern_numbers(*total, {{n}});
  }
  out << serialize_result(r, fmt);
  return kOk;
}

int command_ring(const Options& o, std::ostream& out) {
  const LoadedModel m = load(o.model);
  const BlowupContext ctx = build_blowup(m.model, parse_convention(o.convention));
  out << serialize_ring_structure(ctx, m.name, parse_output_format(o.format));
  return kOk;
}

int command_verify(const Options& o, std::ostream& out) {
  const LoadedModel m = load(o.model);
  const BlowupContext ctx = build_blowup(m.model, parse_convention(o.convention));
  ChernResult r;
  r.model = m.name;
  r.convention = ctx.convention();
  r.report = verify_report(ctx, m.name);
  out << serialize_result(r, parse_output_format(o.format));
  return r.report->passed() ? kOk : kVerificationFailed;
}

int command_catalog(const Options& o, std::ostream& out) {
  const OutputFormat fmt = parse_output_format(o.format);
  const auto names = catalog_names();
  if (fmt == OutputFormat::Json) {
    out << "[";
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << '"' << names[i] << '"';
    out << "]\n";
  } else {
    for (const auto& n : names) out << n << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chern classes of blow-ups along complex submanifolds", "blowchern"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_model) {
    if (with_model) sub->add_option("model", o.model, "model file or catalog name")->required();
    sub->add_option("--convention", o.convention, "calibrated|paper")
        ->check(CLI::IsMember({"calibrated", "paper"}));
    sub->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  };
  CLI::App* chern = app.add_subcommand("chern", "total Chern class of the blow-up");
  add_common(chern, true);
  chern->add_option("--via", o.via, "closed|thom|both")->check(CLI::IsMember({"closed", "thom", "both"}));
  CLI::App* ring = app.add_subcommand("ring", "graded bases and torsion of the blow-up ring");
  add_common(ring, true);
  CLI::App* numbers = app.add_subcommand("numbers", "Chern numbers of the blow-up");
  add_common(numbers, true);
  numbers->add_option("--via", o.via, "closed|thom|both")->check(CLI::IsMember({"closed", "thom", "both"}));
  CLI::App* verify = app.add_subcommand("verify", "run the consistency checks");
  add_common(verify, true);
  CLI::App* list = app.add_subcommand("catalog-list", "list built-in models");
  add_common(list, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (chern->parsed()) return command_chern(o, false, out, err);
    if (numbers->parsed()) return command_chern(o, true, out, err);
    if (ring->parsed()) return command_ring(o, out);
    if (verify->parsed()) return command_verify(o, out);
    if (list->parsed()) return command_catalog(o, out);
  } catch (const FileError& f) {
    const ParseError& e = f.error;
    err << "error: " << f.file << ":" << e.line() << ":" << e.column() << ": " << to_string(e.kind()) << ": "
        << e.detail() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace blowchern::cli
