#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>

#include "asailab/errors.hpp"
#include "commands.hpp"

namespace asailab::cli {

namespace {

json error_json(const char* kind, const std::string& message) {
  return json{{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert modular forms over real quadratic fields: Asai factors, L-values, p-adic data", "asailab"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string out_path;
  int precision_flag = 0;
  app.add_option("--out", out_path, "write the JSON report to this path");
  app.add_option("--precision", precision_flag, "p-adic working precision (overrides ASAILAB_PRECISION)");

  const auto& cmds = commands();
  std::vector<std::unique_ptr<Args>> args_of;
  std::vector<CLI::App*> subs;
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    args_of.push_back(std::make_unique<Args>(sub));
    c.declare(*args_of.back());
    subs.push_back(sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "asailab: " << e.what() << "\n";
    return kUsage;
  }

  std::size_t which = 0;
  while (which < subs.size() && !subs[which]->parsed()) ++which;
  if (which == subs.size()) {
    err << "asailab: no subcommand\n";
    return kUsage;
  }

  const Command& cmd = cmds[which];
  const Args& a = *args_of[which];
  Report rep;
  try {
    rep.precision = precision_flag > 0 ? precision_flag : default_precision();
  } catch (const UsageError& e) {
    err << "asailab: " << e.what() << "\n";
    return kUsage;
  }
  if (precision_flag < 0) {
    err << "asailab: --precision must be positive\n";
    return kUsage;
  }

  json result;
  int code = kOk;
  try {
    result = cmd.exec(a, rep);
    code = rep.exit;
  } catch (const UsageError& e) {
    err << "asailab " << cmd.name << ": " << e.what() << "\n";
    return kUsage;
  } catch (const HypothesisError& e) {
    result = error_json("hypothesis", e.what());
    code = kHypothesis;
  } catch (const MissingDataError& e) {
    result = error_json("missing-data", e.what());
    code = kValidation;
  } catch (const ValidationError& e) {
    result = error_json("validation", e.what());
    code = kValidation;
  } catch (const std::exception& e) {
    result = error_json("validation", e.what());
    code = kValidation;
  }
  if (code != kOk && result.contains("error")) err << "asailab " << cmd.name << ": " << result["error"]["message"].get<std::string>() << "\n";

  json report;
  report["command"] = cmd.name;
  report["inputs"] = a.inputs();
  report["result"] = result;
  report["provenance"] = {{"precision", rep.precision}, {"cutoffs", rep.cutoffs}};
  std::string text = report.dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "asailab: cannot write '" << out_path << "'\n";
      return kValidation;
    }
    f << text;
  } else {
    out << text;
  }
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace asailab::cli
