// Command-line front end; everything goes through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stringy/capi.h"

namespace {

struct Options {
  std::string input = "-";
  std::string format = "text";
  std::string checks;
  std::string strategy;
  unsigned jobs = 1;
};

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int run(const Options& opt, const std::string& checks) {
  std::string text;
  if (!read_input(opt.input, text)) {
    std::cerr << "stringy: cannot read " << opt.input << "\n";
    return 2;
  }
  stringy_records* raw = nullptr;
  if (stringy_status st = stringy_records_parse(text.data(), text.size(), &raw); st != STRINGY_OK) {
    std::cerr << "stringy: " << stringy_last_error() << "\n";
    return 2;
  }
  std::unique_ptr<stringy_records, decltype(&stringy_records_destroy)> records(raw, stringy_records_destroy);

  static const std::map<std::string, stringy_format> formats{
      {"json", STRINGY_FORMAT_JSON}, {"csv", STRINGY_FORMAT_CSV}, {"text", STRINGY_FORMAT_TEXT}};
  static const std::map<std::string, stringy_strategy> strategies{
      {"", STRINGY_STRATEGY_DEFAULT}, {"vertices", STRINGY_STRATEGY_VERTICES}, {"boundary", STRINGY_STRATEGY_BOUNDARY}};

  char* report = nullptr;
  size_t failures = 0;
  stringy_status st = stringy_run_batch(records.get(), checks.c_str(), opt.jobs, strategies.at(opt.strategy),
                                        formats.at(opt.format), &report, &failures);
  if (st != STRINGY_OK) {
    std::cerr << "stringy: " << stringy_last_error() << "\n";
    return 2;
  }
  std::fputs(report, stdout);
  stringy_string_free(report);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stringy E-functions and combinatorial identities of lattice polytopes"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", opt.input, "Polytope file ('-' for stdin)");
    sub->add_option("-f,--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-j,--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto with_strategy = [&](CLI::App* sub) {
    sub->add_option("-s,--strategy", opt.strategy, "Subdivision for the general formula")
        ->check(CLI::IsMember({"vertices", "boundary"}));
  };

  std::map<CLI::App*, std::string> fixed;
  fixed[app.add_subcommand("classify", "Canonical / reflexive / almost reflexive classification")] = "classify";
  fixed[app.add_subcommand("estr", "Stringy E-function")] = "estr";
  fixed[app.add_subcommand("check24", "The 24 identity")] = "id24";
  fixed[app.add_subcommand("check-lw", "Combinatorial Libgober-Wood identity")] = "lw";
  fixed[app.add_subcommand("check-cy", "Calabi-Yau stringy Euler number, both formulas")] = "cy";
  for (auto& [sub, name] : fixed) {
    common(sub);
    if (name == "estr") with_strategy(sub);
  }
  CLI::App* batch = app.add_subcommand("batch", "Run several checks over a polytope file");
  common(batch);
  with_strategy(batch);
  batch->add_option("-c,--checks", opt.checks, "Comma-separated: classify,e3d,e_general,id24,lw,cy")->required();

  CLI11_PARSE(app, argc, argv);

  for (auto& [sub, name] : fixed)
    if (sub->parsed()) return run(opt, name);
  return run(opt, opt.checks);
}
