#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tquery/codec.hpp"
#include "tquery/dsl.hpp"
#include "tquery/errors.hpp"
#include "tquery/pipeline.hpp"

namespace {

constexpr int kExitParse = 1;
constexpr int kExitDecode = 2;
constexpr int kExitEval = 3;
constexpr int kExitIo = 4;

struct RunConfig {
  std::string query;
  std::string input = "-";
  std::string output = "-";
  std::string input_format = "json";
  std::string output_format = "json";
  bool compact = false;
  std::vector<std::string> bindings;
};

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& spec) {
  if (spec == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    if (std::cin.bad()) throw IoFailure("failed to read standard input");
    return buffer.str();
  }
  std::ifstream file(spec, std::ios::binary);
  if (!file) throw IoFailure("cannot open '" + spec + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) throw IoFailure("failed to read '" + spec + "'");
  return buffer.str();
}

void write_output(const std::string& spec, const std::string& text) {
  if (spec == "-") {
    std::cout << text << '\n';
    if (!std::cout) throw IoFailure("failed to write standard output");
    return;
  }
  std::ofstream file(spec, std::ios::binary);
  if (!file) throw IoFailure("cannot open '" + spec + "' for writing");
  file << text << '\n';
  file.flush();
  if (!file) throw IoFailure("failed to write '" + spec + "'");
}

tquery::DataFormat parse_format(const std::string& name) {
  return name == "xml" ? tquery::DataFormat::Xml : tquery::DataFormat::Json;
}

tquery::TreeArray decode_dataset(const std::string& text, tquery::DataFormat format,
                                 const std::string& origin) {
  std::vector<std::string> warnings;
  tquery::FormatOptions options;
  options.format = format;
  tquery::TreeArray decoded = tquery::decode(text, options, &warnings);
  for (const std::string& w : warnings) {
    std::cerr << origin << ": warning: " << w << '\n';
  }
  return decoded;
}

int run_command(const RunConfig& config) {
  std::string query_text = config.query;
  std::string query_origin = "<query>";
  try {
    if (!query_text.empty() && query_text[0] == '@') {
      query_origin = query_text.substr(1);
      query_text = read_source(query_origin);
    }
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }

  tquery::Pipeline pipeline;
  try {
    pipeline = tquery::parse_pipeline(query_text);
  } catch (const tquery::ParseError& e) {
    std::cerr << query_origin << ":" << e.line() << ":" << e.column() << ": error: " << e.what()
              << '\n';
    return kExitParse;
  }

  try {
    std::string input_text = read_source(config.input);
    tquery::TreeArray input;
    try {
      input = decode_dataset(input_text, parse_format(config.input_format), config.input);
    } catch (const tquery::DecodeError& e) {
      std::cerr << config.input << ":" << e.line() << ":" << e.column() << ": error: " << e.what()
                << '\n';
      return kExitDecode;
    }

    for (const std::string& binding : config.bindings) {
      auto eq = binding.find('=');
      std::string name = binding.substr(0, eq);
      std::string path = binding.substr(eq + 1);
      std::string text = read_source(path);
      try {
        pipeline.bindings.emplace(name, decode_dataset(text, parse_format(config.input_format), path));
      } catch (const tquery::DecodeError& e) {
        std::cerr << path << ":" << e.line() << ":" << e.column() << ": error: " << e.what()
                  << '\n';
        return kExitDecode;
      }
    }

    tquery::TreeArray result;
    try {
      result = tquery::run(pipeline, input);
    } catch (const tquery::EvalError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitEval;
    }

    tquery::FormatOptions out_options;
    out_options.format = parse_format(config.output_format);
    out_options.emission =
        config.compact ? tquery::EmissionMode::Compact : tquery::EmissionMode::Canonical;
    std::string encoded;
    try {
      encoded = tquery::encode(result, out_options);
    } catch (const tquery::EncodeError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitEval;
    }
    write_output(config.output, encoded);
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"In-memory pipeline queries over tree-shaped data (JSON, XML)"};
  app.require_subcommand(1);

  RunConfig config;
  CLI::App* run = app.add_subcommand("run", "Parse a query, run it over a dataset, emit the result");
  run->add_option("--query,-q", config.query,
                  "Query text, or @FILE to read the query from a file")
      ->required();
  run->add_option("--input,-i", config.input, "Input dataset file, or - for standard input")
      ->required();
  run->add_option("--input-format", config.input_format, "Input data format")
      ->check(CLI::IsMember({"json", "xml"}))
      ->capture_default_str();
  run->add_option("--output,-o", config.output, "Output file, or - for standard output")
      ->capture_default_str();
  run->add_option("--output-format", config.output_format, "Output data format")
      ->check(CLI::IsMember({"json", "xml"}))
      ->capture_default_str();
  run->add_flag("--compact", config.compact,
                "Collapse singleton leaf arrays to bare scalars on output");
  run->add_option("--bind", config.bindings,
                  "NAME=FILE dataset binding for lookup adjuncts (repeatable)")
      ->check([](const std::string& value) -> std::string {
        auto eq = value.find('=');
        if (eq == 0 || eq == std::string::npos || eq + 1 == value.size()) {
          return "binding must have the form NAME=FILE";
        }
        return {};
      });

  CLI11_PARSE(app, argc, argv);

  std::set<std::string> names;
  for (const std::string& binding : config.bindings) {
    std::string name = binding.substr(0, binding.find('='));
    if (!names.insert(name).second) {
      std::cerr << "error: duplicate binding name '" << name << "'\n";
      return app.exit(CLI::ValidationError("--bind", "duplicate binding name"));
    }
  }

  return run_command(config);
}
