#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qmull::cli {

using Json = nlohmann::ordered_json;

// bumped whenever a field is renamed or removed
constexpr int kSchemaVersion = 1;

// bad arguments or values: exit status 2
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Outcome {
  Json result;
  int exit_code = 0;  // 1 when a verification check failed
};

struct OptionSpec {
  std::string name;
  std::string help;
  bool flag = false;
  bool required = false;
};

struct CommandSpec {
  CommandSpec(std::string n, std::string h, std::vector<OptionSpec> o, std::string p = {})
      : name(std::move(n)), help(std::move(h)), options(std::move(o)), positional(std::move(p)) {}
  std::string name;
  std::string help;
  std::vector<OptionSpec> options;
  std::string positional;  // name of the single positional argument, if any
};

const std::vector<CommandSpec>& commands();

// args maps option names (without dashes) to strings, numbers, booleans or,
// for partitions and lists, arrays of integers
Outcome run_command(const std::string& cmd, const Json& args);

// one {"cmd":..., "args":{...}} per input line, one response per output line
int run_batch(std::istream& in, std::ostream& out);

int main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qmull::cli
