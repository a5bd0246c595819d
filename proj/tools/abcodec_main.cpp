// Command-line front end: line-oriented encode/decode/stats over stdin and
// stdout, parameter validation, and threshold-bracket tables.
//
// Exit codes: 0 success, 2 invalid configuration or ranges, 3 malformed
// input line, 4 iteration guard tripped.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "abcodec/balancer.hpp"
#include "abcodec/bounds.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitBadLine = 3;
constexpr int kExitGuard = 4;

struct ConfigArgs {
  std::string mode = "binary";
  int n = 0;
  std::string alpha2;
  int q = 0;
  unsigned precision_bits = abcodec::kDefaultPrecisionBits;
};

void add_config_options(CLI::App* cmd, ConfigArgs* args) {
  cmd->add_option("--mode", args->mode, "binary | polarity | symbol4")
      ->check(CLI::IsMember({"binary", "polarity", "symbol4"}));
  cmd->add_option("--n", args->n, "codeword length n")->required();
  cmd->add_option("--alpha2", args->alpha2, "alpha^2 as NUM/DEN (or an integer)")->required();
  cmd->add_option("--q", args->q, "alphabet size (defaults per mode)");
  cmd->add_option("--precision-bits", args->precision_bits,
                  "fractional bits of the dyadic coder bias");
}

abcodec::Mode parse_mode(const std::string& name) {
  if (name == "binary") return abcodec::Mode::Binary;
  if (name == "polarity") return abcodec::Mode::Polarity;
  return abcodec::Mode::Symbol4;
}

// Builds and validates the codec config; exits with code 2 on any problem.
abcodec::CodecConfig make_config_or_exit(const ConfigArgs& args) {
  try {
    abcodec::CodecConfig config =
        abcodec::CodecConfig::derive(parse_mode(args.mode), args.n,
                                     abcodec::parse_rational(args.alpha2), args.q,
                                     args.precision_bits);
    abcodec::Validation v = abcodec::validate_config(config);
    if (!v.ok) {
      std::cerr << "invalid config: " << abcodec::fault_name(v.fault) << ": " << v.detail
                << "\n";
      std::exit(kExitConfig);
    }
    return config;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    std::exit(kExitConfig);
  }
}

abcodec::SymbolSequence parse_line_or_exit(const std::string& line, long line_no,
                                           std::size_t expected_len, int q) {
  try {
    abcodec::SymbolSequence seq = abcodec::parse_sequence(line, q);
    if (seq.size() != expected_len)
      throw std::invalid_argument("expected " + std::to_string(expected_len) + " symbols, got " +
                                  std::to_string(seq.size()));
    return seq;
  } catch (const std::invalid_argument& e) {
    std::cerr << "line " << line_no << ": " << e.what() << "\n";
    std::exit(kExitBadLine);
  }
}

int run_encode(const ConfigArgs& args) {
  const abcodec::CodecConfig config = make_config_or_exit(args);
  std::string line;
  long line_no = 0;
  while (std::getline(std::cin, line)) {
    ++line_no;
    const auto x = parse_line_or_exit(line, line_no, config.n - 1, config.q);
    try {
      std::cout << abcodec::to_string(abcodec::encode_message(x, config).codeword) << "\n";
    } catch (const abcodec::CodecError& e) {
      std::cerr << "line " << line_no << ": " << e.what() << "\n";
      return e.fault() == abcodec::Fault::IterationGuardExceeded ? kExitGuard : kExitConfig;
    }
  }
  return 0;
}

int run_decode(const ConfigArgs& args) {
  const abcodec::CodecConfig config = make_config_or_exit(args);
  std::string line;
  long line_no = 0;
  while (std::getline(std::cin, line)) {
    ++line_no;
    const auto y = parse_line_or_exit(line, line_no, config.n, config.q);
    try {
      std::cout << abcodec::to_string(abcodec::decode_codeword(y, config)) << "\n";
    } catch (const abcodec::CodecError& e) {
      std::cerr << "line " << line_no << ": " << e.what() << "\n";
      return e.fault() == abcodec::Fault::IterationGuardExceeded ? kExitGuard : kExitConfig;
    } catch (const std::invalid_argument& e) {
      // Flag symbols outside the decoder's conventions.
      std::cerr << "line " << line_no << ": " << e.what() << "\n";
      return kExitBadLine;
    }
  }
  return 0;
}

int run_stats(const ConfigArgs& args, const std::string& format) {
  const abcodec::CodecConfig config = make_config_or_exit(args);
  std::map<int, long> histogram;
  long count = 0;
  long long total = 0;
  int max_seen = 0;
  std::string line;
  long line_no = 0;
  while (std::getline(std::cin, line)) {
    ++line_no;
    const auto x = parse_line_or_exit(line, line_no, config.n - 1, config.q);
    try {
      const int iters = abcodec::encode_message(x, config).iterations;
      ++histogram[iters];
      ++count;
      total += iters;
      max_seen = std::max(max_seen, iters);
    } catch (const abcodec::CodecError& e) {
      std::cerr << "line " << line_no << ": " << e.what() << "\n";
      return e.fault() == abcodec::Fault::IterationGuardExceeded ? kExitGuard : kExitConfig;
    }
  }
  const double mean = count == 0 ? 0.0 : static_cast<double>(total) / count;
  if (format == "json") {
    nlohmann::json j;
    j["count"] = count;
    j["mean"] = mean;
    j["max"] = max_seen;
    j["histogram"] = nlohmann::json::object();
    for (const auto& [iters, lines] : histogram) j["histogram"][std::to_string(iters)] = lines;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "lines: " << count << "\n";
    std::printf("mean_iterations: %.6f\n", mean);
    std::cout << "max_iterations: " << max_seen << "\n";
    std::cout << "histogram:\n";
    for (const auto& [iters, lines] : histogram)
      std::cout << "  " << iters << ": " << lines << "\n";
  }
  return 0;
}

std::string format_alpha(long micro) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", 1e-6 * static_cast<double>(micro));
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.push_back('0');
  return s;
}

int run_bounds(const std::string& q_range, double grid, long check_n,
               const std::string& format) {
  int q_min = 0, q_max = 0;
  if (std::sscanf(q_range.c_str(), "%d..%d", &q_min, &q_max) != 2 || q_min < 2 ||
      q_max < q_min) {
    std::cerr << "invalid --q-range, expected MIN..MAX with 2 <= MIN <= MAX\n";
    return kExitConfig;
  }
  const long grid_micro = std::llround(grid * 1e6);
  if (grid_micro < 1 || std::abs(grid_micro * 1e-6 - grid) > 1e-12) {
    std::cerr << "invalid --grid, expected a positive multiple of 1e-6\n";
    return kExitConfig;
  }
  abcodec::BoundsTable table;
  try {
    table = abcodec::table_bounds(q_min, q_max, grid_micro, check_n);
  } catch (const std::exception& e) {
    std::cerr << "bounds failed: " << e.what() << "\n";
    return kExitConfig;
  }
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
      nlohmann::json r;
      r["q"] = row.q;
      r["lower"] = 1e-6 * static_cast<double>(row.lower_micro);
      r["upper"] = 1e-6 * static_cast<double>(row.upper_micro);
      if (row.density_lower) r["density_lower_at_n"] = *row.density_lower;
      if (row.density_upper) r["density_upper_at_n"] = *row.density_upper;
      rows.push_back(r);
    }
    nlohmann::json j;
    j["grid"] = 1e-6 * static_cast<double>(table.grid_micro);
    if (check_n > 0) j["check_n"] = check_n;
    j["rows"] = rows;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("%3s  %-10s %-10s", "q", "lower", "upper");
    if (check_n > 0) std::printf(" %-14s %-14s", "F(n@lower)", "F(n@upper)");
    std::printf("\n");
    for (const auto& row : table.rows) {
      std::printf("%3d  %-10s %-10s", row.q, format_alpha(row.lower_micro).c_str(),
                  format_alpha(row.upper_micro).c_str());
      if (row.density_lower) std::printf(" %-14.8f", *row.density_lower);
      if (row.density_upper) std::printf(" %-14.8f", *row.density_upper);
      std::printf("\n");
    }
  }
  return 0;
}

int run_validate(const ConfigArgs& args) {
  try {
    abcodec::CodecConfig config =
        abcodec::CodecConfig::derive(parse_mode(args.mode), args.n,
                                     abcodec::parse_rational(args.alpha2), args.q,
                                     args.precision_bits);
    abcodec::Validation v = abcodec::validate_config(config);
    if (!v.ok) {
      std::cout << "invalid: " << abcodec::fault_name(v.fault) << ": " << v.detail << "\n";
      return kExitConfig;
    }
    std::cout << "ok: mode=" << abcodec::mode_name(config.mode) << " n=" << config.n
              << " q=" << config.q << " target_len=" << config.target_len
              << " p_low~" << abcodec::to_double(config.p_low) << "\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"almost-balanced sequence codec"};
  app.require_subcommand(1);

  ConfigArgs encode_args, decode_args, stats_args, validate_args;
  std::string stats_format = "text";
  std::string bounds_range = "2..7";
  double bounds_grid = 0.005;
  long bounds_check_n = 0;
  std::string bounds_format = "text";

  CLI::App* cmd_encode = app.add_subcommand("encode", "encode length n-1 lines into codewords");
  add_config_options(cmd_encode, &encode_args);

  CLI::App* cmd_decode = app.add_subcommand("decode", "decode length n codewords back");
  add_config_options(cmd_decode, &decode_args);

  CLI::App* cmd_stats = app.add_subcommand("stats", "iteration statistics over encoded lines");
  add_config_options(cmd_stats, &stats_args);
  cmd_stats->add_option("--format", stats_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cmd_bounds = app.add_subcommand("bounds", "alpha-threshold brackets per q");
  cmd_bounds->add_option("--q-range", bounds_range, "q range MIN..MAX");
  cmd_bounds->add_option("--grid", bounds_grid, "alpha grid step");
  cmd_bounds->add_option("--check-n", bounds_check_n, "attach finite-n densities at this n");
  cmd_bounds->add_option("--format", bounds_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cmd_validate = app.add_subcommand("validate", "check a parameter set");
  add_config_options(cmd_validate, &validate_args);

  CLI11_PARSE(app, argc, argv);

  if (cmd_encode->parsed()) return run_encode(encode_args);
  if (cmd_decode->parsed()) return run_decode(decode_args);
  if (cmd_stats->parsed()) return run_stats(stats_args, stats_format);
  if (cmd_bounds->parsed()) return run_bounds(bounds_range, bounds_grid, bounds_check_n, bounds_format);
  return run_validate(validate_args);
}
