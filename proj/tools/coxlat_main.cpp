#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "coxlat/verify.hpp"

namespace {

using namespace coxlat;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw Usage("cannot open output file: " + out_path);
  os << content;
}

bool is_big_type(const CoxeterDatum& datum) {
  return datum.type_label == "E7" || datum.type_label == "E8";
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> word;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw Usage("empty entry in --sigma word");
    for (char ch : item)
      if (!isdigit(static_cast<unsigned char>(ch))) throw Usage("--sigma expects comma-separated root indices");
    word.push_back(std::stoi(item));
  }
  if (word.empty()) throw Usage("--sigma word is empty");
  return word;
}

GroupElement element_from_word(const RootSystem& rs, const std::vector<int>& word) {
  for (int i : word)
    if (i < 1 || i > rs.num_positive())
      throw Usage("--sigma index " + std::to_string(i) + " is out of range 1.." +
                  std::to_string(rs.num_positive()));
  Mat prod = Mat::identity(rs.field(), rs.rank());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    prod = prod * rs.reflection_of_root(*it);
  GroupElement g(std::move(prod));
  if (!leq(rs, g.mat(), rs.gamma())) {
    int lg = reflection_length(g);
    int rest = reflection_length(group_inverse(rs, g.mat()) * rs.gamma());
    throw Usage("sigma word does not precede gamma: l(gamma) = " + std::to_string(rs.rank()) +
                " but l(sigma) + l(sigma^{-1} gamma) = " + std::to_string(lg) + " + " +
                std::to_string(rest) + " = " + std::to_string(lg + rest));
  }
  return g;
}

int run(int argc, char** argv) {
  CLI::App app{"exact root systems, the noncrossing partition lattice and cluster complexes"};
  app.require_subcommand(1);

  std::string type_symbol, format = "text", out_path, sigma_word;
  bool use_ex = false, extension = false, big = false, timing = false;
  uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub, std::initializer_list<std::string> formats) {
    sub->add_option("type", type_symbol, "type symbol, e.g. A3, B4, H3, I2(7)")->required();
    sub->add_option("--format", format)
        ->check(CLI::IsMember(std::vector<std::string>(formats)))
        ->capture_default_str();
    sub->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  auto* tables = app.add_subcommand("tables", "rho/mu table and the [mu_i . rho_j] matrix");
  add_common(tables, {"text", "csv", "json"});

  auto* complex = app.add_subcommand("complex", "export X(gamma), X(sigma) or EX(gamma)");
  add_common(complex, {"text", "json", "dot", "off"});
  complex->add_option("--sigma", sigma_word, "word in root indices, right-to-left product");
  complex->add_flag("--ex", use_ex, "extended complex EX(gamma)");

  auto* verify = app.add_subcommand("verify", "run the invariant and lattice suite");
  add_common(verify, {"text", "json"});
  verify->add_option("--seed", seed, "seed for the sampled suites")->capture_default_str();
  verify->add_flag("--extension", extension, "include non-crystallographic associahedra");
  verify->add_flag("--big", big, "allow E7/E8 (long runtime)");
  verify->add_flag("--timing", timing, "include wall_time_ms in the JSON report");

  auto* interval = app.add_subcommand("interval", "enumerate [I, gamma]");
  add_common(interval, {"text", "json"});
  interval->add_flag("--big", big, "allow E7/E8 (long runtime)");

  auto* assoc = app.add_subcommand("associahedron", "generalised associahedron");
  add_common(assoc, {"text", "json", "csv", "dot"});
  assoc->add_flag("--extension", extension, "allow non-crystallographic types");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    CoxeterDatum datum = parse_type(type_symbol);

    if (tables->parsed()) {
      RootSystem rs(datum);
      if (format == "csv")
        emit(out_path, tables_csv(rs));
      else if (format == "json")
        emit(out_path, tables_json(rs));
      else
        emit(out_path, tables_text(rs));
      return 0;
    }

    if (complex->parsed()) {
      if (use_ex && !sigma_word.empty()) throw Usage("--ex and --sigma are mutually exclusive");
      RootSystem rs(datum);
      FlagComplex c({}, rs.rank());
      std::string kind;
      if (use_ex) {
        c = build_EX(rs);
        kind = "EX";
      } else if (!sigma_word.empty()) {
        GroupElement sigma = element_from_word(rs, parse_word(sigma_word));
        c = build_X_sigma(rs, sigma);
        kind = "X(sigma)";
      } else {
        c = build_X(rs);
        kind = "X";
      }
      if (format == "json")
        emit(out_path, complex_json(rs, c, kind));
      else if (format == "dot")
        emit(out_path, complex_dot(c, kind));
      else if (format == "off")
        emit(out_path, complex_off(rs, c));
      else
        emit(out_path, complex_text(rs, c, kind));
      return 0;
    }

    if (interval->parsed()) {
      if (is_big_type(datum) && !big)
        throw Usage(datum.type_label +
                    " enumeration takes a long time; pass --big to run it anyway");
      RootSystem rs(datum);
      IntervalPoset poset = enumerate_interval(rs);
      emit(out_path, format == "json" ? interval_json(rs, poset) : interval_text(rs, poset));
      return 0;
    }

    if (assoc->parsed()) {
      RootSystem rs(datum);
      if (format == "csv") {
        if (!is_crystallographic(rs.datum()) && !extension)
          throw Usage("type " + datum.type_label + " needs --extension");
        emit(out_path, compatibility_csv(rs));
        return 0;
      }
      FlagComplex ga = build_GA(rs, extension);
      if (format == "dot") {
        emit(out_path, complex_dot(ga, "GA"));
      } else if (format == "json") {
        FlagComplex ex = build_EX(rs);
        IsoReport iso = isomorphism_check(ex, ga);
        emit(out_path, associahedron_json(rs, ga, &iso));
      } else {
        emit(out_path, complex_text(rs, ga, "GA"));
      }
      return 0;
    }

    if (verify->parsed()) {
      if (is_big_type(datum) && !big)
        throw Usage(datum.type_label + " verification takes hours; pass --big to run it anyway");
      VerifyOptions opts;
      opts.seed = seed;
      opts.extension = extension;
      opts.timing = timing;
      auto t0 = std::chrono::steady_clock::now();
      VerifyReport rep = run_verify(datum, opts);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      std::optional<long> wall;
      if (timing) wall = static_cast<long>(ms);
      emit(out_path, format == "json" ? verify_json(rep, wall) : verify_text(rep));
      std::cerr << "verify " << datum.type_label << ": " << (rep.ok() ? "pass" : "FAIL") << " in "
                << ms << " ms\n";
      return rep.ok() ? 0 : 1;
    }
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
