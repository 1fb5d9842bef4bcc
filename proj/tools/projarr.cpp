// projarr: cohomology rings of complements of projective subspace arrangements.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "projarr/verify.hpp"

using namespace projarr;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInputError = 2 };

struct Options {
  std::string input;
  std::string format = "json";
  bool json = false;
  int threads = 0;
  std::uint64_t seed = 0;
  int affine = -1;
  int c = 0;
  std::size_t base = 0;
  int max_degree = -1;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.format == "text" && !o.json)
    std::cout << text;
  else
    std::cout << j.dump(2) << "\n";
}

void error(const std::string& code, const std::string& message) {
  std::cerr << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

int run_poset(const Options& o, const Arrangement& arr) {
  const auto poset = build_poset(arr);
  emit(o, poset_json(poset), poset_text(poset));
  return kOk;
}

int run_homology(const Options& o, const Arrangement& arr) {
  const ProjectiveCohomology cohom(arr);
  emit(o, homology_json(cohom.levels()), homology_text(cohom.levels()));
  return kOk;
}

int run_ring(const Options& o, const Arrangement& arr) {
  if (o.affine >= 0) {
    if (static_cast<std::size_t>(o.affine) >= arr.size()) throw InputError("--affine index out of range");
    const AffineCohomology aff(arr, static_cast<std::size_t>(o.affine));
    Json j = ring_json(aff.table());
    j["affine"] = o.affine;
    emit(o, j, ring_text(aff.table()));
    return kOk;
  }
  const RingTable table = ring_table(arr);
  emit(o, ring_json(table), ring_text(table));
  return kOk;
}

int run_presentation(const Options& o, const Arrangement& arr) {
  int c = o.c;
  if (c <= 0) {
    const auto detected = detect_c(arr);
    if (!detected) throw InputError("not a c-arrangement; pass --c to name c explicitly");
    c = *detected;
  }
  if (o.base >= arr.size()) throw InputError("--base index out of range");
  if (!is_c_arrangement(arr, c)) throw InputError("arrangement is not a " + std::to_string(c) + "-arrangement");
  const auto rep = verify_presentation(arr, c, o.base, o.max_degree >= 0 ? o.max_degree : 2 * arr.n());
  emit(o, presentation_json(rep), presentation_text(rep));
  return rep.passed ? kOk : kFailed;
}

int run_verify(const Options& o, const Arrangement& arr) {
  if (o.c > 0 && !is_c_arrangement(arr, o.c))
    throw InputError("arrangement is not a " + std::to_string(o.c) + "-arrangement");
  if (!arr.empty() && o.base >= arr.size()) throw InputError("--base index out of range");
  const auto rep = verify_arrangement(arr, o.seed, o.c > 0 ? std::optional<int>(o.c) : std::nullopt, o.base,
                                      o.max_degree >= 0 ? std::optional<int>(o.max_degree) : std::nullopt);
  emit(o, verify_json(rep), verify_text(rep));
  return rep.passed ? kOk : kFailed;
}

int run_oracle(const Options& o, const Arrangement& arr) {
  const auto rep = compare(arr);
  emit(o, oracle_json(rep), oracle_text(rep));
  return rep.passed ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral cohomology rings of complements of projective subspace arrangements"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--json", o.json, "Force JSON output");
  app.add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "Seed for generic hyperplanes");

  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Arrangement JSON (default: standard input)");
    sub->fallthrough();
    return sub;
  };
  auto* poset = add_input(app.add_subcommand("poset", "Intersection poset with meet table"));
  auto* homology = add_input(app.add_subcommand("homology", "Homology of every level pair"));
  auto* ring = add_input(app.add_subcommand("ring", "Cohomology ring with structure constants"));
  ring->add_option("--affine", o.affine, "Member sent to infinity (affine mode)");
  auto* presentation = add_input(app.add_subcommand("presentation", "Generators, relations and rank check"));
  presentation->add_option("--c", o.c, "Codimension c")->check(CLI::PositiveNumber);
  presentation->add_option("--base", o.base, "Index of the base member A_0");
  presentation->add_option("--max-degree", o.max_degree, "Highest degree in the rank table");
  auto* verify = add_input(app.add_subcommand("verify", "Oracles and property suites"));
  verify->add_option("--c", o.c, "Codimension c")->check(CLI::PositiveNumber);
  verify->add_option("--base", o.base, "Index of the base member A_0");
  verify->add_option("--max-degree", o.max_degree, "Highest degree in the rank table");
  auto* oracle = add_input(app.add_subcommand("oracle", "Compare Betti numbers with the combinatorial oracles"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  if (o.threads > 0) set_thread_count(o.threads);

  try {
    const Arrangement arr = parse_arrangement(read_input(o.input));
    if (poset->parsed()) return run_poset(o, arr);
    if (homology->parsed()) return run_homology(o, arr);
    if (ring->parsed()) return run_ring(o, arr);
    if (presentation->parsed()) return run_presentation(o, arr);
    if (verify->parsed()) return run_verify(o, arr);
    if (oracle->parsed()) return run_oracle(o, arr);
  } catch (const InputError& e) {
    error("input_error", e.what());
    return kInputError;
  } catch (const std::invalid_argument& e) {
    error("input_error", e.what());
    return kInputError;
  } catch (const std::exception& e) {
    error("internal_error", e.what());
    return kFailed;
  }
  return kInputError;
}
