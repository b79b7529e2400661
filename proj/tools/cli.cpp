#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permspec/oracle.hpp"
#include "permspec/sampler.hpp"
#include "permspec/spec_io.hpp"
#include "permspec/specification.hpp"

namespace permspec::cli {

namespace {

struct Options {
  std::string basis, simples, spec, out, tables;
  std::size_t max_simple = 8;
  std::size_t order = 20;
  std::size_t size = 10;
  std::size_t count = 1;
  std::size_t samples = 1000;
  std::size_t nmax = 8;
  std::uint64_t seed = 1;
  bool pretty = false;
};

// Writes to --out when given, else to the command's standard output.
void emit(const std::string &text, const std::string &path, std::ostream &out)
{
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f)
    throw InvalidInput("cannot write " + path);
  f << text;
}

std::vector<Permutation> closure_simples(const Options &o, const Basis &basis, std::ostream &err)
{
  if (!o.simples.empty())
    return make_simple_set(read_permutation_file(o.simples));
  auto found = simples_in_class(basis.patterns, o.max_simple);
  err << "note: no --simples given; found " << found.size() << " simple permutation(s) of size <= " << o.max_simple
      << " in the class\n";
  if (!found.empty() && found.back().size() == o.max_simple)
    err << "warning: a simple permutation of size " << o.max_simple
        << " avoids the basis; the class may have more simples (raise --max-simple-size or pass --simples)\n";
  return make_simple_set(std::move(found));
}

void build(const Options &o, bool ambiguous, std::ostream &out, std::ostream &err)
{
  Basis basis = make_basis(read_permutation_file(o.basis));
  auto simples = closure_simples(o, basis, err);
  EquationSystem sys = ambiguous ? ambiguous_system(basis, simples) : specification(basis, simples);
  err << sys.equations.size() << " equations\n";
  emit(o.pretty ? sys.pretty() : dump(sys), o.out, out);
}

void count(const Options &o, std::ostream &out)
{
  EquationSystem sys = read_system_file(o.spec);
  CountTable table = count_table(sys, o.order);
  for (std::size_t n = 1; n <= o.order; ++n)
    out << n << '\t' << table.top()[n] << '\n';
  if (o.tables.empty())
    return;
  nlohmann::json j;
  j["order"] = o.order;
  for (std::size_t e = 0; e < table.gf.equations.size(); ++e) {
    auto &row = j["series"][table.gf.equations[e].key];
    row = nlohmann::json::array();
    for (const auto &c : table.series[e])
      row.push_back(c.str());
  }
  emit(j.dump(2) + "\n", o.tables, out);
}

void sample(const Options &o, std::ostream &out)
{
  EquationSystem sys = read_system_file(o.spec);
  std::optional<Basis> basis;
  if (!o.basis.empty())
    basis = make_basis(read_permutation_file(o.basis));
  Sampler sampler(sys, o.size);
  std::mt19937_64 rng(o.seed);
  for (std::size_t i = 0; i < o.count; ++i) {
    Permutation p = sampler.sample(o.size, rng);
    if (basis && !avoids_all_by_decomposition(p, basis->patterns))
      throw DomainError("sample " + p.spaced() + " contains a basis element");
    out << p.spaced() << '\n';
  }
}

void heatmap(const Options &o, std::ostream &out)
{
  EquationSystem sys = read_system_file(o.spec);
  Sampler sampler(sys, o.size);
  std::mt19937_64 rng(o.seed);
  const std::size_t n = o.size;
  std::vector<std::size_t> h(n * n, 0);
  for (std::size_t s = 0; s < o.samples; ++s) {
    Permutation p = sampler.sample(n, rng);
    for (std::size_t x = 1; x <= n; ++x)
      ++h[(x - 1) * n + (p(x) - 1)];
  }
  std::string csv;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y)
        csv += ',';
      csv += std::to_string(h[x * n + y]);
    }
    csv += '\n';
  }
  emit(csv, o.out, out);
}

void enumerate(const Options &o, std::ostream &out)
{
  auto basis = read_permutation_file(o.basis);
  for (const auto &p : enumerate_class(basis, o.size))
    out << p.spaced() << '\n';
}

void simples(const Options &o, std::ostream &out)
{
  std::vector<Permutation> basis;
  if (!o.basis.empty())
    basis = read_permutation_file(o.basis);
  for (const auto &p : simples_in_class(basis, o.max_simple))
    out << p.spaced() << '\n';
}

int audit(const Options &o, std::ostream &out)
{
  EquationSystem sys = read_system_file(o.spec);
  auto basis = read_permutation_file(o.basis);
  AuditReport report = audit_specification(sys, basis, o.nmax);
  for (const auto &v : report.violations)
    out << "violation: " << v << '\n';
  out << report.checked << " permutations checked, " << report.violations.size() << " violation(s)\n";
  return report.clean() ? ok : domain_error;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  Options o;
  CLI::App app{"Unambiguous specifications, counting and uniform sampling for permutation classes"};
  app.name("permspec");
  app.require_subcommand(1);

  auto add_build = [&](const char *name, const char *about) {
    auto *c = app.add_subcommand(name, about);
    c->add_option("--basis", o.basis, "basis file, one permutation per line")->required()->check(CLI::ExistingFile);
    c->add_option("--simples", o.simples, "simple permutations of the closure (default: searched up to --max-simple-size)")
        ->check(CLI::ExistingFile);
    c->add_option("--max-simple-size", o.max_simple, "search bound when --simples is absent")->capture_default_str();
    c->add_option("--out", o.out, "output file (default: stdout)");
    c->add_flag("--pretty", o.pretty, "human-readable equations instead of JSON");
    return c;
  };
  auto *specify_cmd = add_build("specify", "compute an unambiguous specification (JSON)");
  auto *ambiguous_cmd = add_build("ambiguous", "emit the system before disambiguation");

  auto *count_cmd = app.add_subcommand("count", "coefficients of the class, one 'n<TAB>c_n' line per size");
  count_cmd->add_option("--spec", o.spec, "specification JSON")->required()->check(CLI::ExistingFile);
  count_cmd->add_option("-N,--order", o.order, "largest size")->capture_default_str()->check(CLI::PositiveNumber);
  count_cmd->add_option("--tables", o.tables, "also write every equation's series as JSON to this file");

  auto *sample_cmd = app.add_subcommand("sample", "uniform random permutations, one per line");
  sample_cmd->add_option("--spec", o.spec, "specification JSON")->required()->check(CLI::ExistingFile);
  sample_cmd->add_option("--size", o.size, "size of each permutation")->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--count", o.count, "number of samples")->capture_default_str();
  sample_cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
  sample_cmd->add_option("--basis", o.basis, "check every sample against this basis")->check(CLI::ExistingFile);

  auto *heatmap_cmd = app.add_subcommand("heatmap", "n x n CSV, entry (x, y) = number of samples with s(x) = y");
  heatmap_cmd->add_option("--spec", o.spec, "specification JSON")->required()->check(CLI::ExistingFile);
  heatmap_cmd->add_option("--size", o.size, "permutation size")->required()->check(CLI::PositiveNumber);
  heatmap_cmd->add_option("--samples", o.samples, "number of samples")->capture_default_str();
  heatmap_cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
  heatmap_cmd->add_option("--out", o.out, "output file (default: stdout)");

  auto *oracle_cmd = app.add_subcommand("oracle", "brute-force checks");
  oracle_cmd->require_subcommand(1);
  auto *enum_cmd = oracle_cmd->add_subcommand("enumerate", "all permutations of a size avoiding the basis");
  enum_cmd->add_option("--basis", o.basis, "basis file")->required()->check(CLI::ExistingFile);
  enum_cmd->add_option("--size", o.size, "size")->required();
  auto *simples_cmd = oracle_cmd->add_subcommand("simples", "simple permutations avoiding the basis");
  simples_cmd->add_option("--basis", o.basis, "basis file (default: no restriction)")->check(CLI::ExistingFile);
  simples_cmd->add_option("--max-size", o.max_simple, "largest size searched")->capture_default_str();
  auto *audit_cmd = oracle_cmd->add_subcommand("audit", "check disjointness and completeness of a specification");
  audit_cmd->add_option("--spec", o.spec, "specification JSON")->required()->check(CLI::ExistingFile);
  audit_cmd->add_option("--basis", o.basis, "basis file")->required()->check(CLI::ExistingFile);
  audit_cmd->add_option("--nmax", o.nmax, "largest size checked")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*specify_cmd)
      build(o, false, out, err);
    else if (*ambiguous_cmd)
      build(o, true, out, err);
    else if (*count_cmd)
      count(o, out);
    else if (*sample_cmd)
      sample(o, out);
    else if (*heatmap_cmd)
      heatmap(o, out);
    else if (*enum_cmd)
      enumerate(o, out);
    else if (*simples_cmd)
      simples(o, out);
    else if (*audit_cmd)
      return audit(o, out);
    return ok;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << '\n';
    return domain_error;
  } catch (const InvalidInput &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

} // namespace permspec::cli
