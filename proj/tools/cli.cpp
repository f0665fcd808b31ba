#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dipolechain/dipolechain.hpp"
#include "table_output.hpp"

namespace dipolechain::cli {

namespace {

constexpr const char* kDefaultConfigs = "1:z:6,1:x:4,1:x:3,0.01:z:6,0.01:x:4";

struct Options {
  std::string seq;
  std::string fasta;
  double spacing_a = 4.5;
  double epsilon = 1.0;
  std::string direction = "x";
  double temperature = 300.0;
  std::string boundary = "open";
  std::size_t sites = 50;
  std::size_t strings = 1000;
  std::size_t length = 50;
  std::uint64_t seed = 42;
  std::optional<double> omega;
  double r_min_a = 4.0;
  double r_max_a = 8.0;
  std::size_t steps = 41;
  std::string configs = kDefaultConfigs;
  std::string format = "csv";
  std::string out;
};

/// Usage-level failure raised after CLI11 parsing (e.g. missing --seq).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) { return format_double(v); }

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw UsageError("--format must be csv or json");
}

std::vector<BaseKind> load_sequence(const Options& o) {
  if (!o.seq.empty() && !o.fasta.empty()) throw UsageError("--seq and --fasta are exclusive");
  if (!o.fasta.empty()) return read_sequence_file(o.fasta);
  if (!o.seq.empty()) return parse_sequence(o.seq);
  throw UsageError("a sequence is required (--seq or --fasta)");
}

ChainSpec chain_from(const Options& o, std::vector<BaseKind> sequence) {
  ChainSpec spec;
  spec.sequence = std::move(sequence);
  spec.spacing_m = o.spacing_a * constants::angstrom;
  spec.epsilon = o.epsilon;
  spec.direction = parse_direction(o.direction);
  spec.boundary = parse_boundary(o.boundary);
  spec.temperature_k = o.temperature;
  spec.validate();
  return spec;
}

void begin_meta(Table& t, const std::string& command) {
  t.add_meta("program", "dipolechain");
  t.add_meta("version", kVersion);
  t.add_meta("command", command);
}

void add_chain_meta(Table& t, const ChainSpec& spec, bool with_temperature) {
  t.add_meta("seq", sequence_string(spec.sequence));
  t.add_meta("spacing", num(spec.spacing_m / constants::angstrom));
  t.add_meta("epsilon", num(spec.epsilon));
  t.add_meta("direction", std::string(1, direction_letter(spec.direction)));
  t.add_meta("boundary", std::string(boundary_name(spec.boundary)));
  if (with_temperature) t.add_meta("temperature", num(spec.temperature_k));
}

std::string threshold_note(std::span<const Frequency> traps, double epsilon, Direction d,
                           Boundary b) {
  try {
    const double r = instability_spacing(traps, epsilon, d, b);
    return "; chain is unstable below r = " + num(r / constants::angstrom) + " A";
  } catch (const std::exception&) {
    return "";
  }
}

/// Runs `body`, re-raising instability with the critical spacing attached.
template <typename F>
auto with_threshold(std::span<const Frequency> traps, double epsilon, Direction d, Boundary b,
                    F&& body) {
  try {
    return body();
  } catch (const InstabilityError& e) {
    throw InstabilityError(e.what() + threshold_note(traps, epsilon, d, b), e.squared_frequency(),
                           e.mode_index());
  }
}

// ---------------------------------------------------------------------------

Table cmd_spectrum(const Options& o) {
  const auto spec = chain_from(o, load_sequence(o));
  const auto traps = trap_frequencies(spec);
  const auto modes = with_threshold(traps, spec.epsilon, spec.direction, spec.boundary,
                                    [&] { return numeric_modes(build_coupling_matrix(spec)); });
  Table t;
  begin_meta(t, "spectrum");
  add_chain_meta(t, spec, true);
  t.columns = {"mode", "omega_1e15_rad_s", "thermal_ratio"};
  for (std::size_t l = 0; l < modes.size(); ++l) {
    const auto w = modes.frequencies[l];
    t.rows.push_back({static_cast<std::int64_t>(l + 1), w.peta(), thermal_ratio(spec.temperature_k, w)});
  }
  return t;
}

Table cmd_site_entropy(const Options& o) {
  const auto spec = chain_from(o, load_sequence(o));
  const auto traps = trap_frequencies(spec);
  const auto report = with_threshold(traps, spec.epsilon, spec.direction, spec.boundary,
                                     [&] { return analyze_chain(spec); });
  Table t;
  begin_meta(t, "site-entropy");
  add_chain_meta(t, spec, true);
  t.columns = {"site", "base", "symplectic_eigenvalue", "vne_nats",
               "pair_site", "s1", "s2", "negativity_nats"};
  for (std::size_t j = 0; j < spec.size(); ++j) {
    std::vector<Cell> row = {static_cast<std::int64_t>(j + 1),
                             std::string(1, base_letter(spec.sequence[j])),
                             report.sites[j].symplectic, report.sites[j].entropy};
    if (j < report.pairs.size()) {
      const auto& p = report.pairs[j];
      row.insert(row.end(), {static_cast<std::int64_t>(p.second + 1), p.criteria.s1,
                             p.criteria.s2, p.negativity});
    } else {
      row.insert(row.end(), 4, std::monostate{});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmd_binding_energy(const Options& o) {
  const Direction dir = parse_direction(o.direction);
  const Boundary bnd = parse_boundary(o.boundary);
  Table t;
  begin_meta(t, "binding-energy");

  std::vector<Frequency> traps;
  double k_eff = 0.0;
  if (!o.seq.empty() || !o.fasta.empty()) {
    if (o.omega) throw UsageError("--omega applies only to uniform chains without --seq");
    const auto spec = chain_from(o, load_sequence(o));
    traps = trap_frequencies(spec);
    k_eff = coupling_constant(spec.spacing_m, spec.epsilon);
    t.add_meta("seq", sequence_string(spec.sequence));
  } else {
    const double w = o.omega.value_or(dir == Direction::Z ? 6.0 : 4.0);
    if (!(w > 0.0)) throw DomainError("--omega must be positive");
    if (o.sites < 2) throw DomainError("--sites must be >= 2");
    traps.assign(o.sites, Frequency::from_peta(w));
    k_eff = coupling_constant(o.spacing_a * constants::angstrom, o.epsilon);
    t.add_meta("sites", std::to_string(o.sites));
    t.add_meta("omega", num(w));
  }
  t.add_meta("spacing", num(o.spacing_a));
  t.add_meta("epsilon", num(o.epsilon));
  t.add_meta("direction", std::string(1, direction_letter(dir)));
  t.add_meta("boundary", std::string(boundary_name(bnd)));

  const bool uniform = std::all_of(traps.begin(), traps.end(),
                                   [&](Frequency f) { return f == traps.front(); });
  std::vector<Cell> row = {static_cast<std::int64_t>(traps.size())};
  with_threshold(traps, o.epsilon, dir, bnd, [&] {
    if (uniform && bnd == Boundary::Periodic) {
      const auto r = compare_binding_energy(traps.size(), traps.front(), k_eff, dir);
      row.insert(row.end(), {r.exact, joules_to_ev(r.exact), r.asymptotic,
                             joules_to_ev(r.asymptotic), r.s_witness, r.relative_gap});
    } else {
      const auto modes = numeric_modes(build_coupling_matrix(traps, k_eff, dir, bnd));
      const double e = binding_energy(modes, traps);
      row.insert(row.end(), {e, joules_to_ev(e)});
      row.insert(row.end(), 4, std::monostate{});
    }
    return 0;
  });
  t.columns = {"sites",         "exact_j", "exact_ev",    "asymptotic_j",
               "asymptotic_ev", "s_witness", "relative_gap"};
  t.rows.push_back(std::move(row));
  return t;
}

std::vector<ScanConfig> parse_configs(const std::string& text) {
  std::vector<ScanConfig> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find(':');
    const auto b = item.find(':', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos)
      throw UsageError("--configs entries must look like eps:dir:omega, got '" + item + "'");
    ScanConfig c;
    try {
      c.epsilon = std::stod(item.substr(0, a));
      c.direction = parse_direction(item.substr(a + 1, b - a - 1));
      c.omega0 = Frequency::from_peta(std::stod(item.substr(b + 1)));
    } catch (const std::logic_error&) {
      throw UsageError("malformed --configs entry '" + item + "'");
    }
    if (!(c.epsilon > 0.0) || !(c.omega0.peta() > 0.0))
      throw DomainError("--configs needs positive epsilon and omega");
    out.push_back(c);
  }
  if (out.empty()) throw UsageError("--configs is empty");
  return out;
}

std::string configs_string(std::span<const ScanConfig> configs) {
  std::string s;
  for (const auto& c : configs) {
    if (!s.empty()) s += ',';
    s += num(c.epsilon) + ':' + direction_letter(c.direction) + ':' + num(c.omega0.peta());
  }
  return s;
}

Table cmd_negativity_scan(const Options& o, std::ostream& err) {
  const auto configs = parse_configs(o.configs);
  ScanParams p;
  p.r_min_m = o.r_min_a * constants::angstrom;
  p.r_max_m = o.r_max_a * constants::angstrom;
  p.steps = o.steps;
  p.n_sites = o.sites;
  p.temperature_k = o.temperature;
  if (!(p.temperature_k >= 0.0)) throw DomainError("--temperature must be >= 0");
  if (p.n_sites < 3) throw DomainError("--sites must be >= 3 for the periodic scan chain");
  const auto curves = negativity_scan(p, configs);

  Table t;
  begin_meta(t, "negativity-scan");
  t.add_meta("configs", configs_string(configs));
  t.add_meta("r-min", num(o.r_min_a));
  t.add_meta("r-max", num(o.r_max_a));
  t.add_meta("steps", std::to_string(o.steps));
  t.add_meta("sites", std::to_string(o.sites));
  t.add_meta("temperature", num(o.temperature));
  t.columns = {"epsilon", "direction", "omega0_1e15_rad_s", "spacing_angstrom",
               "s1",      "s2",        "negativity_nats"};
  for (const auto& c : curves) {
    if (c.diagnostic) {
      const std::string note = "skipped " + configs_string(std::span(&c.config, 1)) + ": " +
                               *c.diagnostic;
      t.add_meta("note", note);
      err << "dipolechain: warning: " << note << '\n';
      continue;
    }
    for (const auto& pt : c.points)
      t.rows.push_back({pt.epsilon, std::string(1, direction_letter(pt.direction)),
                        pt.omega0.peta(), pt.spacing_m / constants::angstrom, pt.s1, pt.s2,
                        pt.negativity});
  }
  return t;
}

Table cmd_entropy_ensemble(const Options& o) {
  EnsembleParams p;
  p.n_strings = o.strings;
  p.length = o.length;
  p.spacing_m = o.spacing_a * constants::angstrom;
  p.epsilon = o.epsilon;
  p.direction = parse_direction(o.direction);
  p.temperature_k = o.temperature;
  p.master_seed = o.seed;
  if (!(p.spacing_m > 0.0) || !(p.epsilon > 0.0) || !(p.temperature_k >= 0.0))
    throw DomainError("spacing and epsilon must be positive, temperature >= 0");
  const auto records = ensemble_entropy(p);

  Table t;
  begin_meta(t, "entropy-ensemble");
  t.add_meta("strings", std::to_string(o.strings));
  t.add_meta("length", std::to_string(o.length));
  t.add_meta("seed", std::to_string(o.seed));
  t.add_meta("spacing", num(o.spacing_a));
  t.add_meta("epsilon", num(o.epsilon));
  t.add_meta("direction", std::string(1, direction_letter(p.direction)));
  t.add_meta("temperature", num(o.temperature));
  t.columns = {"index",    "seed",     "sequence", "shannon_nats",
               "shannon_bits", "mean_vne", "min_freq", "status"};
  for (const auto& r : records) {
    std::vector<Cell> row = {static_cast<std::int64_t>(r.index), r.seed,
                             sequence_string(r.sequence), r.shannon_nats, r.shannon_bits};
    if (r.error) {
      row.insert(row.end(), {std::monostate{}, std::monostate{}, *r.error});
    } else {
      row.insert(row.end(), {r.mean_entropy, r.min_frequency.peta(), std::string("ok")});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmd_neighbor_table(const Options& o) {
  NeighborParams p;
  p.spacing_m = o.spacing_a * constants::angstrom;
  p.epsilon = o.epsilon;
  p.direction = parse_direction(o.direction);
  const auto table = neighbor_table(p);

  Table t;
  begin_meta(t, "neighbor-table");
  t.add_meta("spacing", num(o.spacing_a));
  t.add_meta("epsilon", num(o.epsilon));
  t.add_meta("direction", std::string(1, direction_letter(p.direction)));
  t.columns = {"site10_vs_site8"};
  for (auto b : kAllBases) t.columns.emplace_back(base_name(b));
  for (std::size_t row = 0; row < 4; ++row) {
    std::vector<Cell> cells = {std::string(base_name(kAllBases[row]))};
    for (std::size_t col = 0; col < 4; ++col) cells.emplace_back(table[row][col]);
    t.rows.push_back(std::move(cells));
  }
  return t;
}

// ---------------------------------------------------------------------------

void add_output(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format: csv or json")->capture_default_str();
  sub->add_option("--out", o.out, "Output path (default: stdout)");
}

void add_sequence(CLI::App* sub, Options& o) {
  sub->add_option("--seq", o.seq, "Base sequence, e.g. ACGTA");
  sub->add_option("--fasta", o.fasta, "Single-record FASTA or plain sequence file");
}

void add_physics(CLI::App* sub, Options& o, bool boundary, bool temperature) {
  sub->add_option("--spacing", o.spacing_a, "Base spacing in Angstrom")->capture_default_str();
  sub->add_option("--epsilon", o.epsilon, "Dispersion scaling factor")->capture_default_str();
  sub->add_option("--direction", o.direction, "Displacement direction x|y|z")->capture_default_str();
  if (boundary)
    sub->add_option("--boundary", o.boundary, "open|periodic")->capture_default_str();
  if (temperature)
    sub->add_option("--temperature", o.temperature, "Temperature in K")->capture_default_str();
}

std::string finish_format(Table& t, const Options& o) {
  t.add_meta("format", o.format);
  std::ostringstream buf;
  write_table(t, parse_format(o.format), buf);
  return buf.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dipole-coupled oscillator chains: phonon spectra, entanglement and binding energy",
               "dipolechain"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* spectrum = app.add_subcommand("spectrum", "Phonon frequencies of a chain");
  add_sequence(spectrum, o);
  add_physics(spectrum, o, true, true);
  add_output(spectrum, o);

  auto* site = app.add_subcommand("site-entropy", "Per-site vNE and adjacent-pair criteria");
  add_sequence(site, o);
  add_physics(site, o, true, true);
  add_output(site, o);

  auto* binding = app.add_subcommand("binding-energy", "Exact and asymptotic binding energy");
  add_sequence(binding, o);
  add_physics(binding, o, true, false);
  binding->add_option("--sites", o.sites, "Uniform chain length when no sequence is given")
      ->capture_default_str();
  binding->add_option("--omega", o.omega, "Uniform trap frequency in 1e15 rad/s");
  add_output(binding, o);

  auto* scan = app.add_subcommand("negativity-scan", "Nearest-neighbour negativity vs spacing");
  scan->add_option("--configs", o.configs, "Comma list of eps:dir:omega curves")
      ->capture_default_str();
  scan->add_option("--r-min", o.r_min_a, "Smallest spacing in Angstrom")->capture_default_str();
  scan->add_option("--r-max", o.r_max_a, "Largest spacing in Angstrom")->capture_default_str();
  scan->add_option("--steps", o.steps, "Grid points per curve")->capture_default_str();
  scan->add_option("--sites", o.sites, "Periodic chain length")->capture_default_str();
  scan->add_option("--temperature", o.temperature, "Temperature in K")->capture_default_str();
  add_output(scan, o);

  auto* ensemble = app.add_subcommand("entropy-ensemble", "Random-sequence entropy ensemble");
  ensemble->add_option("--strings", o.strings, "Number of strings")->capture_default_str();
  ensemble->add_option("--length", o.length, "Bases per string")->capture_default_str();
  ensemble->add_option("--seed", o.seed, "Master seed")->capture_default_str();
  add_physics(ensemble, o, false, true);
  add_output(ensemble, o);

  auto* neighbor = app.add_subcommand("neighbor-table", "Site-9 vNE vs its two neighbours");
  add_physics(neighbor, o, false, false);
  add_output(neighbor, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "dipolechain: error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    parse_format(o.format);
    Table table;
    if (spectrum->parsed()) table = cmd_spectrum(o);
    else if (site->parsed()) table = cmd_site_entropy(o);
    else if (binding->parsed()) table = cmd_binding_energy(o);
    else if (scan->parsed()) table = cmd_negativity_scan(o, err);
    else if (ensemble->parsed()) table = cmd_entropy_ensemble(o);
    else table = cmd_neighbor_table(o);

    const std::string body = finish_format(table, o);
    if (o.out.empty()) {
      out << body;
    } else {
      std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
      if (!(file << body)) {
        err << "dipolechain: error: cannot write '" << o.out << "'\n";
        return kOutput;
      }
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "dipolechain: error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "dipolechain: error: " << e.what() << '\n';
    return kSequence;
  } catch (const InstabilityError& e) {
    err << "dipolechain: error: " << e.what() << '\n';
    return kUnstable;
  } catch (const DomainError& e) {
    err << "dipolechain: error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "dipolechain: error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace dipolechain::cli
