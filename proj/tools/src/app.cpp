#include "ltft/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ltft/baselines.hpp"
#include "ltft/cli/experiments.hpp"
#include "ltft/cli/wav.hpp"
#include "ltft/csv.hpp"
#include "ltft/error.hpp"
#include "ltft/frame_op.hpp"
#include "ltft/processing.hpp"

namespace ltft::cli {
namespace {

using csv::number;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
std::string join(const std::vector<T>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    if constexpr (std::is_same_v<T, std::string>) {
      out += items[i];
    } else {
      out += number(items[i]);
    }
  }
  return out;
}

double parse_double(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  fail(Errc::usage_error, std::string("invalid number for ") + what + ": '" + text + "'");
}

std::size_t parse_count(const std::string& text, const char* what) {
  const double v = parse_double(text, what);
  if (v < 0 || v != std::floor(v) || v > 1e15) {
    fail(Errc::usage_error, std::string("invalid count for ") + what + ": '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open config file '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      fail(Errc::usage_error, path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    tokens.push_back("--" + trim(std::string_view(t).substr(0, eq)));
    tokens.push_back(trim(std::string_view(t).substr(eq + 1)));
  }
  return tokens;
}

LtftParams make_params(const RunConfig& c, double rate) {
  return LtftParams::from_rate(rate, c.b0_frac, c.b1_frac, c.gamma, c.xi, parse_window_kind(c.window));
}

Generator sequence_of(const std::string& name) {
  const Generator g = parse_generator(name);
  if (g != Generator::halton && g != Generator::hammersley && g != Generator::mc) {
    fail(Errc::invalid_parameter, "sequence must be halton, hammersley or mc");
  }
  return g;
}

RealSignal load_input(const RunConfig& c, std::size_t default_length) {
  if (c.input.empty()) {
    const double rate = c.rate;
    return test_signal(c.length.value_or(default_length), rate, make_params(c, rate), c.signal_seed);
  }
  return to_signal(wav_read(c.input));
}

double redundancy_for(const RunConfig& c, std::size_t m, double fallback) {
  if (c.samples) {
    require(*c.samples >= 1, Errc::invalid_parameter, "sample count must be at least 1");
    return static_cast<double>(*c.samples) / static_cast<double>(m);
  }
  return c.redundancy.value_or(fallback);
}

class CsvSink {
 public:
  explicit CsvSink(const RunConfig& c) {
    if (c.csv.empty()) return;
    file_.open(c.csv, std::ios::binary);
    if (!file_) fail(Errc::io_error, "cannot create '" + c.csv + "'");
    csv::write_comment(file_, "ltft " + c.describe());
  }
  bool active() const { return file_.is_open(); }
  std::ostream& stream() { return file_; }
  void finish() {
    if (!active()) return;
    file_.flush();
    if (!file_) fail(Errc::io_error, "failed to write CSV output");
  }

 private:
  std::ofstream file_;
};

void write_output(const RunConfig& c, const RealSignal& signal) {
  if (!c.output.empty()) wav_write(c.output, from_signal(signal));
}

PipelineConfig pipeline(const RunConfig& c, double rate, std::size_t m, double fallback) {
  PipelineConfig p;
  p.params = make_params(c, rate);
  p.redundancy = redundancy_for(c, m, fallback);
  p.sequence = sequence_of(c.sequence);
  p.seed = c.seed;
  return p;
}

int cmd_reconstruct(const RunConfig& c, std::ostream& out) {
  const RealSignal s = load_input(c, std::size_t{1} << 14);
  const PipelineConfig p = pipeline(c, s.sample_rate, s.size(), 16.0);
  const RealSignal r = reconstruct(s, p);
  const double err = relative_l2_error(r.samples, s.samples);
  const std::size_t n = sample_count(p.redundancy, s.size());
  write_output(c, r);
  CsvSink sink(c);
  if (sink.active()) {
    csv::write_row(sink.stream(), {"A", "N", "rel_l2_error"});
    csv::write_row(sink.stream(), {number(p.redundancy), number(n), number(err)});
    sink.finish();
  }
  out << "reconstruct M=" << s.size() << " N=" << n << " rel_l2_error=" << number(err) << '\n';
  return 0;
}

int cmd_vocoder(const RunConfig& c, std::ostream& out) {
  require(c.dilation >= 1, Errc::invalid_parameter, "dilation must be an integer >= 1");
  const RealSignal s = load_input(c, std::size_t{1} << 14);
  VocoderJob job;
  job.dilation = c.dilation;
  job.params = make_params(c, s.sample_rate);
  job.sequence = sequence_of(c.sequence);
  job.seed = c.seed;
  if (c.samples || c.redundancy) job.redundancy = redundancy_for(c, s.size(), 0.0);
  const RealSignal r = phase_vocoder(s, job);
  const std::size_t n = sample_count(job.effective_redundancy(), s.size());
  write_output(c, r);
  CsvSink sink(c);
  if (sink.active()) {
    csv::write_row(sink.stream(), {"D", "M", "N", "output_samples"});
    csv::write_row(sink.stream(), {number(static_cast<std::size_t>(c.dilation)), number(s.size()),
                                   number(n), number(r.size())});
    sink.finish();
  }
  out << "vocoder M=" << s.size() << " D=" << c.dilation << " N=" << n
      << " output_samples=" << r.size() << '\n';
  return 0;
}

int run_mapped(const RunConfig& c, std::ostream& out, const std::string& name,
               const std::function<CoefficientVector(const CoefficientVector&, const SampleSet&)>& map) {
  const RealSignal s = load_input(c, std::size_t{1} << 14);
  const PipelineConfig p = pipeline(c, s.sample_rate, s.size(), 16.0);
  std::size_t kept = 0;
  std::size_t total = 0;
  auto counted = [&](const CoefficientVector& in, const SampleSet& g) {
    CoefficientVector o = map(in, g);
    total = o.size();
    kept = static_cast<std::size_t>(
        std::count_if(o.values.begin(), o.values.end(), [](cplx z) { return z != cplx{}; }));
    return o;
  };
  const RealSignal r = from_analytic(process(to_analytic(s), p, counted));
  const double change = relative_l2_error(r.samples, s.samples);
  write_output(c, r);
  CsvSink sink(c);
  if (sink.active()) {
    csv::write_row(sink.stream(), {"M", "N", "kept", "rel_l2_change"});
    csv::write_row(sink.stream(), {number(s.size()), number(total), number(kept), number(change)});
    sink.finish();
  }
  out << name << " M=" << s.size() << " N=" << total << " kept=" << kept
      << " rel_l2_change=" << number(change) << '\n';
  return 0;
}

int cmd_denoise(const RunConfig& c, std::ostream& out) {
  require(c.lambda >= 0.0, Errc::invalid_parameter, "lambda must be non-negative");
  const CoefficientRule rule = soft_threshold_rule(c.lambda);
  return run_mapped(c, out, "denoise", [&](const CoefficientVector& v, const SampleSet&) {
    return pointwise_nonlinearity(v, rule);
  });
}

int cmd_multiplier(const RunConfig& c, std::ostream& out) {
  return run_mapped(c, out, "multiplier", [&](const CoefficientVector& v, const SampleSet& g) {
    const double rate = g.box.freq.hi;
    const double cut = c.cutoff.value_or(c.b1_frac * rate);
    return multiplier_apply(v, g, [cut](double, double b, double) {
      return b < cut ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
    });
  });
}

int cmd_bench_error(const RunConfig& c, std::ostream& out) {
  const std::size_t m = c.length.value_or(1024);
  const LtftParams params = make_params(c, c.rate);
  const RealSignal s = c.input.empty() ? test_signal(m, c.rate, params, c.signal_seed)
                                       : to_signal(wav_read(c.input));
  const LtftParams used = make_params(c, s.sample_rate);
  CsvSink sink(c);
  if (sink.active()) csv::write_row(sink.stream(), {"method", "A", "N", "rel_l2_error", "std"});
  for (const std::string& name : c.methods) {
    const Generator g = sequence_of(name);
    const auto rows = bench_reconstruction(s, g, c.redundancies, used, c.mc_seeds, c.seed);
    std::vector<double> x;
    std::vector<double> y;
    for (const ErrorRow& r : rows) {
      if (sink.active()) {
        csv::write_row(sink.stream(), {name, number(r.redundancy), number(r.n), number(r.error),
                                       number(r.error_std)});
      }
      x.push_back(static_cast<double>(r.n));
      y.push_back(r.error);
    }
    out << "bench-error method=" << name;
    if (x.size() >= 2) out << " slope=" << number(loglog_slope(x, y));
    out << '\n';
  }
  sink.finish();
  return 0;
}

int cmd_bench_discrepancy(const RunConfig& c, std::ostream& out) {
  const std::vector<std::size_t> counts =
      c.counts.empty() ? std::vector<std::size_t>{8, 16, 32, 64, 128} : c.counts;
  ScalingOptions options;
  options.mc_seeds = c.mc_seeds;
  options.seed = c.seed;
  std::vector<DiscrepancyTable> tables;
  for (const std::string& name : c.generators) {
    tables.push_back(discrepancy_scaling(parse_generator(name), counts, c.dim, options));
    out << "bench-discrepancy generator=" << name << " slope=" << number(tables.back().slope) << '\n';
  }
  CsvSink sink(c);
  if (sink.active()) {
    write_csv(sink.stream(), tables);
    sink.finish();
  }
  return 0;
}

int cmd_bench_complexity(const RunConfig& c, std::ostream& out) {
  std::vector<std::size_t> counts = c.counts;
  if (counts.empty()) {
    for (std::size_t n = 256; n <= 16384; n *= 2) counts.push_back(n);
  }
  const std::size_t m = c.length.value_or(1024);
  const LtftParams params = make_params(c, c.rate);
  const PhaseSpaceBox box = PhaseSpaceBox::for_signal(m, c.rate);
  const Generator g = sequence_of(c.sequence);
  const double per_sample = complexity_per_sample_bound(params, c.rate);
  CsvSink sink(c);
  if (sink.active()) {
    csv::write_row(sink.stream(), {"N", "C_actual", "A_predicted", "per_sample_bound", "deviation_bound"});
  }
  bool ok = true;
  for (std::size_t n : counts) {
    const ComplexityCount cc = complexity_count(make_samples(box, n, g, c.seed), params, c.rate);
    const double dev = complexity_deviation_bound(params, c.rate, n);
    ok = ok && cc.actual / static_cast<double>(n) <= per_sample && std::abs(cc.actual - cc.predicted) <= dev;
    if (sink.active()) {
      csv::write_row(sink.stream(), {number(n), number(cc.actual), number(cc.predicted),
                                     number(per_sample), number(dev)});
    }
  }
  sink.finish();
  out << "bench-complexity sequence=" << c.sequence << " within_bounds=" << (ok ? "yes" : "no") << '\n';
  return 0;
}

int cmd_frame_diag(const RunConfig& c, std::ostream& out) {
  const std::size_t m = c.length.value_or(1024);
  const FrameDiagonal hd = frame_diagonal(make_params(c, c.rate), c.rate, m);
  CsvSink sink(c);
  if (sink.active()) {
    write_csv(sink.stream(), hd);
    sink.finish();
  }
  const auto [lo, hi] = std::minmax_element(hd.h.begin(), hd.h.end());
  out << "frame-diag M=" << m << " h_min=" << number(*lo) << " h_max=" << number(*hi) << '\n';
  return 0;
}

int cmd_coverage(const RunConfig& c, std::ostream& out) {
  const std::size_t m = c.length.value_or(1024);
  const LtftParams params = make_params(c, c.rate);
  const PhaseSpaceBox box = PhaseSpaceBox::for_signal(m, c.rate);
  const std::size_t n = sample_count(redundancy_for(c, m, 16.0), m);
  const SampleSet qmc = make_samples(box, n, sequence_of(c.sequence), c.seed);

  const DwtGrid dwt = dwt_grid(matched_dwt_params(params, c.rate, m, n, c.dwt_step));
  const std::vector<PhasePoint> queries = coverage_queries(box, params, c.queries);
  const CoverageReport rq = funnel_coverage(qmc, queries, params);
  const CoverageReport rd = funnel_coverage(dwt.samples, queries, params);
  CsvSink sink(c);
  if (sink.active()) {
    csv::write_row(sink.stream(), {"sampler", "a", "b", "c", "value", "excluded"});
    for (const auto& [name, rep] : {std::pair{c.sequence, &rq}, std::pair{std::string("dwt-grid"), &rd}}) {
      for (std::size_t q = 0; q < queries.size(); ++q) {
        csv::write_row(sink.stream(), {name, number(queries[q].a), number(queries[q].b), number(queries[q].c),
                                       number(rep->values[q]), rep->excluded[q] ? "1" : "0"});
      }
    }
    sink.finish();
  }
  out << "coverage sampler=" << c.sequence << " N=" << qmc.size() << " ratio=" << number(rq.ratio)
      << " mean=" << number(rq.mean) << '\n';
  out << "coverage sampler=dwt-grid N=" << dwt.samples.size() << " ratio=" << number(rd.ratio)
      << " mean=" << number(rd.mean) << '\n';
  return 0;
}

}  // namespace

std::string RunConfig::describe() const {
  std::ostringstream s;
  s << "subcommand=" << subcommand << ";input=" << input << ";output=" << output << ";csv=" << csv
    << ";b0-frac=" << number(b0_frac) << ";b1-frac=" << number(b1_frac) << ";gamma=" << number(gamma)
    << ";xi=" << number(xi) << ";window=" << window
    << ";redundancy=" << (redundancy ? number(*redundancy) : std::string("default"))
    << ";samples=" << (samples ? number(*samples) : std::string("default")) << ";sequence=" << sequence
    << ";seed=" << seed << ";dilation=" << dilation << ";lambda=" << number(lambda)
    << ";cutoff=" << (cutoff ? number(*cutoff) : std::string("default"))
    << ";length=" << (length ? number(*length) : std::string("default")) << ";rate=" << number(rate)
    << ";signal-seed=" << signal_seed << ";methods=" << join(methods)
    << ";redundancies=" << join(redundancies) << ";generators=" << join(generators)
    << ";counts=" << join(counts) << ";dim=" << dim << ";mc-seeds=" << mc_seeds
    << ";queries=" << queries << ";dwt-step=" << number(dwt_step);
  return s.str();
}

std::string usage() {
  std::string text = "usage: ltft <subcommand> [options] [input.wav [output.wav]]\nsubcommands:";
  for (const char* s : kSubcommands) text += std::string(" ") + s;
  text += "\nrun 'ltft <subcommand> --help' for options\n";
  return text;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  if (args.empty()) fail(Errc::usage_error, "missing subcommand");
  RunConfig c;
  c.subcommand = args[0];
  if (std::find(std::begin(kSubcommands), std::end(kSubcommands), c.subcommand) == std::end(kSubcommands)) {
    fail(Errc::usage_error, "unknown subcommand '" + c.subcommand + "'");
  }

  std::vector<std::string> tokens;
  std::vector<std::string> rest;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) fail(Errc::usage_error, "--config needs a file");
      const auto t = config_tokens(args[++i]);
      tokens.insert(tokens.end(), t.begin(), t.end());
    } else if (args[i].rfind("--config=", 0) == 0) {
      const auto t = config_tokens(args[i].substr(9));
      tokens.insert(tokens.end(), t.begin(), t.end());
    } else {
      rest.push_back(args[i]);
    }
  }
  tokens.insert(tokens.end(), rest.begin(), rest.end());

  CLI::App app("ltft " + c.subcommand, "ltft");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string redundancy, samples, cutoff, length, methods, redundancies, generators, counts;
  app.add_option("input", c.input, "input WAV (default: built-in test signal)");
  app.add_option("output", c.output, "output WAV");
  app.add_option("--csv", c.csv, "CSV output path");
  app.add_option("--b0-frac", c.b0_frac, "b0 / L");
  app.add_option("--b1-frac", c.b1_frac, "b1 / L");
  app.add_option("--gamma", c.gamma, "minimal oscillation count");
  app.add_option("--xi", c.xi, "oscillation range");
  app.add_option("--window", c.window, "cos4 or cos6");
  app.add_option("--redundancy", redundancy, "A = N / M");
  app.add_option("--samples", samples, "N (exclusive with --redundancy)");
  app.add_option("--sequence", c.sequence, "halton, hammersley or mc");
  app.add_option("--seed", c.seed, "mc seed");
  app.add_option("--dilation", c.dilation, "integer vocoder dilation D");
  app.add_option("--lambda", c.lambda, "soft threshold");
  app.add_option("--cutoff", cutoff, "multiplier cut frequency");
  app.add_option("--length", length, "M of the test signal or bench grid");
  app.add_option("--rate", c.rate, "L of the test signal or bench grid");
  app.add_option("--signal-seed", c.signal_seed, "test-signal seed");
  app.add_option("--methods", methods, "bench-error sequences, comma separated");
  app.add_option("--redundancies", redundancies, "bench-error redundancies, comma separated");
  app.add_option("--generators", generators, "bench-discrepancy generators, comma separated");
  app.add_option("--counts", counts, "point counts, comma separated");
  app.add_option("--dim", c.dim, "bench-discrepancy dimension");
  app.add_option("--mc-seeds", c.mc_seeds, "seeds averaged for mc");
  app.add_option("--queries", c.queries, "coverage query count");
  app.add_option("--dwt-step", c.dwt_step, "coverage DWT dilation step r");

  std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw Error(Errc::usage_error, app.help());
  } catch (const CLI::ParseError& e) {
    fail(Errc::usage_error, e.what());
  }

  if (!redundancy.empty() && !samples.empty()) {
    fail(Errc::usage_error, "--redundancy and --samples are mutually exclusive");
  }
  if (!redundancy.empty()) c.redundancy = parse_double(redundancy, "--redundancy");
  if (!samples.empty()) c.samples = parse_count(samples, "--samples");
  if (!cutoff.empty()) c.cutoff = parse_double(cutoff, "--cutoff");
  if (!length.empty()) c.length = parse_count(length, "--length");
  if (!methods.empty()) c.methods = split_list(methods);
  if (!generators.empty()) c.generators = split_list(generators);
  if (!redundancies.empty()) {
    c.redundancies.clear();
    for (const auto& r : split_list(redundancies)) c.redundancies.push_back(parse_double(r, "--redundancies"));
  }
  if (!counts.empty()) {
    for (const auto& r : split_list(counts)) c.counts.push_back(parse_count(r, "--counts"));
  }
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string& s = config.subcommand;
    if (s == "reconstruct") return cmd_reconstruct(config, out);
    if (s == "vocoder") return cmd_vocoder(config, out);
    if (s == "denoise") return cmd_denoise(config, out);
    if (s == "multiplier") return cmd_multiplier(config, out);
    if (s == "bench-error") return cmd_bench_error(config, out);
    if (s == "bench-discrepancy") return cmd_bench_discrepancy(config, out);
    if (s == "bench-complexity") return cmd_bench_complexity(config, out);
    if (s == "frame-diag") return cmd_frame_diag(config, out);
    if (s == "coverage") return cmd_coverage(config, out);
    fail(Errc::usage_error, "unknown subcommand '" + s + "'");
  } catch (const Error& e) {
    err << "error: code=" << to_string(e.code()) << " message=" << e.what() << '\n';
    return e.code() == Errc::usage_error ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: code=internal message=" << e.what() << '\n';
    return 1;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!args.empty() && (args[0] == "--help" || args[0] == "-h" || args[0] == "help")) {
    out << usage();
    return 0;
  }
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const Error& e) {
    if (e.code() == Errc::usage_error && std::string_view(e.what()).find("Usage:") != std::string_view::npos) {
      out << e.what();
      return 0;
    }
    err << "error: code=" << to_string(e.code()) << " message=" << e.what() << '\n';
    if (e.code() == Errc::usage_error) err << usage();
    return e.code() == Errc::usage_error ? 2 : 1;
  }
  return run(config, out, err);
}

}  // namespace ltft::cli
