#include "spinent/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <thread>

#include "spinent/error.hpp"
#include "spinent/io.hpp"
#include "spinent/states.hpp"

namespace spinent::cli {

namespace {

// Runs body(i) for i in [0, count) over `threads` workers. Each index is
// written by exactly one worker, so callers collect results by index.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, count ? count : 1);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

Complex parse_coefficient(const std::string& token) {
  const auto colon = token.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const double re = std::stod(token, &used);
      if (used != token.size()) throw InvalidParameter("");
      return {re, 0.0};
    }
    const std::string re_text = token.substr(0, colon);
    const std::string im_text = token.substr(colon + 1);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw InvalidParameter("");
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw InvalidParameter("");
    return {re, im};
  } catch (const std::exception&) {
    throw InvalidParameter("cannot parse coefficient '" + token + "' (expected re or re:im)");
  }
}

std::string default_parameter(const std::string& kind) {
  if (kind == "coherent") return "theta";
  if (kind == "twist") return "mu";
  if (kind == "dicke") return "m";
  throw InvalidParameter("unknown sweep kind '" + kind + "' (expected coherent, twist or dicke)");
}

DickeState sweep_state(const SweepOptions& o, const std::string& parameter, double value) {
  CoherentSpec spec{o.n, o.theta, o.phi};
  double mu = o.mu;
  if (o.kind == "dicke") {
    if (parameter != "m") throw InvalidParameter("dicke sweeps vary m only");
    return dicke_state(o.n, value);
  }
  if (parameter == "theta") {
    spec.theta = value;
  } else if (parameter == "phi") {
    spec.phi = value;
  } else if (parameter == "mu" && o.kind == "twist") {
    mu = value;
  } else {
    throw InvalidParameter("parameter '" + parameter + "' is not valid for kind '" + o.kind + "'");
  }
  return o.kind == "twist" ? twisted_state(spec, mu) : coherent_state(spec);
}

// Per-trial deviations, in the order of the name tables below.
const std::vector<std::string> kOracleFieldNames = {
    "jx",     "jy",     "jz",      "jx2",     "jy2",         "jz2",          "sym_xy",
    "sym_xz", "sym_yz", "magnitude", "var_xp", "var_yp",     "corr_x",       "corr_y",
    "s_param", "q_x",   "q_y",     "xi_rx",   "xi_ry",       "pair_xx",      "pair_yy",
    "pair_zz", "pair_xy", "pair_xz", "pair_yz", "atom_var_quarter", "decomposition"};
const std::vector<std::string> kRouteFieldNames = {"s_from_variances", "s_from_q", "s_from_xi",
                                                   "corr_x_pairwise", "corr_y_pairwise"};
const std::vector<std::string> kFrameFieldNames = {"rotated_jx", "rotated_jy",
                                                   "rotated_jz_minus_magnitude"};

struct TrialResult {
  bool degenerate = false;
  bool classification_mismatch = false;
  std::vector<double> oracle;
  std::vector<double> route;
  std::vector<double> frame;
};

TrialResult run_trial(int n, int trial, const OracleCheckOptions& o) {
  std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  const DickeState state = random_state(n, rng);

  TrialResult res;
  const Analysis a = analyze(state);
  const auto oracle_report = oracle::oracle_metrics(oracle::dicke_to_full(state, o.cap));
  const Analysis& b = oracle_report.analysis;
  if (!a.metrics || !b.metrics) {
    res.degenerate = true;
    res.classification_mismatch = a.classification != b.classification;
    return res;
  }
  res.classification_mismatch = a.classification != b.classification;

  const auto& ma = a.moments;
  const auto& mb = b.moments;
  const auto& ra = *a.metrics;
  const auto& rb = *b.metrics;
  const auto pairs = pairwise_correlators(ma, n);
  const auto& p = oracle_report.pair01;
  auto d = [](double x, double y) { return std::abs(x - y); };

  double atom_dev = 0.0;
  for (std::size_t i = 0; i < oracle_report.atom_var_xp.size(); ++i) {
    atom_dev = std::max({atom_dev, d(oracle_report.atom_var_xp[i], 0.25),
                         d(oracle_report.atom_var_yp[i], 0.25)});
  }
  const auto& dec = *oracle_report.decomposed;

  res.oracle = {d(ma.jx, mb.jx),
                d(ma.jy, mb.jy),
                d(ma.jz, mb.jz),
                d(ma.jx2, mb.jx2),
                d(ma.jy2, mb.jy2),
                d(ma.jz2, mb.jz2),
                d(ma.sym_xy, mb.sym_xy),
                d(ma.sym_xz, mb.sym_xz),
                d(ma.sym_yz, mb.sym_yz),
                d(a.mean.magnitude, b.mean.magnitude),
                d(ra.var_xp, rb.var_xp),
                d(ra.var_yp, rb.var_yp),
                d(ra.corr_x, rb.corr_x),
                d(ra.corr_y, rb.corr_y),
                d(ra.s_param, rb.s_param),
                d(ra.q_x, rb.q_x),
                d(ra.q_y, rb.q_y),
                d(ra.xi_rx, rb.xi_rx),
                d(ra.xi_ry, rb.xi_ry),
                d(pairs.xx, p[0][0]),
                d(pairs.yy, p[1][1]),
                d(pairs.zz, p[2][2]),
                std::max(d(pairs.xy, p[0][1]), d(pairs.xy, p[1][0])),
                std::max(d(pairs.xz, p[0][2]), d(pairs.xz, p[2][0])),
                std::max(d(pairs.yz, p[1][2]), d(pairs.yz, p[2][1])),
                atom_dev,
                std::max(d(dec.x, rb.var_xp), d(dec.y, rb.var_yp))};

  const TransverseVariances var{ra.var_xp, ra.var_yp};
  const auto pairwise =
      correlation_terms_pairwise(pairs, single_atom_means(ma, n), *a.frame, n);
  res.route = {d(s_from_variances(var, n), ra.s_param),
               d(s_from_q({ra.q_x, ra.q_y}, n), ra.s_param),
               d(s_from_xi({ra.xi_rx, ra.xi_ry}, a.mean.magnitude, n), ra.s_param),
               d(pairwise.x, ra.corr_x), d(pairwise.y, ra.corr_y)};

  const auto rotated = rotated_first_moments(ma, *a.frame);
  res.frame = {std::abs(rotated[0]), std::abs(rotated[1]), d(rotated[2], a.mean.magnitude)};
  return res;
}

std::vector<FieldDeviation> named(const std::vector<std::string>& names) {
  std::vector<FieldDeviation> out;
  for (const auto& n : names) out.push_back({n, 0.0});
  return out;
}

void fold(std::vector<FieldDeviation>& acc, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    acc[i].max_abs = std::max(acc[i].max_abs, values[i]);
  }
}

std::string scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const DickeState state = io::to_state(io::read_state_file(options.path));
    const Analysis a = analyze(state, options.analysis);
    out << io::serialize_report(a);
    if (!a.frame) {
      err << "warning: mean spin vanishes; frame-dependent metrics are undefined\n";
      return kExitDegenerate;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_make_state(const MakeStateOptions& o, std::ostream& out, std::ostream& err) {
  try {
    if (o.kind == "coherent") {
      out << io::serialize_state(coherent_state({o.n, o.theta, o.phi}));
    } else if (o.kind == "dicke") {
      out << io::serialize_state(dicke_state(o.n, o.m));
    } else if (o.kind == "twist") {
      out << io::serialize_state(twisted_state({o.n, o.theta, o.phi}, o.mu));
    } else if (o.kind == "custom") {
      CoefficientVector c;
      for (const auto& token : o.coeffs) c.push_back(parse_coefficient(token));
      out << io::serialize_state(custom_state(o.n, std::move(c), o.renormalize));
    } else {
      throw InvalidParameter("unknown state kind '" + o.kind +
                             "' (expected coherent, dicke, twist or custom)");
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

std::vector<double> sweep_values(double start, double stop, int steps) {
  if (steps < 2) throw InvalidParameter("a sweep needs at least 2 steps");
  if (!std::isfinite(start) || !std::isfinite(stop)) {
    throw InvalidParameter("sweep bounds must be finite");
  }
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    v[i] = i == steps - 1 ? stop : start + i * (stop - start) / (steps - 1);
  }
  return v;
}

std::string run_sweep(const SweepOptions& o) {
  const std::string parameter = o.parameter.empty() ? default_parameter(o.kind) : o.parameter;
  default_parameter(o.kind);
  const auto values = sweep_values(o.start, o.stop, o.steps);
  std::vector<std::string> rows(values.size());
  parallel_for(values.size(), o.threads, [&](std::size_t i) {
    rows[i] = io::sweep_csv_row(values[i], analyze(sweep_state(o, parameter, values[i]), o.analysis));
  });
  std::string csv = io::sweep_csv_header();
  for (const auto& r : rows) csv += r;
  return csv;
}

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  std::string csv;
  try {
    csv = run_sweep(o);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  if (o.output == "-") {
    out << csv;
    return out ? kExitOk : kExitError;
  }
  std::ofstream file(o.output, std::ios::binary);
  file << csv;
  file.close();
  if (!file) {
    err << "error: failed to write " << o.output << "\n";
    return kExitError;
  }
  return kExitOk;
}

OracleCheckSummary run_oracle_check(const OracleCheckOptions& o) {
  if (o.n_min < 2) throw InsufficientAtoms("oracle check needs N >= 2");
  if (o.n_max > o.cap) {
    throw DimensionCap("N=" + std::to_string(o.n_max) + " exceeds the oracle cap of " +
                       std::to_string(o.cap) + " atoms");
  }
  if (o.n_min > o.n_max) throw InvalidParameter("empty N range");
  if (o.trials < 1) throw InvalidParameter("trials must be positive");

  const std::size_t per_n = static_cast<std::size_t>(o.trials);
  const std::size_t total = per_n * static_cast<std::size_t>(o.n_max - o.n_min + 1);
  std::vector<TrialResult> results(total);
  parallel_for(total, o.threads, [&](std::size_t i) {
    results[i] = run_trial(o.n_min + static_cast<int>(i / per_n), static_cast<int>(i % per_n), o);
  });

  OracleCheckSummary s;
  s.oracle_fields = named(kOracleFieldNames);
  s.route_fields = named(kRouteFieldNames);
  s.frame_fields = named(kFrameFieldNames);
  for (const auto& r : results) {
    ++s.states_checked;
    if (r.classification_mismatch) ++s.classification_mismatches;
    if (r.degenerate) {
      ++s.degenerate_skipped;
      continue;
    }
    fold(s.oracle_fields, r.oracle);
    fold(s.route_fields, r.route);
    fold(s.frame_fields, r.frame);
  }
  return s;
}

std::pair<int, int> parse_n_range(const std::string& text) {
  auto to_int = [&text](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) {
      throw InvalidParameter("cannot parse atom range '" + text + "' (expected N or A..B)");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text);
    return {n, n};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

int cmd_oracle_check(const OracleCheckOptions& o, std::ostream& out, std::ostream& err) {
  OracleCheckSummary s;
  try {
    s = run_oracle_check(o);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  bool pass = s.classification_mismatches == 0;
  out << "oracle-check N=" << o.n_min << ".." << o.n_max << " trials=" << o.trials
      << " seed=" << o.seed << "\n";
  out << "states " << s.states_checked << " degenerate_skipped " << s.degenerate_skipped
      << " classification_mismatches " << s.classification_mismatches << "\n";
  auto section = [&](const char* title, const std::vector<FieldDeviation>& fields) {
    out << title << "\n";
    for (const auto& f : fields) {
      const bool ok = f.max_abs < o.tolerance;
      pass = pass && ok;
      char line[96];
      std::snprintf(line, sizeof line, "  %-28s %s %s\n", f.name.c_str(),
                    scientific(f.max_abs).c_str(), ok ? "ok" : "FAIL");
      out << line;
    }
  };
  section("oracle vs dicke (max abs deviation)", s.oracle_fields);
  section("alternative routes", s.route_fields);
  section("frame postconditions", s.frame_fields);
  out << "tolerance " << scientific(o.tolerance) << "\n";
  out << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitOk : kExitError;
}

}  // namespace spinent::cli
