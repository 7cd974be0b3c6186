#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matcode/budget.hpp"
#include "matcode/circuit_search.hpp"
#include "matcode/code.hpp"
#include "matcode/errors.hpp"
#include "matcode/frame.hpp"
#include "matcode/io_json.hpp"
#include "matcode/matroid.hpp"
#include "matcode/perturb.hpp"
#include "matcode/random_gen.hpp"
#include "matcode/rational.hpp"

using namespace matcode;

namespace {

struct Opts {
  std::string in, out, csv, dot, at;
  std::string field = "2";
  std::string alpha, beta;
  unsigned t = 2, k = 0, nmax = 0, trials = 0, n = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget_flag = 0;
  bool budget_set = false;
};

// "P" or "P^N"; a plain prime power such as 4 splits into 2^2.
FieldPtr parse_field(const std::string& text) {
  std::uint64_t p = 0, n = 1;
  const auto caret = text.find('^');
  try {
    if (caret == std::string::npos) {
      p = std::stoull(text);
    } else {
      p = std::stoull(text.substr(0, caret));
      n = std::stoull(text.substr(caret + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("--field wants P or P^N, got \"" + text + "\"");
  }
  if (p < 2 || n < 1) throw std::invalid_argument("--field wants P >= 2, N >= 1");
  if (caret == std::string::npos) {
    // factor a prime power
    std::uint64_t base = p;
    for (std::uint64_t d = 2; d * d <= base; ++d) {
      if (base % d == 0) {
        std::uint64_t v = base;
        n = 0;
        while (v % d == 0) v /= d, ++n;
        if (v != 1)
          throw std::invalid_argument("--field " + text + " is not a prime power");
        p = d;
        break;
      }
    }
  }
  return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n));
}

Rational parse_ratio(const std::string& flag, const std::string& text) {
  const Rational r = Rational::parse(text);
  if (r.num <= 0 || r.num > r.den)
    throw std::invalid_argument(flag + " must lie in (0, 1], got " + text);
  return r;
}

EnumBudget budget_of(const Opts& o) {
  EnumBudget b = budget_from_env();
  if (o.budget_set) b.max_candidates = o.budget_flag;
  return b;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty())
    std::cout << content;
  else
    write_file(path, content);
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::uint64_t row_seed(std::uint64_t seed, unsigned trial, unsigned n) {
  return splitmix64(seed ^ splitmix64((static_cast<std::uint64_t>(trial) << 32) | n));
}

// ---- command bodies -------------------------------------------------------

void cmd_matroid_info(const Opts& o) {
  const ReprMatroid m = matroid_from_json(read_file(o.in));
  std::cout << "elements=" << m.size() << " rank=" << m.rank()
            << " corank=" << (m.size() - m.rank()) << " field=GF(" << m.field()->q()
            << ")\n";
}

void cmd_matroid_girth(const Opts& o) {
  const ReprMatroid m = matroid_from_json(read_file(o.in));
  const EnumBudget b = budget_of(o);
  const auto g = m.girth(b);
  const auto cg = m.cogirth(b);
  std::cout << "girth=" << (g ? std::to_string(*g) : "none")
            << " cogirth=" << (cg ? std::to_string(*cg) : "none") << "\n";
}

void cmd_matroid_dual(const Opts& o) {
  const ReprMatroid m = matroid_from_json(read_file(o.in));
  emit(o.out, matroid_to_json(m.dual()));
}

void cmd_matroid_vconn(const Opts& o) {
  const ReprMatroid m = matroid_from_json(read_file(o.in));
  const auto sep = vertical_separation(m, o.t);
  if (!sep) {
    std::cout << "vertically_connected=yes t=" << o.t << "\n";
    return;
  }
  nlohmann::json j{{"part_a", sep->part_a},
                   {"part_b", sep->part_b},
                   {"rank_a", sep->rank_a},
                   {"rank_b", sep->rank_b},
                   {"order", sep->order}};
  std::cout << "vertically_connected=no t=" << o.t << " order=" << sep->order << "\n"
            << j.dump(2) << "\n";
}

void cmd_code_dist(const Opts& o) {
  const LinearCode c(matroid_from_json(read_file(o.in)));
  const auto d = c.distance(budget_of(o));
  std::cout << "n=" << c.length() << " k=" << c.dimension()
            << " d=" << (d ? std::to_string(*d) : "none") << "\n";
}

void cmd_code_puncture(const Opts& o, bool shorten) {
  const LinearCode c(matroid_from_json(read_file(o.in)));
  const LinearCode out = shorten ? c.shortened(o.at) : c.punctured(o.at);
  emit(o.out, matroid_to_json(out.matroid()));
}

void cmd_frame_repr(const Opts& o) {
  const ReprMatroid m = matroid_from_json(read_file(o.in));
  const FrameRep fr = FrameRep::from_matroid(m);
  if (!o.dot.empty()) write_file(o.dot, digraph_to_dot(fr.graph));
  if (!o.out.empty()) write_file(o.out, matrix_to_json(fr.matrix));
  std::cout << "vertices=" << fr.graph.vertex_count << " arcs=" << fr.graph.arcs.size()
            << " connected=" << yn(graph_connected(fr.graph)) << "\n";
}

void cmd_cover_build(const Opts& o) {
  const FrameRep fr = FrameRep::from_matrix(matrix_from_json(read_file(o.in)));
  const CoverGraph cover = build_cover(fr);
  if (!o.dot.empty()) write_file(o.dot, cover_to_dot(cover));
  std::cout << "base_vertices=" << fr.graph.vertex_count
            << " cover_vertices=" << cover.graph.vertex_count
            << " cover_edges=" << cover.graph.edge_count()
            << " levels=" << (fr.matrix.field()->q() - 1) << "\n";
}

void cmd_goodness_scan(const Opts& o) {
  const FieldPtr f = parse_field(o.field);
  const Rational alpha = parse_ratio("--alpha", o.alpha);
  parse_ratio("--beta", o.beta);  // validated; thresholds are applied by consumers
  const EnumBudget b = budget_of(o);

  std::ostringstream csv;
  csv << "n,k,d,rate,reldist,seed\n";
  for (unsigned trial = 0; trial < o.trials; ++trial) {
    for (unsigned n = 1; n <= o.nmax; ++n) {
      if ((alpha.num * n) % alpha.den != 0) continue;
      const unsigned k = static_cast<unsigned>(alpha.num * n / alpha.den);
      if (k == 0) continue;
      const std::uint64_t s = row_seed(o.seed, trial, n);
      const LinearCode code = random_code(n, k, f, s);
      const unsigned d = *code.distance(b);
      csv << n << ',' << k << ',' << d << ',' << format_double(double(k) / n) << ','
          << format_double(double(d) / n) << ',' << s << "\n";
    }
  }
  emit(o.csv, csv.str());
}

void cmd_frame_girth(const Opts& o) {
  const FieldPtr f = parse_field(o.field);
  const double beta = parse_ratio("--beta", o.beta).to_double();

  std::ostringstream csv;
  csv << "trial,r,|M|,t,|X|,bound,deficit,preconds_met\n";
  for (unsigned trial = 0; trial < o.trials; ++trial) {
    Rng rng = Rng::substream(o.seed, trial);
    const int vertices = 4 + static_cast<int>(rng.below32(5));
    const int extra = 2 + static_cast<int>(rng.below32(5));
    const Mat a = random_frame_matrix(f, vertices, extra, rng);
    const FrameRep fr = FrameRep::from_matrix(a);
    const DeficientSetReport rep = rank_deficient_set(fr, o.t, beta);
    const long long deficit =
        static_cast<long long>(rep.elements.size()) - static_cast<long long>(rep.rank);
    csv << trial << ',' << fr.matroid().rank() << ',' << a.cols() << ',' << o.t << ','
        << rep.elements.size() << ',' << format_double(rep.size_bound) << ',' << deficit
        << ',' << (rep.preconditions_met ? 1 : 0) << "\n";
  }
  emit(o.csv, csv.str());
}

void cmd_perturb_demo(const Opts& o) {
  const FieldPtr f = parse_field(o.field);
  if (o.n == 0) throw std::invalid_argument("--n must be positive");
  bool all_within = true;
  for (unsigned trial = 0; trial < o.trials; ++trial) {
    Rng rng = Rng::substream(o.seed, trial);
    const std::size_t r = std::max<std::size_t>(1, o.n / 2);
    const ReprMatroid start = random_matroid(f, r, o.n, rng);

    PerturbChain chain(start);
    for (unsigned step = 0; step < o.k; ++step) {
      if (step % 2 == 0) {
        std::vector<std::uint32_t> row(o.n);
        for (auto& v : row) v = rng.below32(f->q());
        chain.lift(row);
      } else {
        std::vector<std::uint32_t> cov(chain.carrier_rows());
        for (auto& v : cov) v = rng.below32(f->q());
        chain.project(cov);
      }
    }

    const ReprMatroid end = chain.current();
    const DeviationReport dev = rank_deviation_check(start, end, o.k);
    if (!dev.within) {
      all_within = false;
      throw ContractViolation("rank deviation exceeded the step count",
                              matroid_to_json(start, "deviation counterexample"));
    }
    const DegradationReport deg = connectivity_degradation_check(start, end, o.k, o.t);
    const std::string conn = !deg.checked
                                 ? (deg.vacuous ? "vacuous" : "src-not-connected")
                                 : (deg.holds ? "holds" : "fails");
    std::cout << "trial=" << trial << " n=" << o.n << " k=" << o.k
              << " max_deviation=" << dev.max_deviation << " within=" << yn(dev.within)
              << " exhaustive=" << yn(dev.exhaustive) << " conn=" << conn << "\n";
  }
  std::cout << "trials=" << o.trials << " all_within=" << yn(all_within) << "\n";
}

void cmd_moore_check(const Opts& o) {
  const Multigraph g = graph_from_json(read_file(o.in));
  const MooreReport rep = moore_bound_check(g);
  std::cout << "n=" << rep.n << " avg_degree=" << format_double(rep.avg_degree)
            << " girth=" << rep.girth << " bound=" << format_double(rep.bound)
            << " holds=" << (rep.holds ? "true" : "false") << "\n";
  if (!rep.holds)
    throw ContractViolation("girth exceeds the degree bound", graph_to_json(g, "counterexample"));
}

// Injects values from a JSON config object as trailing flags, skipping any
// flag already present on the command line.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw std::invalid_argument("--config wants a file path");
      path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + i);
    } else {
      ++i;
    }
  }
  if (path.empty()) return args;

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must hold a json object");

  for (const auto& [key, value] : j.items()) {
    const std::string flag = "--" + key;
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given) continue;
    args.push_back(flag);
    args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  return args;
}

int run(int argc, char** argv) {
  CLI::App app{"exact finite-field codes, matroids and frame-graph searches"};
  app.require_subcommand(1);
  app.footer("--config FILE supplies defaults for any flag not given explicitly.\n"
             "MC_BUDGET overrides the default enumeration budget; --budget beats both.");

  Opts o;
  const auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget", o.budget_flag, "max candidates for exact enumeration")
        ->each([&](const std::string&) { o.budget_set = true; });
  };

  CLI::App* matroid = app.add_subcommand("matroid", "represented-matroid queries");
  matroid->require_subcommand(1);
  CLI::App* mi = matroid->add_subcommand("info", "sizes, rank and field");
  mi->add_option("--in", o.in, "matroid json")->required();
  mi->callback([&] { cmd_matroid_info(o); });
  CLI::App* mg = matroid->add_subcommand("girth", "shortest circuit and cocircuit");
  mg->add_option("--in", o.in, "matroid json")->required();
  add_budget(mg);
  mg->callback([&] { cmd_matroid_girth(o); });
  CLI::App* md = matroid->add_subcommand("dual", "dual matroid");
  md->add_option("--in", o.in, "matroid json")->required();
  md->add_option("--out", o.out, "output path (stdout if absent)");
  md->callback([&] { cmd_matroid_dual(o); });
  CLI::App* mv = matroid->add_subcommand("vconn", "vertical connectivity");
  mv->add_option("--in", o.in, "matroid json")->required();
  mv->add_option("--t", o.t, "connectivity order")->required();
  mv->callback([&] { cmd_matroid_vconn(o); });

  CLI::App* code = app.add_subcommand("code", "linear-code views");
  code->require_subcommand(1);
  CLI::App* cd = code->add_subcommand("dist", "exact minimum distance");
  cd->add_option("--in", o.in, "matroid json")->required();
  add_budget(cd);
  cd->callback([&] { cmd_code_dist(o); });
  CLI::App* cp = code->add_subcommand("puncture", "drop a coordinate");
  cp->add_option("--in", o.in, "matroid json")->required();
  cp->add_option("--at", o.at, "element id")->required();
  cp->add_option("--out", o.out, "output path (stdout if absent)");
  cp->callback([&] { cmd_code_puncture(o, false); });
  CLI::App* cs = code->add_subcommand("shorten", "restrict to zero at a coordinate");
  cs->add_option("--in", o.in, "matroid json")->required();
  cs->add_option("--at", o.at, "element id")->required();
  cs->add_option("--out", o.out, "output path (stdout if absent)");
  cs->callback([&] { cmd_code_puncture(o, true); });

  CLI::App* frame = app.add_subcommand("frame", "frame representations");
  frame->require_subcommand(1);
  CLI::App* fr = frame->add_subcommand("repr", "labelled-digraph form");
  fr->add_option("--in", o.in, "matroid json")->required();
  fr->add_option("--dot", o.dot, "dot output path");
  fr->add_option("--out", o.out, "frame-matrix json output path");
  fr->callback([&] { cmd_frame_repr(o); });

  CLI::App* cover = app.add_subcommand("cover", "tree-copy cover graphs");
  cover->require_subcommand(1);
  CLI::App* cb = cover->add_subcommand("build", "build and export the cover");
  cb->add_option("--in", o.in, "frame matrix json")->required();
  cb->add_option("--dot", o.dot, "dot output path");
  cb->callback([&] { cmd_cover_build(o); });

  CLI::App* gs = app.add_subcommand("goodness-scan", "rate/distance scan of random codes");
  gs->add_option("--field", o.field, "P or P^N");
  gs->add_option("--alpha", o.alpha, "rate, a rational in (0,1]")->required();
  gs->add_option("--beta", o.beta, "relative-distance floor in (0,1]")->required();
  gs->add_option("--nmax", o.nmax, "largest code length")->required();
  gs->add_option("--trials", o.trials, "codes per length")->required();
  gs->add_option("--seed", o.seed, "seed")->required();
  gs->add_option("--csv", o.csv, "csv output path (stdout if absent)");
  add_budget(gs);
  gs->callback([&] { cmd_goodness_scan(o); });

  CLI::App* fg = app.add_subcommand("frame-girth", "rank-deficient sets from cover cycles");
  fg->add_option("--field", o.field, "P or P^N");
  fg->add_option("--t", o.t, "cycles to project")->required();
  fg->add_option("--beta", o.beta, "density parameter in (0,1]")->required();
  fg->add_option("--trials", o.trials, "instances to generate")->required();
  fg->add_option("--seed", o.seed, "seed")->required();
  fg->add_option("--csv", o.csv, "csv output path (stdout if absent)");
  fg->callback([&] { cmd_frame_girth(o); });

  CLI::App* pd = app.add_subcommand("perturb-demo", "rank/connectivity drift of minor chains");
  pd->add_option("--field", o.field, "P or P^N");
  pd->add_option("--n", o.n, "ground-set size")->required();
  pd->add_option("--k", o.k, "elementary steps")->required();
  pd->add_option("--t", o.t, "source connectivity to probe")->required();
  pd->add_option("--trials", o.trials, "instances to generate")->required();
  pd->add_option("--seed", o.seed, "seed")->required();
  pd->callback([&] { cmd_perturb_demo(o); });

  CLI::App* mc = app.add_subcommand("moore-check", "girth vs average-degree bound");
  mc->add_option("--in", o.in, "graph json")->required();
  mc->callback([&] { cmd_moore_check(o); });

  std::vector<std::string> args = merge_config({argv + 1, argv + argc});
  std::vector<char*> cargs;
  cargs.push_back(argv[0]);
  for (auto& a : args) cargs.push_back(a.data());

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    if (!e.diagnostic().empty()) std::cerr << e.diagnostic() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
