// polyomino: exact counts, random generation and brute-force verification
// for convex polyominoes.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "polyomino/bijection.hpp"
#include "polyomino/counting.hpp"
#include "polyomino/json.hpp"
#include "polyomino/oracle.hpp"
#include "polyomino/sampler.hpp"
#include "polyomino/swalk.hpp"

namespace {

using namespace polyomino;

constexpr int kUsageError = 2;
constexpr int kMismatch = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_budget() {
  if (const char* env = std::getenv("POLYOMINO_BUDGET")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("POLYOMINO_BUDGET is not an integer: ") + env);
    }
  }
  return 8;
}

std::string fixed(double value, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << value;
  return os.str();
}

std::string fixed(const BigRational& value, int digits = 6) {
  // Exact rounding of a rational to `digits` places.
  BigCount scale = power(10, digits);
  BigCount scaled = (boost::multiprecision::numerator(value) * scale * 2 + boost::multiprecision::denominator(value)) /
                    (boost::multiprecision::denominator(value) * 2);
  std::string body = scaled.str();
  if (body.size() <= static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  return body;
}

std::string fraction(const BigRational& value) {
  return boost::multiprecision::numerator(value).str() + "/" + boost::multiprecision::denominator(value).str();
}

CountClass class_or_throw(const std::string& text) {
  if (auto c = parse_count_class(text)) {
    return *c;
  }
  throw UsageError("unknown class '" + text + "'");
}

// ---------------------------------------------------------------------------

struct Options {
  std::string klass = "convex";
  std::optional<int> width;
  std::optional<int> height;
  std::optional<int> perimeter;
  int order = 1;
  std::uint64_t n = 1;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100000;
  std::string format = "json";
  std::string out_dir;
  unsigned jobs = 1;
  bool trace = false;
  std::optional<int> max_semiperimeter;
  std::string columns;
  std::string code;
  std::string paths;
};

void require_box(const Options& o, const char* command) {
  if (!o.width || !o.height) {
    throw UsageError(std::string(command) + ": --width and --height are required");
  }
}

int run_count(const Options& o) {
  const CountClass c = class_or_throw(o.klass);
  if (o.perimeter) {
    if (o.width || o.height) {
      throw UsageError("count: use either --perimeter or --width/--height");
    }
    std::cout << count_perimeter(c, *o.perimeter) << '\n';
    return 0;
  }
  require_box(o, "count");
  std::cout << count(c, *o.width, *o.height) << '\n';
  return 0;
}

int run_moments(const Options& o) {
  require_box(o, "moments");
  if (o.order == 0) {
    std::cout << binomial_pair_sum(*o.width, *o.height) << '\n';
  } else {
    std::cout << moment(o.order, *o.width, *o.height) << '\n';
  }
  return 0;
}

std::string sample_json(const SampleReport& r) {
  nlohmann::json j = {{"polyomino", to_json(r.polyomino)},
                      {"attempts", r.attempts},
                      {"seed", r.seed},
                      {"stream", r.stream}};
  return j.dump();
}

int run_sample(const Options& o) {
  if (o.format != "json" && o.format != "ascii" && o.format != "svg") {
    throw UsageError("sample: --format must be json, ascii or svg");
  }
  if (o.format == "svg" && o.out_dir.empty()) {
    throw UsageError("sample: --format svg needs --out-dir");
  }
  const bool directed = o.klass == "directed";
  if (!directed && o.klass != "convex") {
    throw UsageError("sample: --class must be convex or directed");
  }
  if (o.perimeter && (directed || o.width || o.height)) {
    throw UsageError("sample: --perimeter applies to --class convex without --width/--height");
  }
  if (!o.perimeter) {
    require_box(o, "sample");
  }
  if (o.jobs == 0) {
    throw UsageError("sample: --jobs must be >= 1");
  }
  if (o.trace && !directed) {
    throw UsageError("sample: --trace is available for --class directed");
  }

  struct Item {
    std::optional<SampleReport> report;
    std::string trace;
  };
  std::vector<Item> items(o.n);
  auto work = [&](std::uint64_t i) {
    Rng rng(o.seed, i);
    if (o.perimeter) {
      items[i].report = sample_perimeter(*o.perimeter, rng);
    } else if (directed) {
      PathPair pair;
      std::vector<int> marks;
      items[i].report = sample_directed(*o.width, *o.height, rng, &pair, &marks);
      if (o.trace) {
        std::ostringstream os;
        os << "sample " << i << ": u=" << pair.first << " v=" << pair.second << " marks=";
        for (std::size_t k = 0; k < marks.size(); ++k) {
          os << (k ? "," : "") << marks[k];
        }
        items[i].trace = os.str();
      }
    } else {
      items[i].report = sample_convex(*o.width, *o.height, rng);
    }
  };
  const unsigned jobs = static_cast<unsigned>(std::min<std::uint64_t>(o.jobs, std::max<std::uint64_t>(o.n, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      for (std::uint64_t i = t; i < o.n; i += jobs) {
        work(i);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }

  if (o.format == "svg") {
    std::filesystem::create_directories(o.out_dir);
  }
  for (std::uint64_t i = 0; i < o.n; ++i) {
    const auto& r = *items[i].report;
    if (o.trace) {
      std::cerr << items[i].trace << '\n';
    }
    if (o.format == "json") {
      std::cout << sample_json(r) << '\n';
    } else if (o.format == "ascii") {
      std::cout << "# sample " << i << " attempts=" << r.attempts << '\n'
                << r.polyomino.render(RenderFormat::Ascii) << "\n\n";
    } else {
      std::ostringstream name;
      name << "sample_" << std::setw(6) << std::setfill('0') << i << ".svg";
      const auto path = std::filesystem::path(o.out_dir) / name.str();
      std::ofstream(path) << r.polyomino.render(RenderFormat::Svg);
      std::cout << path.string() << '\n';
    }
  }
  return 0;
}

int run_enumerate(const Options& o) {
  require_box(o, "enumerate");
  const int budget = o.max_semiperimeter.value_or(default_budget());
  Budget b{budget, budget, 5};
  if (o.klass == "swalk") {
    std::uint64_t total = 0;
    for_each_swalk_code(*o.width, *o.height, [&](const SWalkCode& code) {
      const ClosedWalk walk = decode(code);
      ++total;
      if (o.format == "json") {
        nlohmann::json j = {{"code", code.to_string()},
                            {"order", std::string(name(classify(walk)))},
                            {"self_intersecting", self_intersects(walk)}};
        std::cout << j.dump() << '\n';
      } else {
        std::cout << code.to_string() << ' ' << name(classify(walk)) << (self_intersects(walk) ? " crossing" : " simple")
                  << '\n';
      }
    });
    std::cerr << "total " << total << '\n';
    return 0;
  }
  const CountClass c = class_or_throw(o.klass);
  const auto report = enumerate_class(c, *o.width, *o.height, b, true);
  for (const auto& p : report.objects) {
    if (o.format == "json") {
      std::cout << to_json(p).dump() << '\n';
    } else if (o.format == "ascii") {
      std::cout << p.render(RenderFormat::Ascii) << "\n\n";
    } else {
      throw UsageError("enumerate: --format must be json or ascii");
    }
  }
  std::cerr << "total " << report.total << '\n';
  return 0;
}

int run_verify(const Options& o) {
  const int max_s = o.max_semiperimeter.value_or(default_budget());
  if (max_s < 2) {
    throw UsageError("verify: --max-semiperimeter must be >= 2");
  }
  const Budget budget{max_s, max_s, 5};
  bool all_match = true;
  std::cout << std::left << std::setw(26) << "class" << std::setw(4) << "w" << std::setw(4) << "h" << std::setw(14)
            << "formula" << std::setw(14) << "oracle"
            << "match\n";
  auto row = [&](const std::string& what, int w, int h, const BigCount& formula, const BigCount& oracle) {
    const bool ok = formula == oracle;
    all_match = all_match && ok;
    std::cout << std::setw(26) << what << std::setw(4) << w << std::setw(4) << h << std::setw(14) << formula.str()
              << std::setw(14) << oracle.str() << (ok ? "yes" : "NO") << '\n';
  };
  for (int s = 2; s <= max_s; ++s) {
    for (int w = 1; w < s; ++w) {
      const int h = s - w;
      BigCount convex = 0;
      BigCount directed = 0;
      BigCount parallelogram = 0;
      for (const auto& p : enumerate_convex_list(w, h, budget)) {
        const auto f = p.flags();
        ++convex;
        directed += f.directed;
        parallelogram += f.parallelogram;
      }
      row("convex", w, h, count(CountClass::Convex, w, h), convex);
      row("directed", w, h, count(CountClass::Directed, w, h), directed);
      row("parallelogram", w, h, count(CountClass::Parallelogram, w, h), parallelogram);
      const auto t = enumerate_swalks(w, h, budget);
      row("swalk", w, h, count(CountClass::SWalk, w, h), t.total);
      row("swalk-simple", w, h, count(CountClass::Convex, w, h), t.simple);
      row("self-intersecting-swalk", w, h, count(CountClass::SelfIntersectingSWalk, w, h), t.rising_intersecting);
    }
  }
  for (int w = 0; w <= 5; ++w) {
    for (int h = 0; h <= 5 && w + h <= max_s; ++h) {
      row("moment-1", w, h, moment(1, w, h), brute_moments(w, h, 1, budget));
      row("moment-2", w, h, moment(2, w, h), brute_moments(w, h, 2, budget));
      row("binomial-pair-sum", w, h, binomial_pair_sum(w, h), brute_pair_binomial_sum(w, h, budget));
    }
  }
  std::cout << (all_match ? "all match" : "MISMATCH") << '\n';
  return all_match ? 0 : kMismatch;
}

int run_bench(const Options& o) {
  if (o.perimeter && (o.width || o.height)) {
    throw UsageError("bench: use either --perimeter or --width/--height");
  }
  if (!o.perimeter) {
    require_box(o, "bench");
  }
  Rng rng(o.seed);
  const auto start = std::chrono::steady_clock::now();
  const EfficiencyStats stats =
      o.perimeter ? perimeter_efficiency(*o.perimeter, o.trials, rng) : efficiency(*o.width, *o.height, o.trials, rng);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "exact " << fraction(stats.exact) << " = " << fixed(stats.exact) << '\n';
  std::cout << "empirical " << stats.accepted << "/" << stats.trials << " = " << fixed(stats.empirical) << '\n';
  std::cout << "mean-attempts-exact " << fixed(BigRational(1) / stats.exact) << '\n';
  std::cout << "proposals-per-second " << fixed(seconds > 0 ? static_cast<double>(stats.trials) / seconds : 0.0, 0)
            << '\n';
  return 0;
}

int run_render(const Options& o) {
  const RenderFormat format = o.format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii;
  if (o.format != "ascii" && o.format != "svg" && o.format != "json") {
    throw UsageError("render: --format must be ascii, svg or json");
  }
  const int sources = !o.columns.empty() + !o.code.empty() + !o.paths.empty();
  if (sources != 1) {
    throw UsageError("render: give exactly one of --columns, --code, --paths");
  }
  std::optional<ConvexPolyomino> p;
  if (!o.columns.empty()) {
    p = polyomino_from_json(nlohmann::json::parse(o.columns));
  } else if (!o.code.empty()) {
    const ClosedWalk walk = decode(SWalkCode::parse(o.code));
    if (self_intersects(walk)) {
      std::cerr << "walk is self-intersecting (" << name(classify(walk)) << "); vertices:";
      for (const Point& v : walk.vertices) {
        std::cerr << ' ' << v;
      }
      std::cerr << '\n';
      return kMismatch;
    }
    p = to_polyomino(walk);
  } else {
    require_box(o, "render --paths");
    const auto comma = o.paths.find(',');
    if (comma == std::string::npos) {
      throw UsageError("render: --paths expects U,V");
    }
    std::vector<int> marks;
    p = pair_to_directed(MonotonePath::parse(o.paths.substr(0, comma)), MonotonePath::parse(o.paths.substr(comma + 1)),
                         *o.width, *o.height, &marks);
    if (o.trace) {
      std::cerr << "marks:";
      for (int z : marks) {
        std::cerr << ' ' << z;
      }
      std::cerr << '\n';
    }
  }
  if (o.format == "json") {
    std::cout << to_json(*p).dump() << '\n';
  } else {
    std::cout << p->render(format) << (format == RenderFormat::Ascii ? "\n" : "");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting and uniform random generation of convex polyominoes"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_class = [&](CLI::App* sub, const std::string& help) { sub->add_option("--class", o.klass, help); };
  auto add_box = [&](CLI::App* sub) {
    sub->add_option("--width,-w", o.width, "width of the bounding box")->check(CLI::NonNegativeNumber);
    sub->add_option("--height", o.height, "height of the bounding box")->check(CLI::NonNegativeNumber);
  };

  auto* count_cmd = app.add_subcommand("count", "exact count for a class");
  add_class(count_cmd, "convex|directed|parallelogram|swalk|self-intersecting-swalk|weak-directed-swalk");
  add_box(count_cmd);
  count_cmd->add_option("--perimeter,-s", o.perimeter, "semi-perimeter s (sum over w+h=s)");

  auto* moments_cmd = app.add_subcommand("moments", "sum of |U∩V|^order over ordered path pairs");
  add_box(moments_cmd);
  moments_cmd->add_option("--order", o.order, "1 or 2; 0 gives the sum of C(|U∩V|+1,2)")
      ->check(CLI::Range(0, 2));

  auto* sample_cmd = app.add_subcommand("sample", "uniform random polyominoes");
  add_class(sample_cmd, "convex|directed");
  add_box(sample_cmd);
  sample_cmd->add_option("--perimeter,-s", o.perimeter, "sample by semi-perimeter instead of box (convex only)");
  sample_cmd->add_option("--n", o.n, "number of samples");
  sample_cmd->add_option("--seed", o.seed, "64-bit seed");
  sample_cmd->add_option("--format", o.format, "json|ascii|svg");
  sample_cmd->add_option("--out-dir", o.out_dir, "directory for svg files");
  sample_cmd->add_option("--jobs,-j", o.jobs, "worker threads (output does not depend on it)");
  sample_cmd->add_flag("--trace", o.trace, "print the path pair and untangling marks to stderr");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list every object of a class");
  add_class(enumerate_cmd, "convex|directed|parallelogram|swalk");
  add_box(enumerate_cmd);
  enumerate_cmd->add_option("--format", o.format, "json|ascii");
  enumerate_cmd->add_option("--max-semiperimeter", o.max_semiperimeter, "enumeration budget");

  auto* verify_cmd = app.add_subcommand("verify", "compare closed forms against brute force");
  verify_cmd->add_option("--max-semiperimeter", o.max_semiperimeter, "largest w+h checked");

  auto* bench_cmd = app.add_subcommand("bench", "exact and measured rejection efficiency");
  add_box(bench_cmd);
  bench_cmd->add_option("--perimeter,-s", o.perimeter, "semi-perimeter for the perimeter sampler");
  bench_cmd->add_option("--trials", o.trials, "number of proposals");
  bench_cmd->add_option("--seed", o.seed, "64-bit seed");

  auto* render_cmd = app.add_subcommand("render", "draw a polyomino");
  render_cmd->add_option("--columns", o.columns, "JSON {\"width\",\"height\",\"columns\"}");
  render_cmd->add_option("--code", o.code, "S-walk code, e.g. \"w=2 h=2 a=0 HVHV\"");
  render_cmd->add_option("--paths", o.paths, "path pair U,V for a directed polyomino");
  add_box(render_cmd);
  render_cmd->add_option("--format", o.format, "ascii|svg|json")->default_val("ascii");
  render_cmd->add_flag("--trace", o.trace, "print untangling marks to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*count_cmd) return run_count(o);
    if (*moments_cmd) return run_moments(o);
    if (*sample_cmd) return run_sample(o);
    if (*enumerate_cmd) return run_enumerate(o);
    if (*verify_cmd) return run_verify(o);
    if (*bench_cmd) return run_bench(o);
    if (*render_cmd) return run_render(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise with --max-semiperimeter or POLYOMINO_BUDGET)\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
