#include "rees/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rees/cli/instance.hpp"
#include "rees/errors.hpp"
#include "rees/generators.hpp"
#include "rees/oracle.hpp"

namespace rees::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::string field;
  std::string file;
  int m = 0;
  int xdeg = 0;
  bool trim = false;
  bool almost_linear = false;
  int rows = 0;
  int min_x = 0;
  int max_x = 0;
  int max_t = 0;
  std::string what = "mingens";
  std::string count = "ideal";
  std::string saturation = "colon";
  int seeds = 0;
  int n = 3;
  std::string degrees;
  std::uint64_t seed = 0;
  std::string out_file;
};

FieldSpec parse_field(const std::string& s) {
  if (s == "QQ" || s == "qq" || s == "rational") return FieldSpec::rational();
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      s.size() > 10)
    throw ValidationError("--field: expected a prime or QQ, got '" + s + "'");
  auto p = std::stoull(s);
  if (p > 0x7fffffffULL) throw ValidationError("--field: prime must be below 2^31");
  return FieldSpec::prime(static_cast<std::uint32_t>(p));
}

std::vector<int> parse_degrees(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError("--degrees: '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw ValidationError("--degrees: empty list");
  return out;
}

template <class Fn>
int with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::Rational) return fn(RationalField{});
  return fn(PrimeField(spec.p));
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

json table_json(const BidegreeTable& t) {
  json counts = json::array();
  for (const auto& [b, c] : t.counts) counts.push_back({{"x", b.first}, {"t", b.second}, {"count", c}});
  return {{"separator", t.separator}, {"total", t.total()}, {"counts", counts}};
}

template <class K>
json record_json(const GeneratorRecord<K>& r, int m) {
  return {{"m", m},
          {"provenance", to_string(r.provenance)},
          {"label", r.label},
          {"alpha", r.alpha},
          {"bidegree", {r.bidegree.first, r.bidegree.second}},
          {"poly", r.poly.to_string()},
          {"certified", r.certified}};
}

template <class K>
void print_records(const std::vector<GeneratorRecord<K>>& recs, int m, const Options& o,
                   json& acc, std::ostream& out) {
  for (const auto& r : recs) {
    if (o.json) {
      acc.push_back(record_json(r, m));
      continue;
    }
    out << "m=" << m << "  " << r.label << "  (" << r.bidegree.first << "," << r.bidegree.second
        << ")  " << (r.certified ? "certified" : "uncertified") << "  " << r.poly.to_string()
        << "\n";
  }
}

int require_m(int m, int hi, const char* what) {
  if (m < 1 || m > hi)
    throw ValidationError(std::string(what) + ": -m must lie in [1, " + std::to_string(hi) +
                          "], got " + std::to_string(m));
  return m;
}

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

template <class K>
std::vector<Check> run_checks(const PresentationInput<K>& in) {
  std::vector<Check> out;
  auto g = sym_equations(in);
  const int n = in.n;
  int partial = 0;
  for (int m = 1; m <= n - 1; ++m) {
    partial += in.degrees[static_cast<std::size_t>(m - 1)];
    auto sig = sigma_invariants(in.phi, m);
    int sum = 0;
    for (int v : sig.sigma) sum += v;
    out.push_back({"sigma sum m=" + std::to_string(m), sum == partial && sig.s == n - m,
                   "sum " + std::to_string(sum) + ", expected " + std::to_string(partial) +
                       "; s = " + std::to_string(sig.s)});
  }

  std::vector<std::pair<std::string, Poly<K>>> emitted;
  for (int m = 1; m <= n - 2; ++m) {
    auto level = build_level(in, m);
    auto recs = recursion_generators(level, g[static_cast<std::size_t>(m)]);
    std::size_t good = 0;
    for (const auto& r : recs) {
      if (r.certified) ++good;
      emitted.emplace_back("m=" + std::to_string(m) + " " + r.label, r.poly);
    }
    out.push_back({"certificates m=" + std::to_string(m), good == recs.size(),
                   std::to_string(good) + "/" + std::to_string(recs.size()) + " certified"});
    bool surj = true;
    for (std::size_t i = 0; i < level.p.size(); ++i) surj = surj && wmult_surjective(level, in, i);
    out.push_back({"wmult m=" + std::to_string(m), surj, std::to_string(level.p.size()) + " rows"});
  }

  auto ideal = saturate_m(buchberger(g));
  if (n == 3) {
    int d1 = in.degrees[0], d2 = in.degrees[1];
    auto H = hilbert_FE(build_level(in, 1), in);
    bool ok = true;
    for (int i = -1; i <= d1 - 1; ++i) ok = ok && H(i) == d1 - i - 1;
    out.push_back({"hilbert F/E", ok, "i in [-1, " + std::to_string(d1 - 1) + "]"});

    bool cover = true;
    std::string where;
    for (int i = d1 - 1; i <= d2; ++i) {
      auto recs = slice_generators(in, i);
      std::vector<Poly<K>> polys;
      for (const auto& r : recs) {
        polys.push_back(r.poly);
        emitted.emplace_back("slice " + std::to_string(i) + " " + r.label, r.poly);
      }
      for (int j = 0; j <= d2; ++j) {
        auto a = u_span_dim(polys, in.s_ring, {i, j});
        auto b = ideal_piece_basis(ideal, in.s_ring, {i, j}).size();
        if (a != b && cover) {
          cover = false;
          where = "(" + std::to_string(i) + "," + std::to_string(j) + "): " + std::to_string(a) +
                  " vs " + std::to_string(b);
        }
      }
    }
    out.push_back({"slice coverage", cover,
                   cover ? "x in [" + std::to_string(d1 - 1) + ", " + std::to_string(d2) + "]"
                         : where});
  }

  std::size_t members = 0;
  std::string first_bad;
  for (const auto& [label, p] : emitted) {
    if (normal_form(p, ideal).is_zero())
      ++members;
    else if (first_bad.empty())
      first_bad = label;
  }
  out.push_back({"oracle membership", members == emitted.size(),
                 std::to_string(members) + "/" + std::to_string(emitted.size()) +
                     (first_bad.empty() ? "" : ", first failure " + first_bad)});
  return out;
}

json checks_json(const std::vector<Check>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return a;
}

bool all_ok(const std::vector<Check>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.ok; });
}

template <class K>
int run_file_command(const std::string& cmd, const Options& o, const InstanceFile& inst,
                     const FieldSpec& spec, const K& F, std::ostream& out) {
  auto in = to_input(inst, F);
  const int n = in.n;

  if (cmd == "info") {
    std::vector<std::string> minors;
    for (const auto& f : in.minors) minors.push_back(f.to_string());
    if (o.json) {
      out << json{{"field", spec.describe()}, {"n", n}, {"col_degrees", in.degrees},
                  {"minors", minors}, {"height_two", true}}.dump(2)
          << "\n";
      return 0;
    }
    out << "field    " << spec.describe() << "\n"
        << "n        " << n << "\n"
        << "degrees  " << join(in.degrees, " ") << "\n";
    for (std::size_t i = 0; i < minors.size(); ++i)
      out << "f" << i + 1 << " = " << minors[i] << "\n";
    out << "height two: yes\n";
    return 0;
  }

  if (cmd == "sigmas") {
    std::vector<int> ms;
    if (o.m)
      ms.push_back(require_m(o.m, n - 1, "sigmas"));
    else
      for (int m = 1; m <= n - 1; ++m) ms.push_back(m);
    json acc = json::array();
    for (int m : ms) {
      auto s = sigma_invariants(in.phi, m);
      if (o.json)
        acc.push_back({{"m", m}, {"sigma", s.sigma}, {"r", s.r}, {"s", s.s}});
      else
        out << "m=" << m << "  sigma=(" << join(s.sigma, ",") << ")  r=" << s.r << "  s=" << s.s
            << "\n";
    }
    if (o.json) out << acc.dump(2) << "\n";
    return 0;
  }

  if (cmd == "bidegrees") {
    if (n < 3) throw ValidationError("bidegrees: needs n >= 3");
    auto sigma = sigma_invariants(in.phi, n - 2);
    auto table = bidegree_table(in.degrees, sigma);
    if (o.json) {
      auto j = table_json(table);
      j["sigma"] = sigma.sigma;
      out << j.dump(2) << "\n";
    } else {
      out << "d = (" << join(in.degrees, ",") << "), sigma = (" << join(sigma.sigma, ",")
          << ")\n"
          << table.render(o.rows);
    }
    return 0;
  }

  if (cmd == "generators") {
    json acc = json::array();
    auto g = sym_equations(in);
    if (o.almost_linear) {
      print_records(almost_linear_generators(in), n - 2, o, acc, out);
    } else {
      std::vector<int> ms;
      if (o.m)
        ms.push_back(require_m(o.m, n - 2, "generators"));
      else
        for (int m = 1; m <= n - 2; ++m) ms.push_back(m);
      for (int m : ms) {
        auto level = build_level(in, m);
        print_records(recursion_generators(level, g[static_cast<std::size_t>(m)]), m, o, acc, out);
      }
    }
    if (o.json) out << acc.dump(2) << "\n";
    return 0;
  }

  if (cmd == "slice") {
    auto recs = slice_generators(in, o.xdeg);
    if (o.trim) recs = trim_slice(recs, o.xdeg);
    json acc = json::array();
    print_records(recs, 1, o, acc, out);
    if (o.json) out << acc.dump(2) << "\n";
    return 0;
  }

  if (cmd == "scroll") {
    int m = o.m ? require_m(o.m, n - 1, "scroll") : n - 2;
    auto sigma = sigma_invariants(in.phi, m);
    auto sm = scroll_matrix(F, sigma);
    std::vector<std::vector<std::string>> gamma;
    for (const auto& row : sm.gamma) {
      gamma.emplace_back();
      for (const auto& e : row) gamma.back().push_back(e.to_string());
    }
    std::vector<std::string> minors;
    for (const auto& f : sm.minors) minors.push_back(f.to_string());
    if (o.json) {
      out << json{{"m", m}, {"sigma", sigma.sigma}, {"gamma", gamma}, {"minors", minors}}.dump(2)
          << "\n";
      return 0;
    }
    out << "sigma = (" << join(sigma.sigma, ",") << ")\n";
    for (const auto& row : gamma) {
      out << "[";
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? ", " : "") << row[j];
      out << "]\n";
    }
    for (const auto& f : minors) out << f << "\n";
    return 0;
  }

  if (cmd == "oracle") {
    auto method = o.saturation == "rabinowitsch" ? SaturationMethod::Rabinowitsch
                                                 : SaturationMethod::IteratedColon;
    auto ideal = saturate_m(buchberger(sym_equations(in)), method);
    BidegreeWindow w{o.min_x, o.max_x, 0, o.max_t};
    if (o.what == "hilbert") {
      auto h = bigraded_hilbert(ideal, w);
      if (o.json) {
        json acc = json::array();
        for (const auto& [b, d] : h) acc.push_back({{"x", b.first}, {"t", b.second}, {"dim", d}});
        out << acc.dump(2) << "\n";
        return 0;
      }
      for (int t = o.max_t; t >= 0; --t) {
        out << t << " |";
        for (int x = o.min_x; x <= o.max_x; ++x) out << " " << h[{x, t}];
        out << "\n";
      }
      return 0;
    }
    if (o.what == "mingens") {
      auto mode = o.count == "slice" ? GeneratorCount::Slice : GeneratorCount::Ideal;
      auto table = minimal_generator_bidegrees(ideal, w, mode);
      if (o.json)
        out << table_json(table).dump(2) << "\n";
      else
        out << "basis size " << ideal.gens.size() << "\n" << table.render(o.max_t, o.max_x + 1);
      return 0;
    }
    // membership
    auto g = sym_equations(in);
    json acc = json::array();
    bool ok = true;
    auto report = [&](const std::string& label, const Poly<K>& p) {
      bool member = normal_form(p, ideal).is_zero();
      ok = ok && member;
      if (o.json)
        acc.push_back({{"label", label}, {"member", member}});
      else
        out << (member ? "member      " : "NOT MEMBER  ") << label << "\n";
    };
    for (int m = 1; m <= n - 2; ++m)
      for (const auto& r : recursion_generators(build_level(in, m), g[static_cast<std::size_t>(m)]))
        report("m=" + std::to_string(m) + " " + r.label, r.poly);
    if (n == 3)
      for (int i = in.degrees[0] - 1; i <= in.degrees[1]; ++i)
        for (const auto& r : slice_generators(in, i))
          report("slice " + std::to_string(i) + " " + r.label, r.poly);
    if (o.json) out << acc.dump(2) << "\n";
    return ok ? 0 : 2;
  }

  if (cmd == "check") {
    json acc = json::array();
    bool ok = true;
    auto emit = [&](const std::string& title, const std::vector<Check>& cs) {
      ok = ok && all_ok(cs);
      if (o.json) {
        acc.push_back({{"instance", title}, {"checks", checks_json(cs)}});
        return;
      }
      out << title << "\n";
      for (const auto& c : cs)
        out << "  " << (c.ok ? "PASS " : "FAIL ") << c.name << "  (" << c.detail << ")\n";
    };
    emit(o.file, run_checks(in));
    for (int s = 1; s <= o.seeds; ++s) {
      auto r = random_instance(n, in.degrees, static_cast<std::uint64_t>(s), spec);
      emit("random seed " + std::to_string(s), run_checks(to_input(r, F)));
    }
    if (o.json) out << json{{"ok", ok}, {"instances", acc}}.dump(2) << "\n";
    else out << (ok ? "all checks passed\n" : "some checks FAILED\n");
    return ok ? 0 : 2;
  }
  throw InternalError("unhandled command " + cmd);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rees algebra equations of height two ideals in k[x0,x1]", "rees"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--field", o.field, "Coefficient field: a prime p or QQ (default: from the file)");

  auto file_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", o.file, "Instance JSON")->required()->check(CLI::ExistingFile);
    return c;
  };
  file_cmd("info", "Degrees, minors and the height check");
  file_cmd("sigmas", "Sigma invariants of the tower")->add_option("-m", o.m, "Level (default all)");
  file_cmd("bidegrees", "Bidegrees of minimal generators in x-degree >= d_{n-2}")
      ->add_option("--rows", o.rows, "Draw at least this many T-degree rows");
  auto* gen = file_cmd("generators", "Recursive generators with substitution certificates");
  gen->add_option("-m", o.m, "Level (default all up to n-2)");
  gen->add_flag("--almost-linear", o.almost_linear, "Complete description when d_1..d_{n-2} = 1");
  auto* slice = file_cmd("slice", "Generators of one x-degree slice (n = 3)");
  slice->add_option("--xdeg", o.xdeg, "x-degree i >= d1 - 1")->required();
  slice->add_flag("--trim", o.trim, "Drop records in the span of the others");
  file_cmd("scroll", "Scroll matrix and its 2x2 minors")
      ->add_option("-m", o.m, "Level (default n-2)");
  auto* orc = file_cmd("oracle", "Groebner basis computations on the saturated ideal");
  orc->add_option("--min-x", o.min_x, "Smallest x-degree");
  orc->add_option("--max-x", o.max_x, "Largest x-degree")->required();
  orc->add_option("--max-t", o.max_t, "Largest T-degree")->required();
  orc->add_option("--what", o.what, "hilbert, mingens or membership")
      ->check(CLI::IsMember({"hilbert", "mingens", "membership"}));
  orc->add_option("--count", o.count, "ideal or slice generators")
      ->check(CLI::IsMember({"ideal", "slice"}));
  orc->add_option("--saturation", o.saturation, "colon or rabinowitsch")
      ->check(CLI::IsMember({"colon", "rabinowitsch"}));
  file_cmd("check", "Run all consistency checks")
      ->add_option("--seeds", o.seeds, "Also check this many random instances of the same shape");
  auto* rnd = app.add_subcommand("random", "Random instance");
  rnd->add_option("--n", o.n, "Number of generators")->required();
  rnd->add_option("--degrees", o.degrees, "Column degrees, comma separated")->required();
  rnd->add_option("--seed", o.seed, "Seed")->required();
  rnd->add_option("--out", o.out_file, "Write here instead of stdout");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    auto* sub = app.get_subcommands().front();
    std::string cmd = sub->get_name();
    if (cmd == "random") {
      auto spec = o.field.empty() ? default_field() : parse_field(o.field);
      auto inst = random_instance(o.n, parse_degrees(o.degrees), o.seed, spec);
      if (o.out_file.empty())
        out << to_json(inst).dump(2) << "\n";
      else
        save_instance(inst, o.out_file);
      return 0;
    }
    auto inst = load_instance(o.file);
    auto spec = o.field.empty() ? inst.field : parse_field(o.field);
    inst.field = spec;
    return with_field(spec, [&](const auto& F) { return run_file_command(cmd, o, inst, spec, F, out); });
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace rees::cli
