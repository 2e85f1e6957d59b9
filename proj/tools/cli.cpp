// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "serialize.hpp"

namespace splitjac::cli {

namespace {

using io::Json;
using io::matrix_json;
using io::to_json;

struct SplitFlags {
  std::int64_t d = 0;
  std::int64_t k = 0;
  std::string lp, l;

  void add(CLI::App* cmd, bool lengths = true) {
    cmd->add_option("--d", d, "degree of the splitting")->required();
    cmd->add_option("--k", k, "gluing parameter, coprime to d")->required();
    if (lengths) {
      cmd->add_option("--lp", lp, "length of E' (rational)")->required();
      cmd->add_option("--l", l, "length of E (rational)")->required();
    }
  }
  SplittingData data() const { return {d, k, Rational::parse(lp), Rational::parse(l)}; }
};

struct FormFlags {
  std::string q11, q12, q22;

  void add(CLI::App* cmd) {
    cmd->add_option("--q11", q11)->required();
    cmd->add_option("--q12", q12)->required();
    cmd->add_option("--q22", q22)->required();
  }
  RatMat2 form() const {
    const Rational b = Rational::parse(q12);
    return rmat2(Rational::parse(q11), b, b, Rational::parse(q22));
  }
};

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(Rational::parse(item));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

Json curve_result(const RatMat2& q, std::size_t cap) {
  const SellingResult sel = reduce_to_sigma(q, cap);
  const FdResult fd = fd_representative(sel.reduced);
  ReductionWord word = sel.word;
  word.stab = fd.stab;
  const TropicalCurve curve = classify_curve(fd.qtilde);
  Json j = to_json(curve);
  j["qtilde"] = matrix_json(fd.qtilde);
  j["word"] = to_json(word);
  return j;
}

Json mumford_json(const TavMorphism& f, const IntMat& z1, const std::optional<IntMat>& s_prime) {
  const InductionSteps st = induction_steps(f, z1, s_prime);
  Json j{{"class", to_json(classify(f))},
         {"a", matrix_json(st.a)},
         {"b", matrix_json(st.b)},
         {"m", matrix_json(st.m)},
         {"inducible", is_integral(st.m)}};
  if (is_integral(st.m)) {
    const IntMat z2 = induce_polarization(f, z1, s_prime);
    j["zeta2"] = matrix_json(z2);
    j["type"] = Json::array();
    for (const Integer& a : polarization_type(z2)) j["type"].push_back(to_json(a));
    j["pullback"] = matrix_json(pullback_polarization(f, z2));
  } else {
    j["zeta2"] = nullptr;
  }
  return j;
}

Json adjoint_json(const TavMorphism& f, const IntMat& z1, const IntMat& z2) {
  const TavMorphism ft = adjoint(f, z1, z2);
  const TavMorphism both = compose(ft, f);
  return Json{{"adjoint", to_json(ft)},
              {"composite_msharp", matrix_json(both.msharp())},
              {"composite_mflat", matrix_json(both.mflat())}};
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for genus-2 tropical curves with d-split Jacobians", "splitjac"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::size_t cap = kDefaultIterationCap;
  std::optional<std::size_t> cone_cap;
  std::string format = "json";
  std::function<void()> action;
  const auto emit = [&](const Json& j) { out << j.dump(2) << "\n"; };

  SplitFlags sf;
  FormFlags ff;

  auto* setmatrix = app.add_subcommand("setmatrix", "sign-flipped Q^pp of splitting data");
  sf.add(setmatrix);
  setmatrix->callback([&] {
    action = [&] {
      const SplittingData sd = sf.data();
      const RatMat2 q = qpp(sd);
      emit(Json{{"input", to_json(sd)},
                {"q11", to_json(q(0, 0))},
                {"q12", to_json(q(0, 1))},
                {"q22", to_json(q(1, 1))},
                {"qpp", matrix_json(q)},
                {"det", to_json(det(q))}});
    };
  });

  auto* selling = app.add_subcommand("selling", "Selling reduction of a positive definite form");
  ff.add(selling);
  selling->add_option("--cap", cap, "iteration cap");
  selling->callback([&] {
    action = [&] {
      const RatMat2 q = ff.form();
      const SellingResult r = reduce_to_sigma(q, cap);
      emit(Json{{"params", to_json(selling_params(r.reduced))},
                {"word", to_json(r.word)},
                {"qreduced", matrix_json(r.reduced)}});
    };
  });

  auto* fd = app.add_subcommand("fd", "representative in the fundamental domain of a form in sigma");
  ff.add(fd);
  fd->callback([&] {
    action = [&] {
      const FdResult r = fd_representative(ff.form());
      emit(Json{{"qtilde", matrix_json(r.qtilde)}, {"stab", matrix_json(r.stab)}});
    };
  });

  auto* lengths = app.add_subcommand("lengths", "tropical curve whose period matrix is the given form");
  ff.add(lengths);
  lengths->add_option("--cap", cap, "iteration cap");
  lengths->callback([&] { action = [&] { emit(curve_result(ff.form(), cap)); }; });

  auto* reconstruct = app.add_subcommand("reconstruct", "full pipeline from splitting data to the curve");
  sf.add(reconstruct);
  reconstruct->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  reconstruct->add_option("--cap", cap, "iteration cap");
  reconstruct->callback([&] {
    action = [&] {
      const PipelineTrace t = torelli_preimage(sf.data(), cap);
      if (format == "csv") {
        out << io::trace_csv(t);
      } else {
        emit(to_json(t));
      }
    };
  });

  auto* covers = app.add_subcommand("covers", "the two degree-d covers of the reconstructed curve");
  sf.add(covers);
  covers->add_option("--cap", cap, "iteration cap");
  covers->callback([&] {
    action = [&] {
      const PipelineTrace t = torelli_preimage(sf.data(), cap);
      Json j = to_json(build_covers(t));
      j["curve"] = to_json(t.curve);
      emit(j);
    };
  });

  auto* diagram = app.add_subcommand("diagram", "the splitting diagram of J^pp");
  sf.add(diagram);
  diagram->callback([&] {
    action = [&] {
      const SplittingData sd = sf.data();
      Json j = to_json(build_diagram(sd));
      j["raw_phi"] = matrix_json(raw_phi(sd));
      j["raw_phitilde"] = matrix_json(raw_phitilde(sd));
      Json kernel = Json::array();
      for (const RatVec2& v : raw_kernel(sd)) kernel.push_back(Json::array({to_json(v(0)), to_json(v(1))}));
      j["kernel"] = kernel;
      const JppModel m = build_jpp(sd);
      j["zeta"] = matrix_json(m.zeta);
      j["gram"] = matrix_json(m.gram);
      emit(j);
    };
  });

  std::string input;
  std::int64_t md = 0, mk = 0;
  std::string mlp = "1", ml = "1";
  const auto add_model_flags = [&](CLI::App* cmd) {
    auto* in = cmd->add_option("--input", input, "JSON file with the morphism and polarizations");
    auto* dflag = cmd->add_option("--d", md);
    cmd->add_option("--k", mk)->needs(dflag);
    cmd->add_option("--lp", mlp);
    cmd->add_option("--l", ml);
    in->excludes(dflag);
    dflag->excludes(in);
  };

  auto* mumford = app.add_subcommand("mumford", "decide whether a polarization is induced along an isogeny");
  add_model_flags(mumford);
  mumford->callback([&] {
    action = [&] {
      if (!input.empty()) {
        const Json j = read_json_file(input);
        std::optional<IntMat> sp;
        if (j.contains("s_prime")) sp = io::int_matrix_from_json(j.at("s_prime"));
        emit(mumford_json(io::morphism_from_json(j.at("morphism")), io::int_matrix_from_json(j.at("z1")), sp));
      } else if (md != 0) {
        const JppModel m = build_jpp({md, mk, Rational::parse(mlp), Rational::parse(ml)});
        const IntMat dd = IntMat::Identity(2, 2) * Integer(md);
        Json j = mumford_json(m.q, dd, std::nullopt);
        j["morphism"] = to_json(m.q);
        emit(j);
      } else {
        throw Error(ErrorKind::ParseError, "mumford needs --input or --d/--k");
      }
    };
  });

  auto* adj = app.add_subcommand("adjoint", "adjoint of a morphism between principally polarized tavs");
  add_model_flags(adj);
  adj->callback([&] {
    action = [&] {
      if (!input.empty()) {
        const Json j = read_json_file(input);
        emit(adjoint_json(io::morphism_from_json(j.at("morphism")), io::int_matrix_from_json(j.at("z1")),
                          io::int_matrix_from_json(j.at("z2"))));
      } else if (md != 0) {
        const JppModel m = build_jpp({md, mk, Rational::parse(mlp), Rational::parse(ml)});
        Json j = adjoint_json(m.phi, m.sum.polarization(), m.jpp.polarization());
        j["morphism"] = to_json(m.phi);
        emit(j);
      } else {
        throw Error(ErrorKind::ParseError, "adjoint needs --input or --d/--k");
      }
    };
  });

  SplitFlags fan_flags;
  std::string csv_path;
  auto* fan = app.add_subcommand("fan", "the fan of reduction words on the length quadrant");
  fan_flags.add(fan, false);
  fan->add_option("--csv", csv_path, "also write ray directions and sample points to this CSV file");
  fan->add_option("--cap", cone_cap, "cone cap (default 64*d)");
  fan->callback([&] {
    action = [&] {
      const FanDelta f = build_fan(fan_flags.d, fan_flags.k, cone_cap);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw Error(ErrorKind::ParseError, "cannot write " + csv_path);
        csv << io::fan_csv(f);
      }
      emit(to_json(f));
    };
  });

  std::int64_t cd = 0, ck1 = 0, ck2 = 0;
  auto* compare = app.add_subcommand("locus-compare", "compare the images of two fans in the theta cell");
  compare->add_option("--d", cd)->required();
  compare->add_option("--k1", ck1)->required();
  compare->add_option("--k2", ck2)->required();
  compare->add_option("--cap", cone_cap, "cone cap (default 64*d)");
  compare->callback([&] {
    action = [&] {
      const FanDelta f1 = build_fan(cd, ck1, cone_cap), f2 = build_fan(cd, ck2, cone_cap);
      Json j{{"d", cd}, {"k1", ck1}, {"k2", ck2}};
      j.update(to_json(compare_images(f1, f2)));
      emit(j);
    };
  });

  SplitFlags sweep_flags;
  std::string sweep_format = "csv";
  auto* sweep = app.add_subcommand("sweep", "classify every point of a grid of lengths");
  sweep_flags.add(sweep, false);
  sweep->add_option("--lp", sweep_flags.lp, "comma-separated lengths of E'")->required();
  sweep->add_option("--l", sweep_flags.l, "comma-separated lengths of E")->required();
  sweep->add_option("--format", sweep_format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--cap", cap, "iteration cap");
  sweep->callback([&] {
    action = [&] {
      validate(SplittingData{sweep_flags.d, sweep_flags.k, 1, 1});
      const std::vector<Rational> lps = parse_list(sweep_flags.lp), ls = parse_list(sweep_flags.l);
      Json rows = Json::array();
      std::ostringstream csv;
      csv << "lp,l,type,lengths\n";
      for (const Rational& a : lps)
        for (const Rational& b : ls) {
          const PipelineTrace t = torelli_preimage({sweep_flags.d, sweep_flags.k, a, b}, cap);
          std::vector<std::string> lens;
          Json jl = Json::array();
          for (const Rational& r : io::curve_lengths(t.curve)) {
            lens.push_back(r.str());
            jl.push_back(to_json(r));
          }
          csv << a.str() << "," << b.str() << "," << io::curve_type(t.curve) << "," << io::join(lens, " ") << "\n";
          rows.push_back(Json{{"lp", to_json(a)}, {"l", to_json(b)}, {"type", io::curve_type(t.curve)}, {"lengths", jl}});
        }
      if (sweep_format == "csv") {
        out << csv.str();
      } else {
        emit(Json{{"d", sweep_flags.d}, {"k", sweep_flags.k}, {"rows", rows}});
      }
    };
  });

  std::vector<const char*> argv{"splitjac"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    action();
  } catch (const Error& e) {
    write_error(err, std::string(to_string(e.kind())), e.detail());
    return e.kind() == ErrorKind::ParseError ? kUsageError : kDomainError;
  } catch (const nlohmann::json::exception& e) {
    write_error(err, "ParseError", e.what());
    return kUsageError;
  }
  return kOk;
}

}  // namespace splitjac::cli
