#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "qmoon/borcherds.hpp"
#include "qmoon/classical_forms.hpp"
#include "qmoon/error.hpp"
#include "qmoon/exponents.hpp"
#include "qmoon/identities.hpp"
#include "qmoon/maass.hpp"
#include "qmoon/monster.hpp"
#include "qmoon/report.hpp"
#include "qmoon/root_mult.hpp"
#include "qmoon/series_json.hpp"
#include "qmoon/vector_systems.hpp"

namespace qmoon::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t default_order() {
  const char* env = std::getenv("QMOON_DEFAULT_ORDER");
  if (env == nullptr || *env == '\0') return 10;
  char* end = nullptr;
  const long long value = std::strtoll(env, &end, 10);
  if (*end != '\0' || value < 0) throw UsageError("QMOON_DEFAULT_ORDER must be a nonnegative integer");
  return value;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("'" + path + "' is not valid JSON: " + e.what());
  }
}

vsys::RatVec parse_ratvec(const std::string& text) {
  vsys::RatVec out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(parse_rational(part));
  if (out.empty()) throw UsageError("empty vector '" + text + "'");
  return out;
}

void print(std::ostream& out, const Json& json) { out << json.dump(2) << '\n'; }

int report_exit(const VerifyReport& r) { return r.passed ? kExitOk : kExitMismatch; }

int emit_report(const VerifyReport& r, bool json, std::ostream& out) {
  if (json) {
    print(out, to_json(r));
  } else {
    out << format_report(r) << '\n';
  }
  return report_exit(r);
}

QSeries expand_form(const std::string& name, std::int64_t order, std::ostream& err) {
  const auto& cat = borcherds::catalog_names();
  if (std::find(cat.begin(), cat.end(), name) != cat.end()) {
    auto form = borcherds::catalog(name, order);
    for (const auto& note : form.notes) err << "note: " << note << '\n';
    return form.form.series;
  }
  if (name.rfind("eta:", 0) == 0) return forms::eta_quotient(forms::EtaShape::parse(name.substr(4)), order);
  return forms::by_name(name, order);
}

std::string text_table(const ExponentTable& t) {
  std::ostringstream out;
  out << "h = " << to_string(t.leading_power) << '\n';
  for (std::int64_t n = 1; n <= t.order(); ++n) out << "c(" << n << ") = " << to_string(t.at(n)) << '\n';
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series engine for moonshine-style product identities", "qmoon"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit machine-readable JSON");

  std::function<int()> action;
  std::int64_t order = -1;
  const auto order_option = [&](CLI::App* sub) {
    sub->add_option("--order", order, "Truncation order (default from QMOON_DEFAULT_ORDER, else 10)")
        ->check(CLI::NonNegativeNumber);
  };
  const auto resolved_order = [&] { return order >= 0 ? order : default_order(); };

  // expand
  std::string form_name;
  std::string nome_text;
  auto* expand = app.add_subcommand("expand", "Expand a named form");
  expand->add_option("form", form_name, "Form name (E4, delta, j, theta3, f_4, eta:1^8 2^8, ...)")->required();
  order_option(expand);
  expand->add_option("--nome", nome_text, "Convert output to this nome (full or half)");
  expand->callback([&] {
    action = [&] {
      QSeries s = expand_form(form_name, resolved_order(), err);
      if (!nome_text.empty()) {
        const Nome want = parse_nome(nome_text);
        if (want != s.nome()) {
          if (want != Nome::half) throw ConventionError("a half-nome series cannot be rewritten in the full nome");
          s = full_to_half(s);
        }
      }
      if (json) {
        print(out, to_json(s));
      } else {
        out << format_series(s) << '\n';
      }
      return kExitOk;
    };
  });

  // factor
  std::string input_path;
  auto* factor = app.add_subcommand("factor", "Extract product exponents from a series file");
  factor->add_option("--input", input_path, "Series JSON file")->required();
  order_option(factor);
  factor->callback([&] {
    action = [&] {
      const QSeries s = qseries_from_json(read_json_file(input_path));
      const ExponentTable t = exponents_from_series(s, resolved_order());
      if (json) {
        print(out, to_json(t));
      } else {
        out << text_table(t);
      }
      return kExitOk;
    };
  });

  // verify
  std::string identity;
  auto* verify = app.add_subcommand("verify", "Verify a named identity (or 'all')");
  verify->add_option("identity", identity, "Identity label")->required();
  order_option(verify);
  verify->callback([&] {
    action = [&] {
      if (identity != "all") return emit_report(identities::verify(identity, resolved_order()), json, out);
      const auto reports = identities::verify_all(resolved_order());
      bool ok = true;
      Json arr = Json::array();
      for (const auto& r : reports) {
        ok = ok && r.passed;
        if (json) {
          arr.push_back(to_json(r));
        } else {
          out << format_report(r) << '\n';
        }
      }
      if (json) print(out, arr);
      return ok ? kExitOk : kExitMismatch;
    };
  });

  // lift
  std::string lift_name;
  auto* lift = app.add_subcommand("lift", "Borcherds lift of a catalog form");
  lift->add_option("--name", lift_name, "Catalog form (f_delta, f_j, f_4, f_6, f_8, f_10, f_14)")->required();
  order_option(lift);
  lift->callback([&] {
    action = [&] {
      const std::int64_t n = resolved_order();
      const auto form = borcherds::catalog(lift_name, n * n);
      const auto result = borcherds::lift(form.form, n);
      if (json) {
        Json j;
        j["name"] = lift_name;
        j["h"] = to_string(result.h);
        j["exponents"] = to_json(result.table);
        j["series"] = to_json(result.result);
        j["notes"] = form.notes;
        print(out, j);
      } else {
        for (const auto& note : form.notes) out << "note: " << note << '\n';
        out << text_table(result.table) << format_series(result.result) << '\n';
      }
      return kExitOk;
    };
  });

  // hurwitz
  std::int64_t hurwitz_max = 20;
  auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz class numbers H(0..N)");
  hurwitz->add_option("--max", hurwitz_max, "Largest n")->check(CLI::NonNegativeNumber);
  hurwitz->callback([&] {
    action = [&] {
      const auto table = borcherds::hurwitz_table(hurwitz_max);
      if (json) {
        Json j = Json::object();
        for (const auto& [n, h] : table) j[std::to_string(n)] = to_string(h);
        print(out, j);
      } else {
        for (const auto& [n, h] : table) out << "H(" << n << ") = " << to_string(h) << '\n';
      }
      return kExitOk;
    };
  });

  // zeromult
  std::string zm_name;
  std::int64_t disc = 0;
  auto* zeromult = app.add_subcommand("zeromult", "Zero multiplicity of a lift at a CM discriminant");
  zeromult->add_option("--name", zm_name, "Catalog form")->required();
  zeromult->add_option("--disc", disc, "Negative discriminant D")->required();
  zeromult->callback([&] {
    action = [&] {
      const std::int64_t need = std::max<std::int64_t>(1, -disc) * 4;
      const auto form = borcherds::catalog(zm_name, need);
      const BigInt mult = borcherds::zero_multiplicity(form.form, disc);
      if (json) {
        print(out, Json{{"name", zm_name}, {"disc", disc}, {"multiplicity", mult.get_str()}});
      } else {
        out << mult.get_str() << '\n';
      }
      return kExitOk;
    };
  });

  // moonshine
  std::int64_t cap = 4;
  std::int64_t cap_n = -1;
  auto* moonshine = app.add_subcommand("moonshine", "Monster denominator and replication checks");
  moonshine->require_subcommand(1);
  auto* denom = moonshine->add_subcommand("denom", "Denominator identity for g = 1");
  denom->add_option("--cap", cap, "Cap on p-degree (and q-degree)")->check(CLI::PositiveNumber);
  denom->add_option("--cap-n", cap_n, "Separate cap on q-degree")->check(CLI::PositiveNumber);
  denom->callback([&] {
    action = [&] { return emit_report(monster::denominator_check(cap, cap_n > 0 ? cap_n : cap), json, out); };
  });
  auto* repl = moonshine->add_subcommand("replication", "Replication identity for g = 1");
  repl->add_option("--cap", cap, "Degree cap")->check(CLI::PositiveNumber);
  repl->callback([&] { action = [&] { return emit_report(monster::replication_check(cap), json, out); }; });

  // vsys
  std::string vsys_file;
  std::string vsys_sample;
  std::string lambda_text;
  std::string shift_text;
  auto* vsys_cmd = app.add_subcommand("vsys", "Vector systems");
  vsys_cmd->require_subcommand(1);
  const auto system_options = [&](CLI::App* sub) {
    auto* f = sub->add_option("--file", vsys_file, "Vector system JSON");
    auto* s = sub->add_option("--sample", vsys_sample, "Shipped sample (s1, trivial, s2)");
    f->excludes(s);
    sub->add_option("--lambda", lambda_text, "Chamber vector, comma separated");
    order_option(sub);
  };
  const auto load_system = [&] {
    if (vsys_file.empty() && vsys_sample.empty()) throw UsageError("give --file or --sample");
    const vsys::VectorSystem v = vsys_file.empty() ? vsys::sample(vsys_sample)
                                                    : vsys::from_json(read_json_file(vsys_file));
    const auto valid = vsys::validate(v);
    if (!valid.valid) throw Error("invalid vector system: " + valid.problems.front());
    return v;
  };
  const auto chamber = [&](const vsys::VectorSystem& v) {
    return lambda_text.empty() ? vsys::choose_chamber_vector(v) : parse_ratvec(lambda_text);
  };
  auto* psi_cmd = vsys_cmd->add_subcommand("psi", "Expand psi(tau, z)");
  system_options(psi_cmd);
  psi_cmd->callback([&] {
    action = [&] {
      const auto v = load_system();
      const auto lambda = chamber(v);
      const auto w = vsys::weyl_data(v, lambda);
      const auto ps = vsys::psi(v, lambda, resolved_order());
      if (json) {
        Json j;
        Json rho = Json::array();
        for (const auto& x : w.rho) rho.push_back(to_string(x));
        j["rho"] = rho;
        j["d"] = w.d;
        j["k"] = to_string(w.k);
        j["m"] = to_string(w.m);
        j["psi"] = vsys::to_json(ps);
        print(out, j);
      } else {
        out << "d = " << w.d << ", k = " << to_string(w.k) << ", m = " << to_string(w.m) << ", rho = (";
        for (std::size_t i = 0; i < w.rho.size(); ++i) out << (i ? "," : "") << to_string(w.rho[i]);
        out << ")\nq^(" << to_string(ps.prefactor) << ") * [\n";
        for (const auto& [key, c] : ps.coeffs) {
          out << "  " << to_string(c) << " q^" << key.first << " zeta^(";
          for (std::size_t i = 0; i < key.second.size(); ++i) {
            out << (i ? "," : "") << to_string(make_rational(key.second[i], 2));
          }
          out << ")\n";
        }
        out << "  + O(q^" << ps.trunc + 1 << ")\n]\n";
      }
      return kExitOk;
    };
  });
  auto* check_cmd = vsys_cmd->add_subcommand("check", "Elliptic transformation laws for a shift vector");
  system_options(check_cmd);
  check_cmd->add_option("--shift", shift_text, "Shift vector, comma separated rationals")->required();
  check_cmd->callback([&] {
    action = [&] {
      const auto v = load_system();
      return emit_report(vsys::elliptic_transform_check(v, chamber(v), parse_ratvec(shift_text), resolved_order()),
                         json, out);
    };
  });

  // maass
  std::string maass_file;
  std::int64_t max_m = 3;
  auto* maass_cmd = app.add_subcommand("maass", "Maass lift of Jacobi coefficient tables");
  maass_cmd->require_subcommand(1);
  auto* mlift = maass_cmd->add_subcommand("lift", "Assemble Siegel coefficients from an index-1 table");
  mlift->add_option("--file", maass_file, "Jacobi table JSON")->required();
  mlift->add_option("--max-m", max_m, "Largest Fourier-Jacobi index")->check(CLI::PositiveNumber);
  mlift->callback([&] {
    action = [&] {
      const auto s = maass::assemble_maass(maass::jacobi_from_json(read_json_file(maass_file)), max_m);
      if (json) {
        print(out, maass::to_json(s));
      } else {
        out << "n\tr\tm\ta(n,r,m)\n";
        for (const auto& [key, c] : s.coeffs) {
          out << std::get<0>(key) << '\t' << std::get<1>(key) << '\t' << std::get<2>(key) << '\t' << c.get_str()
              << '\n';
        }
      }
      return kExitOk;
    };
  });
  auto* mcheck = maass_cmd->add_subcommand("check", "Check the Maass relation on a Siegel table");
  mcheck->add_option("--file", maass_file, "Siegel table JSON")->required();
  mcheck->callback([&] {
    action = [&] {
      return emit_report(maass::maass_relation_check(maass::siegel_from_json(read_json_file(maass_file))), json,
                         out);
    };
  });

  // mult
  std::string algebra = "e10";
  std::int64_t min_norm = -20;
  std::int64_t rad_n = 1;
  std::int64_t rad_terms = 10;
  auto* mult = app.add_subcommand("mult", "Root multiplicities");
  mult->require_subcommand(1);
  auto* table = mult->add_subcommand("table", "Exact multiplicities against the Frenkel bound");
  table->add_option("--algebra", algebra, "e10 or fake_monster");
  table->add_option("--min-norm", min_norm, "Smallest root norm");
  table->callback([&] {
    action = [&] {
      const auto report = roots::frenkel_compare(roots::parse_algebra(algebra), min_norm);
      if (json) {
        print(out, roots::to_json(report));
      } else {
        out << roots::format_report(report);
      }
      return kExitOk;
    };
  });
  auto* rad = mult->add_subcommand("rademacher", "Rademacher approximation of p_24(1 + n)");
  rad->add_option("--n", rad_n, "n >= 1")->check(CLI::PositiveNumber);
  rad->add_option("--terms", rad_terms, "Number of k terms")->check(CLI::PositiveNumber);
  rad->callback([&] {
    action = [&] {
      const long double approx = roots::p24_rademacher(rad_n, rad_terms);
      const BigInt exact = roots::colored_partitions(24, rad_n + 1);
      const long double rel = std::fabs(approx / static_cast<long double>(exact.get_d()) - 1);
      std::ostringstream a;
      a << std::setprecision(18) << approx;
      std::ostringstream e;
      e << std::setprecision(6) << std::scientific << rel;
      if (json) {
        print(out, Json{{"n", rad_n}, {"terms", rad_terms}, {"approximation", a.str()}, {"exact", exact.get_str()},
                        {"relative_error", e.str()}});
      } else {
        out << "p24(" << rad_n + 1 << ") ~ " << a.str() << "\nexact = " << exact.get_str()
            << "\nrelative error = " << e.str() << '\n';
      }
      return kExitOk;
    };
  });

  std::vector<std::string> argv_store{"qmoon"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace qmoon::cli
