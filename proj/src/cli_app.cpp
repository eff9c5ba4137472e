#include "quermass/cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quermass/gallery.hpp"
#include "quermass/inequality.hpp"

namespace quermass::cli {

namespace {

struct CommonOpts {
  int band_limit = 64;
  double tol = 1e-9;
  std::string format = "json";
  std::string out_path;
  bool require_convex = false;
  int max_m = 4;
};

std::ostream& sink(std::ostream& out, std::ofstream& file, const std::string& path) {
  if (path.empty()) return out;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> items;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) items.push_back(item);
  return items;
}

int cmd_eigen(int d, int n_max, const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= n_max; ++n) {
      nlohmann::json row;
      row["n"] = n;
      row["lambda"] = sphere_eigenvalue(n, d);
      if (n >= 1)
        row["gamma"] = sphere_eigenvalue(n, d) - sphere_eigenvalue(1, d);
      else
        row["gamma"] = nullptr;
      rows.push_back(row);
    }
    out << rows.dump(2) << "\n";
  } else if (format == "csv") {
    out << "n,lambda,gamma\n";
    for (int n = 0; n <= n_max; ++n) {
      out << n << "," << sphere_eigenvalue(n, d) << ",";
      if (n >= 1) out << (sphere_eigenvalue(n, d) - sphere_eigenvalue(1, d));
      out << "\n";
    }
  } else {
    out << "n\tlambda\tgamma\n";
    for (int n = 0; n <= n_max; ++n) {
      out << n << "\t" << sphere_eigenvalue(n, d) << "\t";
      if (n >= 1)
        out << (sphere_eigenvalue(n, d) - sphere_eigenvalue(1, d));
      else
        out << "-";
      out << "\n";
    }
  }
  return 0;
}

int cmd_coeffs(int d, int l, int m, const std::string& format, std::ostream& out) {
  const auto eigs = EigenSystem::sphere(d, m);
  const auto C = expand_C(l, m, eigs);
  std::vector<std::string> coeff_strings;
  for (const auto& c : C.coeffs) coeff_strings.push_back(c.str());
  std::optional<std::string> c1, c2;
  if (l == 1 && m >= 2) {
    c1 = closed_form_coeff1(m, d).str();
    c2 = closed_form_coeff2(m, d).str();
  }
  if (format == "json") {
    nlohmann::json j;
    j["d"] = d;
    j["l"] = l;
    j["m"] = m;
    j["coeffs"] = coeff_strings;  // exact integers, ascending powers
    if (c1) {
      j["coeff1"] = *c1;
      j["coeff2"] = *c2;
    }
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "k,c_k\n";
    for (std::size_t k = 0; k < coeff_strings.size(); ++k)
      out << k << "," << coeff_strings[k] << "\n";
  } else {
    out << "C_{" << l << "," << m << "}(t), d = " << d << ", ascending powers:\n";
    for (std::size_t k = 0; k < coeff_strings.size(); ++k)
      out << "  c[" << k << "] = " << coeff_strings[k] << "\n";
    if (c1) {
      out << "closed-form check (eigenvalue products = factorial forms):\n";
      out << "  coeff1 = " << *c1 << "\n";
      out << "  coeff2 = " << *c2 << "\n";
    }
  }
  return 0;
}

void validate_theorem_names(const std::vector<std::string>& names) {
  static const std::vector<std::string> known = {"minkowski", "classical", "deficit_bound",
                                                 "reverse",   "higher_order", "mixed",
                                                 "af",        "all"};
  for (const auto& name : names)
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw std::runtime_error("unknown theorem name: " + name);
}

std::vector<InequalityReport> run_single(const SupportBody& body,
                                         const std::vector<std::string>& names,
                                         const CommonOpts& opts) {
  std::vector<InequalityReport> reports;
  for (const auto& name : names) {
    if (name == "minkowski" || name == "all") reports.push_back(minkowski_stability(body, opts.tol));
    if (name == "classical" || name == "all") reports.push_back(minkowski_classical(body, opts.tol));
    if (name == "deficit_bound" || name == "all")
      reports.push_back(deficit_upper_bound(body, opts.tol));
    if (name == "reverse" || name == "all") reports.push_back(reverse_comparison(body, opts.tol));
    if (name == "higher_order" || name == "all")
      for (int m = 2; m <= opts.max_m; ++m) reports.push_back(higher_order(body, m, opts.tol));
  }
  if (reports.empty()) throw std::runtime_error("no applicable theorem in --theorems list");
  return reports;
}

std::vector<InequalityReport> run_pair(const SupportBody& K, const SupportBody& L,
                                       const std::vector<std::string>& names,
                                       const CommonOpts& opts) {
  std::vector<InequalityReport> reports;
  for (const auto& name : names) {
    if (name == "mixed" || name == "all") reports.push_back(mixed_reverse(K, L, opts.tol));
    if (name == "af" || name == "all") reports.push_back(aleksandrov_fenchel(K, L, opts.tol));
  }
  if (reports.empty()) throw std::runtime_error("no applicable theorem in --theorems list");
  return reports;
}

void emit_reports(const std::vector<InequalityReport>& reports, const std::string& format,
                  std::ostream& out) {
  if (format == "csv") {
    const auto keys = union_term_keys(reports);
    out << csv_header(keys) << "\n";
    for (const auto& r : reports) out << csv_row(r, keys) << "\n";
  } else {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    out << j.dump(2) << "\n";
  }
}

int cmd_check(const std::string& spec_path, const std::string& theorems, const CommonOpts& opts,
              std::ostream& out) {
  const nlohmann::json j = load_json_file(spec_path);
  const auto names = split_list(theorems);
  validate_theorem_names(names);
  gallery::BuildOptions build_opts;
  build_opts.band_limit = opts.band_limit;
  build_opts.require_convex = opts.require_convex;

  std::vector<InequalityReport> reports;
  if (j.contains("K") && j.contains("L")) {
    const SupportBody K = gallery::build(gallery::spec_from_json(j.at("K")), build_opts);
    const SupportBody L = gallery::build(gallery::spec_from_json(j.at("L")), build_opts);
    reports = run_pair(K, L, names, opts);
  } else {
    const SupportBody body = gallery::build(gallery::spec_from_json(j), build_opts);
    reports = run_single(body, names, opts);
  }
  std::ofstream file;
  emit_reports(reports, opts.format, sink(out, file, opts.out_path));
  const bool all_hold = std::all_of(reports.begin(), reports.end(),
                                    [](const InequalityReport& r) { return r.holds; });
  return all_hold ? 0 : 1;
}

int cmd_sweep(const std::string& spec_path, const std::string& param_pointer,
              const std::vector<double>& values, const std::string& theorems,
              const CommonOpts& opts, std::ostream& out) {
  const nlohmann::json base = load_json_file(spec_path);
  if (base.contains("K") || base.contains("L"))
    throw std::runtime_error("sweep: single-body specs only");
  const auto names = split_list(theorems);
  validate_theorem_names(names);
  const nlohmann::json::json_pointer ptr{param_pointer};
  gallery::BuildOptions build_opts;
  build_opts.band_limit = opts.band_limit;
  build_opts.require_convex = opts.require_convex;

  std::vector<std::vector<InequalityReport>> results(values.size());
  std::vector<std::string> errors(values.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < values.size(); ++i) {
    try {
      nlohmann::json j = base;
      j[ptr] = values[i];
      const SupportBody body = gallery::build(gallery::spec_from_json(j), build_opts);
      results[i] = run_single(body, names, opts);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error("sweep point failed: " + e);

  std::vector<InequalityReport> flat;
  for (const auto& rs : results) flat.insert(flat.end(), rs.begin(), rs.end());
  const auto keys = union_term_keys(flat);

  std::ofstream file;
  std::ostream& os = sink(out, file, opts.out_path);
  os << csv_header(keys, "param") << "\n";
  bool all_hold = true;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (const auto& r : results[i]) {
      os << csv_row(r, keys, format_float(values[i])) << "\n";
      all_hold = all_hold && r.holds;
    }
  return all_hold ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"higher-order Poincare forms and Minkowski-type inequalities for convex bodies"};
  app.require_subcommand(1);

  CommonOpts opts;

  int eigen_d = 3, eigen_n = 8;
  std::string table_format = "text";
  auto* eigen = app.add_subcommand("eigen", "eigenvalue/gap table for S^{d-1}");
  eigen->add_option("--d", eigen_d, "ambient dimension (sphere is S^{d-1})")
      ->check(CLI::Range(2, 1000000));
  eigen->add_option("--n", eigen_n, "largest degree")->check(CLI::Range(0, 1000000));
  eigen->add_option("--format", table_format, "text|json|csv");

  int cf_d = 3, cf_l = 1, cf_m = 2;
  auto* coeffs = app.add_subcommand("coeffs", "expanded coefficients of prod (t - lambda_j)");
  coeffs->add_option("--d", cf_d)->check(CLI::Range(2, 1000000));
  coeffs->add_option("--l", cf_l);
  coeffs->add_option("--m", cf_m);
  coeffs->add_option("--format", table_format, "text|json|csv");

  std::string spec_path, theorems = "all";
  auto* check = app.add_subcommand("check", "evaluate inequality reports for a body spec");
  check->add_option("--spec", spec_path, "body spec JSON (or {\"K\":...,\"L\":...})")->required();
  check->add_option("--theorems", theorems,
                    "comma list: minkowski,classical,deficit_bound,reverse,higher_order,mixed,af,all");
  check->add_option("--band-limit", opts.band_limit)->check(CLI::Range(0, 4096));
  check->add_option("--tol", opts.tol);
  check->add_option("--format", opts.format, "json|csv");
  check->add_option("--out", opts.out_path, "write the report here instead of stdout");
  check->add_option("--require-convex", opts.require_convex, "reject uncertified bodies");
  check->add_option("--max-m", opts.max_m, "largest order for higher_order");

  std::string param_pointer = "/params/amplitude", values_csv;
  double start = 0.0, stop = 0.0;
  int num = 0;
  auto* sweep = app.add_subcommand("sweep", "CSV of reports across a parameter grid");
  sweep->add_option("--spec", spec_path)->required();
  sweep->add_option("--param", param_pointer, "JSON pointer into the spec, e.g. /params/radius");
  sweep->add_option("--values", values_csv, "comma list of parameter values");
  sweep->add_option("--start", start);
  sweep->add_option("--stop", stop);
  sweep->add_option("--num", num, "grid points from start to stop inclusive");
  sweep->add_option("--theorems", theorems);
  sweep->add_option("--band-limit", opts.band_limit)->check(CLI::Range(0, 4096));
  sweep->add_option("--tol", opts.tol);
  sweep->add_option("--out", opts.out_path);
  sweep->add_option("--require-convex", opts.require_convex);
  sweep->add_option("--max-m", opts.max_m);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(eigen)) return cmd_eigen(eigen_d, eigen_n, table_format, out);
    if (app.got_subcommand(coeffs)) return cmd_coeffs(cf_d, cf_l, cf_m, table_format, out);
    if (app.got_subcommand(check)) return cmd_check(spec_path, theorems, opts, out);
    if (app.got_subcommand(sweep)) {
      std::vector<double> values;
      if (!values_csv.empty())
        for (const auto& v : split_list(values_csv)) values.push_back(std::stod(v));
      else if (num == 1)
        values.push_back(start);
      else
        for (int i = 0; i < num; ++i)
          values.push_back(start + (stop - start) * i / (num - 1));
      return cmd_sweep(spec_path, param_pointer, values, theorems, opts, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace quermass::cli
