#include "exgeo/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "exgeo/octonion.hpp"
#include "exgeo/rep.hpp"
#include "exgeo/svg.hpp"
#include "exgeo/verify.hpp"

namespace exgeo {

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open file: " + path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  try {
    return Json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    // recover line/column from the byte offset
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < content.size() && i + 1 < e.byte; ++i) {
      if (content[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InvalidInputError("malformed JSON in " + path + " at line " +
                            std::to_string(line) + ", column " + std::to_string(col));
  }
}

VecQ parse_vector_csv(const std::string& csv) {
  std::vector<Rational> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(Rational::parse(item));
  VecQ v(static_cast<long>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v(static_cast<long>(i)) = vals[i];
  return v;
}

std::string resolve_artifact_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (path.empty() || fs::path(path).is_absolute()) return path;
  const char* dir = std::getenv("EXGEO_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  return (fs::path(dir) / path).string();
}

Json surd_json(const SurdCoord& c) {
  Json j;
  j["value"] = c.str();
  j["rational"] = c.rat.str();
  j["surd_coef"] = c.coef.str();
  j["surd_radicand"] = c.radicand.str();
  return j;
}

Json report_to_json(const VerificationReport& rep) {
  Json j;
  j["check"] = rep.check;
  j["status"] = rep.passed() ? "ok" : "failed";
  Json items = Json::array();
  for (const auto& item : rep.items) {
    Json it;
    it["name"] = item.name;
    it["status"] = item.passed ? "ok" : "failed";
    if (!item.passed) it["witness"] = item.witness;
    items.push_back(it);
  }
  j["items"] = std::move(items);
  return j;
}

Json root_system_json(const RootSystem& rs, long weyl_order) {
  Json j;
  j["rank"] = rs.rank;
  auto vec_json = [&](const VecQ& v) {
    Json coords = Json::array(), display = Json::array();
    for (long i = 0; i < v.size(); ++i) coords.push_back(v(i).str());
    for (const auto& c : display_coordinates(rs, v)) display.push_back(surd_json(c));
    Json out;
    out["coords"] = std::move(coords);
    out["display"] = std::move(display);
    return out;
  };
  Json roots = Json::array();
  for (const auto& r : rs.roots) roots.push_back(vec_json(r));
  j["roots"] = std::move(roots);
  Json simple = Json::array();
  for (std::size_t i : rs.simple) simple.push_back(vec_json(rs.roots[i]));
  j["simple"] = std::move(simple);
  Json fw = Json::array();
  for (const auto& w : rs.fundamental_weights) fw.push_back(vec_json(w));
  j["fundamental_weights"] = std::move(fw);
  j["weyl_order"] = weyl_order;
  if (!rs.torus_maximal) j["warning"] = rs.warning;
  return j;
}

LieAlgebra algebra_by_name(const std::string& name) {
  if (name == "su2") return lie_su2();
  if (name == "su3") return lie_su3();
  if (name == "g2") return lie_g2();
  throw InvalidInputError("unknown algebra '" + name + "' (su2, su3, g2)");
}

std::string octonion_entry(const OctonionAlgebra::Octonion& o) {
  std::string s;
  for (int k = 0; k < 8; ++k) {
    const Rational& c = o[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (c == Rational(1))
      s += "e" + std::to_string(k);
    else if (c == Rational(-1))
      s += "-e" + std::to_string(k);
    else
      s += c.str() + " e" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

void apply_decimal_rendering(Json* j) {
  if (j->is_string()) {
    const std::string s = j->get<std::string>();
    try {
      const Rational r = Rational::parse(s);
      char buf[64];
      std::snprintf(buf, sizeof(buf), "~%.9g", r.to_double());
      *j = std::string(buf);
    } catch (...) {
      // not a rational literal; leave untouched
    }
    return;
  }
  if (j->is_object() || j->is_array())
    for (auto& child : *j) apply_decimal_rendering(&child);
}

// ---- command handlers ----

Json handle_curvature_decompose(const std::string& file) {
  const Tensor t = curvature_from_json(read_json_file(file));
  auto [curv, lambda4] = bianchi_project(t);
  auto dec = decompose(curv);
  Json j;
  j["n"] = t.dim();
  j["scalar"] = dec.scalar.str();
  j["traceless_ricci"] = sym2_to_json(dec.traceless_ricci);
  j["weyl_norm2"] = trace_pair(dec.weyl_part, dec.weyl_part).str();
  Json parts;
  parts["scalar_part"] = curvature_to_json(dec.scalar_part);
  parts["z_part"] = curvature_to_json(dec.z_part);
  parts["weyl_part"] = curvature_to_json(dec.weyl_part);
  j["parts"] = std::move(parts);
  if (!lambda4.is_zero()) j["lambda4_part"] = form_to_json(lambda4);
  j["bianchi_clean"] = lambda4.is_zero();
  return j;
}

Json handle_curvature_sectional(const std::string& file, const std::string& xs,
                                const std::string& ys) {
  const Json input = read_json_file(file);
  const Tensor t = curvature_from_json(input);
  CurvatureTensor r(t);
  VecQ x, y;
  if (!xs.empty()) {
    x = parse_vector_csv(xs);
    y = parse_vector_csv(ys);
  } else if (input.contains("x") && input.contains("y")) {
    const auto xv = input.at("x"), yv = input.at("y");
    x = VecQ(static_cast<long>(xv.size()));
    y = VecQ(static_cast<long>(yv.size()));
    for (long i = 0; i < x.size(); ++i) x(i) = rational_from_json(xv.at(i));
    for (long i = 0; i < y.size(); ++i) y(i) = rational_from_json(yv.at(i));
  } else {
    throw InvalidInputError("sectional needs --x/--y or x/y arrays in the file");
  }
  Json j;
  j["sectional_curvature"] = sectional_curvature(r, x, y).str();
  return j;
}

Json handle_g2_split(int degree, const std::string& file, const std::string& variant) {
  auto g = standard_g2_structure(variant == "section6" ? G2Variant::section6
                                                       : G2Variant::section2);
  auto f = form_from_json(read_json_file(file));
  if (f.dim() != 7) throw InvalidInputError("g2 split expects a form on R^7");
  if (!f.space()->is_standard())
    throw InvalidInputError("g2 split is defined for the standard metric");
  Form<Rational> f7(g.phi.space(), f.degree());
  for (const auto& [m, c] : f.terms()) f7.add_term(m, c);
  Json j;
  j["degree"] = degree;
  if (degree == 2) {
    auto s = g2_two_form_split(f7, g);
    j["parts"]["part7"] = form_to_json(s.part7);
    j["parts"]["part14"] = form_to_json(s.part14);
    j["module_dimensions"] = "7 + 14 = 21";
  } else if (degree == 3) {
    auto s = g2_three_form_split(f7, g);
    j["parts"]["part1"] = form_to_json(s.part1);
    j["parts"]["part7"] = form_to_json(s.part7);
    j["parts"]["part27"] = form_to_json(s.part27);
    j["module_dimensions"] = "1 + 7 + 27 = 35";
  } else {
    throw InvalidInputError("g2 split supports degree 2 or 3");
  }
  return j;
}

Json handle_spin7_split(int degree, const std::string& file) {
  auto s7 = standard_spin7_structure();
  auto f = form_from_json(read_json_file(file));
  if (f.dim() != 8) throw InvalidInputError("spin7 split expects a form on R^8");
  if (!f.space()->is_standard())
    throw InvalidInputError("spin7 split is defined for the standard metric");
  Form<Rational> f8(s7.Phi.space(), f.degree());
  for (const auto& [m, c] : f.terms()) f8.add_term(m, c);
  auto split = spin7_split(f8, s7);
  Json j;
  j["degree"] = degree;
  std::string dims;
  int total = 0;
  for (const auto& [dim, part] : split.parts) {
    j["parts"]["part" + std::to_string(dim)] = form_to_json(part);
    if (!dims.empty()) dims += " + ";
    dims += std::to_string(dim);
    total += dim;
  }
  j["module_dimensions"] = dims + " = " + std::to_string(total);
  return j;
}

Json handle_g2_stabilizer(bool with_basis) {
  auto g = standard_g2_structure(G2Variant::section2);
  auto basis = stabilizer_algebra(g.phi, Ambient::so_n);
  auto l = structure_constants_from_matrices(basis);
  Json j;
  j["dimension"] = basis.size();
  j["closed_under_bracket"] = true;  // construction would have thrown otherwise
  j["killing_negative_definite"] = is_negative_definite(killing_form(l));
  if (with_basis) {
    Json arr = Json::array();
    for (const auto& m : basis) {
      Json rows = Json::array();
      for (long r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (long c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(row);
      }
      arr.push_back(rows);
    }
    j["basis"] = std::move(arr);
  }
  return j;
}

Json handle_octonion_table() {
  OctonionAlgebra O(standard_g2_structure(G2Variant::section2));
  Json rows = Json::array();
  for (int i = 0; i < 8; ++i) {
    Json row = Json::array();
    for (int k = 0; k < 8; ++k) row.push_back(octonion_entry(O.table(i, k)));
    rows.push_back(row);
  }
  Json j;
  j["basis"] = {"e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
  j["table"] = std::move(rows);
  return j;
}

Json handle_rep_roots(const std::string& algebra, const std::string& svg_path) {
  auto l = algebra_by_name(algebra);
  auto rs = roots_from_torus(l);
  Json j = root_system_json(rs, weyl_group_order(rs));
  j["algebra"] = algebra;
  if (!svg_path.empty()) {
    const std::string resolved = resolve_artifact_path(svg_path);
    std::ofstream out(resolved);
    if (!out) throw InvalidInputError("cannot write " + resolved);
    out << root_diagram_svg(rs, "roots of " + algebra);
    j["svg"] = resolved;
  }
  return j;
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& argv) {
  CommandResult result;
  CLI::App app{"exact exterior algebra, curvature, and holonomy-model toolkit",
               "exgeo"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  bool decimal = false, timestamp = false;
  std::string format = "json";
  app.add_flag("--decimal", decimal,
               "render rationals as decimal approximations, marked with ~");
  app.add_flag("--timestamp", timestamp, "include a timestamp in the payload");
  app.add_option("--format", format, "output format: json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  // curvature
  auto* curvature = app.add_subcommand("curvature", "algebraic curvature tensors");
  curvature->fallthrough();
  std::string curv_file, sec_file, sec_x, sec_y;
  auto* c_dec = curvature->add_subcommand("decompose",
                                          "scalar + traceless-Ricci + Weyl split");
  c_dec->fallthrough();
  c_dec->add_option("file", curv_file, "curvature JSON")->required();
  auto* c_sec = curvature->add_subcommand("sectional", "sectional curvature of a plane");
  c_sec->fallthrough();
  c_sec->add_option("file", sec_file, "curvature JSON")->required();
  c_sec->add_option("--x", sec_x, "first vector, comma-separated rationals");
  c_sec->add_option("--y", sec_y, "second vector, comma-separated rationals");

  // g2
  auto* g2cmd = app.add_subcommand("g2", "G2 form calculus");
  g2cmd->fallthrough();
  int g2_degree = 2;
  std::string g2_file, g2_variant = "section2";
  bool stab_basis = false;
  auto* g2_split = g2cmd->add_subcommand("split", "irreducible-module split");
  g2_split->fallthrough();
  g2_split->add_option("--degree", g2_degree, "2 or 3")->required();
  g2_split->add_option("file", g2_file, "multivector JSON")->required();
  g2_split->add_option("--variant", g2_variant, "section2 or section6");
  auto* g2_stab = g2cmd->add_subcommand("stabilizer", "stabilizer algebra of phi");
  g2_stab->fallthrough();
  g2_stab->add_flag("--basis", stab_basis, "include the 14 basis matrices");

  // spin7
  auto* spin7cmd = app.add_subcommand("spin7", "Spin(7) form calculus");
  spin7cmd->fallthrough();
  int s7_degree = 2;
  std::string s7_file;
  auto* s7_split = spin7cmd->add_subcommand("split", "irreducible-module split");
  s7_split->fallthrough();
  s7_split->add_option("--degree", s7_degree, "2, 3, or 4")->required();
  s7_split->add_option("file", s7_file, "multivector JSON")->required();

  // octonion
  auto* oct = app.add_subcommand("octonion", "octonion algebra");
  oct->fallthrough();
  auto* oct_table = oct->add_subcommand("table", "8x8 multiplication table");
  oct_table->fallthrough();

  // rep
  auto* rep = app.add_subcommand("rep", "representation theory");
  rep->fallthrough();
  std::string roots_algebra, roots_svg;
  auto* rep_roots = rep->add_subcommand("roots", "root system of su2, su3, or g2");
  rep_roots->fallthrough();
  rep_roots->add_option("algebra", roots_algebra, "su2 | su3 | g2")->required();
  rep_roots->add_option("--svg", roots_svg, "write a root diagram");
  int cg_k = 0, cg_l = 0;
  auto* rep_cg = rep->add_subcommand("cg", "Clebsch-Gordan decomposition");
  rep_cg->fallthrough();
  rep_cg->add_option("k", cg_k)->required();
  rep_cg->add_option("l", cg_l)->required();
  std::string so3_kind;
  int so3_m = 0, so3_n = -1;
  auto* rep_so3 = rep->add_subcommand("so3", "SO(3) plethysms on H_d");
  rep_so3->fallthrough();
  rep_so3->add_option("kind", so3_kind, "tensor | sym2 | alt2")->required();
  rep_so3->add_option("m", so3_m)->required();
  rep_so3->add_option("n", so3_n);
  std::string weights_mode;
  int w_k = 0, w_l = 0;
  auto* rep_w = rep->add_subcommand("weights", "weight decomposition");
  rep_w->fallthrough();
  rep_w->add_option("mode", weights_mode, "su2-tensor")->required();
  rep_w->add_option("k", w_k)->required();
  rep_w->add_option("l", w_l)->required();

  // verify
  auto* verify = app.add_subcommand("verify", "structure-equation verifications");
  verify->fallthrough();
  std::string cone_mode = "both";
  auto* v_flag = verify->add_subcommand("flag-nk", "flag-manifold nearly-Kahler");
  v_flag->fallthrough();
  auto* v_cone = verify->add_subcommand("g2-cone", "G2 cone forms");
  v_cone->fallthrough();
  v_cone->add_option("--mode", cone_mode, "formal | explicit | both")
      ->check(CLI::IsMember({"formal", "explicit", "both"}));
  auto* v_s6 = verify->add_subcommand("s6-nk", "six-sphere nearly-Kahler");
  v_s6->fallthrough();
  auto* v_s7 = verify->add_subcommand("s7-np", "seven-sphere nearly-parallel");
  v_s7->fallthrough();
  auto* v_spin7 = verify->add_subcommand("spin7-cone", "Spin(7) cone form");
  v_spin7->fallthrough();
  auto* v_all = verify->add_subcommand("all", "every check");
  v_all->fallthrough();

  // diagram
  auto* diagram = app.add_subcommand("diagram", "deterministic SVG artifacts");
  diagram->fallthrough();
  std::string dia_algebra, dia_svg;
  auto* dia_roots = diagram->add_subcommand("roots", "root diagram");
  dia_roots->fallthrough();
  dia_roots->add_option("algebra", dia_algebra, "su2 | su3 | g2")->required();
  dia_roots->add_option("--svg", dia_svg, "output path")->required();

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    result.status = "ok";
    result.payload["usage"] = app.help();
    result.exit_code = 0;
    result.format = format;
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = "error";
    result.payload["error"] = e.what();
    result.payload["usage"] = app.help();
    result.exit_code = 2;
    result.format = format;
    return result;
  }

  result.format = format;
  try {
    Json j;
    bool check_failed = false;
    if (c_dec->parsed()) {
      j = handle_curvature_decompose(curv_file);
    } else if (c_sec->parsed()) {
      j = handle_curvature_sectional(sec_file, sec_x, sec_y);
    } else if (g2_split->parsed()) {
      j = handle_g2_split(g2_degree, g2_file, g2_variant);
    } else if (g2_stab->parsed()) {
      j = handle_g2_stabilizer(stab_basis);
    } else if (s7_split->parsed()) {
      j = handle_spin7_split(s7_degree, s7_file);
    } else if (oct->parsed() && !oct->get_subcommands().empty()) {
      j = handle_octonion_table();
    } else if (rep_roots->parsed()) {
      j = handle_rep_roots(roots_algebra, roots_svg);
    } else if (rep_cg->parsed()) {
      Json arr = Json::array();
      for (int n : clebsch_gordan_su2(cg_k, cg_l)) arr.push_back("V" + std::to_string(n));
      j = std::move(arr);
    } else if (rep_so3->parsed()) {
      PlethysmKind kind;
      if (so3_kind == "tensor")
        kind = PlethysmKind::tensor;
      else if (so3_kind == "sym2")
        kind = PlethysmKind::sym2;
      else if (so3_kind == "alt2")
        kind = PlethysmKind::alt2;
      else
        throw InvalidInputError("unknown plethysm kind '" + so3_kind + "'");
      Json arr = Json::array();
      for (int d : so3_plethysm(kind, so3_m, so3_n < 0 ? 0 : so3_n))
        arr.push_back("H" + std::to_string(d));
      j = std::move(arr);
    } else if (rep_w->parsed()) {
      if (weights_mode != "su2-tensor")
        throw InvalidInputError("unknown weights mode '" + weights_mode + "'");
      auto dec = weight_decompose({su2_tensor_torus_matrix(w_k, w_l)});
      Json weights = Json::array();
      for (const auto& w : dec.weights) weights.push_back(w[0].str());
      Json labels = Json::array();
      for (int n : dec.su2_labels) labels.push_back("V" + std::to_string(n));
      j["weights"] = std::move(weights);
      j["decomposition"] = std::move(labels);
    } else if (verify->parsed() && !verify->get_subcommands().empty()) {
      std::vector<VerificationReport> reps;
      if (v_flag->parsed()) reps.push_back(flag_nearly_kahler_check());
      if (v_cone->parsed()) {
        if (cone_mode == "formal" || cone_mode == "both")
          reps.push_back(g2_cone_check(G2ConeMode::formal_nk));
        if (cone_mode == "explicit" || cone_mode == "both")
          reps.push_back(g2_cone_check(G2ConeMode::flag_explicit));
      }
      if (v_s6->parsed()) reps.push_back(s6_nearly_kahler_check());
      if (v_s7->parsed()) reps.push_back(s7_nearly_parallel_check());
      if (v_spin7->parsed()) reps.push_back(spin7_cone_check());
      if (v_all->parsed()) reps = verify_all();
      Json checks = Json::array();
      for (const auto& r : reps) {
        if (!r.passed()) check_failed = true;
        checks.push_back(report_to_json(r));
      }
      if (reps.size() == 1) {
        j = checks.at(0);
      } else {
        j["checks"] = std::move(checks);
        j["failures"] = check_failed ? 1 : 0;
      }
    } else if (dia_roots->parsed()) {
      j = handle_rep_roots(dia_algebra, dia_svg);
    } else {
      result.status = "error";
      result.payload["error"] = "no command given";
      result.payload["usage"] = app.help();
      result.exit_code = 2;
      return result;
    }

    if (timestamp) {
      const auto now = std::chrono::system_clock::now().time_since_epoch();
      j["timestamp"] =
          std::chrono::duration_cast<std::chrono::seconds>(now).count();
    }
    if (decimal) {
      apply_decimal_rendering(&j);
      if (j.is_object()) j["rendering"] = "decimal-approximate";
    }
    result.payload = std::move(j);
    if (check_failed) {
      result.status = "failed";
      result.exit_code = 1;
    } else {
      result.status = "ok";
      if (result.payload.is_object()) result.payload["status"] = "ok";
      result.exit_code = 0;
    }
  } catch (const Error& e) {
    result.status = "error";
    result.payload = Json{{"status", "error"}, {"error", e.what()}};
    result.exit_code = 3;
  } catch (const std::exception& e) {
    result.status = "error";
    result.payload = Json{{"status", "error"}, {"error", e.what()}};
    result.exit_code = 3;
  }
  return result;
}

namespace {

void markdown_value(const Json& j, int depth, std::ostringstream& out);

void markdown_table(const Json& table, const Json* header, std::ostringstream& out) {
  if (header != nullptr) {
    out << "|   |";
    for (const auto& h : *header) out << " " << h.get<std::string>() << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < header->size(); ++i) out << "---|";
    out << "\n";
  }
  std::size_t row_idx = 0;
  for (const auto& row : table) {
    out << "| ";
    if (header != nullptr) out << (*header).at(row_idx).get<std::string>() << " |";
    for (const auto& cell : row)
      out << " " << (cell.is_string() ? cell.get<std::string>() : cell.dump()) << " |";
    out << "\n";
    ++row_idx;
  }
}

void markdown_value(const Json& j, int depth, std::ostringstream& out) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (key == "table" || key == "basis") continue;  // handled by caller
      if (value.is_object() || value.is_array()) {
        out << indent << "- **" << key << "**:\n";
        markdown_value(value, depth + 1, out);
      } else {
        out << indent << "- **" << key << "**: "
            << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        markdown_value(v, depth + 1, out);
      } else {
        out << indent << "- " << (v.is_string() ? v.get<std::string>() : v.dump())
            << "\n";
      }
    }
  } else {
    out << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string emit_report(const CommandResult& result, const std::string& format) {
  if (format == "markdown") {
    std::ostringstream out;
    out << "## exgeo report (" << result.status << ")\n\n";
    if (result.payload.is_object() && result.payload.contains("table")) {
      const Json* header = result.payload.contains("basis")
                               ? &result.payload.at("basis")
                               : nullptr;
      markdown_table(result.payload.at("table"), header, out);
      out << "\n";
    }
    markdown_value(result.payload, 0, out);
    return out.str();
  }
  return result.payload.dump(2) + "\n";
}

}  // namespace exgeo
