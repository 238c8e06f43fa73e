#include "supertower/report.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "supertower/divisors.hpp"
#include "supertower/errors.hpp"
#include "supertower/redcheck.hpp"
#include "supertower/repshape.hpp"
#include "supertower/strata.hpp"

namespace supertower {

namespace {

using nlohmann::json;

std::string num(std::int64_t v) { return std::to_string(v); }

json place_json(const Place& pl) {
  json coeffs = json::array();
  for (const auto& c : pl.poly.coeffs()) coeffs.push_back(c.str());
  return {{"poly", pl.poly.str()},
          {"coeffs", coeffs},
          {"exponent", num(pl.exponent)},
          {"degree", num(pl.degree())},
          {"irreducibility", pl.status == IrreducibilityStatus::Certified ? "Certified" : "Assumed"}};
}

json model_json(const CurveModel& m) {
  json places = json::array();
  for (const auto& pl : m.places()) places.push_back(place_json(pl));
  return {{"ell", num(m.ell())},
          {"n", num(m.n())},
          {"lambda", m.lambda().str()},
          {"places", places},
          {"infinity_exponent", num(m.infinity_exponent())}};
}

json normalization_json(const Normalization& norm) {
  json rescale = json::array();
  for (const auto& r : norm.record.y_rescale) rescale.push_back({{"poly", r.poly.str()}, {"power", num(r.power)}});
  json out = model_json(norm.model);
  out["pivot"] = norm.record.pivot.str();
  out["y_rescale"] = rescale;
  return out;
}

json stratification_json(const CurveModel& m, const Stratification& st, bool irreducible) {
  json strata = json::array();
  for (int j = 0; j < st.n; ++j) {
    json places = json::array();
    for (std::size_t i : st.strata[static_cast<std::size_t>(j)]) places.push_back(m.places()[i].poly.str());
    strata.push_back({{"j", num(j)}, {"places", places}, {"r", num(st.counts[static_cast<std::size_t>(j)])}});
  }
  return {{"strata", strata}, {"geometrically_irreducible", irreducible}};
}

json tower_json(const TowerTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"s", num(r.s)}, {"genus", num(r.genus)}, {"h", num(r.quotient_dim)}, {"m", num(r.w_dim)},
                    {"phi", num(r.phi)}});
  }
  return {{"rows", rows}, {"top_genus", num(t.top_genus())}};
}

std::string block_name(int s, std::int64_t twist) {
  const std::string psi = "psi_" + std::to_string(s);
  return twist == 0 ? psi : psi + "(" + std::to_string(twist) + ")";
}

json shape_json(const RepShapeReport& rep) {
  json levels = json::array();
  for (const auto& b : rep.levels) {
    json twists = json::array();
    json blocks = json::array();
    for (auto t : b.twist_exponents) {
      twists.push_back(num(t));
      blocks.push_back(block_name(b.s, t));
    }
    levels.push_back({{"s", num(b.s)},
                      {"psi_dim", num(b.psi_dim)},
                      {"block_count", num(b.block_count)},
                      {"twist_exponents", twists},
                      {"blocks", blocks},
                      {"total_dim", num(b.total_dim())}});
  }
  return {{"levels", levels},
          {"total_dim", num(rep.total_dim)},
          {"verdict", rep.verdict == ShapeVerdict::ContainedInTen ? "ContainedInTen" : "NotCertified"},
          {"reasons", rep.reasons}};
}

std::string point_name(const CurveModel& m, const BasePoint& xi) {
  return m.places()[xi.place].poly.str() + " #" + std::to_string(xi.root);
}

json w_json(const DivisorLattice& lat) {
  json out = json::array();
  for (int s = 1; s <= lat.n(); ++s) {
    const WsPresentation w = lat.ws_presentation(s);
    json basis = json::array();
    for (const auto& [xi, d] : lat.lattice_basis(s)) basis.push_back(point_name(lat.model(), xi));
    json rel = json::array();
    json coords = json::array();
    for (std::size_t k = 0; k < w.relation.cols(); ++k) {
      rel.push_back(num(w.relation.at(0, k)));
      coords.push_back(num(w.relation_coords[k]));
    }
    out.push_back({{"s", num(s)},
                   {"pivot", point_name(lat.model(), lat.pivot())},
                   {"basis", basis},
                   {"relation_mod_ell", rel},
                   {"relation", coords},
                   {"dim", num(w.dim)}});
  }
  return out;
}

json exceptional_json(const CurveModel& m, const Stratification& st) {
  const bool rational = has_rational_point_in_s0(m, st);
  json levels = json::array();
  for (int s = 1; s <= st.n; ++s) {
    const auto cases = classify_exceptional(st, s, rational);
    json list = json::array();
    for (const auto& c : cases) list.push_back({{"label", std::string(1, c.label)}, {"d", num(c.d)}});
    levels.push_back({{"s", num(s)},
                      {"r0", num(st.counts[0])},
                      {"below_is_s0", cases.front().below_is_s0},
                      {"cases", list}});
  }
  return {{"rational_point_in_s0", rational}, {"levels", levels}};
}

json certification_json(const CurveModel& m, const ConditionReport& r, bool from_input, int bound) {
  json non_integral = json::array();
  for (std::size_t i : r.integrality.offending_places) non_integral.push_back(m.places()[i].poly.str());
  json offending = json::array();
  for (const auto& o : r.differences.offending) {
    offending.push_back({{"places", {m.places()[o.first].poly.str(), m.places()[o.second].poly.str()}},
                         {"label", o.label},
                         {"valuation", num(o.valuation)}});
  }
  return {{"model", from_input ? "input" : "normalized"},
          {"total_ramification", r.total_ramification},
          {"lambda_unit", r.integrality.lambda_unit},
          {"lambda_valuation", r.integrality.lambda_valuation.str()},
          {"roots_integral", r.integrality.roots_integral},
          {"non_integral_places", non_integral},
          {"differences_units", r.differences.units},
          {"offending_differences", offending},
          {"splits_over_ten", to_string(r.splits)},
          {"cyclotomic_bound", num(bound)},
          {"certified", r.certified},
          {"reasons", r.reasons}};
}

json header(const CurveFile& file, const CurveModel& model) {
  json notes = json::array();
  for (const auto& pl : model.places()) {
    if (pl.status == IrreducibilityStatus::Assumed) notes.push_back("orbit structure unverified for " + pl.poly.str());
  }
  return {{"schema_version", kSchemaVersion},
          {"tool_version", kToolVersion},
          {"input", to_json(curve_file_of(model, file.assert_splits))},
          {"notes", notes}};
}

std::string verdict_detail(Verdict v, std::int64_t ell) {
  const std::string l = std::to_string(ell);
  switch (v) {
    case Verdict::Certified:
      return "the " + l + "-power torsion field of the Jacobian lies in the maximal pro-" + l + " extension of Q(mu_" +
             l + "^inf) unramified away from " + l;
    case Verdict::NotCertified:
      return "sufficient conditions not met; this does not imply bad reduction or failure of the containment";
    case Verdict::Reducible:
      return "the curve is not geometrically irreducible (every multiplicity is divisible by " + l + ")";
  }
  return "";
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified:
      return "Certified";
    case Verdict::NotCertified:
      return "NotCertified";
    case Verdict::Reducible:
      return "Reducible";
  }
  return "?";
}

int exit_code(Verdict v) { return v == Verdict::Certified ? kExitOk : kExitNegative; }

json normalize_report(const CurveFile& file) {
  const CurveModel model = to_model(file);
  json doc = header(file, model);
  doc["normalization"] = normalization_json(normalize(model));
  return doc;
}

Analysis analyze(const CurveFile& file, const AnalysisOptions& options) {
  const CurveModel model = to_model(file);
  const Normalization norm = normalize(model);
  const CurveModel& h = norm.model;
  const Stratification st = stratify(h);
  const bool irreducible = check_irreducible(h) == GeometricIrreducibility::Irreducible;

  Analysis out;
  json& doc = out.report;
  doc = header(file, model);
  doc["normalization"] = normalization_json(norm);
  doc["stratification"] = stratification_json(h, st, irreducible);

  if (!irreducible) {
    for (const char* key : {"tower", "w_presentation", "rep_shape", "exceptional_cases", "certification"}) {
      doc[key] = nullptr;
    }
    out.verdict = Verdict::Reducible;
  } else {
    const TowerTable table = tower_table(st);
    const DivisorLattice lattice(h);
    const RedcheckOptions ropts{options.cyclotomic_bound, options.assert_splits || file.assert_splits};
    const CurveModel& target = certification_model(model, h);
    const ConditionReport cert = certify(target, st, ropts);
    doc["tower"] = tower_json(table);
    doc["w_presentation"] = w_json(lattice);
    doc["rep_shape"] = shape_json(assemble(table, cert));
    doc["exceptional_cases"] = exceptional_json(h, st);
    doc["certification"] = certification_json(target, cert, &target == &model, options.cyclotomic_bound);
    out.verdict = cert.certified ? Verdict::Certified : Verdict::NotCertified;
  }
  doc["verdict"] = to_string(out.verdict);
  doc["verdict_detail"] = verdict_detail(out.verdict, model.ell());
  return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

CurveFile load_curve_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_curve_file(buf.str());
}

BatchResult run_batch(const std::filesystem::path& dir, const BatchOptions& options) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ArgumentError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".curve") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });

  struct Entry {
    json summary;
    json report;
  };
  std::vector<Entry> entries(files.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      const std::string name = files[i].filename().string();
      json s = {{"file", name}};
      try {
        Analysis a = analyze(load_curve_file(files[i]), options.analysis);
        s["status"] = "ok";
        s["verdict"] = to_string(a.verdict);
        s["exit_code"] = num(exit_code(a.verdict));
        entries[i].report = std::move(a.report);
      } catch (const ParseError& e) {
        s["status"] = "parse_error";
        s["error"] = e.what();
        s["exit_code"] = num(kExitParse);
      } catch (const ValidationError& e) {
        s["status"] = "validation_error";
        s["error"] = e.what();
        s["exit_code"] = num(kExitValidation);
      } catch (const DomainError& e) {
        s["status"] = "validation_error";
        s["error"] = e.what();
        s["exit_code"] = num(kExitValidation);
      }
      entries[i].summary = std::move(s);
    }
  };
  const int jobs = std::max(1, options.jobs);
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
    work();
  }

  json listing = json::array();
  json reports = json::object();
  std::map<std::string, std::int64_t> counts{{"Certified", 0}, {"NotCertified", 0}, {"Reducible", 0}, {"errors", 0}};
  for (std::size_t i = 0; i < files.size(); ++i) {
    const json& s = entries[i].summary;
    if (s["status"] == "ok") {
      ++counts[s["verdict"].get<std::string>()];
      const std::string name = s["file"].get<std::string>();
      reports[name] = entries[i].report;
      if (options.out_dir) {
        fs::create_directories(*options.out_dir);
        std::ofstream out(*options.out_dir / (files[i].stem().string() + ".report.json"), std::ios::binary);
        out << dump(entries[i].report);
      }
    } else {
      ++counts["errors"];
    }
    listing.push_back(s);
  }
  json count_json = json::object();
  for (const auto& [k, v] : counts) count_json[k] = num(v);

  BatchResult result;
  result.summary = {{"schema_version", kSchemaVersion},
                    {"tool_version", kToolVersion},
                    {"files", listing},
                    {"counts", count_json},
                    {"reports", reports}};
  result.exit_code = counts["errors"] > 0 ? kExitNegative : kExitOk;
  return result;
}

}  // namespace supertower
