#include "fsc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fsc/elliptic.hpp"
#include "fsc/embedding.hpp"
#include "fsc/errors.hpp"
#include "fsc/json_io.hpp"
#include "fsc/multiplication.hpp"
#include "fsc/norms.hpp"
#include "fsc/rescale.hpp"
#include "fsc/svg.hpp"
#include "fsc/trichotomy.hpp"

namespace fsc {

nlohmann::json decision_json(const Decision& decision) {
  nlohmann::json clauses = nlohmann::json::array();
  for (const Clause& c : decision.clauses)
    clauses.push_back({{"tag", c.tag}, {"citation", c.citation},
                       {"status", clause_status_name(c.status)}});
  return {{"verdict", decision.verdict},
          {"marginal", decision.any_marginal()},
          {"clauses", clauses}};
}

nlohmann::json triple_json(const IndexTriple& x) {
  nlohmann::json j = {{"sigma", format_rational(x.sigma)},
                      {"a", format_rational(Rational(1) / x.inv_a)}};
  if (x.inv_b) j["b"] = format_rational(Rational(1) / *x.inv_b);
  return j;
}

nlohmann::json path_json(const BootstrapPath& path) {
  nlohmann::json steps = nlohmann::json::array();
  for (const BootstrapStep& st : path.steps) {
    nlohmann::json checks = nlohmann::json::array();
    for (const Clause& c : st.justification.clauses)
      checks.push_back({{"tag", c.tag}, {"status", clause_status_name(c.status)}});
    steps.push_back({{"from", triple_json(st.from)},
                     {"to", triple_json(st.to)},
                     {"stage", st.stage},
                     {"checks", checks}});
  }
  return {{"op", render_operator_params(path.op)},
          {"coeff", render_space(path.op.coeff)},
          {"target", triple_json(path.target)},
          {"steps", steps}};
}

nlohmann::json polygon_json(const RegionPolygon& poly) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& [sigma, inv_a] : poly.vertices)
    vertices.push_back({{"sigma", format_rational(sigma)},
                        {"inv_a", format_rational(inv_a)}});
  nlohmann::json edges = nlohmann::json::array();
  for (const RegionEdge& e : poly.edges)
    edges.push_back({{"label", e.label}, {"fine_condition", e.fine_condition}});
  return {{"vertices", vertices}, {"edges", edges}};
}

namespace {

std::vector<std::string> collect_citations(const Decision& decision) {
  std::vector<std::string> tags;
  for (const Clause& c : decision.clauses)
    if (c.status != ClauseStatus::Inapplicable) tags.push_back(c.tag);
  return tags;
}

void emit(std::ostream& out, nlohmann::json payload, std::vector<std::string> citations,
          bool pretty) {
  nlohmann::json result = {{"status", "ok"},
                           {"payload", std::move(payload)},
                           {"citations", std::move(citations)}};
  if (pretty)
    out << result.dump(2) << '\n';
  else
    out << result.dump() << '\n';
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  if (text.find(':') != std::string::npos) {
    // RANGE form lo:hi:step
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) raise(Errc::UsageError, "range takes the form lo:hi:step");
    const Rational lo = parse_rational(parts[0]);
    const Rational hi = parse_rational(parts[1]);
    const Rational step = parse_rational(parts[2]);
    if (!(step > 0) || hi < lo) raise(Errc::UsageError, "bad range bounds");
    for (Rational v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item, pos));
  if (out.empty()) raise(Errc::UsageError, "empty rational list");
  return out;
}

DomainKind parse_domain(const std::string& name) {
  if (name == "rn") return DomainKind::WholeSpace;
  if (name == "bounded") return DomainKind::BoundedOpen;
  if (name == "smooth") return DomainKind::BoundedSmooth;
  raise(Errc::UsageError, "domain must be rn, bounded or smooth");
}

void write_text_output(const std::string& text, const std::string& out_path,
                       std::ostream& fallback) {
  if (out_path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) raise(Errc::IoError, "cannot open '" + out_path + "' for writing");
  f << text;
}

struct CliState {
  bool pretty = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"function-space calculus toolkit"};
  app.set_help_flag("--help", "print usage");
  CliState state;
  app.add_flag("--pretty", state.pretty, "indent JSON output");

  // ---- check-embed ----------------------------------------------------
  auto* embed_cmd = app.add_subcommand("check-embed", "decide a same-scale embedding")->fallthrough();
  std::string embed_src, embed_dst, embed_dom = "bounded";
  embed_cmd->add_option("--src", embed_src, "source space SPEC")->required();
  embed_cmd->add_option("--dst", embed_dst, "target space SPEC")->required();
  embed_cmd->add_option("--domain", embed_dom, "rn | bounded | smooth");
  embed_cmd->callback([&] {
    const SpaceSpec src = parse_space(embed_src);
    const SpaceSpec dst = parse_space(embed_dst);
    const DomainKind dom = parse_domain(embed_dom);
    const Decision d = embeds(src, dst, dom);
    nlohmann::json payload = decision_json(d);
    payload["canonical"] = {{"src", render_space(src)},
                            {"dst", render_space(dst)},
                            {"domain", embed_dom}};
    emit(out, payload, collect_citations(d), state.pretty);
  });

  // ---- check-mult ------------------------------------------------------
  auto* mult_cmd = app.add_subcommand("check-mult", "decide a pointwise multiplication")->fallthrough();
  std::string mult_f1, mult_f2, mult_target;
  mult_cmd->add_option("--f1", mult_f1, "first factor SPEC")->required();
  mult_cmd->add_option("--f2", mult_f2, "second factor SPEC")->required();
  mult_cmd->add_option("--target", mult_target, "product SPEC")->required();
  mult_cmd->callback([&] {
    const MultQuery q =
        make_mult_query(parse_space(mult_f1), parse_space(mult_f2), parse_space(mult_target));
    const Decision d = may_multiply(q);
    nlohmann::json payload = decision_json(d);
    payload["canonical"] = {{"f1", render_space(q.f1)},
                            {"f2", render_space(q.f2)},
                            {"target", render_space(q.target)}};
    emit(out, payload, collect_citations(d), state.pretty);
  });

  // ---- sweep-mult ------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand("sweep-mult", "multiplication verdicts over a grid")->fallthrough();
  std::string sweep_kind = "H", sweep_s = "-2:3:1/2", sweep_invp = "1/4,1/3,1/2,2/3,3/4",
              sweep_invq, sweep_out;
  int sweep_n = 1;
  sweep_cmd->add_option("--kind", sweep_kind, "H | W | F | B");
  sweep_cmd->add_option("--n", sweep_n, "dimension");
  sweep_cmd->add_option("--s", sweep_s, "smoothness list or lo:hi:step");
  sweep_cmd->add_option("--invp", sweep_invp, "list of 1/p values");
  sweep_cmd->add_option("--invq", sweep_invq, "list of 1/q values (F/B)");
  sweep_cmd->add_option("--out", sweep_out, "write CSV here instead of stdout");
  sweep_cmd->callback([&] {
    SpaceKind kind;
    if (sweep_kind == "H") kind = SpaceKind::BesselH;
    else if (sweep_kind == "W") kind = SpaceKind::SlobodeckijW;
    else if (sweep_kind == "F") kind = SpaceKind::TriebelF;
    else if (sweep_kind == "B") kind = SpaceKind::BesovB;
    else raise(Errc::UsageError, "kind must be H, W, F or B");
    std::vector<Rational> qs;
    if (!sweep_invq.empty()) qs = parse_rational_list(sweep_invq);
    else if (kind_has_fine(kind)) qs = {rat(1, 2)};
    const auto ss = parse_rational_list(sweep_s);
    const auto ps = parse_rational_list(sweep_invp);
    const double fine_count = kind_has_fine(kind) ? static_cast<double>(qs.size()) : 1.0;
    const double rows_estimate = std::pow(static_cast<double>(ss.size()), 3) *
                                 std::pow(static_cast<double>(ps.size()), 3) *
                                 std::pow(fine_count, 3);
    if (rows_estimate > 5e6)
      raise(Errc::UsageError, "sweep grid would produce more than 5e6 rows; narrow it");
    const auto rows = mult_grid_sweep(kind, sweep_n, ss, ps, qs);
    std::ostringstream csv;
    csv << "kind,n,s1,s2,s,invp1,invp2,invp,invq1,invq2,invq,verdict,marginal\n";
    for (const SweepRow& r : rows)
      csv << sweep_kind << ',' << sweep_n << ',' << format_rational(r.s1) << ','
          << format_rational(r.s2) << ',' << format_rational(r.s) << ','
          << format_rational(r.inv_p1) << ',' << format_rational(r.inv_p2) << ','
          << format_rational(r.inv_p) << ',' << format_rational(r.inv_q1) << ','
          << format_rational(r.inv_q2) << ',' << format_rational(r.inv_q) << ','
          << (r.verdict ? 1 : 0) << ',' << (r.marginal ? 1 : 0) << '\n';
    write_text_output(csv.str(), sweep_out, out);
  });

  // ---- index-set -------------------------------------------------------
  auto* index_cmd = app.add_subcommand("index-set", "compatible index set queries")->fallthrough();
  std::string index_op, index_coeff, index_contains, index_out, index_format = "json";
  bool index_nonempty = false, index_polygon = false;
  index_cmd->add_option("--op", index_op, "operator orders 'L[d=..,d0=..]'")->required();
  index_cmd->add_option("--coeff", index_coeff, "coefficient space SPEC")->required();
  index_cmd->add_option("--contains", index_contains, "triple 'sigma=..,a=..[,b=..]'");
  index_cmd->add_flag("--nonempty", index_nonempty, "test nonemptiness");
  index_cmd->add_flag("--polygon", index_polygon, "emit the region polygon");
  index_cmd->add_option("--format", index_format, "polygon output: json | svg | csv");
  index_cmd->add_option("--out", index_out, "write output here instead of stdout");
  index_cmd->callback([&] {
    const auto [d, d0] = parse_operator_params(index_op);
    const OperatorClass op = make_operator_class(d, d0, parse_space(index_coeff));
    nlohmann::json canonical = {{"op", render_operator_params(op)},
                                {"coeff", render_space(op.coeff)}};
    if (!index_contains.empty()) {
      const IndexTriple x = parse_triple(index_contains, kind_has_fine(op.coeff.kind));
      const Decision dec = mapping_ok(op, x);
      nlohmann::json payload = decision_json(dec);
      canonical["contains"] = render_triple(x);
      payload["canonical"] = canonical;
      emit(out, payload, collect_citations(dec), state.pretty);
      return;
    }
    if (index_polygon) {
      const RegionPolygon poly = region_polygon(op);
      if (index_format == "svg") {
        write_text_output(region_svg(op), index_out, out);
      } else if (index_format == "csv") {
        std::ostringstream csv;
        csv << "sigma,inv_a\n";
        for (const auto& [sigma, inv_a] : poly.vertices)
          csv << format_rational(sigma) << ',' << format_rational(inv_a) << '\n';
        write_text_output(csv.str(), index_out, out);
      } else {
        nlohmann::json payload = polygon_json(poly);
        payload["canonical"] = canonical;
        emit(out, payload, {}, state.pretty);
      }
      return;
    }
    if (!index_nonempty) raise(Errc::UsageError, "choose --contains, --nonempty or --polygon");
    const IndexSetReport report = index_set_nonempty(op);
    nlohmann::json payload = decision_json(report.decision);
    nlohmann::json members = nlohmann::json::array();
    for (const IndexTriple& x : report.canonical) members.push_back(triple_json(x));
    payload["canonical_members"] = members;
    payload["canonical"] = canonical;
    emit(out, payload, collect_citations(report.decision), state.pretty);
  });

  // ---- plan-bootstrap ---------------------------------------------------
  auto* plan_cmd = app.add_subcommand("plan-bootstrap", "plan a regularity bootstrap path")->fallthrough();
  std::string plan_op, plan_coeff, plan_target, plan_svg;
  plan_cmd->add_option("--op", plan_op, "operator orders 'L[d=..,d0=..]'")->required();
  plan_cmd->add_option("--coeff", plan_coeff, "coefficient space SPEC")->required();
  plan_cmd->add_option("--target", plan_target, "triple 'sigma=..,a=..[,b=..]'")->required();
  plan_cmd->add_option("--emit-svg", plan_svg, "write an SVG of the path here");
  plan_cmd->callback([&] {
    const auto [d, d0] = parse_operator_params(plan_op);
    const OperatorClass op = make_operator_class(d, d0, parse_space(plan_coeff));
    const IndexTriple target = parse_triple(plan_target, kind_has_fine(op.coeff.kind));
    const BootstrapPath path = plan_bootstrap(op, target);
    const Decision check = validate_path(op, path);
    nlohmann::json payload = path_json(path);
    payload["validation"] = decision_json(check);
    payload["canonical"] = {{"op", render_operator_params(op)},
                            {"coeff", render_space(op.coeff)},
                            {"target", render_triple(target)}};
    if (!plan_svg.empty()) write_text_output(bootstrap_svg(op, path), plan_svg, out);
    emit(out, payload, collect_citations(check), state.pretty);
  });

  // ---- numeric ----------------------------------------------------------
  auto* numeric = app.add_subcommand("numeric", "grid-based verification kernels")->fallthrough();
  numeric->require_subcommand(1);

  auto* norm_cmd = numeric->add_subcommand("lp-norm", "space norm of a sampled field")->fallthrough();
  std::string norm_field, norm_space;
  norm_cmd->add_option("--field", norm_field, "fld1 file")->required();
  norm_cmd->add_option("--space", norm_space, "space SPEC")->required();
  norm_cmd->callback([&] {
    const GridField u = read_field_file(norm_field);
    const SpaceSpec sp = parse_space(norm_space);
    nlohmann::json payload = {{"norm", space_norm(u, sp)},
                              {"canonical", {{"field", norm_field}, {"space", render_space(sp)}}}};
    emit(out, payload, {}, state.pretty);
  });

  auto* fit_cmd = numeric->add_subcommand("rescale-fit", "fit the rescaling exponent")->fallthrough();
  std::string fit_field, fit_space, fit_rs = "1/2,1/4,1/8,1/16,1/32";
  bool fit_vanishing = false;
  fit_cmd->add_option("--field", fit_field, "fld1 file")->required();
  fit_cmd->add_option("--space", fit_space, "space SPEC")->required();
  fit_cmd->add_option("--r-list", fit_rs, "decreasing factors in (0,1]");
  fit_cmd->add_flag("--vanishing", fit_vanishing, "field vanishes at the origin");
  fit_cmd->callback([&] {
    const GridField u = read_field_file(fit_field);
    const SpaceSpec sp = parse_space(fit_space);
    std::vector<double> rs;
    for (const Rational& r : parse_rational_list(fit_rs)) rs.push_back(to_double(r));
    const RescaleFit fit = fit_rescaling_exponent(u, sp, fit_vanishing, rs);
    nlohmann::json payload = {
        {"slope", fit.slope},
        {"max_log_residual", fit.max_residual},
        {"r", fit.r_values},
        {"norms", fit.norms},
        {"predicted_alpha", format_rational(fit.predicted.alpha)},
        {"predicted_marginal", fit.predicted.marginal},
        {"canonical",
         {{"field", fit_field}, {"space", render_space(sp)}, {"r-list", fit_rs},
          {"vanishing", fit_vanishing}}}};
    emit(out, payload, {}, state.pretty);
  });

  auto* tri_cmd = numeric->add_subcommand("trichotomy", "band-interaction residual")->fallthrough();
  std::string tri_u, tri_v;
  int tri_k = 0, tri_kp = 0, tri_kpp = 0;
  tri_cmd->add_option("--u", tri_u, "first factor fld1 file")->required();
  tri_cmd->add_option("--v", tri_v, "second factor fld1 file")->required();
  tri_cmd->add_option("--k", tri_k, "output band")->required();
  tri_cmd->add_option("--k1", tri_kp, "first factor band")->required();
  tri_cmd->add_option("--k2", tri_kpp, "second factor band")->required();
  tri_cmd->callback([&] {
    const GridField u = read_field_file(tri_u);
    const GridField v = read_field_file(tri_v);
    const TrichotomyResult res = trichotomy_residual(u, v, tri_k, tri_kp, tri_kpp);
    nlohmann::json payload = {{"residual", res.residual},
                              {"pattern", res.pattern},
                              {"allowed", res.allowed},
                              {"canonical",
                               {{"u", tri_u}, {"v", tri_v}, {"k", tri_k}, {"k1", tri_kp},
                                {"k2", tri_kpp}}}};
    emit(out, payload, {}, state.pretty);
  });

  auto* par_cmd = numeric->add_subcommand("parametrix-check", "parametrix identity residual")->fallthrough();
  std::string par_op;
  std::vector<std::string> par_fields;
  double par_cutoff = 1.0;
  par_cmd->add_option("--op-file", par_op, "operator JSON file")->required();
  par_cmd->add_option("--field", par_fields, "fld1 file per component")->required();
  par_cmd->add_option("--cutoff", par_cutoff, "parametrix cutoff radius");
  par_cmd->callback([&] {
    std::ifstream opf(par_op);
    if (!opf) raise(Errc::IoError, "cannot open '" + par_op + "'");
    std::stringstream buffer;
    buffer << opf.rdbuf();
    const ConstCoeffOperator opr = operator_from_json_text(buffer.str());
    FieldSet u;
    for (const std::string& f : par_fields) u.push_back(read_field_file(f));
    const EllipticityReport rep = is_elliptic(opr);
    nlohmann::json payload = {{"elliptic", rep.decision.verdict},
                              {"min_det", rep.min_abs_det}};
    if (rep.decision.verdict)
      payload["residual"] = parametrix_identity_residual(opr, u, par_cutoff);
    payload["canonical"] = {{"op-file", par_op}, {"field", par_fields},
                            {"cutoff", par_cutoff}};
    emit(out, payload, collect_citations(rep.decision), state.pretty);
  });

  // ---- render-figure ------------------------------------------------------
  auto* render = app.add_subcommand("render-figure", "SVG figures")->fallthrough();
  render->require_subcommand(1);

  auto* reg_fig = render->add_subcommand("s-region", "compatible index region")->fallthrough();
  std::string fig_op, fig_coeff, fig_out;
  reg_fig->add_option("--op", fig_op, "operator orders")->required();
  reg_fig->add_option("--coeff", fig_coeff, "coefficient space SPEC")->required();
  reg_fig->add_option("--out", fig_out, "write SVG here instead of stdout");
  reg_fig->callback([&] {
    const auto [d, d0] = parse_operator_params(fig_op);
    const OperatorClass op = make_operator_class(d, d0, parse_space(fig_coeff));
    write_text_output(region_svg(op), fig_out, out);
  });

  auto* boot_fig = render->add_subcommand("bootstrap", "bootstrap path over the region")->fallthrough();
  std::string bfig_op, bfig_coeff, bfig_target, bfig_out;
  boot_fig->add_option("--op", bfig_op, "operator orders")->required();
  boot_fig->add_option("--coeff", bfig_coeff, "coefficient space SPEC")->required();
  boot_fig->add_option("--target", bfig_target, "triple")->required();
  boot_fig->add_option("--out", bfig_out, "write SVG here instead of stdout");
  boot_fig->callback([&] {
    const auto [d, d0] = parse_operator_params(bfig_op);
    const OperatorClass op = make_operator_class(d, d0, parse_space(bfig_coeff));
    const IndexTriple target = parse_triple(bfig_target, kind_has_fine(op.coeff.kind));
    write_text_output(bootstrap_svg(op, plan_bootstrap(op, target)), bfig_out, out);
  });

  app.require_subcommand(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help() << std::flush;
    return 0;
  } catch (const CLI::ParseError& e) {
    nlohmann::json j = {{"status", "error"},
                        {"code", "UsageError"},
                        {"message", e.what()}};
    err << j.dump() << '\n';
    err << app.help() << std::flush;
    return 2;
  } catch (const Error& e) {
    nlohmann::json j = {{"status", "error"},
                        {"code", errc_name(e.code())},
                        {"message", e.what()}};
    if (e.offset()) j["offset"] = *e.offset();
    err << j.dump() << '\n';
    return e.code() == Errc::UsageError ? 2 : 3;
  } catch (const std::exception& e) {
    nlohmann::json j = {{"status", "error"}, {"code", "InternalError"}, {"message", e.what()}};
    err << j.dump() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace fsc
