#include "lehmer/braid.hpp"
#include "lehmer/dynamics.hpp"
#include "lehmer/freegroup.hpp"
#include "lehmer/poly_io.hpp"
#include "lehmer/predicates.hpp"
#include "lehmer/roots.hpp"
#include "lehmer/sequence.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace lehmer;
using json = nlohmann::json;

namespace {

// Exit code for malformed payloads (bad --poly etc.), same as CLI usage errors.
constexpr int kUsage = 2;
constexpr int kFailure = 1;

std::string resolve(const std::string& text) {
  if (text.empty() || text[0] != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw ParseError("cannot read input file " + text.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

json jint(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

json jrat(const BigRat& q) {
  if (denominator(q) == 1) return jint(numerator(q));
  return numerator(q).str() + "/" + denominator(q).str();
}

json jpoly(const IntPoly& f) {
  json c = json::array();
  for (const auto& x : f.coeffs()) c.push_back(jint(x));
  return {{"coeffs", c}, {"text", format_coeffs(f)}, {"human", format_human(f)}};
}

json jlaurent(const LaurentPoly& f) {
  json c = json::array();
  for (const auto& x : f.coeffs()) c.push_back(jint(x));
  return {{"coeffs", c}, {"min_deg", f.min_deg()}, {"human", format_laurent(f)}};
}

json jseq(const ExactSeq& a) {
  json terms = json::array();
  for (const auto& x : a.terms()) terms.push_back(jrat(x));
  return {{"terms", terms}, {"text", format_seq(a)}};
}

json jmatrix(const IntMatrix& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(jint(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json jroots(const std::vector<CertifiedRoot>& roots) {
  json out = json::array();
  for (const auto& r : roots)
    out.push_back({{"re", r.value.real()}, {"im", r.value.imag()}, {"radius", r.radius}, {"multiplicity", r.multiplicity}});
  return out;
}

BigInt json_to_bigint(const json& v) {
  if (v.is_number_integer()) return BigInt(v.get<long long>());
  if (v.is_string()) return parse_integer(v.get<std::string>());
  throw ParseError("matrix entries must be integers");
}

/// "[[2,1],[1,1]]" or "2,1;1,1".
IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<BigInt>> rows;
  if (!text.empty() && text.front() == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad matrix JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    for (const auto& row : j) {
      if (!row.is_array()) throw ParseError("matrix must be an array of rows");
      rows.emplace_back();
      for (const auto& v : row) rows.back().push_back(json_to_bigint(v));
    }
  } else {
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
      rows.emplace_back();
      std::stringstream cs(row);
      std::string cell;
      while (std::getline(cs, cell, ',')) rows.back().push_back(parse_integer(cell));
    }
  }
  try {
    return int_matrix(rows);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json growth_entries(const GrowthReport& r) {
  json out = json::array();
  for (const auto& e : r.entries) {
    json item{{"k", e.k}, {"value", e.value()}};
    item["exact"] = e.exact ? json(*e.exact) : json(nullptr);
    item["estimate"] = e.estimate ? json(*e.estimate) : json(nullptr);
    if (e.estimate) item["window"] = {{"min", e.window_min}, {"max", e.window_max}, {"first_n", e.first_n}, {"last_n", e.last_n}};
    out.push_back(item);
  }
  return out;
}

std::string verdict_name(IrreducibilityCertificate::Verdict v) {
  switch (v) {
    case IrreducibilityCertificate::Verdict::Irreducible: return "irreducible";
    case IrreducibilityCertificate::Verdict::Reducible: return "reducible";
    default: return "inconclusive";
  }
}

struct Inputs {
  std::string poly, seq, matrix, braid, endo, word, check = "all";
  std::size_t n = 1, k = 1, iters = 0, window = kDefaultWindow, degree = 0, bound = 30, mult = 2, strands = 0;
  double tol = kDefaultTolerance;
  bool json_only = false, boundary = false, sum = false, no_accel = false;
};

double default_tolerance() {
  if (const char* env = std::getenv("LEHMER_TOL")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
    }
  }
  return kDefaultTolerance;
}

std::size_t iters_or(const Inputs& in, std::size_t fallback) { return in.iters ? in.iters : fallback; }

BraidWord braid_input(const Inputs& in) {
  if (in.strands < 2) throw DomainError("--n must be at least 2 for braid commands");
  return parse_braid(resolve(in.braid), in.strands);
}

using Handler = std::function<json(const Inputs&, json&, std::string&)>;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for Mahler measures, growth rates, free group maps and braids"};
  app.require_subcommand(1);
  Inputs in;
  in.tol = default_tolerance();

  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto command = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--tol", in.tol, "root tolerance (env LEHMER_TOL)")->capture_default_str();
    sub->add_flag("--json-only", in.json_only, "no summary on stderr");
    commands.emplace_back(sub, std::move(h));
    return sub;
  };

  // mahler
  auto* c = command("mahler", "Mahler measure of an integer polynomial", [](const Inputs& in, json& input, std::string& summary) {
    const IntPoly f = parse_poly(resolve(in.poly));
    input["poly"] = jpoly(f);
    const auto m = mahler_measure(f, in.tol);
    summary = "M = " + std::to_string(m.value);
    return json{{"value", m.value}, {"error_bound", m.error_bound}, {"exact", m.exact},
                {"roots_outside", jroots(roots_outside_unit_circle(m.roots))}, {"root_radius", m.roots.radius}};
  });
  c->add_option("--poly", in.poly, "coefficients c0,c1,... or t^2 - 1")->required();

  c = command("poly-check", "cyclotomic / reciprocal / in-tr / irreducible predicates", [](const Inputs& in, json& input, std::string& summary) {
    const IntPoly f = parse_poly(resolve(in.poly));
    input["poly"] = jpoly(f);
    input["check"] = in.check;
    json out;
    const bool all = in.check == "all";
    if (all || in.check == "cyclotomic") {
      const auto fac = cyclotomic_factorization(f);
      out["cyclotomic"] = fac.has_value();
      out["cyclotomic_orders"] = fac ? json(*fac) : json(nullptr);
    }
    if (all || in.check == "reciprocal") out["reciprocal"] = is_reciprocal(f);
    if (all || in.check == "in-tr") out["in_tr"] = polynomial_in_t_power(f);
    if (all || in.check == "irreducible") {
      const auto cert = irreducibility_certificate(f);
      out["irreducible"] = {{"verdict", verdict_name(cert.verdict)}, {"method", cert.method}, {"witness_primes", cert.witness_primes}};
      if (cert.verdict == IrreducibilityCertificate::Verdict::Reducible) out["irreducible"]["factor"] = jpoly(cert.factor);
    }
    summary = out.dump();
    return out;
  });
  c->add_option("--poly", in.poly)->required();
  c->add_option("--check", in.check)->check(CLI::IsMember({"all", "cyclotomic", "reciprocal", "in-tr", "irreducible"}))->capture_default_str();

  c = command("hankel", "Hankel determinant H_{n,k}", [](const Inputs& in, json& input, std::string& summary) {
    const ExactSeq a = parse_seq(resolve(in.seq));
    input["seq"] = jseq(a);
    input["n"] = in.n;
    input["k"] = in.k;
    const BigRat h = hankel_det(a, in.n, in.k);
    summary = "H = " + jrat(h).dump();
    return json{{"value", jrat(h)}, {"approx", to_double(h)}};
  });
  c->add_option("--seq", in.seq)->required();
  c->add_option("--n", in.n)->required();
  c->add_option("--k", in.k)->required();

  c = command("growth", "generalized growth rates GR^(k), k <= K", [](const Inputs& in, json& input, std::string& summary) {
    const ExactSeq a = parse_seq(resolve(in.seq));
    input["seq"] = jseq(a);
    input["k"] = in.k;
    input["window"] = in.window;
    const auto r = growth_report(a, in.k, in.window, in.tol);
    summary = "max GR = " + std::to_string(r.max_growth());
    return json{{"entries", growth_entries(r)}, {"max_growth", r.max_growth()},
                {"min_poly", r.min_poly ? jpoly(*r.min_poly) : json(nullptr)}};
  });
  c->add_option("--seq", in.seq)->required();
  c->add_option("--k", in.k, "largest k")->capture_default_str();
  c->add_option("--window", in.window)->capture_default_str();

  c = command("fit-recurrence", "minimal integer recurrence by Berlekamp-Massey", [](const Inputs& in, json& input, std::string& summary) {
    const ExactSeq a = parse_seq(resolve(in.seq));
    const std::size_t d = in.degree ? in.degree : max_fit_degree(a.size());
    input["seq"] = jseq(a);
    input["degree"] = d;
    const auto r = fit_min_poly(a, d);
    if (!r) {
      summary = "no recurrence of degree <= " + std::to_string(d);
      return json{{"found", false}};
    }
    json init = json::array();
    for (const auto& x : r->init) init.push_back(jrat(x));
    summary = "min poly " + format_human(r->char_poly);
    return json{{"found", true}, {"char_poly", jpoly(r->char_poly)}, {"init", init}, {"offset", r->offset}};
  });
  c->add_option("--seq", in.seq)->required();
  c->add_option("--degree", in.degree, "largest degree tried (default N/3)");

  c = command("lefschetz", "Lefschetz numbers L(f^n) of an integer matrix", [](const Inputs& in, json& input, std::string& summary) {
    const IntMatrix a = parse_matrix(resolve(in.matrix));
    const std::size_t N = iters_or(in, 20);
    input["matrix"] = jmatrix(a);
    input["iters"] = N;
    input["boundary"] = in.boundary;
    const ExactSeq l = lefschetz_seq(a, in.boundary, N);
    summary = format_seq(l);
    return json{{"seq", jseq(l)}, {"char_poly", jpoly(char_poly(a))}};
  });
  c->add_option("--matrix", in.matrix)->required();
  c->add_option("--iters", in.iters, "N (default 20)");
  c->add_flag("--boundary", in.boundary, "include the boundary term");

  c = command("net-trace", "net traces tr_n of the roots of a polynomial", [](const Inputs& in, json& input, std::string& summary) {
    const IntPoly f = parse_poly(resolve(in.poly));
    const std::size_t N = iters_or(in, 20);
    input["poly"] = jpoly(f);
    input["iters"] = N;
    json out = json::array();
    for (const auto& v : net_traces(f, N)) out.push_back(jint(v));
    summary = out.dump();
    return json{{"net_traces", out}};
  });
  c->add_option("--poly", in.poly)->required();
  c->add_option("--iters", in.iters, "N (default 20)");

  c = command("perron", "Perron polynomial test", [](const Inputs& in, json& input, std::string& summary) {
    const IntPoly f = parse_poly(resolve(in.poly));
    const std::size_t N = iters_or(in, 50);
    input["poly"] = jpoly(f);
    input["iters"] = N;
    const auto r = perron_check(f, N, in.tol);
    summary = r.is_perron_candidate ? "Perron candidate" : "not a Perron candidate";
    return json{{"integer_coeffs", r.integer_coeffs},
                {"dominant_real", r.dominant_real},
                {"net_traces_ok", r.net_traces_ok},
                {"checked_up_to", r.checked_up_to},
                {"first_negative", r.first_negative ? json(*r.first_negative) : json(nullptr)},
                {"dominant_root", r.dominant_root ? json(*r.dominant_root) : json(nullptr)},
                {"is_perron_candidate", r.is_perron_candidate}};
  });
  c->add_option("--poly", in.poly)->required();
  c->add_option("--iters", in.iters, "net traces checked (default 50)");

  c = command("padding", "cyclotomic padding making all net traces nonnegative", [](const Inputs& in, json& input, std::string& summary) {
    const IntPoly f = parse_poly(resolve(in.poly));
    PaddingOptions opt;
    opt.n_net = iters_or(in, opt.n_net);
    opt.search_bound = in.bound;
    opt.max_multiplicity = in.mult;
    input["poly"] = jpoly(f);
    input["iters"] = opt.n_net;
    input["bound"] = opt.search_bound;
    input["mult"] = opt.max_multiplicity;
    const auto p = cyclotomic_padding(f, opt);
    if (!p) {
      summary = "no padding found";
      return json{{"found", false}};
    }
    summary = "padding " + format_human(p->phi);
    return json{{"found", true}, {"phi", jpoly(p->phi)}, {"orders", p->orders}, {"padded", jpoly(f * p->phi)}};
  });
  c->add_option("--poly", in.poly)->required();
  c->add_option("--iters", in.iters, "net traces checked (default 50)");
  c->add_option("--bound", in.bound, "largest cyclotomic order")->capture_default_str();
  c->add_option("--mult", in.mult, "largest multiplicity")->capture_default_str();

  c = command("primitivity", "primitivity of a nonnegative matrix", [](const Inputs& in, json& input, std::string& summary) {
    const IntMatrix a = parse_matrix(resolve(in.matrix));
    input["matrix"] = jmatrix(a);
    const bool p = primitivity(a);
    summary = p ? "primitive" : "not primitive";
    return json{{"primitive", p}};
  });
  c->add_option("--matrix", in.matrix)->required();

  c = command("fg-iterate", "word lengths |phi^n(w)|", [](const Inputs& in, json& input, std::string& summary) {
    const Endo phi = parse_endo(resolve(in.endo));
    const Word w = parse_word(resolve(in.word), phi.rank());
    const std::size_t N = iters_or(in, 10);
    input["endo"] = format_endo(phi);
    input["word"] = format_word(w);
    input["iters"] = N;
    const ExactSeq l = iterate_lengths(phi, w, N);
    summary = format_seq(l);
    return json{{"lengths", jseq(l)}};
  });
  c->add_option("--endo", in.endo, "a -> a b; b -> a")->required();
  c->add_option("--word", in.word)->required();
  c->add_option("--iters", in.iters, "N (default 10)");

  c = command("fg-growth", "growth rates GR^(k) of a free group endomorphism", [](const Inputs& in, json& input, std::string& summary) {
    const Endo phi = parse_endo(resolve(in.endo));
    GrowthOptions opt;
    opt.iterations = iters_or(in, opt.iterations);
    opt.window = in.window;
    opt.tol = in.tol;
    input["endo"] = format_endo(phi);
    input["k"] = in.k;
    input["iters"] = opt.iterations;
    input["window"] = opt.window;
    input["sum"] = in.sum;
    if (in.sum) {
      const auto r = growth_report_sum(phi, in.k, opt);
      summary = "max GR = " + std::to_string(r.max_growth());
      return json{{"entries", growth_entries(r)}, {"max_growth", r.max_growth()},
                  {"min_poly", r.min_poly ? jpoly(*r.min_poly) : json(nullptr)}};
    }
    const auto r = growth_report(phi, in.k, opt);
    json per = json::array();
    for (std::size_t i = 0; i < r.per_generator.size(); ++i) {
      const auto& g = r.per_generator[i];
      per.push_back({{"generator", r.basis[i]}, {"entries", growth_entries(g)},
                     {"min_poly", g.min_poly ? jpoly(*g.min_poly) : json(nullptr)}});
    }
    summary = "GR^(1) = " + std::to_string(r.maxima.size() > 1 ? r.maxima[1] : 1.0);
    return json{{"maxima", r.maxima}, {"per_generator", per}};
  });
  c->add_option("--endo", in.endo)->required();
  c->add_option("--k", in.k, "largest k")->capture_default_str();
  c->add_option("--iters", in.iters, "N (default 20)");
  c->add_option("--window", in.window)->capture_default_str();
  c->add_flag("--sum", in.sum, "use the summed length sequence");

  c = command("fg-from-matrix", "endomorphism g_i -> prod g_j^{a_ij}", [](const Inputs& in, json& input, std::string& summary) {
    const IntMatrix a = parse_matrix(resolve(in.matrix));
    input["matrix"] = jmatrix(a);
    const Endo phi = endo_from_matrix(a);
    summary = format_endo(phi);
    return json{{"endo", format_endo(phi)}, {"abelianization", jmatrix(abelianization(phi))}};
  });
  c->add_option("--matrix", in.matrix)->required();

  c = command("f2-positive-aut", "positive automorphism of F2 realizing a matrix", [](const Inputs& in, json& input, std::string& summary) {
    const IntMatrix a = parse_matrix(resolve(in.matrix));
    input["matrix"] = jmatrix(a);
    const auto r = positive_f2_aut(a);
    json d = json::array();
    for (const auto& x : r.d) d.push_back(jint(x));
    json cols = json::array();
    for (const auto& [p, q] : r.columns) cols.push_back({jint(p), jint(q)});
    summary = format_endo(r.phi);
    return json{{"endo", format_endo(r.phi)},
                {"images", {format_word(r.phi.image(1)), format_word(r.phi.image(2))}},
                {"swapped", r.swapped},
                {"d", d},
                {"columns", cols},
                {"abelianization", jmatrix(abelianization(r.phi))},
                {"nielsen_basis", nielsen_verify_basis(r.phi.image(1), r.phi.image(2))}};
  });
  c->add_option("--matrix", in.matrix)->required();

  c = command("burau", "reduced Burau matrix of a braid", [](const Inputs& in, json& input, std::string& summary) {
    const BraidWord b = braid_input(in);
    input["braid"] = format_braid(b);
    input["n"] = b.n;
    const BurauMat m = reduced_burau(b);
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(jlaurent(m(i, j)));
      rows.push_back(row);
    }
    summary = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " Burau matrix";
    return json{{"matrix", rows}};
  });
  c->add_option("--braid", in.braid, "s1 s2^-1 T^2")->required();
  c->add_option("--n", in.strands, "strands")->required();

  c = command("alexander", "reduced Alexander polynomial of a braid closure", [](const Inputs& in, json& input, std::string& summary) {
    const BraidWord b = braid_input(in);
    input["braid"] = format_braid(b);
    input["n"] = b.n;
    const LaurentPoly a = reduced_alexander(b);
    summary = format_laurent(a);
    return json{{"alexander", jlaurent(a)}, {"det_burau_minus_identity", jlaurent(det_burau_minus_identity(b))}};
  });
  c->add_option("--braid", in.braid)->required();
  c->add_option("--n", in.strands, "strands")->required();

  c = command("lehmer-gap", "Mahler measure of det(B - I)", [](const Inputs& in, json& input, std::string& summary) {
    const BraidWord b = braid_input(in);
    input["braid"] = format_braid(b);
    input["n"] = b.n;
    const auto m = lehmer_gap(b, in.tol);
    summary = "M = " + std::to_string(m.value);
    return json{{"value", m.value}, {"error_bound", m.error_bound}, {"det_burau_minus_identity", jlaurent(det_burau_minus_identity(b))}};
  });
  c->add_option("--braid", in.braid)->required();
  c->add_option("--n", in.strands, "strands")->required();

  c = command("entropy", "braid entropy estimate from the Artin action", [](const Inputs& in, json& input, std::string& summary) {
    const BraidWord b = braid_input(in);
    const std::size_t N = iters_or(in, 14);
    input["braid"] = format_braid(b);
    input["n"] = b.n;
    input["iters"] = N;
    input["accel"] = !in.no_accel;
    const auto e = entropy_estimate(b, N, !in.no_accel);
    summary = "GR = " + std::to_string(e.gr1) + ", h = " + std::to_string(e.log_gr1);
    return json{{"gr1", e.gr1},
                {"log_gr1", e.log_gr1},
                {"diagnostics",
                 {{"ratio", e.ratio},
                  {"aitken", e.aitken},
                  {"spread", e.spread},
                  {"root", e.root},
                  {"generator", e.generator},
                  {"ratios", e.ratios},
                  {"spreads", e.spreads},
                  {"block_spreads", e.block_spreads},
                  {"narrowing", e.narrowing},
                  {"per_generator", e.per_generator}}}};
  });
  c->add_option("--braid", in.braid)->required();
  c->add_option("--n", in.strands, "strands")->required();
  c->add_option("--iters", in.iters, "N (default 14)");
  c->add_flag("--no-accel", in.no_accel, "plain ratio instead of Aitken");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    json doc{{"command", sub->get_name()}, {"tolerance", in.tol}};
    json input = json::object();
    std::string summary;
    int code = 0;
    try {
      doc["result"] = handler(in, input, summary);
    } catch (const Error& e) {
      doc["error"] = {{"code", e.code()}, {"message", e.what()}};
      summary = std::string("error: ") + e.what();
      code = dynamic_cast<const ParseError*>(&e) ? kUsage : kFailure;
    }
    doc["input"] = input;
    std::cout << doc.dump(2) << "\n";
    if (!in.json_only) std::cerr << sub->get_name() << ": " << summary << "\n";
    return code;
  }
  return kUsage;
}
