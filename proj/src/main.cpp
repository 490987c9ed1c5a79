#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quiddity/arith.hpp"
#include "quiddity/bounds.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qlab;

std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Elt> parse_tuple(const Ring& r, const std::string& s) {
  std::vector<Elt> out;
  if (s.empty()) return out;
  for (const auto& part : split_top(s)) out.push_back(r.parse_element(part));
  return out;
}

json tuple_json(const Ring& r, const std::vector<Elt>& t) {
  json a = json::array();
  for (Elt x : t) a.push_back(r.show(x));
  return a;
}

json report_json(const FamilyReport& rep) {
  const Ring& r = rep.tuple.ring;
  json j;
  j["family"] = family_name(rep.kind);
  j["params"] = tuple_json(r, rep.params);
  j["size"] = rep.size;
  j["tuple"] = tuple_json(r, rep.tuple.a);
  j["sign"] = rep.sign;
  j["irreducible"] = rep.irreducible;
  j["decided_by"] = rep.decided_by;
  json cd = json::object();
  for (const auto& [k, v] : rep.criterion_data) cd[k] = v;
  j["criterion_data"] = cd;
  return j;
}

int emit(const std::string& text, const std::string& golden) {
  std::cout << text;
  if (golden.empty()) return 0;
  std::ifstream f(golden, std::ios::binary);
  if (!f) {
    std::cerr << "golden file not found: " << golden << "\n";
    return 1;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  if (ss.str() != text) {
    std::cerr << "golden mismatch: " << golden << "\n";
    return 1;
  }
  return 0;
}

int emit_json(const json& j, const std::string& golden) {
  return emit(j.dump(2) + "\n", golden);
}

struct FamilySpec {
  std::string kind;
  unsigned arity;
};

const std::vector<FamilySpec> kFamilies = {
    {"monomial", 1},   {"dynomial", 2},      {"inverse-pair", 1}, {"trinomial", 1},
    {"quadrinomial", 2}, {"quasi-monomial", 1}, {"towed", 1},        {"polarized", 1},
};

FamilyReport run_family(const std::string& kind, const Ring& r, const std::vector<Elt>& ps) {
  if (kind == "monomial") return monomial_minimal(r, ps[0]);
  if (kind == "dynomial") return dynomial_minimal(r, ps[0], ps[1]);
  if (kind == "inverse-pair") return dynomial_inverse_pair(r, ps[0]);
  if (kind == "trinomial") return trinomial_minimal(r, ps[0]);
  if (kind == "quadrinomial") return quadrinomial_minimal(r, ps[0], ps[1]);
  if (kind == "quasi-monomial") return quasi_monomial_minimal(r, ps[0]);
  if (kind == "towed") return towed_minimal(r, ps[0]);
  return polarized_minimal(r, ps[0]);
}

unsigned family_arity(const std::string& kind) {
  for (const auto& f : kFamilies)
    if (f.kind == kind) return f.arity;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("QUIDDITY_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) set_budget(v);
  }

  CLI::App app{"lambda-quiddity computations over Z/N and GF(p^n)"};
  app.require_subcommand(1);

  std::string ring_spec, tuple_str, left_str, right_str, params_str;
  std::string kind, format = "json", golden;
  bool all = false, want_upper = false, verbose = false;
  unsigned threads = 1;
  std::uint64_t p_arg = 0, nmax = 64, from = 0, to = 0, m_arg = 0;
  std::int64_t a_arg = 0;
  unsigned mphi_from = 2, mphi_to = 64;

  auto* ring_info = app.add_subcommand("ring-info", "Describe a ring");
  ring_info->add_option("--ring", ring_spec)->required();
  ring_info->add_option("--golden", golden);

  auto* cont = app.add_subcommand("continuant", "Continuant and matrix of a tuple");
  cont->add_option("--ring", ring_spec)->required();
  cont->add_option("--tuple", tuple_str)->required();
  cont->add_option("--golden", golden);

  auto* check = app.add_subcommand("check", "Solution test, sign, reducibility");
  check->add_option("--ring", ring_spec)->required();
  check->add_option("--tuple", tuple_str)->required();
  check->add_option("--golden", golden);

  auto* opl = app.add_subcommand("oplus", "Sum of two tuples");
  opl->add_option("--ring", ring_spec)->required();
  opl->add_option("--left", left_str)->required();
  opl->add_option("--right", right_str)->required();
  opl->add_option("--golden", golden);

  auto* equiv = app.add_subcommand("equivalent", "Rotation/reversal equivalence");
  equiv->add_option("--ring", ring_spec)->required();
  equiv->add_option("--left", left_str)->required();
  equiv->add_option("--right", right_str)->required();
  equiv->add_option("--golden", golden);

  auto* fam = app.add_subcommand("family", "Minimal solution of a family");
  {
    std::vector<std::string> names;
    for (const auto& f : kFamilies) names.push_back(f.kind);
    fam->add_option("kind", kind)->required()->check(CLI::IsMember(names));
  }
  fam->add_option("--ring", ring_spec)->required();
  fam->add_option("--params", params_str);
  fam->add_flag("--all", all, "Iterate the whole parameter domain");
  fam->add_option("--golden", golden);

  auto* ell = app.add_subcommand("ell", "Bounds on the maximal irreducible size");
  ell->add_option("--ring", ring_spec)->required();
  ell->add_flag("--upper", want_upper, "Run the survivor search");
  ell->add_option("--nmax", nmax);
  ell->add_option("--golden", golden);

  auto* sdy = app.add_subcommand("scan-dynomial", "Certified dynomial pairs mod p");
  sdy->add_option("-p,--prime", p_arg)->required();
  sdy->add_option("--threads", threads);
  sdy->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  sdy->add_option("--golden", golden);

  auto* str = app.add_subcommand("scan-trinomial", "Root-test survivors mod p");
  str->add_option("-p,--prime", p_arg)->required();
  str->add_option("--threads", threads);
  str->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  str->add_option("--golden", golden);

  auto* conj = app.add_subcommand("conjecture", "Generator conjecture over a prime range");
  conj->add_option("--from", from)->required();
  conj->add_option("--to", to)->required();
  conj->add_option("--threads", threads);
  conj->add_flag("--verbose", verbose, "Log the witness generator per prime");
  conj->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  conj->add_option("--golden", golden);

  auto* mphi = app.add_subcommand("mersenne-phi", "Totients of Mersenne numbers");
  mphi->add_option("--from", mphi_from);
  mphi->add_option("--to", mphi_to);
  mphi->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  mphi->add_option("--golden", golden);

  auto* sqs = app.add_subcommand("squares", "Square table of a field");
  sqs->add_option("--ring", ring_spec)->required();
  sqs->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  sqs->add_option("--golden", golden);

  auto* leg = app.add_subcommand("legendre", "Legendre symbol");
  leg->add_option("-a", a_arg)->required();
  leg->add_option("-p", p_arg)->required();
  leg->add_option("--golden", golden);

  auto* szy = app.add_subcommand("szymiczek", "Generator power-sum identity");
  szy->add_option("--ring", ring_spec)->required();
  szy->add_option("-m", m_arg)->required();
  szy->add_option("--golden", golden);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (ring_info->parsed()) {
      const Ring r = Ring::parse(ring_spec);
      json j;
      j["ring"] = r.spec();
      j["kind"] = r.kind() == Ring::Kind::GF ? "gf" : "zmod";
      j["cardinality"] = r.cardinality();
      j["characteristic"] = r.characteristic();
      j["is_field"] = r.is_field();
      if (r.kind() == Ring::Kind::GF) {
        j["p"] = r.p();
        j["degree"] = r.degree();
        j["modpoly"] = r.modpoly();
      }
      return emit_json(j, golden);
    }

    if (cont->parsed()) {
      const Ring r = Ring::parse(ring_spec);
      const std::vector<Elt> t = parse_tuple(r, tuple_str);
      json j;
      j["ring"] = r.spec();
      j["tuple"] = tuple_json(r, t);
      j["continuant"] = r.show(continuant(r, t));
      if (!t.empty()) {
        const Mat2 m = m_matrix(r, t);
        j["matrix"] = json::array({json::array({r.show(m.a), r.show(m.b)}),
                                   json::array({r.show(m.c), r.show(m.d)})});
      }
      return emit_json(j, golden);
    }

    if (check->parsed()) {
      const Ring r = Ring::parse(ring_spec);
      const Tuple t{r, parse_tuple(r, tuple_str)};
      json j;
      const auto sign = is_quiddity(t);
      if (!sign) {
        j["solution"] = false;
        return emit_json(j, golden);
      }
      j["solution"] = true;
      j["sign"] = *sign;
      if (t.size() < 3) {
        j["reducible"] = nullptr;
      } else {
        const auto w = is_reducible(t);
        j["reducible"] = w.has_value();
        if (w) {
          json wj;
          wj["start"] = w->start;
          wj["window_len"] = w->window_len;
          wj["summand"] = tuple_json(r, w->summand.a);
          wj["complement"] = tuple_json(r, w->complement.a);
          j["witness"] = wj;
        }
      }
      return emit_json(j, golden);
    }

    if (opl->parsed()) {
      const Ring r = Ring::parse(ring_spec);
      const Tuple lhs{r, parse_tuple(r, left_str)};
      const Tuple rhs{r, parse_tuple(r, right_str)};
      const Tuple sum = oplus(lhs, rhs);
      json j;
      j["ring"] = r.spec();
      j["left"] = tuple_json(r, lhs.a);
      j["right"] = tuple_json(r, rhs.a);
      j["result"] = tuple_json(r, sum.a);
      return emit_json(j, golden);
    }

    if (equiv->parsed()) {
      const Ring r = Ring::parse(ring_spec);
      const Tuple lhs{r, parse_tuple(r, left_str)};
      const Tuple rhs{r, parse_tuple(r, right_str)};
      json j;
      j["equivalent"] = equivalent(lhs, rhs);
      return emit_json(j, golden);
    }

    if (fam->parsed()) {
      const Ring r = Ring::parse(ring_spec);
      const unsigned arity = family_arity(kind);
      json j;
      j["ring"] = r.spec();
      j["family"] = kind;
      if (all) {
        if (r.cardinality() > 64) raise(Err::TooLarge, "batch capped at cardinality 64");
        json reports = json::array();
        std::vector<std::vector<Elt>> domain;
        const std::uint64_t q = r.cardinality();
        if (arity == 1) {
          for (Elt x = 0; x < q; ++x) domain.push_back({x});
        } else {
          for (Elt x = 0; x < q; ++x)
            for (Elt y = 0; y < q; ++y) domain.push_back({x, y});
        }
        for (const auto& ps : domain) {
          try {
            reports.push_back(report_json(run_family(kind, r, ps)));
          } catch (const Error& e) {
            json row;
            row["params"] = tuple_json(r, ps);
            row["error"] = err_name(e.kind());
            reports.push_back(row);
          }
        }
        j["reports"] = reports;
        return emit_json(j, golden);
      }
      const std::vector<Elt> ps = parse_tuple(r, params_str);
      if (ps.size() != arity) raise(Err::OutOfRange, "wrong number of parameters");
      const json rep = report_json(run_family(kind, r, ps));
      for (const auto& [k, v] : rep.items())
        if (k != "family") j[k] = v;
      return emit_json(j, golden);
    }

    if (ell->parsed()) {
      const Ring r = Ring::parse(ring_spec);
      const EllBound lb = ell_lower_bound(r);
      json j;
      j["ring"] = r.spec();
      j["lower"] = lb.lower;
      j["lower_witness"] = report_json(lb.lower_witness);
      j["theoretic_upper"] = ell_theoretic_upper(r);
      int rc = 0;
      if (want_upper) {
        const SurvivorSearch s = ell_upper_bound_search(r, nmax);
        if (s.upper) {
          j["upper"] = *s.upper;
          j["upper_method"] = "exhaustive-search";
        } else {
          j["upper"] = nullptr;
          j["upper_method"] = "none";
        }
        json counts = json::array();
        for (const auto& [d, c] : s.counts) counts.push_back(json::array({d, c}));
        json sj;
        sj["counts"] = counts;
        sj["cutoff"] = s.cutoff ? json(*s.cutoff) : json(nullptr);
        sj["budget_exhausted"] = s.budget_exhausted;
        j["search"] = sj;
        if (s.budget_exhausted) rc = 3;
      } else {
        j["upper"] = nullptr;
        j["upper_method"] = "none";
      }
      const int erc = emit_json(j, golden);
      return rc != 0 ? rc : erc;
    }

    if (sdy->parsed()) {
      const auto pairs = scan_dynomial_pairs(p_arg, threads);
      if (format == "csv") {
        std::string text = "a,b\n";
        for (const auto& [a, b] : pairs)
          text += std::to_string(a) + "," + std::to_string(b) + "\n";
        return emit(text, golden);
      }
      json j;
      j["p"] = p_arg;
      j["count"] = pairs.size();
      json rows = json::array();
      for (const auto& [a, b] : pairs) rows.push_back(json::array({a, b}));
      j["pairs"] = rows;
      return emit_json(j, golden);
    }

    if (str->parsed()) {
      const auto units = scan_trinomial(p_arg, threads);
      if (format == "csv") {
        std::string text = "u\n";
        for (const auto u : units) text += std::to_string(u) + "\n";
        return emit(text, golden);
      }
      json j;
      j["p"] = p_arg;
      j["count"] = units.size();
      j["units"] = units;
      return emit_json(j, golden);
    }

    if (conj->parsed()) {
      const auto bad =
          verify_generator_conjecture(from, to, threads, verbose ? &std::cerr : nullptr);
      if (format == "csv") {
        std::string text = "p\n";
        for (const auto p : bad) text += std::to_string(p) + "\n";
        return emit(text, golden);
      }
      json j;
      j["from"] = from;
      j["to"] = to;
      j["counterexamples"] = bad;
      j["verified"] = bad.empty();
      return emit_json(j, golden);
    }

    if (mphi->parsed()) {
      if (mphi_from < 2 || mphi_from > mphi_to || mphi_to > 64)
        raise(Err::OutOfRange, "need 2 <= from <= to <= 64");
      const auto deficient = mersenne_phi_deficit(mphi_from, mphi_to);
      if (format == "csv") {
        std::string text = "n,mersenne,phi,deficient\n";
        for (unsigned n = mphi_from; n <= mphi_to; ++n) {
          const std::uint64_t mer = n == 64 ? ~0ull : (1ull << n) - 1;
          const bool def = std::find(deficient.begin(), deficient.end(), n) != deficient.end();
          text += std::to_string(n) + "," + std::to_string(mer) + "," +
                  std::to_string(mersenne_phi(n)) + "," + (def ? "true" : "false") + "\n";
        }
        return emit(text, golden);
      }
      json j;
      j["from"] = mphi_from;
      j["to"] = mphi_to;
      json rows = json::array();
      for (unsigned n = mphi_from; n <= mphi_to; ++n) {
        const std::uint64_t mer = n == 64 ? ~0ull : (1ull << n) - 1;
        json row;
        row["n"] = n;
        row["mersenne"] = mer;
        row["phi"] = mersenne_phi(n);
        row["deficient"] =
            std::find(deficient.begin(), deficient.end(), n) != deficient.end();
        rows.push_back(row);
      }
      j["rows"] = rows;
      j["deficient"] = deficient;
      return emit_json(j, golden);
    }

    if (sqs->parsed()) {
      const Ring r = Ring::parse(ring_spec);
      const auto table = square_table(r);
      if (format == "csv") {
        std::string text = "x\n";
        for (const Elt x : table) text += r.show(x) + "\n";
        return emit(text, golden);
      }
      json j;
      j["ring"] = r.spec();
      j["count"] = table.size();
      j["squares"] = tuple_json(r, table);
      return emit_json(j, golden);
    }

    if (leg->parsed()) {
      json j;
      j["a"] = a_arg;
      j["p"] = p_arg;
      j["legendre"] = legendre(a_arg, p_arg);
      return emit_json(j, golden);
    }

    if (szy->parsed()) {
      const Ring r = Ring::parse(ring_spec);
      json j;
      j["ring"] = r.spec();
      j["m"] = m_arg;
      j["ok"] = szymiczek_sum_check(r, m_arg);
      return emit_json(j, golden);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return is_budget_error(e.kind()) ? 3 : 1;
  }
  return 0;
}
