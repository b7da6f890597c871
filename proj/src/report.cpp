#include "pellrep/report.hpp"

#include <algorithm>
#include <sstream>

namespace pellrep {

using json = nlohmann::ordered_json;

namespace {

std::string term_label(SequenceKind kind, unsigned long n) {
  return std::string(symbol(kind)) + "_" + std::to_string(n);
}

const char* stage_name(Stage s) { return s == Stage::L1Stage ? "l1" : "n"; }

std::string sci(const mpz_class& x, int digits = 4) {
  if (abs(x) < 1000000) return x.get_str();
  return BigFloat::from_integer(x, 128, MPFR_RNDU).to_string(digits, MPFR_RNDU);
}

json instance_json(const InstanceResult& r) {
  json j;
  j["d1"] = r.digits.d1;
  j["d2"] = r.digits.d2 >= 0 ? json(r.digits.d2) : json(nullptr);
  j["l1"] = r.digits.l1 > 0 ? json(r.digits.l1) : json(nullptr);
  if (const auto* bd = std::get_if<ReductionOutcome>(&r.outcome)) {
    j["method"] = "baker-davenport";
    j["q_index"] = bd->index;
    j["q"] = bd->q_used.get_str();
    j["epsilon"] = to_json(bd->epsilon, 6);
    j["attempts"] = bd->attempts;
  } else {
    const auto& lg = std::get<LegendreOutcome>(r.outcome);
    j["method"] = "legendre";
    j["q_index"] = lg.index;
    j["a_M"] = lg.a_M.get_str();
    j["M"] = lg.M_used.get_str();
    j["value"] = to_json(lg.value, 8);
  }
  j["bound"] = r.bound;
  return j;
}

std::string markdown_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) {
    std::string cell;
    for (char ch : c) {
      if (ch == '|') cell += '\\';
      cell += ch;
    }
    out += " " + cell + " |";
  }
  return out + "\n";
}

std::string markdown_rule(std::size_t n) {
  std::string out = "|";
  for (std::size_t i = 0; i < n; ++i) out += "---|";
  return out + "\n";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_field(cells[i]);
  }
  return out + "\r\n";
}

// One markdown table per (sequence, stage), one column per base.
std::string reduce_markdown(const std::vector<FamilyBound>& families) {
  std::ostringstream os;
  for (SequenceKind kind : {SequenceKind::Pell, SequenceKind::PellLucas}) {
    for (Stage stage : {Stage::L1Stage, Stage::NStage}) {
      std::vector<const FamilyBound*> row;
      for (const auto& f : families) {
        if (f.kind == kind && f.stage == stage) row.push_back(&f);
      }
      if (row.empty()) continue;
      os << "### " << name(kind) << ": reduction of " << stage_name(stage) << "\n\n";
      std::vector<std::string> base{"b"}, M{"M"}, q{"q_t"}, eps{"epsilon >="}, am{"a(M)"},
          bound{std::string(stage_name(stage)) + " <="};
      for (const FamilyBound* f : row) {
        base.push_back(std::to_string(f->base));
        M.push_back(sci(f->M));
        const ReductionOutcome* binding = nullptr;
        const BigFloat* min_eps = nullptr;
        mpz_class max_am = -1;
        for (const auto& r : f->per_instance) {
          if (const auto* bd = std::get_if<ReductionOutcome>(&r.outcome)) {
            if (!binding || r.bound > binding->w_max) binding = bd;
            if (!min_eps || compare(bd->epsilon.lo(), *min_eps) < 0) min_eps = &bd->epsilon.lo();
          } else {
            max_am = std::max(max_am, std::get<LegendreOutcome>(r.outcome).a_M);
          }
        }
        q.push_back(binding ? "q_" + std::to_string(binding->index) : "-");
        eps.push_back(min_eps ? min_eps->to_string(3, MPFR_RNDD) : "-");
        am.push_back(max_am >= 0 ? max_am.get_str() : "-");
        bound.push_back(std::to_string(f->bound));
      }
      os << markdown_row(base) << markdown_rule(base.size()) << markdown_row(M) << markdown_row(q)
         << markdown_row(eps) << markdown_row(am) << markdown_row(bound) << "\n";
    }
  }
  return os.str();
}

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "markdown" || text == "md") return OutputFormat::Markdown;
  throw InvalidArgument("unknown output format '" + text + "'");
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json to_json(const Interval& x, int digits) {
  return {{"lo", x.lo().to_string(digits, MPFR_RNDD)}, {"hi", x.hi().to_string(digits, MPFR_RNDU)}};
}

json to_json(const ConcatRepdigit& r) {
  return {{"d1", r.d1}, {"l1", r.l1}, {"d2", r.d2}, {"l2", r.l2}};
}

json to_json(const Solution& s) {
  return {{"sequence", std::string(name(s.kind))},
          {"n", s.n},
          {"term", term_label(s.kind, s.n)},
          {"value", s.value.get_str()},
          {"base", s.repr.base},
          {"d1", s.repr.d1},
          {"l1", s.repr.l1},
          {"d2", s.repr.d2},
          {"l2", s.repr.l2},
          {"digits", s.repr.digit_string()}};
}

json to_json(const BoundLedger& ledger) {
  const FormConstants& k = ledger.constants;
  json j;
  j["sequence"] = std::string(name(ledger.kind));
  j["c_first"] = to_json(ledger.c_first);
  j["c_second"] = to_json(ledger.c_second);
  j["n_max"] = ledger.n_max.get_str();
  j["n_threshold"] = k.n_threshold;
  j["l1_threshold"] = k.l1_threshold;
  json by_base = json::object(), sharp = json::object();
  for (const auto& [b, v] : ledger.l1l2_max_by_base) by_base[std::to_string(b)] = v.get_str();
  for (const auto& [b, v] : ledger.l1l2_max_sharp) sharp[std::to_string(b)] = v.get_str();
  j["l1l2_max_by_base"] = by_base;
  j["l1l2_max_sharp"] = sharp;
  j["constants"] = {{"a1_first", k.a1_first.get_str()},
                    {"a2", k.a2.get_str()},
                    {"a3", k.a3.get_str()},
                    {"a1_second", k.a1_second().get_str()},
                    {"first_residue", k.first_residue.get_str()},
                    {"second_residue", k.second_residue.get_str()},
                    {"l1_stage_A", k.l1_stage_A.get_str()},
                    {"n_stage_A", k.n_stage_A.get_str()}};
  json audit = json::array();
  for (const AuditItem& a : ledger.audit) {
    audit.push_back({{"check", a.name},
                     {"required", to_json(a.required, 8)},
                     {"adopted", a.adopted.get_str()},
                     {"strict", a.strict},
                     {"holds", a.holds}});
  }
  j["audit"] = audit;
  return j;
}

json to_json(const FamilyBound& f) {
  json inst = json::array();
  for (const auto& r : f.per_instance) inst.push_back(instance_json(r));
  return {{"sequence", std::string(name(f.kind))},
          {"base", f.base},
          {"stage", stage_name(f.stage)},
          {"M", f.M.get_str()},
          {"raw_bound", f.raw_bound},
          {"bound", f.bound},
          {"instances", inst}};
}

json to_json(const SolverReport& r) {
  json families = json::array();
  for (const auto& f : r.family_bounds) families.push_back(to_json(f));
  json box = json::array();
  for (const auto& b : r.search_box) {
    box.push_back({{"base", b.base}, {"n_max", b.n_max}, {"l1_max", b.l1_max}, {"l2_max", b.l2_max}});
  }
  json sols = json::array();
  for (const auto& s : r.solutions) sols.push_back(to_json(s));
  json values = json::array();
  std::vector<mpz_class> seen;
  for (const auto& s : r.solutions) {
    if (std::find(seen.begin(), seen.end(), s.value) == seen.end()) seen.push_back(s.value);
  }
  std::sort(seen.begin(), seen.end());
  for (const auto& v : seen) values.push_back(v.get_str());
  return {{"sequence", std::string(name(r.kind))},
          {"base_min", r.base_min},
          {"base_max", r.base_max},
          {"ledger", to_json(r.ledger)},
          {"family_bounds", families},
          {"search_box", box},
          {"values", values},
          {"solutions", sols}};
}

json to_json(const ContinuedFraction& cf) {
  json q = json::array(), c = json::array();
  for (const auto& a : cf.quotients()) q.push_back(a.get_str());
  for (const auto& pq : cf.convergents()) c.push_back({pq.p.get_str(), pq.q.get_str()});
  return {{"expr", cf.tau().to_string()}, {"quotients", q}, {"convergents", c}};
}

std::string render_solve(const SolverReport& r, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(r).dump(2) + "\n";
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << csv_row({"sequence", "n", "term", "value", "base", "d1", "l1", "d2", "l2", "digits"});
    for (const auto& s : r.solutions) {
      os << csv_row({std::string(name(s.kind)), std::to_string(s.n), term_label(s.kind, s.n),
                     s.value.get_str(), std::to_string(s.repr.base), std::to_string(s.repr.d1),
                     std::to_string(s.repr.l1), std::to_string(s.repr.d2),
                     std::to_string(s.repr.l2), s.repr.digit_string()});
    }
    return os.str();
  }
  os << "## " << name(r.kind) << " numbers that are concatenations of two repdigits, bases "
     << r.base_min << "-" << r.base_max << "\n\n";
  os << markdown_row({"value", "term", "representation"}) << markdown_rule(3);
  for (const auto& s : r.solutions) {
    os << markdown_row({s.value.get_str(), term_label(s.kind, s.n),
                        s.repr.digit_string() + " (base " + std::to_string(s.repr.base) + ")"});
  }
  os << "\n### Bounds\n\n";
  os << "C_first = " << r.ledger.c_first.hi().to_string(4, MPFR_RNDU)
     << ", C_second = " << r.ledger.c_second.hi().to_string(4, MPFR_RNDU)
     << ", n < " << sci(r.ledger.n_max) << "\n\n";
  os << markdown_row({"b", "M", "l1 <=", "n <=", "searched n <=", "searched l2 <="})
     << markdown_rule(6);
  for (std::size_t i = 0; i < r.search_box.size(); ++i) {
    const SearchBox& box = r.search_box[i];
    const FamilyBound& l1 = r.family_bounds[2 * i];
    const FamilyBound& n = r.family_bounds[2 * i + 1];
    os << markdown_row({std::to_string(box.base), sci(l1.M), std::to_string(l1.bound),
                        std::to_string(n.bound), std::to_string(box.n_max),
                        std::to_string(box.l2_max)});
  }
  return os.str();
}

std::string render_bounds(const BoundLedger& ledger, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(ledger).dump(2) + "\n";
  std::ostringstream os;
  std::vector<std::vector<std::string>> rows{
      {"C_first", ledger.c_first.hi().to_string(6, MPFR_RNDU)},
      {"C_second", ledger.c_second.hi().to_string(6, MPFR_RNDU)},
      {"n <", ledger.n_max.get_str()},
  };
  for (const auto& [b, v] : ledger.l1l2_max_by_base) {
    rows.push_back({"l1+l2 < (b=" + std::to_string(b) + ")", v.get_str()});
  }
  if (format == OutputFormat::Csv) {
    os << csv_row({"quantity", "value"});
    for (const auto& row : rows) os << csv_row(row);
    os << csv_row({"check", "required_hi", "adopted", "holds"});
    for (const AuditItem& a : ledger.audit) {
      os << csv_row({a.name, a.required.hi().to_string(8, MPFR_RNDU), a.adopted.get_str(),
                     a.holds ? "true" : "false"});
    }
    return os.str();
  }
  os << "## Initial bounds for " << name(ledger.kind) << "\n\n"
     << markdown_row({"quantity", "value"}) << markdown_rule(2);
  for (const auto& row : rows) os << markdown_row(row);
  os << "\n" << markdown_row({"check", "required <=", "adopted", "holds"}) << markdown_rule(4);
  for (const AuditItem& a : ledger.audit) {
    os << markdown_row({a.name, a.required.hi().to_string(6, MPFR_RNDU), a.adopted.get_str(),
                        a.holds ? "yes" : "NO"});
  }
  return os.str();
}

std::string render_reduce(const std::vector<FamilyBound>& families, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json j = json::array();
    for (const auto& f : families) j.push_back(to_json(f));
    return j.dump(2) + "\n";
  }
  if (format == OutputFormat::Markdown) return reduce_markdown(families);
  std::ostringstream os;
  os << csv_row({"sequence", "base", "stage", "d1", "d2", "l1", "method", "q_index", "q",
                 "epsilon_lo", "a_M", "bound"});
  for (const auto& f : families) {
    for (const auto& r : f.per_instance) {
      std::vector<std::string> row{std::string(name(f.kind)), std::to_string(f.base),
                                   stage_name(f.stage), std::to_string(r.digits.d1),
                                   r.digits.d2 >= 0 ? std::to_string(r.digits.d2) : "",
                                   r.digits.l1 > 0 ? std::to_string(r.digits.l1) : ""};
      if (const auto* bd = std::get_if<ReductionOutcome>(&r.outcome)) {
        row.insert(row.end(), {"baker-davenport", std::to_string(bd->index), bd->q_used.get_str(),
                               bd->epsilon.lo().to_string(6, MPFR_RNDD), ""});
      } else {
        const auto& lg = std::get<LegendreOutcome>(r.outcome);
        row.insert(row.end(), {"legendre", std::to_string(lg.index), "", "", lg.a_M.get_str()});
      }
      row.push_back(std::to_string(r.bound));
      os << csv_row(row);
    }
  }
  return os.str();
}

std::string render_contfrac(const ContinuedFraction& cf, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(cf).dump(2) + "\n";
  std::ostringstream os;
  if (format == OutputFormat::Markdown) {
    os << "Continued fraction of " << cf.tau().to_string() << "\n\n"
       << markdown_row({"k", "a_k", "p_k", "q_k"}) << markdown_rule(4);
  } else {
    os << csv_row({"k", "a_k", "p_k", "q_k"});
  }
  for (std::size_t k = 0; k < cf.size(); ++k) {
    std::vector<std::string> row{std::to_string(k), cf.quotients()[k].get_str(),
                                 cf.convergents()[k].p.get_str(), cf.convergents()[k].q.get_str()};
    os << (format == OutputFormat::Markdown ? markdown_row(row) : csv_row(row));
  }
  return os.str();
}

std::string render_check(const mpz_class& n, int base, const std::optional<ConcatRepdigit>& r,
                         OutputFormat format) {
  if (format == OutputFormat::Json) return (r ? to_json(*r) : json(nullptr)).dump() + "\n";
  if (format == OutputFormat::Csv) {
    std::string out = csv_row({"n", "base", "d1", "l1", "d2", "l2"});
    if (!r) return out + csv_row({n.get_str(), std::to_string(base), "", "", "", ""});
    return out + csv_row({n.get_str(), std::to_string(base), std::to_string(r->d1),
                          std::to_string(r->l1), std::to_string(r->d2), std::to_string(r->l2)});
  }
  if (!r) return n.get_str() + " has no two-block form in base " + std::to_string(base) + "\n";
  return n.get_str() + " = " + r->digit_string() + " (base " + std::to_string(base) + "): d1=" +
         std::to_string(r->d1) + ", l1=" + std::to_string(r->l1) + ", d2=" +
         std::to_string(r->d2) + ", l2=" + std::to_string(r->l2) + "\n";
}

}  // namespace pellrep
