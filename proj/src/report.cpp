#include "charsum/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "charsum/errors.hpp"
#include "charsum/gauss_sums.hpp"

namespace charsum {

namespace {

using Json = nlohmann::ordered_json;

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json number(const std::optional<double>& x) { return x ? number(*x) : Json(nullptr); }

Json complex_json(std::complex<double> z) { return Json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

// RFC 4180 quoting, only when needed.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string short_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string short_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return short_double(z.real());
  std::string s = short_double(z.real());
  s += z.imag() < 0 ? " - " : " + ";
  return s + short_double(std::abs(z.imag())) + "i";
}

int check_rank(const std::string& check) {
  static const char* order[] = {"lemma1", "lemma2", "example1", "example2", "example3", "example4"};
  for (int i = 0; i < 6; ++i) {
    if (check.rfind(order[i], 0) == 0) return i;
  }
  return 6;
}

template <class F>
void timed(std::vector<VerificationReport>& out, F&& make) {
  Stopwatch watch;
  VerificationReport r = make();
  r.wall_time_ms = watch.elapsed_ms();
  out.push_back(std::move(r));
}

}  // namespace

bool ReportDocument::all_pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass; });
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

VerificationReport theorem_report(const DirichletCharacter& chi, const std::string& function_name,
                                  const TheoremVerification& v, double tol) {
  VerificationReport r;
  r.modulus = chi.modulus();
  r.label = chi.label().str();
  r.parity = to_string(chi.parity());
  r.check = "theorem:" + function_name;
  r.lhs = v.direct;
  r.rhs = v.series.value;
  r.abs_error = v.difference;
  r.tolerance = tol;
  r.terms_used = v.series.terms_used;
  r.tail_bound = v.series.tail_bound;
  r.pass = v.pass;
  r.notes = std::string(to_string(v.series.method)) + ", " + to_string(v.series.parity_branch) +
            ", allowance=" + format_double(v.allowance);
  if (!v.series.notes.empty()) r.notes += "; " + v.series.notes;
  return r;
}

VerificationReport example_report(const examples::IdentityCheck& c) {
  VerificationReport r;
  r.modulus = c.q;
  r.discriminant = c.d;
  r.label = c.label.str();
  r.parity = to_string(c.parity);
  r.check = "example" + std::to_string(c.id);
  if (c.y) r.check += ":" + c.y->str();
  r.lhs = c.lhs;
  r.rhs = c.rhs;
  r.abs_error = c.abs_error;
  r.tolerance = c.tolerance;
  r.terms_used = c.terms_used;
  r.tail_bound = c.tail_bound;
  r.pass = c.pass;
  r.remainder_ratio = c.remainder_ratio;
  r.decay_slope = c.decay_slope;
  r.notes = c.notes;
  return r;
}

VerificationReport lemma1_report(std::int64_t d, double tol) {
  const DirichletCharacter chi = real_primitive_character(d);
  const std::int64_t q = chi.modulus();
  const std::complex<double> t = tau(chi).value;

  // Report the worst twist n: lhs = G(n, chi), rhs = chi(n) tau.
  double worst = -1.0;
  std::int64_t worst_n = 0;
  for (std::int64_t n = 0; n < q; ++n) {
    const double res = check_lemma1(chi, n);
    if (res > worst) {
      worst = res;
      worst_n = n;
    }
  }
  VerificationReport r;
  r.modulus = q;
  r.discriminant = d;
  r.label = chi.label().str();
  r.parity = to_string(chi.parity());
  r.check = "lemma1";
  r.lhs = gauss_sum(chi, worst_n).value;
  r.rhs = std::conj(chi(worst_n)) * t;
  r.abs_error = worst;
  r.tolerance = tol;
  r.terms_used = q * q;
  r.pass = worst <= tol;
  r.notes = "max over 0 <= n < q at n=" + std::to_string(worst_n);
  return r;
}

VerificationReport lemma2_report(std::int64_t d, double tol) {
  const DirichletCharacter chi = real_primitive_character(d);
  const std::int64_t q = chi.modulus();
  const double root = std::sqrt(static_cast<double>(q));
  VerificationReport r;
  r.modulus = q;
  r.discriminant = d;
  r.label = chi.label().str();
  r.parity = to_string(chi.parity());
  r.check = "lemma2";
  r.lhs = tau(chi).value;
  r.rhs = d > 0 ? std::complex<double>(root, 0.0) : std::complex<double>(0.0, root);
  r.abs_error = std::abs(r.lhs - r.rhs);
  r.tolerance = tol;
  r.terms_used = q;
  r.pass = r.abs_error <= tol;
  return r;
}

std::optional<RemainderSpread> remainder_spread(const std::vector<VerificationReport>& reports) {
  std::optional<RemainderSpread> spread;
  for (const auto& r : reports) {
    if (!r.remainder_ratio) continue;
    const double v = *r.remainder_ratio;
    if (!spread) {
      spread = RemainderSpread{v, v, 0};
    }
    spread->min = std::min(spread->min, v);
    spread->max = std::max(spread->max, v);
    ++spread->count;
  }
  return spread;
}

std::string to_json(const ReportDocument& doc) {
  Json reports = Json::array();
  for (const auto& r : doc.reports) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = doc.command;
    j["modulus"] = r.modulus;
    j["discriminant"] = r.discriminant ? Json(*r.discriminant) : Json(nullptr);
    j["label"] = r.label;
    j["parity"] = r.parity;
    j["check"] = r.check;
    j["lhs"] = complex_json(r.lhs);
    j["rhs"] = complex_json(r.rhs);
    j["abs_error"] = number(r.abs_error);
    j["tolerance"] = number(r.tolerance);
    j["terms_used"] = r.terms_used;
    j["tail_bound"] = number(r.tail_bound);
    j["pass"] = r.pass;
    j["wall_time_ms"] = number(r.wall_time_ms);
    j["remainder_ratio"] = number(r.remainder_ratio);
    j["decay_slope"] = number(r.decay_slope);
    j["notes"] = r.notes;
    reports.push_back(std::move(j));
  }

  const auto passed = std::count_if(doc.reports.begin(), doc.reports.end(), [](const auto& r) { return r.pass; });
  Json summary;
  summary["total"] = doc.reports.size();
  summary["passed"] = passed;
  summary["failed"] = static_cast<std::int64_t>(doc.reports.size()) - passed;
  summary["all_pass"] = doc.all_pass();
  if (auto spread = remainder_spread(doc.reports)) {
    summary["remainder_ratio"] = Json{{"min", spread->min}, {"max", spread->max}, {"count", spread->count}};
  } else {
    summary["remainder_ratio"] = nullptr;
  }
  summary["notices"] = doc.notices;

  Json root;
  root["schema_version"] = kReportSchemaVersion;
  root["command"] = doc.command;
  root["reports"] = std::move(reports);
  root["summary"] = std::move(summary);
  return root.dump(2) + "\n";
}

std::string to_csv(const ReportDocument& doc) {
  std::string out = kCsvHeader;
  out += "\n";
  for (const auto& r : doc.reports) {
    const std::string fields[] = {
        r.discriminant ? std::to_string(*r.discriminant) : std::string(),
        std::to_string(r.modulus),
        csv_field(r.label),
        r.parity,
        csv_field(r.check),
        format_double(r.lhs.real()),
        format_double(r.lhs.imag()),
        format_double(r.rhs.real()),
        format_double(r.rhs.imag()),
        format_double(r.abs_error),
        format_double(r.tolerance),
        std::to_string(r.terms_used),
        format_double(r.tail_bound),
        r.pass ? "true" : "false",
    };
    for (std::size_t i = 0; i < std::size(fields); ++i) {
      if (i) out += ',';
      out += fields[i];
    }
    out += "\n";
  }
  return out;
}

std::string to_pretty(const ReportDocument& doc) {
  std::ostringstream os;
  for (const auto& n : doc.notices) os << "notice: " << n << "\n";
  for (const auto& r : doc.reports) {
    os << (r.pass ? "PASS " : "FAIL ") << pad(r.check, 14) << " " << pad(r.label, 10);
    if (r.discriminant) os << " d=" << pad(std::to_string(*r.discriminant), 5);
    os << " " << pad(r.parity, 4) << "\n";
    os << "     lhs = " << short_complex(r.lhs) << "\n";
    os << "     rhs = " << short_complex(r.rhs) << "\n";
    os << "     |lhs - rhs| = " << short_double(r.abs_error) << " (tol " << short_double(r.tolerance)
       << ", tail bound " << short_double(r.tail_bound) << ", " << r.terms_used << " terms, "
       << short_double(r.wall_time_ms) << " ms)\n";
    if (!r.notes.empty()) os << "     " << r.notes << "\n";
  }
  const auto passed = std::count_if(doc.reports.begin(), doc.reports.end(), [](const auto& r) { return r.pass; });
  os << passed << "/" << doc.reports.size() << " checks passed\n";
  if (auto spread = remainder_spread(doc.reports)) {
    os << "R(chi)/sqrt(q) over " << spread->count << " characters: min " << short_double(spread->min) << ", max "
       << short_double(spread->max) << "\n";
  }
  return os.str();
}

std::string characters_json(const CharacterGroup& group, const std::string& command) {
  Json list = Json::array();
  for (const auto& chi : group.characters()) {
    list.push_back(Json{{"label", chi.label().str()},
                        {"index", chi.label().index},
                        {"conductor", chi.conductor()},
                        {"parity", to_string(chi.parity())},
                        {"is_real", chi.is_real()},
                        {"is_primitive", chi.is_primitive()},
                        {"order", chi.order()}});
  }
  Json root;
  root["schema_version"] = kReportSchemaVersion;
  root["command"] = command;
  root["modulus"] = group.modulus();
  root["characters"] = std::move(list);
  return root.dump(2) + "\n";
}

std::string characters_csv(const CharacterGroup& group) {
  std::string out = "label,index,conductor,parity,is_real,is_primitive,order\n";
  for (const auto& chi : group.characters()) {
    out += chi.label().str() + "," + std::to_string(chi.label().index) + "," + std::to_string(chi.conductor()) + "," +
           to_string(chi.parity()) + "," + (chi.is_real() ? "true" : "false") + "," +
           (chi.is_primitive() ? "true" : "false") + "," + std::to_string(chi.order()) + "\n";
  }
  return out;
}

std::string characters_pretty(const CharacterGroup& group) {
  std::ostringstream os;
  os << pad("label", 10) << " " << pad("conductor", 10) << " " << pad("parity", 7) << " " << pad("real", 5) << " "
     << pad("primitive", 10) << " order\n";
  for (const auto& chi : group.characters()) {
    os << pad(chi.label().str(), 10) << " " << pad(std::to_string(chi.conductor()), 10) << " "
       << pad(to_string(chi.parity()), 7) << " " << pad(chi.is_real() ? "yes" : "no", 5) << " "
       << pad(chi.is_primitive() ? "yes" : "no", 10) << " " << chi.order() << "\n";
  }
  os << group.characters().size() << " characters mod " << group.modulus() << "\n";
  return os.str();
}

std::vector<VerificationReport> sweep(std::int64_t lo, std::int64_t hi, const SweepOptions& options) {
  std::vector<VerificationReport> out;
  for (std::int64_t d : fundamental_discriminants(lo, hi)) {
    timed(out, [&] { return lemma1_report(d, options.lemma_tol); });
    timed(out, [&] { return lemma2_report(d, options.lemma_tol); });
    if (d < 0) timed(out, [&] { return example_report(examples::example1(d, options.tol, options.example)); });
    if (d > 1) timed(out, [&] { return example_report(examples::example2(d, options.tol, options.example)); });
    timed(out, [&] { return example_report(examples::example3(d, options.tol, options.example)); });
    for (const Rational& y : options.polya_points) {
      timed(out, [&] { return example_report(examples::example4(d, y, options.polya_tol, options.example)); });
    }
  }
  // Generation order already matches; keep the ordering explicit for future parallel runs.
  std::stable_sort(out.begin(), out.end(), [](const VerificationReport& a, const VerificationReport& b) {
    const std::int64_t da = *a.discriminant, db = *b.discriminant;
    if (std::llabs(da) != std::llabs(db)) return std::llabs(da) < std::llabs(db);
    if ((da < 0) != (db < 0)) return da < 0;
    return check_rank(a.check) < check_rank(b.check);
  });
  return out;
}

std::vector<VerificationReport> sweep(std::int64_t lo, std::int64_t hi) { return sweep(lo, hi, SweepOptions{}); }

}  // namespace charsum
