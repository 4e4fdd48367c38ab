#include "cayley/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace cayley {

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEqual: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEqual: return ">=";
    case Relation::Equal: return "==";
  }
  return "?";
}

Check make_check(std::string name, double value, Relation relation, double threshold) {
  Check c{std::move(name), value, threshold, relation, false};
  switch (relation) {
    case Relation::Less: c.pass = value < threshold; break;
    case Relation::LessEqual: c.pass = value <= threshold; break;
    case Relation::Greater: c.pass = value > threshold; break;
    case Relation::GreaterEqual: c.pass = value >= threshold; break;
    case Relation::Equal: c.pass = value == threshold; break;
  }
  return c;
}

bool VerificationReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["n"] = report.n ? nlohmann::json(*report.n) : nlohmann::json(nullptr);
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["tolerances"] = {{"alg", report.tol.alg}, {"geo", report.tol.geo}};
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"value", c.value},
                           {"relation", relation_symbol(c.relation)},
                           {"threshold", c.threshold},
                           {"pass", c.pass}});
  }
  j["info"] = nlohmann::json::object();
  for (const auto& [key, value] : report.info) {
    std::visit([&, &key = key](const auto& v) { j["info"][key] = v; }, value);
  }
  j["pass"] = report.pass();
  if (report.wall_seconds) j["wallSeconds"] = *report.wall_seconds;
  return j;
}

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void dump_into(const nlohmann::json& j, std::string& out) {
  using value_t = nlohmann::json::value_t;
  switch (j.type()) {
    case value_t::object: {
      out += '{';
      bool first = true;
      // nlohmann::json stores objects in a std::map, so iteration is sorted.
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(it.key()).dump();
        out += ':';
        dump_into(it.value(), out);
      }
      out += '}';
      break;
    }
    case value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_into(j[i], out);
      }
      out += ']';
      break;
    }
    case value_t::number_float: out += format_double(j.get<double>()); break;
    default: out += j.dump(); break;
  }
}

}  // namespace

std::string canonical_dump(const nlohmann::json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

std::string format_json(const VerificationReport& report) { return canonical_dump(to_json(report)) + "\n"; }

std::string format_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "suite: " << report.suite << "\n";
  os << "n: " << (report.n ? std::to_string(*report.n) : "all") << "\n";
  os << "samples: " << report.samples << "\n";
  os << "seed: " << report.seed << "\n";
  os << "tolerances: alg=" << format_double(report.tol.alg) << " geo=" << format_double(report.tol.geo) << "\n";
  os << "checks:\n";
  for (const auto& c : report.checks) {
    os << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << " value=" << format_double(c.value) << " "
       << relation_symbol(c.relation) << " " << format_double(c.threshold) << "\n";
  }
  os << "info:\n";
  for (const auto& [key, value] : report.info) {
    os << "  " << key << ": ";
    if (const double* d = std::get_if<double>(&value)) {
      os << format_double(*d);
    } else {
      os << std::get<std::string>(value);
    }
    os << "\n";
  }
  if (report.wall_seconds) os << "wallSeconds: " << format_double(*report.wall_seconds) << "\n";
  os << "pass: " << (report.pass() ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace cayley
