#include "hzml/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hzml {

namespace {

Json complex_json(cplx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

void write_value(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << inner << Json(key).dump() << ": ";
        write_value(os, value, indent + 2);
      }
      os << '\n' << pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << inner;
        write_value(os, j[i], indent + 2);
      }
      os << '\n' << pad << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      os << (std::isfinite(x) ? format_double(x) : "null");
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

Json to_json(const ThetaSystem& ts) {
  Json roots = Json::array();
  for (std::size_t g = 0; g < ts.roots.size(); ++g) {
    Json r = complex_json(ts.roots[g]);
    r["residual"] = ts.residuals[g];
    r["exp_factor"] = complex_json(ts.exp_factors[g]);
    roots.push_back(r);
  }
  Json sums = Json::array();
  for (std::size_t u = 1; u < ts.power_sums.size(); ++u)
    sums.push_back(Json{{"u", u},
                        {"value", ts.power_sums[u]},
                        {"root_side", complex_json(ts.power_sums_root_side[u])},
                        {"scale", ts.power_sum_scale[u]}});
  return Json{{"k", ts.k}, {"roots", roots}, {"power_sums", sums}};
}

Json to_json(const ZeroList& zl) {
  Json zs = Json::array();
  for (const auto& z : zl.zeros) zs.push_back(Json{{"gamma", z.gamma}, {"bracket_width", z.bracket_width}});
  return Json{{"k", zl.k},
              {"t_lo", zl.t_lo},
              {"t_hi", zl.t_hi},
              {"scan_density", zl.scan_density},
              {"count", zl.size()},
              {"zeros", zs}};
}

Json to_json(const ContinuousMoment& cm) {
  return Json{{"value", cm.value}, {"error_estimate", cm.error_estimate}, {"panels", cm.panels}, {"sliver", cm.sliver}};
}

Json to_json(const CoefficientBreakdown& b) {
  Json j{{"j", b.j}, {"k", b.k}, {"mode", b.asymptotic ? "asymptotic" : "finite"}, {"T", b.T}, {"L", b.L},
         {"term_delta", b.term_delta}, {"term_cg", b.term_cg}, {"term_u", b.term_u}, {"term_p2j2", b.term_p2j2},
         {"term_exp", b.term_exp}, {"total", b.total}, {"per_TL", b.per_TL}, {"imag_leak", b.imag_leak}};
  return j;
}

Json to_json(const IdentityReport& r) {
  return Json{{"name", r.name},       {"parameters", r.parameters}, {"lhs", r.lhs},
              {"rhs", r.rhs},         {"abs_gap", r.abs_gap},       {"tolerance", r.tolerance},
              {"exact", r.exact},     {"report_only", r.report_only}, {"holds", r.holds()}};
}

Json to_json(const MomentReport& r) {
  return Json{{"j", r.j},
              {"k", r.k},
              {"T", r.T},
              {"measured", r.measured},
              {"predicted", r.predicted},
              {"ratio", r.ratio},
              {"n_zeros_used", r.n_zeros_used},
              {"count_expected", r.count_expected},
              {"count_deviation", r.count_deviation},
              {"max_imag_leak", r.max_imag_leak},
              {"scan_density", r.scan_density}};
}

Json envelope(const std::string& kind, const Json& payload) {
  Json out{{"schema", kSchemaVersion}, {"kind", kind}};
  for (const auto& [key, value] : payload.items()) out[key] = value;
  return out;
}

void write_json(std::ostream& os, const Json& j) {
  write_value(os, j, 0);
  os << '\n';
}

std::string dump_json(const Json& j) {
  std::ostringstream os;
  write_json(os, j);
  return os.str();
}

void write_zeros_csv(std::ostream& os, const ZeroList& zl) {
  os << "index,gamma,bracket_width\n";
  for (std::size_t i = 0; i < zl.zeros.size(); ++i)
    os << i << ',' << format_double(zl.zeros[i].gamma) << ',' << format_double(zl.zeros[i].bracket_width) << '\n';
}

void write_roots_csv(std::ostream& os, const ThetaSystem& ts) {
  os << "index,re,im,residual\n";
  for (std::size_t g = 0; g < ts.roots.size(); ++g)
    os << g << ',' << format_double(ts.roots[g].real()) << ',' << format_double(ts.roots[g].imag()) << ','
       << format_double(ts.residuals[g]) << '\n';
}

void write_identities_csv(std::ostream& os, const std::vector<IdentityReport>& rs) {
  os << "name,parameters,lhs,rhs,abs_gap,holds\n";
  for (const auto& r : rs)
    os << r.name << ",\"" << r.parameters << "\"," << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
       << format_double(r.abs_gap) << ',' << (r.holds() ? "true" : "false") << '\n';
}

void write_flat_csv(std::ostream& os, const Json& flat) {
  os << "field,value\n";
  for (const auto& [key, value] : flat.items()) {
    os << key << ',';
    if (value.is_number_float()) {
      const double x = value.get<double>();
      os << (std::isfinite(x) ? format_double(x) : "");
    } else if (value.is_string()) {
      os << value.get<std::string>();
    } else {
      os << value.dump();
    }
    os << '\n';
  }
}

}  // namespace hzml
