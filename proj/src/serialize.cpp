#include "upscalc/serialize.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "upscalc/errors.hpp"

namespace upscalc {

std::string plfunction_to_json(const PLFunction& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& bp : f.breakpoints())
    arr.push_back({{"t", to_string(bp.t)}, {"v", to_string(bp.v)}});
  nlohmann::json out;
  out["breakpoints"] = std::move(arr);
  return out.dump();
}

PLFunction plfunction_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("breakpoints") || !doc["breakpoints"].is_array())
    throw ParseError("expected an object with a 'breakpoints' array");
  std::vector<PLFunction::Breakpoint> pts;
  for (const auto& item : doc["breakpoints"]) {
    if (!item.is_object() || !item.contains("t") || !item.contains("v") ||
        !item["t"].is_string() || !item["v"].is_string())
      throw ParseError("each breakpoint needs string fields 't' and 'v'");
    pts.push_back({parse_rational(item["t"].get<std::string>()),
                   parse_rational(item["v"].get<std::string>())});
  }
  try {
    return PLFunction(std::move(pts));
  } catch (const DomainError& e) {
    throw ParseError(std::string("breakpoint list rejected: ") + e.what());
  }
}

std::string plfunction_to_csv(const PLFunction& f) {
  std::ostringstream out;
  out << "t,value\n";
  for (const auto& bp : f.breakpoints()) out << to_string(bp.t) << "," << to_string(bp.v) << "\n";
  return out.str();
}

std::string plfunction_to_svg(const PLFunction& f) {
  // 640x480 canvas with a 40px margin; t spans the domain, v spans the
  // value range (padded a little when the function is constant).
  const double w = 640, h = 480, margin = 40;
  double t_max = mpq_get_d(f.domain_end().get_mpq_t());
  if (t_max <= 0) t_max = 1;
  double v_min = 0, v_max = 0;
  for (const auto& bp : f.breakpoints()) {
    double v = mpq_get_d(bp.v.get_mpq_t());
    v_min = std::min(v_min, v);
    v_max = std::max(v_max, v);
  }
  if (v_max - v_min < 1e-9) {
    v_min -= 1;
    v_max += 1;
  }
  auto xpix = [&](double t) { return margin + t / t_max * (w - 2 * margin); };
  auto ypix = [&](double v) {
    return h - margin - (v - v_min) / (v_max - v_min) * (h - 2 * margin);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 480\">\n";
  out << "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << margin << "\" y1=\"" << ypix(0) << "\" x2=\"" << w - margin
      << "\" y2=\"" << ypix(0) << "\" stroke=\"#999\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
      << h - margin << "\" stroke=\"#999\"/>\n";
  // integer-t ticks
  for (long k = 0; k <= static_cast<long>(std::floor(t_max + 1e-9)); ++k) {
    double x = xpix(static_cast<double>(k));
    out << "<line x1=\"" << x << "\" y1=\"" << h - margin << "\" x2=\"" << x << "\" y2=\""
        << h - margin + 6 << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << x << "\" y=\"" << h - margin + 20
        << "\" font-size=\"12\" text-anchor=\"middle\">" << k << "</text>\n";
  }
  out << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
  bool first = true;
  for (const auto& bp : f.breakpoints()) {
    if (!first) out << " ";
    first = false;
    out << xpix(mpq_get_d(bp.t.get_mpq_t())) << "," << ypix(mpq_get_d(bp.v.get_mpq_t()));
  }
  out << "\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace upscalc
