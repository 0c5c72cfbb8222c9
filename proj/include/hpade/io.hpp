#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hpade/analysis.hpp"
#include "hpade/potential.hpp"

namespace hpade::io {

using json = nlohmann::ordered_json;

inline std::string format_real(const Real& x, int digits) {
  if (x.is_zero()) return "0";
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

/// "re+imi" with both parts in scientific notation; "re" alone for real values.
inline std::string format_complex(const Scalar& z, int digits) {
  std::string s = format_real(z.real(), digits);
  if (z.imag().is_zero()) return s;
  std::string im = format_real(abs(z.imag()), digits);
  return s + (z.imag() < 0 ? "-" : "+") + im + "i";
}

/// Accepts "a", "a+bi", "a-bi", "bi", "i", "-i" with decimal a, b.
inline Scalar parse_complex(std::string s, int digits) {
  std::string t;
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (t.empty()) throw error(errc::parse_error, "empty complex number");
  if (t.back() != 'i' && t.back() != 'j') return Scalar(parse_real(t, digits), make_real(0, digits), digits);
  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re = "0", im = t;
  if (split != std::string::npos) {
    re = t.substr(0, split);
    im = t.substr(split);
  }
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  if (!im.empty() && im[0] == '+') im.erase(0, 1);
  return Scalar(parse_real(re, digits), parse_real(im, digits), digits);
}

inline std::vector<std::string> split_list(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split_list(s)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw error(errc::parse_error, "not an integer: '" + item + "'");
    }
  }
  return out;
}

// JSON

inline json to_json(const std::vector<Scalar>& v, int digits) {
  json a = json::array();
  for (const auto& z : v) a.push_back(format_complex(z, digits));
  return a;
}

inline json to_json(const Polynomial<Scalar>& p) { return to_json(p.coeffs(), p.digits()); }

inline std::vector<Scalar> scalars_from_json(const json& a, int digits) {
  if (!a.is_array()) throw error(errc::parse_error, "expected an array of complex numbers");
  std::vector<Scalar> out;
  for (const auto& e : a) {
    if (e.is_string()) out.push_back(parse_complex(e.get<std::string>(), digits));
    else if (e.is_number()) out.push_back(parse_complex(e.dump(), digits));
    else throw error(errc::parse_error, "expected a complex number, got " + e.dump());
  }
  return out;
}

inline json series_json(const PowerSeries<Scalar>& f, const std::string& source) {
  json j;
  j["type"] = "series";
  j["source"] = source;
  j["digits"] = f.digits();
  j["coefficients"] = to_json(f.coeffs(), f.digits());
  return j;
}

inline PowerSeries<Scalar> series_from_json(const json& j, int digits) {
  if (!j.contains("coefficients")) throw error(errc::parse_error, "series file has no 'coefficients'");
  return PowerSeries<Scalar>(scalars_from_json(j.at("coefficients"), digits), digits);
}

/// Files holding polynomials keep them under "polynomials" as name -> coefficients.
inline Polynomial<Scalar> polynomial_from_json(const json& j, const std::string& name, int digits) {
  if (!j.contains("polynomials") || !j.at("polynomials").contains(name))
    throw error(errc::parse_error, "no polynomial named '" + name + "' in input");
  return Polynomial<Scalar>(scalars_from_json(j.at("polynomials").at(name), digits), digits);
}

inline json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::io_error, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw error(errc::parse_error, "'" + path + "': " + e.what());
  }
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::io_error, "cannot write '" + path + "'");
  out << text;
  if (!out) throw error(errc::io_error, "write failed for '" + path + "'");
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// CSV point clouds: re,im,tag,plane,source

inline std::string cloud_csv(const PointCloud& c, int digits) {
  std::string out = "re,im,tag,plane,source\n";
  for (const auto& p : c.points) {
    out += format_real(p.w.real(), digits) + "," + format_real(p.w.imag(), digits) + "," + to_string(p.tag) + "," +
           to_string(c.plane) + "," + c.source + "\n";
  }
  return out;
}

inline PointCloud cloud_from_csv(const std::string& text, int digits) {
  PointCloud c;
  std::stringstream ss(text);
  std::string line;
  bool header = true;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("re,", 0) == 0) continue;
    }
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() < 4) throw error(errc::parse_error, "point cloud line " + std::to_string(lineno) + " has too few columns");
    c.points.push_back({Scalar(parse_real(f[0], digits), parse_real(f[1], digits), digits), parse_point_tag(f[2])});
    c.plane = parse_plane(f[3]);
    if (f.size() > 4) c.source = f[4];
  }
  return c;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io_error, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string rates_csv(const std::vector<RateRow>& rows) {
  std::string out = "order,budget,error,measured,target,ratio,trivial\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%d,%s,%.12g,%.12g,%.12g,%d\n", r.order, r.budget, format_real(r.error, 12).c_str(),
                  r.measured, r.target, r.ratio, r.trivial ? 1 : 0);
    out += buf;
  }
  return out;
}

inline json katz_json(const KatzReport& r, int digits) {
  auto side = [digits](const KatzSide& s) {
    json j;
    json cl = json::array();
    for (const auto& c : s.clusters)
      cl.push_back({{"center", format_complex(c.center, 12)}, {"count", c.count}, {"diameter", c.diameter}});
    j["clusters"] = cl;
    auto list = [digits](const std::vector<StableZero>& v) {
      json a = json::array();
      for (const auto& z : v)
        a.push_back({{"location", format_complex(z.location, digits)}, {"digits", z.stabilized_digits},
                     {"orders", {z.prev_order, z.curr_order}}});
      return a;
    };
    j["katz_candidates"] = list(s.katz);
    j["excluded_outside_disk"] = list(s.outside);
    j["unstable"] = list(s.stable.unstable);
    j["pade_normal"] = s.pade.normal;
    return j;
  };
  json j;
  j["type"] = "katz";
  j["budget"] = r.plan.N;
  j["n"] = r.plan.n;
  j["m"] = r.plan.m;
  json shared = json::array();
  for (const auto& s : r.shared)
    shared.push_back({{"a", format_complex(s.a, digits)}, {"b", format_complex(s.b, digits)}, {"digits", s.digits}});
  j["shared"] = shared;
  json dis = json::array();
  for (const auto& d : r.disagreements)
    dis.push_back({{"point", format_complex(d.point, digits)}, {"side", std::string(1, d.side)}, {"nearest", d.nearest}});
  j["disagreements"] = dis;
  j["a"] = side(r.a);
  j["b"] = side(r.b);
  return j;
}

}  // namespace hpade::io
