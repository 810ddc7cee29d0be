#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "arnold/errors.hpp"
#include "arnold/sweep.hpp"

namespace arnold {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::vector<std::string>> split_rows(std::string_view text,
                                                 std::string_view header) {
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (first) {
      if (line != header) {
        throw Error("unexpected CSV header '" + std::string(line) + "'");
      }
      first = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t f = 0;
    while (true) {
      const auto comma = line.find(',', f);
      fields.emplace_back(line.substr(f, comma == std::string_view::npos ? line.npos : comma - f));
      if (comma == std::string_view::npos) break;
      f = comma + 1;
    }
    rows.push_back(std::move(fields));
  }
  if (first) throw Error("empty CSV input");
  return rows;
}

double to_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw Error("bad number '" + s + "' in CSV");
  return v;
}

std::int64_t to_int(const std::string& s) {
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size()) throw Error("bad integer '" + s + "' in CSV");
  return v;
}

void expect_width(const std::vector<std::string>& row, std::size_t n) {
  if (row.size() != n) {
    throw Error("CSV row has " + std::to_string(row.size()) + " fields, expected " +
                std::to_string(n));
  }
}

std::string lock_fields(const std::optional<Rational>& r) {
  return r ? std::to_string(r->p()) + "," + std::to_string(r->q()) : ",";
}

std::optional<Rational> parse_lock(const std::string& p, const std::string& q) {
  if (p.empty() && q.empty()) return std::nullopt;
  return Rational(to_int(p), to_int(q));
}

constexpr std::string_view kRasterHeader =
    "a,b,rho_minus,rho_plus,err,lock_p,lock_q,lock_hi_p,lock_hi_q";
constexpr std::string_view kCurveHeader = "b,a,kind,p,q,residual";
constexpr std::string_view kRegionHeader = "b,a_left,a_right";

}  // namespace

std::string to_csv(const RasterGrid& g) {
  std::ostringstream out;
  out << kRasterHeader << '\n';
  for (int j = g.spec.nb - 1; j >= 0; --j) {
    for (int i = 0; i < g.spec.na; ++i) {
      const auto& c = g.at(i, j);
      const double err = std::max(c.rho_minus.error_bound, c.rho_plus.error_bound);
      out << num(c.a) << ',' << num(c.b) << ',' << num(c.rho_minus.value) << ','
          << num(c.rho_plus.value) << ',' << num(err) << ',' << lock_fields(c.snapped_lo)
          << ',' << lock_fields(c.snapped_hi) << '\n';
    }
  }
  return out.str();
}

std::string to_csv(const BoundaryCurve& c) {
  std::ostringstream out;
  out << kCurveHeader << '\n';
  for (const auto& s : c.samples) {
    out << num(s.b) << ',' << num(s.a) << ',' << to_string(c.kind) << ','
        << c.label.p() << ',' << c.label.q() << ',' << num(s.residual) << '\n';
  }
  return out.str();
}

std::string to_csv(const Region& r) {
  std::ostringstream out;
  out << kRegionHeader << '\n';
  for (const auto& s : r.slices) {
    out << num(s.b) << ',' << num(s.a_left) << ',' << num(s.a_right) << '\n';
  }
  return out.str();
}

RasterGrid parse_raster_csv(std::string_view text) {
  const auto rows = split_rows(text, kRasterHeader);
  if (rows.empty()) throw Error("raster CSV has no cells");
  RasterGrid g;
  int na = 0;
  const double b_top = to_double(rows.front().at(1));
  for (const auto& row : rows) {
    expect_width(row, 9);
    if (to_double(row[1]) != b_top) break;
    ++na;
  }
  if (rows.size() % na != 0) throw Error("raster CSV rows do not form a grid");
  const int nb = static_cast<int>(rows.size() / na);
  g.cells.resize(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& row = rows[k];
    expect_width(row, 9);
    const int i = static_cast<int>(k % na);
    const int j = nb - 1 - static_cast<int>(k / na);
    RasterCell c;
    c.a = to_double(row[0]);
    c.b = to_double(row[1]);
    const double err = to_double(row[4]);
    c.snapped_lo = parse_lock(row[5], row[6]);
    c.snapped_hi = parse_lock(row[7], row[8]);
    c.rho_minus = {to_double(row[2]), err, c.snapped_lo};
    c.rho_plus = {to_double(row[3]), err, c.snapped_hi};
    g.cells[static_cast<std::size_t>(j) * na + i] = c;
  }
  // Bounds are recovered from the cell centers.
  auto& s = g.spec;
  s.na = na;
  s.nb = nb;
  const double a0 = g.at(0, 0).a, a1 = g.at(na - 1, 0).a;
  const double b0 = g.at(0, 0).b, b1 = g.at(0, nb - 1).b;
  const double da = na > 1 ? (a1 - a0) / (na - 1) : 0.0;
  const double db = nb > 1 ? (b1 - b0) / (nb - 1) : 0.0;
  s.a_min = a0 - 0.5 * da;
  s.a_max = a1 + 0.5 * da;
  s.b_min = b0 - 0.5 * db;
  s.b_max = b1 + 0.5 * db;
  return g;
}

BoundaryCurve parse_curve_csv(std::string_view text) {
  const auto rows = split_rows(text, kCurveHeader);
  BoundaryCurve c;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& row = rows[k];
    expect_width(row, 6);
    const auto kind = parse_curve_kind(row[2]);
    const Rational label(to_int(row[3]), to_int(row[4]));
    if (k == 0) {
      c.kind = kind;
      c.label = label;
    } else if (kind != c.kind || label != c.label) {
      throw Error("curve CSV mixes several curves");
    }
    c.samples.push_back({to_double(row[0]), to_double(row[1]), to_double(row[5])});
  }
  return c;
}

Region parse_region_csv(std::string_view text) {
  const auto rows = split_rows(text, kRegionHeader);
  Region r;
  for (const auto& row : rows) {
    expect_width(row, 3);
    r.slices.push_back({to_double(row[0]), to_double(row[1]), to_double(row[2])});
  }
  return r;
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace arnold
