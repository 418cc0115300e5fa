#include "nckg/output.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace nckg::output {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) v = 0.0;  // drop the sign of zero
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

void emit(const Json& j, int indent, int depth, std::string& out) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad + Json(it.key()).dump() + (indent > 0 ? ": " : ":");
        emit(it.value(), indent, depth + 1, out);
      }
      out += nl + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) {
          out += ",";
          out += nl;
        }
        out += pad;
        emit(j[i], indent, depth + 1, out);
      }
      out += nl + close_pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

std::string cell(const Json& v) {
  switch (v.type()) {
    case Json::value_t::null: return "";
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      return std::isfinite(d) ? format_double(d) : "";
    }
    case Json::value_t::string: {
      const auto s = v.get<std::string>();
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
      }
      return q + "\"";
    }
    default: return v.dump();
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  emit(j, indent, 0, out);
  out += "\n";
  return out;
}

std::string to_csv(const std::vector<std::string>& header, const Json& rows, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      os << (i ? "," : "");
      if (row.contains(header[i])) os << cell(row[header[i]]);
    }
    os << "\n";
  }
  for (const auto& c : comments) os << "# " << c << "\n";
  return os.str();
}

}  // namespace nckg::output
