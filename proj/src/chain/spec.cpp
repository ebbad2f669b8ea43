#include "fzddn/chain/spec.hpp"

#include <algorithm>
#include <cctype>

#include "fzddn/core/error.hpp"

namespace fzddn {

const char* to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::periodic: return "periodic";
    case BoundaryKind::twisted: return "twisted";
    case BoundaryKind::open: return "open";
    case BoundaryKind::braided: return "braided";
  }
  return "unknown";
}

BoundaryKind parse_boundary(const std::string& text) {
  if (text == "periodic") return BoundaryKind::periodic;
  if (text == "twisted") return BoundaryKind::twisted;
  if (text == "open") return BoundaryKind::open;
  if (text == "braided") return BoundaryKind::braided;
  throw Error(ErrorKind::invalid_spec, "unknown boundary '" + text + "'");
}

std::string BraidPoint::label() const {
  return std::string("(") + (z1_infinite ? "inf" : "0") + "," + (z2_infinite ? "inf" : "0") + ")";
}

BraidPoint parse_braid_point(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += static_cast<char>(std::tolower(c));
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::invalid_point, "braid point needs two components: '" + text + "'");
  auto component = [&](const std::string& part) {
    if (part == "0") return false;
    if (part == "inf" || part == "infinity" || part == "oo") return true;
    throw Error(ErrorKind::invalid_point, "braid point components must be 0 or inf: '" + text + "'");
  };
  return {component(s.substr(0, comma)), component(s.substr(comma + 1))};
}

long ChainSpec::dimension() const {
  long d = 1;
  for (int i = 0; i < sites; ++i) d *= ctx.n();
  return d;
}

DihedralElement ChainSpec::effective_twist() const {
  return boundary == BoundaryKind::twisted ? twist.normalized() : DihedralElement::identity(ctx.n());
}

void ChainSpec::validate() const {
  if (sites < 2) throw Error(ErrorKind::invalid_spec, "chain needs at least two sites");
  if (twist.n != ctx.n()) throw Error(ErrorKind::invalid_spec, "twist element order does not match n");
}

}  // namespace fzddn
