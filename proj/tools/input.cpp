#include "input.hpp"

#include <fstream>
#include <sstream>

#include "fibfull/error.hpp"

namespace fibfull::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_ring(const std::string& spec) {
  auto dots = spec.find("..");
  if (spec.rfind("x0", 0) != 0 || dots != 2 || spec.size() < 5 || spec[4] != 'x') {
    throw InputError("ring must be written as x0..xN");
  }
  std::size_t used = 0;
  long last = -1;
  try {
    last = std::stol(spec.substr(5), &used);
  } catch (const std::exception&) {
    throw InputError("ring must be written as x0..xN");
  }
  if (used != spec.size() - 5 || last < 0) throw InputError("ring must be written as x0..xN");
  if (static_cast<std::size_t>(last) + 2 > Monomial::kMaxVariables) {
    throw InputError("at most " + std::to_string(Monomial::kMaxVariables - 1) + " ring variables are supported");
  }
  return static_cast<std::size_t>(last) + 1;
}

}  // namespace

InputFile parse_input(std::istream& in, const std::string& path) {
  InputFile f;
  f.path = path;
  f.blocks.emplace_back();
  bool have_ring = false, have_field = false;
  std::string line;
  long lineno = 0;
  auto fail = [&](const std::string& msg) -> InputError {
    return InputError(path + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string head;
    words >> head;
    try {
      if (head == "field") {
        if (have_field) throw InputError("duplicate field line");
        std::string kind;
        words >> kind;
        if (kind == "Q") {
          f.field = Field::rationals();
        } else if (kind == "F") {
          std::uint64_t p = 0;
          if (!(words >> p)) throw InputError("field F needs a prime");
          f.field = Field::prime(p);
        } else {
          throw InputError("unknown field '" + kind + "'");
        }
        std::string extra;
        if (words >> extra) throw InputError("unexpected text after field");
        have_field = true;
      } else if (head == "ring") {
        if (have_ring) throw InputError("duplicate ring line");
        std::string spec, extra;
        words >> spec;
        if (words >> extra) throw InputError("unexpected text after ring");
        f.nx = parse_ring(spec);
        have_ring = true;
      } else if (head == "order") {
        if (!have_ring) throw InputError("order line before ring line");
        std::string rest;
        std::getline(words, rest);
        f.order = trim(rest);
        parse_order(*f.order, f.nx);
      } else if (head == "intersect") {
        if (f.blocks.back().empty()) throw InputError("intersect needs generators on both sides");
        f.blocks.emplace_back();
      } else {
        if (!have_ring) throw InputError("generator before ring line");
        Poly g = parse_poly(line, variable_names(f.nx, true)).coerced(f.field);
        for (const auto& t : g.terms()) {
          if (t.mon[f.nx] > 0) f.uses_t = true;
        }
        f.blocks.back().push_back(std::move(g));
      }
    } catch (const InputError& e) {
      throw fail(e.what());
    }
  }
  if (!have_ring) throw InputError(path + ": missing ring line");
  if (f.blocks.size() > 1 && f.blocks.back().empty()) throw InputError(path + ": intersect without generators after it");
  return f;
}

InputFile read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  return parse_input(in, path);
}

Ideal InputFile::ideal() const {
  if (uses_t) throw InputError(path + ": the parameter t is only allowed in family commands");
  std::optional<Ideal> out;
  for (const auto& block : blocks) {
    std::vector<Poly> gens;
    for (const auto& g : block) gens.push_back(g.drop_last(Scalar(0)));
    Ideal I(nx, field, std::move(gens));
    out = out ? ideal_intersect(*out, I) : I;
  }
  if (!out->is_homogeneous()) throw InputError(path + ": generators must be homogeneous");
  return *out;
}

FamilyIdeal InputFile::family() const {
  if (!uses_t) {
    FamilyIdeal F = FamilyIdeal::constant(ideal());
    return F;
  }
  std::optional<Ideal> out;
  for (const auto& block : blocks) {
    for (const auto& g : block) {
      if (!g.is_homogeneous_prefix(nx)) throw InputError(path + ": family generator " + g.to_string(true) + " is not x-homogeneous");
    }
    Ideal I(nx + 1, field, block);
    out = out ? ideal_intersect(*out, I) : I;
  }
  return FamilyIdeal::from_generators(nx, field, out->generators());
}

MonomialOrder InputFile::monomial_order(const std::string& fallback) const {
  return parse_order(order ? *order : fallback, nx);
}

}  // namespace fibfull::cli
