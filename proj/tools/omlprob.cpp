// Copyright 2026 The omlprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// omlprob command-line front end. Everything goes through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "omlprob/omlprob.h"

namespace {

using json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2, kSizeCap = 3 };

// Thrown when a C API call fails; carries the status for exit-code mapping.
struct ApiFailure {
  int status;
  std::string message;
};

void check(int status) {
  if (status != OML_OK) throw ApiFailure{status, oml_last_error()};
}

int exit_code_for(int status) {
  switch (status) {
    case OML_ERR_SIZE:
    case OML_ERR_CLOSURE_OVERFLOW:
      return kSizeCap;
    case OML_ERR_NORMALIZATION:
    case OML_ERR_NO_STATE:
    case OML_ERR_ILL_CONDITIONED:
    case OML_ERR_PRECONDITION:
    case OML_ERR_DOMAIN:
      return kViolation;
    default:
      return kUsage;
  }
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Lattice = std::unique_ptr<oml_lattice, Deleter<oml_lattice, oml_lattice_free>>;
using Report = std::unique_ptr<oml_report, Deleter<oml_report, oml_report_free>>;
using Blocks = std::unique_ptr<oml_blocks, Deleter<oml_blocks, oml_blocks_free>>;
using State = std::unique_ptr<oml_state, Deleter<oml_state, oml_state_free>>;
using StateList = std::unique_ptr<oml_state_list, Deleter<oml_state_list, oml_state_list_free>>;
using Polytope = std::unique_ptr<oml_polytope, Deleter<oml_polytope, oml_polytope_free>>;
using Closure = std::unique_ptr<oml_closure, Deleter<oml_closure, oml_closure_free>>;
using Grid = std::unique_ptr<oml_grid, Deleter<oml_grid, oml_grid_free>>;
using Rep = std::unique_ptr<oml_representation, Deleter<oml_representation, oml_representation_free>>;

std::string take(char* s) {
  std::string out = s ? s : "";
  oml_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ApiFailure{OML_ERR_INVALID_ARGUMENT, "cannot open '" + path + "'"};
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Lattice load_lattice(const std::string& path) {
  const std::string text = read_input(path);
  oml_lattice* raw = nullptr;
  check(oml_lattice_parse(text.data(), text.size(), &raw));
  return Lattice(raw);
}

State load_state(const oml_lattice* lattice, const std::string& path) {
  const std::string text = read_input(path);
  oml_state* raw = nullptr;
  check(oml_state_parse(lattice, text.data(), text.size(), &raw));
  return State(raw);
}

std::string label(const oml_lattice* lattice, uint32_t e) {
  char* s = nullptr;
  check(oml_lattice_label(lattice, e, &s));
  return take(s);
}

uint32_t find(const oml_lattice* lattice, const std::string& name) {
  uint32_t e = 0;
  check(oml_lattice_find(lattice, name.c_str(), &e));
  return e;
}

std::string value(const oml_state* state, uint32_t e) {
  char* s = nullptr;
  check(oml_state_value(state, e, &s));
  return take(s);
}

json state_values(const oml_state* state) {
  json values = json::array();
  for (size_t e = 0; e < oml_state_size(state); ++e) values.push_back(value(state, static_cast<uint32_t>(e)));
  return values;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

class Output {
 public:
  explicit Output(bool json_lines) : json_(json_lines) {}
  bool json_lines() const { return json_; }
  void text(const std::string& line) {
    if (!json_) std::cout << line << '\n';
  }
  void record(const json& object) {
    if (json_) std::cout << object.dump() << '\n';
  }

 private:
  bool json_;
};

// ---- lattice commands -------------------------------------------------------

int emit_lattice(Output& out, const oml_lattice* lattice) {
  char* text = nullptr;
  check(oml_lattice_serialize(lattice, &text));
  const std::string doc = take(text);
  if (out.json_lines()) {
    char* fp = nullptr;
    check(oml_lattice_fingerprint(lattice, &fp));
    out.record({{"kind", "lattice"},
                {"elements", oml_lattice_size(lattice)},
                {"fingerprint", take(fp)},
                {"oml", doc}});
  } else {
    std::cout << doc;
  }
  return kOk;
}

int run_gen(Output& out, const std::string& family, unsigned n) {
  oml_lattice* raw = nullptr;
  if (family == "boolean") {
    check(oml_lattice_gen_boolean(n, &raw));
  } else {
    check(oml_lattice_gen_mo(n, &raw));
  }
  Lattice lattice(raw);
  return emit_lattice(out, lattice.get());
}

int emit_report(Output& out, const oml_lattice* lattice, const oml_report* report) {
  const bool holds = oml_report_holds(report) != 0;
  const char* law = oml_law_name(oml_report_law(report));
  std::vector<uint32_t> witness(oml_report_witness(report),
                                oml_report_witness(report) + oml_report_witness_size(report));
  std::vector<std::string> labels;
  for (uint32_t e : witness) labels.push_back(e < oml_lattice_size(lattice) ? label(lattice, e) : std::to_string(e));
  if (out.json_lines()) {
    out.record({{"law", law},
                {"holds", holds},
                {"witness", witness},
                {"labels", labels},
                {"detail", oml_report_detail(report)}});
  } else if (holds) {
    out.text(std::string(law) + ": holds");
  } else {
    std::string line = std::string(law) + ": fails, witness (";
    for (size_t i = 0; i < labels.size(); ++i) line += (i ? ", " : "") + labels[i];
    line += ")";
    if (*oml_report_detail(report)) line += ": " + std::string(oml_report_detail(report));
    out.text(line);
  }
  return holds ? kOk : kViolation;
}

int run_check(Output& out, const std::string& path, const std::string& group) {
  Lattice lattice = load_lattice(path);
  std::vector<int> laws;
  if (group == "ortho" || group == "all") {
    for (int law = OML_LAW_PARTIAL_ORDER; law <= OML_LAW_COMPLEMENT_MEET; ++law) laws.push_back(law);
  }
  if (group == "om" || group == "all") laws.push_back(OML_LAW_ORTHOMODULAR);
  if (group == "modular" || group == "all") laws.push_back(OML_LAW_MODULAR);
  if (group == "dist" || group == "all") laws.push_back(OML_LAW_DISTRIBUTIVE);
  int code = kOk;
  for (int law : laws) {
    oml_report* raw = nullptr;
    check(oml_check_law(lattice.get(), law, &raw));
    Report report(raw);
    code = std::max(code, emit_report(out, lattice.get(), report.get()));
  }
  return code;
}

int run_blocks(Output& out, const std::string& path) {
  Lattice lattice = load_lattice(path);
  oml_report* raw_report = nullptr;
  check(oml_check_law(lattice.get(), OML_LAW_ORTHOMODULAR, &raw_report));
  Report om(raw_report);
  if (!oml_report_holds(om.get())) return emit_report(out, lattice.get(), om.get());
  oml_blocks* raw = nullptr;
  check(oml_lattice_blocks(lattice.get(), &raw));
  Blocks blocks(raw);
  const size_t count = oml_blocks_count(blocks.get());
  out.text("blocks " + std::to_string(count));
  for (size_t b = 0; b < count; ++b) {
    const uint32_t* elements = oml_blocks_elements(blocks.get(), b);
    std::vector<uint32_t> members(elements, elements + oml_blocks_size(blocks.get(), b));
    std::vector<std::string> labels;
    std::string line = "block " + std::to_string(b) + ":";
    for (uint32_t e : members) {
      labels.push_back(label(lattice.get(), e));
      line += " " + labels.back();
    }
    out.text(line);
    out.record({{"block", b}, {"elements", members}, {"labels", labels}});
  }
  return kOk;
}

// ---- state commands ---------------------------------------------------------

int run_feasible(Output& out, const std::string& path) {
  Lattice lattice = load_lattice(path);
  int feasible = 0;
  int certificate_ok = 0;
  oml_state* raw = nullptr;
  char* farkas = nullptr;
  check(oml_admits_state(lattice.get(), &feasible, &raw, &farkas, &certificate_ok));
  State state(raw);
  const std::string certificate = take(farkas);
  if (feasible) {
    char* doc = nullptr;
    check(oml_state_format(lattice.get(), state.get(), &doc));
    const std::string text = take(doc);
    out.text("# feasible");
    if (!out.json_lines()) std::cout << text;
    out.record({{"feasible", true}, {"state", state_values(state.get())}});
    return kOk;
  }
  std::istringstream in(certificate);
  std::vector<std::string> multipliers{std::istream_iterator<std::string>(in), {}};
  out.text("infeasible: Farkas certificate with " + std::to_string(multipliers.size()) + " multipliers, " +
           (certificate_ok ? "verified" : "NOT verified"));
  out.record({{"feasible", false}, {"farkas", multipliers}, {"verified", certificate_ok != 0}});
  return kViolation;
}

int run_vertices(Output& out, const std::string& path) {
  Lattice lattice = load_lattice(path);
  oml_polytope* raw = nullptr;
  check(oml_polytope_new(lattice.get(), &raw));
  Polytope polytope(raw);
  oml_state_list* raw_list = nullptr;
  check(oml_polytope_vertices(polytope.get(), &raw_list));
  StateList list(raw_list);
  const size_t count = oml_state_list_size(list.get());
  const long dimension = oml_polytope_dimension(polytope.get());
  if (out.json_lines()) {
    out.record({{"kind", "polytope"},
                {"elements", oml_lattice_size(lattice.get())},
                {"equalities", oml_polytope_equalities(polytope.get())},
                {"dimension", dimension},
                {"vertices", count}});
    for (size_t i = 0; i < count; ++i) {
      out.record({{"vertex", i}, {"values", state_values(oml_state_list_at(list.get(), i))}});
    }
  } else {
    std::cout << "# vertices " << count << " dimension " << dimension << '\n';
    if (count > 0) {
      char* doc = nullptr;
      check(oml_state_list_format(lattice.get(), list.get(), &doc));
      std::cout << take(doc);
    }
  }
  return count == 0 ? kViolation : kOk;
}

int run_random(Output& out, const std::string& path, uint64_t seed) {
  Lattice lattice = load_lattice(path);
  oml_state* raw = nullptr;
  check(oml_random_state(lattice.get(), seed, &raw));
  State state(raw);
  if (out.json_lines()) {
    out.record({{"seed", seed}, {"values", state_values(state.get())}});
  } else {
    char* doc = nullptr;
    check(oml_state_format(lattice.get(), state.get(), &doc));
    std::cout << take(doc);
  }
  return kOk;
}

int run_defect(Output& out, const std::string& kind, const std::vector<std::string>& args) {
  if (kind == "super") {
    if (args.size() != 1) throw ApiFailure{OML_ERR_INVALID_ARGUMENT, "defect super takes one lattice file"};
    Lattice lattice = load_lattice(args[0]);
    int found = 0;
    uint32_t a = 0;
    uint32_t b = 0;
    char* defect = nullptr;
    oml_state* raw = nullptr;
    check(oml_superadditivity_witness(lattice.get(), &found, &a, &b, &defect, &raw));
    State state(raw);
    if (!found) {
      out.text("superadditivity: no pair with s(a v b) > s(a) + s(b)");
      out.record({{"defect", "superadditivity"}, {"found", false}});
      return kOk;
    }
    const std::string d = take(defect);
    out.text("superadditivity: a = " + label(lattice.get(), a) + ", b = " + label(lattice.get(), b) +
             ", s(a v b) - s(a) - s(b) = " + d);
    if (!out.json_lines()) {
      char* doc = nullptr;
      check(oml_state_format(lattice.get(), state.get(), &doc));
      std::cout << take(doc);
    }
    out.record({{"defect", "superadditivity"},
                {"found", true},
                {"a", a},
                {"b", b},
                {"value", d},
                {"state", state_values(state.get())}});
    return kOk;
  }
  if (args.size() != 4) {
    throw ApiFailure{OML_ERR_INVALID_ARGUMENT, "defect " + kind + " takes <lattice> <state> <a> <b>"};
  }
  Lattice lattice = load_lattice(args[0]);
  State state = load_state(lattice.get(), args[1]);
  const uint32_t a = find(lattice.get(), args[2]);
  const uint32_t b = find(lattice.get(), args[3]);
  const int code = kind == "ie" ? OML_DEFECT_INCLUSION_EXCLUSION : OML_DEFECT_TOTAL_PROBABILITY;
  char* d = nullptr;
  char* l = nullptr;
  char* r = nullptr;
  check(oml_defect(lattice.get(), state.get(), code, a, b, &d, &l, &r));
  const std::string defect = take(d);
  const std::string left = take(l);
  const std::string right = take(r);
  const std::string name = kind == "ie" ? "inclusion-exclusion" : "total-probability";
  out.text(name + "(" + label(lattice.get(), a) + ", " + label(lattice.get(), b) + ") = " + defect + " [" +
           left + " - " + right + "]");
  out.record({{"defect", name}, {"a", a}, {"b", b}, {"left", left}, {"right", right}, {"value", defect}});
  return kOk;
}

// ---- hilbert demos ----------------------------------------------------------

struct ComplexMatrix {
  size_t dimension;
  std::vector<double> re;
  std::vector<double> im;
  explicit ComplexMatrix(size_t d) : dimension(d), re(d * d, 0.0), im(d * d, 0.0) {}
};

int closure_summary(Output& out, const oml_closure* closure, const ComplexMatrix& rho,
                    const std::string& demo) {
  oml_lattice* raw = nullptr;
  check(oml_closure_lattice(closure, &raw));
  Lattice lattice(raw);
  oml_state* raw_state = nullptr;
  check(oml_closure_born_state(closure, rho.re.data(), rho.im.data(), &raw_state));
  State state(raw_state);
  const size_t n = oml_lattice_size(lattice.get());
  out.text(demo + " demo: " + std::to_string(n) + " subspaces of C^" +
           std::to_string(oml_closure_dimension(closure)));
  json elements = json::array();
  for (uint32_t e = 0; e < n; ++e) {
    size_t rank = 0;
    check(oml_closure_rank(closure, e, &rank));
    double p = 0.0;
    check(oml_state_value_double(state.get(), e, &p));
    out.text("  " + label(lattice.get(), e) + " rank " + std::to_string(rank) + " born " + format_double(p));
    elements.push_back({{"element", e}, {"label", label(lattice.get(), e)}, {"rank", rank}, {"born", p}});
  }
  out.record({{"demo", demo}, {"dimension", oml_closure_dimension(closure)}, {"elements", elements}});
  int code = kOk;
  for (int law : {OML_LAW_ORTHOMODULAR, OML_LAW_MODULAR, OML_LAW_DISTRIBUTIVE}) {
    oml_report* rr = nullptr;
    check(oml_check_law(lattice.get(), law, &rr));
    Report report(rr);
    // A non-distributive closure is expected; only report it.
    const int result = emit_report(out, lattice.get(), report.get());
    if (law != OML_LAW_DISTRIBUTIVE) code = std::max(code, result);
  }
  oml_report* rr = nullptr;
  check(oml_state_validate(lattice.get(), state.get(), &rr));
  Report validity(rr);
  code = std::max(code, emit_report(out, lattice.get(), validity.get()));
  return code;
}

int run_hilbert(Output& out, const std::string& demo, uint64_t seed, double tol) {
  if (demo == "qubit") {
    const double s = 1.0 / std::sqrt(2.0);
    const std::vector<double> re{1.0, 0.0, s, s};
    oml_closure* raw = nullptr;
    check(oml_closure_new(2, 2, re.data(), nullptr, 0, tol, &raw));
    Closure closure(raw);
    ComplexMatrix rho(2);
    rho.re[0] = 1.0;
    return closure_summary(out, closure.get(), rho, "qubit");
  }
  if (demo == "qutrit") {
    const size_t d = 3;
    ComplexMatrix rho(d);
    ComplexMatrix u(d);
    check(oml_random_density(d, seed, rho.re.data(), rho.im.data()));
    check(oml_random_unitary(d, seed + 1, u.re.data(), u.im.data()));
    std::vector<double> probabilities(d);
    check(oml_born_resolution(d, rho.re.data(), rho.im.data(), u.re.data(), u.im.data(), tol,
                              probabilities.data()));
    double total = 0.0;
    for (double p : probabilities) total += p;
    if (!out.json_lines()) {
      char* m = nullptr;
      check(oml_matrix_format(d, d, rho.re.data(), rho.im.data(), &m));
      std::cout << "# density matrix (seed " << seed << ")\n" << take(m);
    }
    std::string line = "born probabilities:";
    for (double p : probabilities) line += " " + format_double(p);
    out.text(line);
    out.text("sum " + format_double(total) + ", deviation from 1: " + format_double(std::abs(total - 1.0)));
    out.record({{"demo", "qutrit"}, {"seed", seed}, {"probabilities", probabilities}, {"sum", total}});
    const double bound = tol > 0.0 ? tol : 1e-9;
    return std::abs(total - 1.0) <= bound ? kOk : kViolation;
  }
  const size_t d = 3;
  ComplexMatrix u0(d);
  ComplexMatrix u1(d);
  check(oml_random_unitary(d, seed, u0.re.data(), u0.im.data()));
  check(oml_random_unitary(d, seed + 1, u1.re.data(), u1.im.data()));
  std::vector<double> re;
  std::vector<double> im;
  for (const ComplexMatrix* u : {&u0, &u1}) {
    for (size_t i = 0; i < d; ++i) {
      re.push_back(u->re[i * d]);
      im.push_back(u->im[i * d]);
    }
  }
  oml_closure* raw = nullptr;
  check(oml_closure_new(d, 2, re.data(), im.data(), 0, tol, &raw));
  Closure closure(raw);
  ComplexMatrix rho(d);
  check(oml_random_density(d, seed + 2, rho.re.data(), rho.im.data()));
  return closure_summary(out, closure.get(), rho, "closure");
}

// ---- cox --------------------------------------------------------------------

Grid load_grid(const std::string& source, size_t points, double x_max) {
  oml_grid* raw = nullptr;
  if (source == "sum" || source == "sumprod" || source == "sumsq") {
    check(oml_grid_builtin(source.c_str(), points, x_max, &raw));
  } else {
    const std::string text = read_input(source);
    check(oml_grid_parse(text.data(), text.size(), &raw));
  }
  return Grid(raw);
}

constexpr double kAssociativityThreshold = 1e-4;

int run_cox(Output& out, const std::string& action, const std::string& source, size_t points,
            double x_max, double unit, const std::string& map, const std::string& write_path) {
  Grid grid = load_grid(source, points, x_max);
  const size_t n = oml_grid_points(grid.get());
  if (action == "residual") {
    double residual = 0.0;
    size_t admissible = 0;
    size_t skipped = 0;
    size_t worst[3] = {0, 0, 0};
    check(oml_grid_residual(grid.get(), &residual, &admissible, &skipped, worst));
    const double h = oml_grid_x_max(grid.get()) / static_cast<double>(n - 1);
    out.text("associativity residual " + format_double(residual) + " over " + std::to_string(admissible) +
             " triples (" + std::to_string(skipped) + " skipped), worst at (" + format_double(worst[0] * h) +
             ", " + format_double(worst[1] * h) + ", " + format_double(worst[2] * h) + ")");
    out.record({{"residual", residual},
                {"admissible", admissible},
                {"skipped", skipped},
                {"worst", {worst[0], worst[1], worst[2]}},
                {"step", h}});
    return residual < kAssociativityThreshold ? kOk : kViolation;
  }
  if (action == "extract") {
    oml_representation* raw = nullptr;
    check(oml_grid_extract(grid.get(), unit, &raw));
    Rep rep(raw);
    const double residual = oml_representation_residual(rep.get());
    out.text("additive representation: residual " + format_double(residual) + " over " +
             std::to_string(oml_representation_pairs(rep.get())) + " pairs, " +
             std::to_string(oml_representation_knots(rep.get())) + " knots");
    const double h = oml_grid_x_max(grid.get()) / static_cast<double>(n - 1);
    json samples = json::array();
    const size_t stride = std::max<size_t>(1, (n - 1) / 8);
    for (size_t i = 0; i < n; i += stride) {
      const double hx = oml_representation_h(rep.get(), i);
      out.text("  h(" + format_double(i * h) + ") = " + format_double(hx));
      samples.push_back({i * h, hx});
    }
    out.record({{"residual", residual},
                {"pairs", oml_representation_pairs(rep.get())},
                {"knots", oml_representation_knots(rep.get())},
                {"samples", samples}});
    return kOk;
  }
  oml_grid* raw = nullptr;
  check(oml_grid_transport(grid.get(), map.c_str(), &raw));
  Grid transported(raw);
  double before = 0.0;
  double after = 0.0;
  check(oml_grid_residual(grid.get(), &before, nullptr, nullptr, nullptr));
  check(oml_grid_residual(transported.get(), &after, nullptr, nullptr, nullptr));
  if (!write_path.empty()) {
    char* doc = nullptr;
    check(oml_grid_format(transported.get(), &doc));
    if (write_path == "-") {
      std::cout << take(doc);
      std::cerr << "transport by " << map << ": residual " << format_double(before) << " -> "
                << format_double(after) << "\n";
      return after < kAssociativityThreshold ? kOk : kViolation;
    }
    std::ofstream file(write_path, std::ios::binary);
    file << take(doc);
    if (!file) throw ApiFailure{OML_ERR_INVALID_ARGUMENT, "cannot write '" + write_path + "'"};
  }
  out.text("transport by " + map + ": residual " + format_double(before) + " -> " + format_double(after));
  out.record({{"map", map}, {"residual_before", before}, {"residual_after", after}});
  return after < kAssociativityThreshold ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized probability on finite orthomodular lattices"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->capture_default_str();
  app.fallthrough();

  std::string family;
  unsigned n = 0;
  auto* gen = app.add_subcommand("gen", "Generate a Boolean algebra or MO(n)");
  gen->add_option("family", family)->required()->check(CLI::IsMember({"boolean", "mo"}));
  gen->add_option("n", n)->required();

  std::string path = "-";
  auto* parse = app.add_subcommand("parse", "Parse a lattice and print its canonical form");
  parse->add_option("file", path);
  auto* serialize = app.add_subcommand("serialize", "Alias of parse");
  serialize->add_option("file", path);

  std::string law = "all";
  auto* check_cmd = app.add_subcommand("check", "Check lattice laws");
  check_cmd->add_option("file", path);
  check_cmd->add_option("--law", law)->check(CLI::IsMember({"all", "ortho", "om", "modular", "dist"}));

  auto* blocks = app.add_subcommand("blocks", "List the blocks of an orthomodular lattice");
  blocks->add_option("file", path);

  std::string states_action;
  uint64_t seed = 0;
  auto* states = app.add_subcommand("states", "State space: feasibility, vertices, random states");
  states->add_option("action", states_action)->required()->check(CLI::IsMember({"feasible", "vertices", "random"}));
  states->add_option("file", path);
  states->add_option("--seed", seed);

  std::string defect_kind;
  std::vector<std::string> defect_args;
  auto* defect = app.add_subcommand("defect", "Classical-rule defects");
  defect->add_option("kind", defect_kind)->required()->check(CLI::IsMember({"ie", "tp", "super"}));
  defect->add_option("args", defect_args)->required();

  std::string demo;
  double tol = 0.0;
  auto* hilbert = app.add_subcommand("hilbert", "Projection-lattice demos");
  std::string demo_word;
  hilbert->add_option("demo", demo_word)->required()->check(CLI::IsMember({"demo"}));
  hilbert->add_option("name", demo)->required()->check(CLI::IsMember({"qubit", "qutrit", "closure"}));
  hilbert->add_option("--seed", seed);
  hilbert->add_option("--tol", tol)->check(CLI::PositiveNumber);

  std::string cox_action;
  std::string source;
  size_t points = 1025;
  double x_max = 1.0;
  double unit = 0.25;
  std::string map = "square";
  std::string write_path;
  auto* cox = app.add_subcommand("cox", "Cox functional-equation engine");
  cox->add_option("action", cox_action)->required()->check(CLI::IsMember({"residual", "extract", "transport"}));
  cox->add_option("function", source, "sum, sumprod, sumsq or a grid file")->required();
  cox->add_option("--n", points)->check(CLI::Range(2, 4097));
  cox->add_option("--xmax", x_max)->check(CLI::PositiveNumber);
  cox->add_option("--unit", unit)->check(CLI::PositiveNumber);
  cox->add_option("--map", map);
  cox->add_option("--write", write_path, "Save the transported grid (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Output out(format == "json-lines");
  try {
    if (gen->parsed()) return run_gen(out, family, n);
    if (parse->parsed() || serialize->parsed()) {
      Lattice lattice = load_lattice(path);
      return emit_lattice(out, lattice.get());
    }
    if (check_cmd->parsed()) return run_check(out, path, law);
    if (blocks->parsed()) return run_blocks(out, path);
    if (states->parsed()) {
      if (states_action == "feasible") return run_feasible(out, path);
      if (states_action == "vertices") return run_vertices(out, path);
      return run_random(out, path, seed);
    }
    if (defect->parsed()) return run_defect(out, defect_kind, defect_args);
    if (hilbert->parsed()) return run_hilbert(out, demo, seed, tol);
    if (cox->parsed()) return run_cox(out, cox_action, source, points, x_max, unit, map, write_path);
  } catch (const ApiFailure& failure) {
    std::cout.flush();
    std::cerr << "error: " << oml_status_name(failure.status) << ": " << failure.message << '\n';
    return exit_code_for(failure.status);
  }
  return kUsage;
}
