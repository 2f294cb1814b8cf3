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

#include <cstdio>

#include "detail/text.hpp"
#include "oml/error.hpp"
#include "oml/formats.hpp"
#include "oml/states.hpp"

namespace oml {

namespace {

std::string fingerprint_hex(const OrthoLattice& lattice) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(lattice_fingerprint(lattice)));
  return buf;
}

}  // namespace

std::string format_state(const OrthoLattice& lattice, const State& s) {
  if (s.values.size() != lattice.size()) {
    fail(ErrorKind::MissingElement, "state does not match the lattice size");
  }
  std::string out = "state 1\nlattice " + fingerprint_hex(lattice) + "\n";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    out += "value " + std::to_string(i) + " " + format_rational(s.values[i]) + "\n";
  }
  return out;
}

std::string format_states(const OrthoLattice& lattice, const std::vector<State>& states) {
  std::string out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out += "\n";
    out += format_state(lattice, states[i]);
  }
  return out;
}

std::vector<State> parse_states(const OrthoLattice& lattice, std::string_view text) {
  const auto lines = detail::split_lines(text);
  const std::string expected = fingerprint_hex(lattice);
  std::vector<State> out;
  std::vector<bool> seen;
  auto finish = [&](std::size_t line) {
    if (out.empty()) return;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (!seen[i]) {
        fail(ErrorKind::MissingElement, "state ending before line " + std::to_string(line) +
                                            " has no value for element " + std::to_string(i));
      }
    }
  };
  bool have_lattice = false;
  for (const auto& line : lines) {
    const auto& kw = line.tokens[0];
    if (kw.text == "state") {
      if (line.tokens.size() != 2 || line.tokens[1].text != "1") {
        throw ParseError(line.number, kw.column, "expected 'state 1'");
      }
      finish(line.number);
      out.push_back(State{RationalVector(lattice.size(), Rational(0)), false});
      seen.assign(lattice.size(), false);
      have_lattice = false;
      continue;
    }
    if (out.empty()) throw ParseError(line.number, kw.column, "expected header 'state 1'");
    if (kw.text == "lattice") {
      if (line.tokens.size() != 2) throw ParseError(line.number, kw.column, "expected 'lattice <hex>'");
      if (line.tokens[1].text != expected) {
        fail(ErrorKind::Validation, "line " + std::to_string(line.number) +
                                        ": state belongs to lattice " +
                                        std::string(line.tokens[1].text) + ", not " + expected);
      }
      have_lattice = true;
    } else if (kw.text == "value") {
      if (line.tokens.size() != 3) throw ParseError(line.number, kw.column, "expected 'value <i> <p>/<q>'");
      const auto index = detail::parse_index(line, 1);
      if (index >= lattice.size()) {
        fail(ErrorKind::DanglingReference, "line " + std::to_string(line.number) +
                                               ": element " + std::to_string(index) +
                                               " out of range");
      }
      try {
        out.back().values[index] = parse_rational(line.tokens[2].text);
      } catch (const ParseError& e) {
        throw ParseError(line.number, line.tokens[2].column, e.what());
      }
      seen[index] = true;
    } else {
      throw ParseError(line.number, kw.column, "unknown directive '" + std::string(kw.text) + "'");
    }
  }
  (void)have_lattice;
  finish(lines.empty() ? 1 : lines.back().number + 1);
  return out;
}

State parse_state(const OrthoLattice& lattice, std::string_view text) {
  auto states = parse_states(lattice, text);
  if (states.size() != 1) {
    throw ParseError(1, 1, "expected exactly one state block, found " + std::to_string(states.size()));
  }
  return std::move(states.front());
}

}  // namespace oml
