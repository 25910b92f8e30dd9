// Copyright 2026 The bilred Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lp_writer.h"

#include <fstream>

#include "error.h"

namespace bilred {
namespace {

constexpr int kSignificantDigits = 17;

// Long division to `kSignificantDigits` significant digits, rounding half
// away from zero on the first dropped digit. `*exact_out` reports whether
// the string is the exact value.
std::string decimal_core(const Rational& r, bool* exact_out) {
  if (r.is_integer()) {
    if (exact_out) *exact_out = true;
    return r.num().str();
  }
  const bool neg = r.sign() < 0;
  BigInt p = neg ? BigInt(-r.num()) : r.num();
  const BigInt& q = r.den();
  BigInt ip = p / q;
  BigInt rem = p % q;
  std::string int_part = ip.str();
  std::string frac;
  int sig = (ip == 0) ? 0 : static_cast<int>(int_part.size());
  while (!rem.is_zero() && sig < kSignificantDigits) {
    rem *= 10;
    const int d = static_cast<int>(rem / q);
    rem %= q;
    frac.push_back(static_cast<char>('0' + d));
    if (sig > 0 || d != 0) ++sig;
  }
  const bool exact = rem.is_zero();
  if (!exact) {
    rem *= 10;
    if (rem / q >= 5) {
      int i = static_cast<int>(frac.size()) - 1;
      for (; i >= 0; --i) {
        if (frac[i] == '9') {
          frac[i] = '0';
        } else {
          ++frac[i];
          break;
        }
      }
      if (i < 0) {
        int j = static_cast<int>(int_part.size()) - 1;
        for (; j >= 0; --j) {
          if (int_part[j] == '9') {
            int_part[j] = '0';
          } else {
            ++int_part[j];
            break;
          }
        }
        if (j < 0) int_part.insert(int_part.begin(), '1');
      }
    }
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (exact_out) *exact_out = exact;
  std::string out = neg ? "-" : "";
  out += int_part;
  if (!frac.empty()) {
    out += ".";
    out += frac;
  }
  return out;
}

std::string format_number(const Rational& r, bool exact_fractions,
                          bool* rounded) {
  if (exact_fractions) return r.str();
  bool exact = true;
  std::string s = decimal_core(r, &exact);
  if (!exact && rounded != nullptr) *rounded = true;
  return s;
}

const char* rel_string(Rel rel) {
  switch (rel) {
    case Rel::Le:
      return " <= ";
    case Rel::Eq:
      return " = ";
    case Rel::Ge:
      return " >= ";
  }
  return " = ";
}

// Linear combination in LP syntax; unit coefficients drop the number, zero
// coefficients drop the term. An identically zero combination is written
// as "0 <last var>" so the line stays parseable.
std::string render_combination(const LinearProgram& lp, const Vector& coeffs,
                               bool exact_fractions, bool* rounded) {
  std::string out;
  bool first = true;
  for (int i = 0; i < lp.num_vars(); ++i) {
    const Rational& c = coeffs[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) out += "- ";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (!(mag == Rational(1))) {
      out += format_number(mag, exact_fractions, rounded);
      out += " ";
    }
    out += lp.var_name(i);
  }
  if (first) {
    out += "0 ";
    out += lp.var_name(lp.num_vars() - 1);
  }
  return out;
}

}  // namespace

std::string decimal_string(const Rational& r) {
  return decimal_core(r, nullptr);
}

std::string render_lp(const LinearProgram& lp) {
  const int nv = lp.num_vars();
  if (static_cast<int>(lp.objective.size()) != nv ||
      static_cast<int>(lp.var_bounds.size()) != nv) {
    throw Error(ErrorCode::DimensionMismatch,
                "objective and bounds must cover every variable");
  }
  for (const LpRow& row : lp.rows) {
    if (static_cast<int>(row.coeffs.size()) != nv) {
      throw Error(ErrorCode::DimensionMismatch,
                  "row width does not match the variable count");
    }
  }

  std::string out = lp.sense == Sense::Min ? "Minimize\n" : "Maximize\n";
  {
    bool rounded = false;
    std::string line = " obj: ";
    line += render_combination(lp, lp.objective, false, &rounded);
    if (rounded) {
      line += "  \\ exact: ";
      line += render_combination(lp, lp.objective, true, nullptr);
    }
    out += line;
    out += "\n";
  }
  out += "Subject To\n";
  for (size_t r = 0; r < lp.rows.size(); ++r) {
    const LpRow& row = lp.rows[r];
    bool rounded = false;
    std::string line = " c" + std::to_string(r + 1) + ": ";
    line += render_combination(lp, row.coeffs, false, &rounded);
    line += rel_string(row.rel);
    line += format_number(row.rhs, false, &rounded);
    if (rounded) {
      line += "  \\ exact: ";
      line += render_combination(lp, row.coeffs, true, nullptr);
      line += rel_string(row.rel);
      line += row.rhs.str();
    }
    out += line;
    out += "\n";
  }
  out += "Bounds\n";
  for (int i = 0; i < nv; ++i) {
    const VarBound& vb = lp.var_bounds[i];
    const std::string name = lp.var_name(i);
    bool rounded = false;
    std::string line = " ";
    if (vb.lo && vb.hi) {
      line += format_number(*vb.lo, false, &rounded);
      line += " <= " + name + " <= ";
      line += format_number(*vb.hi, false, &rounded);
      if (rounded) {
        line += "  \\ exact: " + vb.lo->str() + " <= " + name + " <= " +
                vb.hi->str();
      }
    } else if (vb.lo) {
      line += name + " >= " + format_number(*vb.lo, false, &rounded);
      if (rounded) line += "  \\ exact: " + name + " >= " + vb.lo->str();
    } else if (vb.hi) {
      line += name + " <= " + format_number(*vb.hi, false, &rounded);
      if (rounded) line += "  \\ exact: " + name + " <= " + vb.hi->str();
    } else {
      line += name + " free";
    }
    out += line;
    out += "\n";
  }
  out += "End\n";
  return out;
}

void emit_lp_file(const LinearProgram& lp, const std::string& path) {
  const std::string text = render_lp(lp);
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::IoError, "cannot open \"" + path + "\" for writing");
  }
  file << text;
  file.flush();
  if (!file.good()) {
    throw Error(ErrorCode::IoError, "failed while writing \"" + path + "\"");
  }
}

}  // namespace bilred
