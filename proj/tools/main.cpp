// booleq: exact qudit bases, projection operators and Bell states on the
// command line.
//
// Exit status: 0 = success / all checks passed, 1 = verification failure,
// 2 = usage or range error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "booleq/boole.hpp"
#include "booleq/gate.hpp"
#include "booleq/ket.hpp"
#include "booleq/projector.hpp"
#include "booleq/render.hpp"
#include "booleq/verify.hpp"

namespace {

using booleq::Amplitude;
using booleq::BellState;
using booleq::Ket;
using booleq::Matrix;
using booleq::Rational;
using json = nlohmann::ordered_json;

enum class Format { text, json, latex };

Format to_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "latex") return Format::latex;
  return Format::text;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_dim(unsigned d, unsigned cap) {
  if (d < 1) {
    throw UsageError("d must be >= 1");
  }
  if (d > cap) {
    throw UsageError("d = " + std::to_string(d) +
                     " exceeds the configured cap of " + std::to_string(cap) +
                     " (raise with --cap or BOOLEQ_MAX_D)");
  }
}

std::vector<double> approx_pair(const Amplitude& v) {
  const auto z = v.to_complex();
  return {z.real(), z.imag()};
}

json ket_entries_json(const Ket& k) {
  json entries = json::array();
  for (unsigned i = 0; i < k.dim(); ++i) {
    entries.push_back(k[i].str());
  }
  return entries;
}

json ket_approx_json(const Ket& k) {
  json entries = json::array();
  for (unsigned i = 0; i < k.dim(); ++i) {
    entries.push_back(approx_pair(k[i]));
  }
  return entries;
}

int cmd_basis(unsigned d, std::optional<unsigned> x, bool symbolic,
              Format format, bool approx, unsigned cap) {
  check_dim(d, cap);
  if (symbolic) {
    const auto ket = booleq::symbolic_ket(d);
    switch (format) {
      case Format::text:
        std::cout << booleq::render::symbolic_ket_text(ket) << "\n";
        break;
      case Format::latex:
        std::cout << booleq::render::symbolic_ket_latex(ket) << "\n";
        break;
      case Format::json: {
        json j;
        j["d"] = d;
        j["x"] = nullptr;
        json entries = json::array();
        for (const auto& p : ket.entries) {
          entries.push_back(p.str());
        }
        j["entries"] = entries;
        std::cout << j.dump(2) << "\n";
        break;
      }
    }
    return 0;
  }
  if (!x) {
    throw UsageError("basis: --x is required unless --symbolic is given");
  }
  if (*x >= d) {
    throw UsageError("basis: x = " + std::to_string(*x) +
                     " is out of range for d = " + std::to_string(d));
  }
  const Ket ket = booleq::basis_ket(d, *x);
  switch (format) {
    case Format::text:
      std::cout << booleq::render::ket_text(ket) << "\n";
      if (approx) {
        std::cout << "approx: " << booleq::render::approx_ket(ket) << "\n";
      }
      break;
    case Format::latex:
      std::cout << booleq::render::ket_latex(ket) << "\n";
      if (approx) {
        std::cout << "% approx: " << booleq::render::approx_ket(ket) << "\n";
      }
      break;
    case Format::json: {
      json j;
      j["d"] = d;
      j["x"] = *x;
      j["entries"] = ket_entries_json(ket);
      if (approx) {
        j["approx"] = ket_approx_json(ket);
      }
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

int cmd_projector(unsigned d, std::optional<unsigned> x, bool symbolic,
                  Format format, bool approx, unsigned cap) {
  check_dim(d, cap);
  if (symbolic) {
    const auto proj = booleq::symbolic_projector(d);
    switch (format) {
      case Format::text:
        std::cout << booleq::render::symbolic_projector_text(proj) << "\n";
        break;
      case Format::latex:
        std::cout << booleq::render::symbolic_projector_latex(proj) << "\n";
        break;
      case Format::json: {
        json j;
        j["d"] = d;
        j["x"] = nullptr;
        json diag = json::array();
        for (const auto& p : proj.diagonal) {
          diag.push_back(p.str());
        }
        j["diagonal"] = diag;
        std::cout << j.dump(2) << "\n";
        break;
      }
    }
    return 0;
  }
  if (!x) {
    throw UsageError("projector: --x is required unless --symbolic is given");
  }
  if (*x >= d) {
    throw UsageError("projector: x = " + std::to_string(*x) +
                     " is out of range for d = " + std::to_string(d));
  }
  const Matrix proj = booleq::projector(d, *x);
  switch (format) {
    case Format::text:
      std::cout << booleq::render::matrix_text(proj) << "\n";
      if (approx) {
        std::cout << "approx diag: (";
        for (unsigned i = 0; i < d; ++i) {
          std::cout << (i ? ", " : "")
                    << booleq::render::approx_amplitude(proj.at(i, i));
        }
        std::cout << ")\n";
      }
      break;
    case Format::latex:
      std::cout << booleq::render::matrix_latex(proj) << "\n";
      break;
    case Format::json: {
      json j;
      j["d"] = d;
      j["x"] = *x;
      json rows = json::array();
      for (unsigned i = 0; i < d; ++i) {
        json row = json::array();
        for (unsigned jj = 0; jj < d; ++jj) {
          row.push_back(proj.at(i, jj).str());
        }
        rows.push_back(row);
      }
      j["entries"] = rows;
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

int cmd_completeness(unsigned d, Format format, unsigned cap) {
  check_dim(d, cap);
  const Matrix sum = booleq::completeness_sum(d);
  const bool identity = sum.is_identity();
  switch (format) {
    case Format::text:
      std::cout << booleq::render::matrix_text(sum) << "\n"
                << "identity: " << (identity ? "true" : "false") << "\n";
      break;
    case Format::latex:
      std::cout << booleq::render::matrix_latex(sum) << "\n"
                << "% identity: " << (identity ? "true" : "false") << "\n";
      break;
    case Format::json: {
      json j;
      j["d"] = d;
      json rows = json::array();
      for (unsigned i = 0; i < d; ++i) {
        json row = json::array();
        for (unsigned jj = 0; jj < d; ++jj) {
          row.push_back(sum.at(i, jj).str());
        }
        rows.push_back(row);
      }
      j["entries"] = rows;
      j["is_identity"] = identity;
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return identity ? 0 : 1;
}

int cmd_bell(unsigned x, unsigned y, Format format, bool approx) {
  if (x > 1) {
    throw UsageError("bell: x must be a bit (0 or 1)");
  }
  if (y > 1) {
    throw UsageError("bell: y must be a bit (0 or 1)");
  }
  const BellState state = booleq::bell_state(x, y);
  const Ket closed = booleq::bell_closed_form(x, y);
  const bool matches = state.ket == closed;
  switch (format) {
    case Format::text:
      std::cout << "bell x=" << x << " y=" << y << "\n"
                << "circuit:     " << booleq::render::ket_text(state.ket)
                << "\n"
                << "closed form: " << booleq::render::ket_text(closed) << "\n"
                << "matches: " << (matches ? "true" : "false") << "\n";
      if (approx) {
        std::cout << "approx: " << booleq::render::approx_ket(state.ket)
                  << "\n";
      }
      break;
    case Format::latex:
      std::cout << booleq::render::bell_latex(state) << "\n"
                << "% matches closed form: " << (matches ? "true" : "false")
                << "\n";
      break;
    case Format::json: {
      json j;
      j["x"] = x;
      j["y"] = y;
      j["entries"] = ket_entries_json(state.ket);
      j["matches_closed_form"] = matches;
      if (approx) {
        j["approx"] = ket_approx_json(state.ket);
      }
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return matches ? 0 : 1;
}

int cmd_superpose(unsigned d, const std::string& amps_arg, Format format,
                  bool approx, unsigned cap) {
  check_dim(d, cap);
  std::vector<Amplitude> amps;
  size_t start = 0;
  while (start <= amps_arg.size()) {
    const size_t comma = amps_arg.find(',', start);
    const std::string piece = amps_arg.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    amps.push_back(booleq::parse_amplitude(piece));
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  if (amps.size() != d) {
    throw UsageError("superpose: expected " + std::to_string(d) +
                     " amplitudes, got " + std::to_string(amps.size()));
  }
  const auto sup = booleq::superpose(d, std::move(amps));
  const bool normalized = sup.is_normalized();
  const Ket as_ket{std::vector<Amplitude>(sup.amplitudes)};
  switch (format) {
    case Format::text:
      std::cout << "amplitudes: " << booleq::render::ket_text(as_ket) << "\n"
                << "normalized: " << (normalized ? "true" : "false") << "\n";
      if (approx) {
        std::cout << "approx: " << booleq::render::approx_ket(as_ket) << "\n";
      }
      break;
    case Format::latex:
      std::cout << booleq::render::ket_latex(as_ket) << "\n"
                << "% normalized: " << (normalized ? "true" : "false") << "\n";
      break;
    case Format::json: {
      json j;
      j["d"] = d;
      j["amplitudes"] = ket_entries_json(as_ket);
      j["normalized"] = normalized;
      if (approx) {
        j["approx"] = ket_approx_json(as_ket);
      }
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

int cmd_verify(unsigned max_d, Format format, unsigned cap) {
  if (max_d < 1) {
    throw UsageError("verify: --max-d must be >= 1");
  }
  if (max_d > cap) {
    throw UsageError("verify: --max-d " + std::to_string(max_d) +
                     " exceeds the configured cap of " + std::to_string(cap) +
                     " (raise with --cap or BOOLEQ_MAX_D)");
  }
  const booleq::VerifyReport report = booleq::run_verify(max_d);
  switch (format) {
    case Format::text:
      std::cout << "verify d=" << report.d_min << ".." << report.d_max << "\n";
      for (const auto& c : report.checks) {
        std::cout << "[" << (c.pass ? "pass" : "FAIL") << "] d=" << c.d << " "
                  << c.name << ": " << c.witness << "\n";
      }
      std::cout << "overall: " << (report.overall ? "pass" : "FAIL") << "\n";
      break;
    case Format::latex:
      std::cout << "\\begin{tabular}{rlll}\n";
      for (const auto& c : report.checks) {
        std::cout << c.d << " & " << c.name << " & "
                  << (c.pass ? "pass" : "FAIL") << " & " << c.witness
                  << "\\\\\n";
      }
      std::cout << "\\end{tabular}\n"
                << "% overall: " << (report.overall ? "pass" : "FAIL") << "\n";
      break;
    case Format::json: {
      json j;
      j["d_min"] = report.d_min;
      j["d_max"] = report.d_max;
      json checks = json::array();
      for (const auto& c : report.checks) {
        json entry;
        entry["name"] = c.name;
        entry["d"] = c.d;
        entry["pass"] = c.pass;
        entry["witness"] = c.witness;
        checks.push_back(entry);
      }
      j["checks"] = checks;
      j["overall"] = report.overall;
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return report.overall ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact qudit bases, projection operators and Bell states"};
  app.require_subcommand(1);

  unsigned cap = 64;
  app.add_option("--cap", cap,
                 "maximum allowed dimension (default 64; env BOOLEQ_MAX_D)")
      ->envname("BOOLEQ_MAX_D");

  std::string format_name = "text";
  unsigned d = 0;
  unsigned x = 0;
  unsigned y = 0;
  bool symbolic = false;
  bool approx = false;
  unsigned max_d = 16;
  std::string amps_arg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
  };

  CLI::App* basis = app.add_subcommand("basis", "print a basis ket");
  basis->add_option("--d", d, "dimension")->required();
  auto* basis_x = basis->add_option("--x", x, "basis index");
  basis->add_flag("--symbolic", symbolic,
                  "print the symbolic (polynomial-entry) form");
  basis->add_flag("--approx", approx, "append decimal approximations");
  add_format(basis);

  CLI::App* projector =
      app.add_subcommand("projector", "print a projection operator");
  projector->add_option("--d", d, "dimension")->required();
  auto* projector_x = projector->add_option("--x", x, "basis index");
  projector->add_flag("--symbolic", symbolic,
                      "print the symbolic (polynomial-entry) form");
  projector->add_flag("--approx", approx, "append decimal approximations");
  add_format(projector);

  CLI::App* completeness = app.add_subcommand(
      "completeness", "sum all projectors and check the identity");
  completeness->add_option("--d", d, "dimension")->required();
  add_format(completeness);

  CLI::App* verify =
      app.add_subcommand("verify", "run the exact identity checks");
  verify->add_option("--max-d", max_d, "verify every dimension up to this");
  add_format(verify);

  CLI::App* bell = app.add_subcommand("bell", "print a Bell state");
  bell->add_option("--x", x, "first bit")->required();
  bell->add_option("--y", y, "second bit")->required();
  bell->add_flag("--approx", approx, "append decimal approximations");
  add_format(bell);

  CLI::App* superpose = app.add_subcommand(
      "superpose", "parse amplitudes and report exact normalization");
  superpose->add_option("--d", d, "dimension")->required();
  superpose->add_option("--amps", amps_arg, "comma-separated amplitudes")
      ->required();
  superpose->add_flag("--approx", approx, "append decimal approximations");
  add_format(superpose);

  // let the app-level --cap appear after a subcommand name
  for (CLI::App* sub : {basis, projector, completeness, verify, bell,
                        superpose}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Format format = to_format(format_name);
  try {
    if (app.got_subcommand(basis)) {
      std::optional<unsigned> xv;
      if (basis_x->count() > 0) xv = x;
      return cmd_basis(d, xv, symbolic, format, approx, cap);
    }
    if (app.got_subcommand(projector)) {
      std::optional<unsigned> xv;
      if (projector_x->count() > 0) xv = x;
      return cmd_projector(d, xv, symbolic, format, approx, cap);
    }
    if (app.got_subcommand(completeness)) {
      return cmd_completeness(d, format, cap);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(max_d, format, cap);
    }
    if (app.got_subcommand(bell)) {
      return cmd_bell(x, y, format, approx);
    }
    if (app.got_subcommand(superpose)) {
      return cmd_superpose(d, amps_arg, format, approx, cap);
    }
  } catch (const std::exception& e) {
    std::cerr << "booleq: error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
