// frobkit command line tool: validate, frobdim, frobbasis, separable,
// semisimple, verify, product, tensor, quotient, zoo. Reports are
// line-oriented "key value" text on stdout. Exit codes: 0 success, 1
// mathematical negative, 2 usage or parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "frobkit/frobkit.hpp"

namespace {

using namespace frobkit;

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::vector<std::string> zoo;
  std::string field = "Q";
  unsigned long long bound = 0;
  bool have_bound = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw Error("cannot write file '" + opt.output + "'");
  out << text;
}

std::variant<RationalField, PrimeField> parse_field_token(
    const std::string& token) {
  if (token == "Q") return RationalField{};
  if (token.size() > 2 && token.rfind("Fp", 0) == 0) {
    const std::string digits = token.substr(2);
    for (char c : digits)
      if (c < '0' || c > '9') throw Error("bad field '" + token + "'");
    return PrimeField(std::stoull(digits));
  }
  throw Error("bad field '" + token + "' (use Q or Fp<prime>)");
}

std::size_t parse_count(const std::string& token, const char* what) {
  if (token.empty()) throw Error(std::string("missing ") + what);
  for (char c : token)
    if (c < '0' || c > '9')
      throw Error(std::string("bad ") + what + " '" + token + "'");
  return static_cast<std::size_t>(std::stoull(token));
}

template <Field F>
Algebra<F> build_zoo_member(const F& field, const std::string& family,
                            const std::string& arg, const Options& opt) {
  if (family == "cyclic") {
    const std::size_t n = parse_count(arg, "order");
    if (n == 0) throw Error("cyclic order must be at least 1");
    return abelian_group_algebra(field, {n});
  }
  if (family == "abelian") {
    std::vector<std::size_t> factors;
    std::size_t pos = 0;
    while (pos <= arg.size()) {
      std::size_t comma = arg.find(',', pos);
      if (comma == std::string::npos) comma = arg.size();
      factors.push_back(
          parse_count(arg.substr(pos, comma - pos), "invariant factor"));
      pos = comma + 1;
      if (comma == arg.size()) break;
    }
    return abelian_group_algebra(field, factors);
  }
  if (family == "matrix")
    return matrix_algebra(field, parse_count(arg, "matrix size"));
  if (family == "truncpoly")
    return truncated_polynomial(field, parse_count(arg, "degree"));
  if (family == "pathalg") {
    const Quiver<F> quiver = parse_quiver(field, read_file(arg));
    std::optional<std::size_t> bound;
    if (opt.have_bound) bound = static_cast<std::size_t>(opt.bound);
    return path_algebra(field, quiver, bound);
  }
  throw Error("unknown zoo family '" + family +
              "' (cyclic, abelian, matrix, truncpoly, pathalg)");
}

AnyAlgebra load_algebra(const Options& opt, std::size_t which) {
  if (!opt.zoo.empty()) {
    if (!opt.inputs.empty()) throw Error("give either --in or --zoo, not both");
    const auto field = parse_field_token(opt.field);
    return std::visit(
        [&](const auto& f) -> AnyAlgebra {
          return build_zoo_member(f, opt.zoo[0], opt.zoo[1], opt);
        },
        field);
  }
  if (which >= opt.inputs.size())
    throw Error("missing --in input (or --zoo FAMILY ARG)");
  return parse_algebra(read_file(opt.inputs[which]));
}

template <Field F>
void print_header(const Algebra<F>& a) {
  std::cout << "field " << a.field().name() << "\n";
  std::cout << "dim " << a.dim() << "\n";
}

int run_validate(const Options& opt) {
  if (opt.zoo.empty() && opt.inputs.size() != 1)
    throw Error("validate needs exactly one --in file (or --zoo)");
  AnyAlgebra any = load_algebra(opt, 0);
  std::cout << "valid true\n";
  std::visit([](const auto& a) { print_header(a); }, any);
  return 0;
}

int run_frobdim(const Options& opt) {
  AnyAlgebra any = load_algebra(opt, 0);
  std::visit(
      [](const auto& a) { std::cout << "frobdim " << frobdim(a) << "\n"; },
      any);
  return 0;
}

int run_frobbasis(const Options& opt) {
  AnyAlgebra any = load_algebra(opt, 0);
  std::visit(
      [&](const auto& a) {
        const auto space = frobenius_space(a);
        std::cout << "frobdim " << space.dim() << "\n";
        std::string text;
        for (const auto& t : space.basis) text += print_tensor(t);
        emit(opt, text);
      },
      any);
  return 0;
}

int run_separable(const Options& opt) {
  AnyAlgebra any = load_algebra(opt, 0);
  return std::visit(
      [&](const auto& a) -> int {
        const auto verdict = is_separable(a);
        std::cout << "separable " << (verdict.separable ? "true" : "false")
                  << "\n";
        std::cout << "note " << verdict.field_note << "\n";
        if (!verdict.separable) return 1;
        emit(opt, print_tensor(*verdict.certificate));
        return 0;
      },
      any);
}

int run_semisimple_impl(const Algebra<RationalField>& a) {
  const bool s = semisimple_char0(a);
  std::cout << "semisimple " << (s ? "true" : "false") << "\n";
  return s ? 0 : 1;
}

int run_semisimple_impl(const Algebra<PrimeField>& a) {
  std::cout << "error semisimple requires field Q, input is over "
            << a.field().name() << "\n";
  const auto verdict = is_separable(a);
  if (verdict.separable) {
    std::cout << "separable true\n";
    std::cout << "note separability implies semisimplicity over any field\n";
  }
  return 2;
}

int run_semisimple(const Options& opt) {
  AnyAlgebra any = load_algebra(opt, 0);
  return std::visit([](const auto& a) { return run_semisimple_impl(a); }, any);
}

int run_verify(const Options& opt) {
  if (opt.inputs.size() != 2)
    throw Error("verify needs --in ALGEBRA --in TENSOR");
  AnyAlgebra any = parse_algebra(read_file(opt.inputs[0]));
  return std::visit(
      [&](const auto& a) -> int {
        const auto tensor =
            parse_tensor(a.field(), read_file(opt.inputs[1]), a.dim());
        const CoproductVerdict verdict = verify_coproduct(a, tensor);
        std::cout << "verified " << (verdict.ok ? "true" : "false") << "\n";
        if (!verdict.ok) {
          std::cout << "violation " << verdict.message << "\n";
          return 1;
        }
        return 0;
      },
      any);
}

int run_product(const Options& opt, bool tensor) {
  if (opt.inputs.size() != 2)
    throw Error(std::string(tensor ? "tensor" : "product") +
                " needs --in A --in B");
  AnyAlgebra any_a = parse_algebra(read_file(opt.inputs[0]));
  AnyAlgebra any_b = parse_algebra(read_file(opt.inputs[1]));
  if (any_a.index() != any_b.index())
    throw FieldMismatchError("inputs are over different fields");
  return std::visit(
      [&](const auto& a) -> int {
        const auto& b = std::get<std::decay_t<decltype(a)>>(any_b);
        const auto composite =
            tensor ? tensor_product(a, b) : direct_product(a, b).algebra;
        emit(opt, print_algebra(composite));
        if (!opt.output.empty()) print_header(composite);
        return 0;
      },
      any_a);
}

int run_quotient(const Options& opt) {
  if (opt.inputs.size() != 2)
    throw Error("quotient needs --in ALGEBRA --in GENERATORS");
  AnyAlgebra any = parse_algebra(read_file(opt.inputs[0]));
  return std::visit(
      [&](const auto& a) -> int {
        const auto gens =
            parse_generators(a.field(), read_file(opt.inputs[1]), a.dim());
        const auto ideal = ideal_closure(a, gens);
        const auto q = quotient(a, ideal);
        emit(opt, print_algebra(q.algebra));
        if (!opt.output.empty()) print_header(q.algebra);
        return 0;
      },
      any);
}

int run_zoo(const Options& opt) {
  if (opt.zoo.empty()) throw Error("zoo needs --zoo FAMILY ARG");
  AnyAlgebra any = load_algebra(opt, 0);
  std::visit(
      [&](const auto& a) {
        emit(opt, print_algebra(a));
        if (!opt.output.empty()) print_header(a);
      },
      any);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact nearly-Frobenius structure computations for "
               "finite-dimensional associative algebras"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_zoo, bool with_out) {
    sub->add_option("--in", opt.inputs, "input file (repeatable)");
    if (with_out)
      sub->add_option("--out", opt.output, "write the main output to a file");
    if (with_zoo) {
      sub->add_option("--zoo", opt.zoo,
                      "builtin family and argument: cyclic N | abelian "
                      "N1,N2,... | matrix N | truncpoly N | pathalg FILE")
          ->expected(2);
      sub->add_option("--field", opt.field,
                      "coefficient field for --zoo: Q (default) or Fp<prime>");
      sub->add_option("--bound", opt.bound,
                      "path length bound for --zoo pathalg")
          ->trigger_on_parse()
          ->each([&](const std::string&) { opt.have_bound = true; });
    }
    return sub;
  };

  CLI::App* validate = add_common(
      app.add_subcommand("validate", "parse and validate an algebra"), true,
      false);
  CLI::App* frobdim_cmd = add_common(
      app.add_subcommand("frobdim", "Frobenius dimension"), true, false);
  CLI::App* frobbasis = add_common(
      app.add_subcommand("frobbasis",
                         "canonical basis of the Frobenius space"),
      true, true);
  CLI::App* separable = add_common(
      app.add_subcommand("separable",
                         "decide separability; certificate on success"),
      true, true);
  CLI::App* semisimple = add_common(
      app.add_subcommand("semisimple",
                         "characteristic-zero semisimplicity (field Q only)"),
      true, false);
  CLI::App* verify = add_common(
      app.add_subcommand("verify",
                         "check a tensor file as a nearly-Frobenius "
                         "coproduct of an algebra file"),
      false, false);
  CLI::App* product = add_common(
      app.add_subcommand("product", "direct product of two algebra files"),
      false, true);
  CLI::App* tensor = add_common(
      app.add_subcommand("tensor", "tensor product of two algebra files"),
      false, true);
  CLI::App* quotient_cmd = add_common(
      app.add_subcommand("quotient",
                         "quotient by the ideal closure of a generators file"),
      false, true);
  CLI::App* zoo = add_common(
      app.add_subcommand("zoo", "emit a builtin algebra as a file"), true,
      true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(opt);
    if (app.got_subcommand(frobdim_cmd)) return run_frobdim(opt);
    if (app.got_subcommand(frobbasis)) return run_frobbasis(opt);
    if (app.got_subcommand(separable)) return run_separable(opt);
    if (app.got_subcommand(semisimple)) return run_semisimple(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
    if (app.got_subcommand(product)) return run_product(opt, false);
    if (app.got_subcommand(tensor)) return run_product(opt, true);
    if (app.got_subcommand(quotient_cmd)) return run_quotient(opt);
    if (app.got_subcommand(zoo)) return run_zoo(opt);
  } catch (const SemanticError& e) {
    if (app.got_subcommand(validate)) {
      std::cout << "valid false\n";
      std::cout << "reason " << e.what() << "\n";
      return 1;
    }
    std::cout << "error " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cout << "error parse " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cout << "error " << e.what() << "\n";
    return 2;
  }
  return 2;
}
