#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dendrifam/dendriform.hpp"
#include "dendrifam/oracle.hpp"
#include "dendrifam/rotabaxter.hpp"
#include "dendrifam/semigroup.hpp"
#include "dendrifam/termio.hpp"
#include "dendrifam/tridendriform.hpp"

namespace dendrifam::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string alphabet = "x";
  std::string semigroup = "trivial";
  std::size_t max_leaves = 0;  // 0: suite default
  std::size_t max_word = 2;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

Semigroup make_semigroup(const std::string& s) {
  if (s == "trivial") return Semigroup::trivial();
  if (s.rfind("cyclic:", 0) == 0) {
    const std::string n = s.substr(7);
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos || std::stoul(n) == 0) {
      throw UsageError("cyclic order must be a positive integer");
    }
    return Semigroup::cyclic(std::stoul(n));
  }
  if (s.rfind("free:", 0) == 0) return Semigroup::free(split_commas(s.substr(5)));
  return Semigroup::from_spec(parse_semigroup_config(read_file(s)));
}

class Context {
 public:
  explicit Context(const Config& cfg)
      : cfg_(cfg), sig_{Alphabet(split_commas(cfg.alphabet)), make_semigroup(cfg.semigroup)} {}

  const Signature& sig() const { return sig_; }
  const Semigroup& omega() const { return sig_.omega; }
  const Alphabet& alphabet() const { return sig_.alphabet; }

  std::size_t max_leaves(std::size_t fallback) const { return cfg_.max_leaves ? cfg_.max_leaves : fallback; }

  /// Family indices: every element of a finite semigroup, or the words of
  /// length at most --max-word of a free one.
  std::vector<OmegaElem> indices() const {
    return omega().is_finite() ? omega().elements() : omega().sample(cfg_.max_word);
  }

  std::vector<BinTree> bin_trees(std::size_t max_leaves) const {
    if (omega().is_finite()) return enumerate_bin_up_to(max_leaves, alphabet(), omega());
    return enumerate_bin_up_to(max_leaves, alphabet(), indices());
  }

  std::vector<SchroderTree> sch_trees(std::size_t max_leaves) const {
    if (omega().is_finite()) return enumerate_sch_up_to(max_leaves, alphabet(), omega());
    return enumerate_sch_up_to(max_leaves, alphabet(), indices());
  }

 private:
  Config cfg_;
  Signature sig_;
};

std::string format_vector(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + "]";
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const Context& ctx, const std::string& kind, std::size_t n, std::ostream& out) {
  if (n == 0) throw UsageError("n must be at least 1");
  std::size_t count = 0;
  if (kind == "binary") {
    for (const auto& t : enumerate_bin(n, ctx.alphabet(), ctx.omega())) {
      out << print_tree(t, ctx.sig()) << '\n';
      ++count;
    }
  } else {
    for (const auto& t : enumerate_sch(n, ctx.alphabet(), ctx.omega())) {
      out << print_tree(t, ctx.sig()) << '\n';
      ++count;
    }
  }
  out << "count=" << count << '\n';
  return kOk;
}

// ------------------------------------------------------------------ product

template <class Tree>
struct Operand {
  std::vector<std::pair<Coefficient, Tree>> terms;
};

template <class Tree, class ParseSpan>
Operand<Tree> read_operand(const std::string& text, const ParseSpan& parse_span) {
  Operand<Tree> op;
  if (trim(text) == "|") {
    op.terms.emplace_back(Coefficient(1), Tree::leaf());
    return op;
  }
  for (const auto& term : parse_span(text)) op.terms.emplace_back(term.coeff, term.basis);
  return op;
}

template <class Tree, class F>
LinComb<Tree> bilinear(const Operand<Tree>& lhs, const Operand<Tree>& rhs, const F& f) {
  LinComb<Tree> out;
  for (const auto& [c, t] : lhs.terms) {
    for (const auto& [d, u] : rhs.terms) out.add_scaled(c * d, f(t, u));
  }
  return out;
}

ExtElem read_index(const Context& ctx, const std::string& token) {
  if (token == "1") return ExtElem::identity();
  return ctx.omega().parse_element(token);
}

int cmd_product(const Context& ctx, const std::string& op, std::vector<std::string> args,
                const std::string& omega_flag, std::ostream& out) {
  std::string omega = omega_flag;
  if (args.size() == 3) {
    if (!omega.empty()) throw UsageError("index given both positionally and with --omega");
    omega = args.front();
    args.erase(args.begin());
  }
  if (args.size() != 2) throw UsageError("product takes two operands");
  if (op == "dot" && !omega.empty()) throw UsageError("dot takes no family index");
  if (op != "dot" && omega.empty()) throw UsageError(op + " needs a family index");

  const bool lhs_leaf = trim(args[0]) == "|";
  const bool rhs_leaf = trim(args[1]) == "|";
  if (lhs_leaf && rhs_leaf) throw UsageError("at least one operand must be a tree");
  const TermKind kind = detect_kind(lhs_leaf ? args[1] : args[0]);
  if (!lhs_leaf && !rhs_leaf && detect_kind(args[1]) != kind) throw UsageError("operands use different grammars");

  const auto& sig = ctx.sig();
  if (kind == TermKind::Binary) {
    if (op == "dot") throw UsageError("dot is defined on Schroder trees (S[...])");
    const FreeDendriform alg(ctx.omega());
    auto parse = [&](const std::string& t) { return parse_bin_span(t, sig); };
    const auto lhs = read_operand<BinTree>(args[0], parse);
    const auto rhs = read_operand<BinTree>(args[1], parse);
    const ExtElem w = read_index(ctx, omega);
    const auto result = bilinear(lhs, rhs, [&](const BinTree& t, const BinTree& u) {
      return op == "prec" ? alg.prec(t, u, w) : alg.succ(t, u, w);
    });
    out << print_span(result, sig) << '\n';
    return kOk;
  }

  const FreeTridendriform alg(ctx.omega());
  auto parse = [&](const std::string& t) { return parse_sch_span(t, sig); };
  const auto lhs = read_operand<SchroderTree>(args[0], parse);
  const auto rhs = read_operand<SchroderTree>(args[1], parse);
  const ExtElem w = op == "dot" ? ExtElem::identity() : read_index(ctx, omega);
  const auto result = bilinear(lhs, rhs, [&](const SchroderTree& t, const SchroderTree& u) {
    if (op == "dot") return alg.dot(t, u);
    return op == "prec" ? alg.prec(t, u, w) : alg.succ(t, u, w);
  });
  out << print_span(result, sig) << '\n';
  return kOk;
}

// -------------------------------------------------------------------- check

void report(std::ostream& out, std::size_t instances, std::size_t failures) {
  out << "instances=" << instances << " failures=" << failures << '\n';
}

RBFamily load_rb(const Context& ctx, const std::string& path, const std::string& lambda) {
  if (path.empty()) throw UsageError("this command needs --rb-file");
  std::optional<Coefficient> l;
  if (!lambda.empty()) l = Coefficient::parse(lambda);
  return parse_rb_family(read_file(path), ctx.omega(), l);
}

// P_a(e_i) P_b(e_j) - P_ab(P_a(e_i) e_j + e_i P_b(e_j) + lambda e_i e_j)
Vector rb_residual(const RBFamily& rb, const Semigroup& omega, const RBCounterexample& c) {
  const auto& alg = rb.algebra();
  const Vector x = alg.basis(c.i), y = alg.basis(c.j);
  const Vector px = rb.apply(c.a, x), py = rb.apply(c.b, y);
  Vector inner = add(add(alg.multiply(px, y), alg.multiply(x, py)), scale(rb.lambda(), alg.multiply(x, y)));
  return sub(alg.multiply(px, py), rb.apply(omega.mul(c.a, c.b), inner));
}

int report_rb(std::ostream& out, const Context& ctx, const RBFamily& rb, const RBReport& r) {
  report(out, r.instances, r.failures);
  if (!r.first) return kOk;
  out << "counterexample a=" << ctx.omega().format(r.first->a) << " b=" << ctx.omega().format(r.first->b)
      << " i=" << r.first->i << " j=" << r.first->j << '\n';
  out << "residual=" << format_vector(rb_residual(rb, ctx.omega(), *r.first)) << '\n';
  return kCounterexample;
}

template <class Algebra, class Element>
int report_family_sweep(std::ostream& out, const Context& ctx, const Algebra& alg, const SweepReport& r,
                        const std::vector<Element>& elements) {
  report(out, r.instances, r.failures);
  if (!r.first) return kOk;
  const auto& v = *r.first;
  out << "counterexample axiom=" << v.axiom << " a=" << ctx.omega().format(v.a) << " b=" << ctx.omega().format(v.b)
      << '\n';
  out << "x=" << print_span(elements[v.x], ctx.sig()) << '\n';
  out << "y=" << print_span(elements[v.y], ctx.sig()) << '\n';
  out << "z=" << print_span(elements[v.z], ctx.sig()) << '\n';
  if constexpr (TridendriformFamily<Algebra>) {
    const auto res = tridendriform_residuals(alg, elements[v.x], elements[v.y], elements[v.z], v.a, v.b);
    out << "residual=" << print_span(res[v.axiom - 1], ctx.sig()) << '\n';
  } else {
    const auto res = dendriform_residuals(alg, elements[v.x], elements[v.y], elements[v.z], v.a, v.b);
    out << "residual=" << print_span(res[v.axiom - 1], ctx.sig()) << '\n';
  }
  return kCounterexample;
}

template <class Tree>
std::string print_tagged(const LinComb<Tagged<Tree>>& s, const Context& ctx) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& term : s) {
    if (!out.empty()) out += " + ";
    out += term.coeff.str() + "*(" + print_tree(term.basis.tree, ctx.sig()) + " @ " +
           ctx.omega().format(term.basis.w) + ")";
  }
  return out;
}

template <class Tensor, class Tree>
int check_tensor(std::ostream& out, std::ostream& err, const Context& ctx, const Tensor& tensor,
                 const std::vector<Tree>& trees) {
  std::vector<typename Tensor::Element> elements;
  for (const auto& t : trees) {
    for (const auto& w : ctx.indices()) elements.push_back(Tensor::pure(t, w));
  }
  err << "tensor sweep over " << elements.size() << " basis elements\n";
  SweepReport r;
  if constexpr (ClassicalTridendriform<Tensor>) {
    r = sweep_classical_tridendriform(tensor, elements);
  } else {
    r = sweep_classical_dendriform(tensor, elements);
  }
  report(out, r.instances, r.failures);
  if (!r.first) return kOk;
  const auto& v = *r.first;
  out << "counterexample axiom=" << v.axiom << '\n';
  out << "x=" << print_tagged(elements[v.x], ctx) << '\n';
  out << "y=" << print_tagged(elements[v.y], ctx) << '\n';
  out << "z=" << print_tagged(elements[v.z], ctx) << '\n';
  return kCounterexample;
}

int cmd_check(const Context& ctx, const std::string& suite, const std::string& rb_file, const std::string& lambda,
              std::ostream& out, std::ostream& err) {
  if (suite == "dendriform") {
    const auto trees = ctx.bin_trees(ctx.max_leaves(3));
    const FreeDendriform alg(ctx.omega());
    std::vector<SpanB> elements;
    for (const auto& t : trees) elements.emplace_back(t);
    err << "dendriform sweep over " << elements.size() << " trees and " << ctx.indices().size() << " indices\n";
    return report_family_sweep(out, ctx, alg, sweep_dendriform(alg, elements, ctx.indices()), elements);
  }
  if (suite == "tridendriform") {
    const auto trees = ctx.sch_trees(ctx.max_leaves(2));
    const FreeTridendriform alg(ctx.omega());
    std::vector<SpanS> elements;
    for (const auto& t : trees) elements.emplace_back(t);
    err << "tridendriform sweep over " << elements.size() << " trees and " << ctx.indices().size() << " indices\n";
    return report_family_sweep(out, ctx, alg, sweep_tridendriform(alg, elements, ctx.indices()), elements);
  }
  if (suite == "rb") {
    const RBFamily rb = load_rb(ctx, rb_file, lambda);
    return report_rb(out, ctx, rb, sweep_rb_family(rb, ctx.omega(), ctx.indices()));
  }
  if (suite == "tensor-rb") {
    const RBFamily rb = load_rb(ctx, rb_file, lambda);
    const TensorRB p(rb, ctx.omega());
    return report_rb(out, ctx, rb, sweep_tensor_rb(p, rb.dim(), ctx.indices()));
  }
  if (suite == "tensor-dend") {
    const FreeDendriform alg(ctx.omega());
    return check_tensor(out, err, ctx, TensorDendriform(alg), ctx.bin_trees(ctx.max_leaves(2)));
  }
  if (suite == "tensor-tridend") {
    const FreeTridendriform alg(ctx.omega());
    return check_tensor(out, err, ctx, TensorTridendriform(alg), ctx.sch_trees(ctx.max_leaves(2)));
  }
  // diagram: gamma(epsilon(rb)) = eta(rb) on basis pairs.
  const RBFamily rb = load_rb(ctx, rb_file, lambda);
  const auto idx = ctx.indices();
  if (auto rep = sweep_rb_family(rb, ctx.omega(), idx); rep.first) return report_rb(out, ctx, rb, rep);
  const EpsilonOracle eps = epsilon(rb, ctx.omega(), idx);
  const EtaOracle et = eta(rb, ctx.omega(), idx);
  const auto g = gamma(eps);
  const auto basis = basis_vectors(rb.dim());
  std::size_t instances = 0, failures = 0;
  std::string first;
  for (const auto& w : idx) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        ++instances;
        if (g.prec(basis[i], basis[j], w) != et.prec(basis[i], basis[j], w) ||
            g.succ(basis[i], basis[j], w) != et.succ(basis[i], basis[j], w)) {
          ++failures;
          if (first.empty()) {
            first = "counterexample w=" + ctx.omega().format(w) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
          }
        }
      }
    }
  }
  report(out, instances, failures);
  if (failures == 0) return kOk;
  out << first << '\n';
  return kCounterexample;
}

// ------------------------------------------------------------------- extend

int cmd_extend(const Context& ctx, const std::string& rb_file, const std::string& lambda, const std::string& functor,
               const std::string& map_file, const std::string& term, std::ostream& out) {
  const RBFamily rb = load_rb(ctx, rb_file, lambda);
  if (map_file.empty()) throw UsageError("extend needs --map-file");
  const auto images = parse_generator_map(read_file(map_file), ctx.alphabet(), rb.dim());
  const auto f = [&](Symbol x) {
    auto it = images.find(x);
    if (it == images.end()) throw UsageError("map file has no image for '" + ctx.alphabet().name(x) + "'");
    return it->second;
  };
  const auto idx = ctx.indices();
  if (auto rep = sweep_rb_family(rb, ctx.omega(), idx); rep.first) return report_rb(out, ctx, rb, rep);

  const TermKind kind = detect_kind(term);
  if (functor == "eta") {
    if (kind != TermKind::Binary) throw UsageError("eta extends binary-tree terms (B[...])");
    const EtaOracle target = eta(rb, ctx.omega(), idx);
    out << format_vector(free_extend(f, target, parse_bin_span(term, ctx.sig()))) << '\n';
    return kOk;
  }
  if (kind != TermKind::Schroder) throw UsageError("epsilon extends Schroder-tree terms (S[...])");
  const EpsilonOracle target = epsilon(rb, ctx.omega(), idx);
  out << format_vector(tfree_extend(f, target, parse_sch_span(term, ctx.sig()))) << '\n';
  return kOk;
}

// ------------------------------------------------------------------ express

int cmd_express(const Context& ctx, const std::string& term, std::ostream& out) {
  if (trim(term) == "|") throw UsageError("the leaf | is not generated");
  if (detect_kind(term) == TermKind::Binary) {
    out << print_expr(express_in_generators(parse_bin_tree(term, ctx.sig())), ctx.sig()) << '\n';
  } else {
    out << print_expr(texpress_in_generators(parse_sch_tree(term, ctx.sig())), ctx.sig()) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free dendriform and tridendriform family algebras", "dendrifam"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--alphabet", cfg.alphabet, "Comma-separated decoration symbols")->capture_default_str();
  app.add_option("--semigroup", cfg.semigroup, "trivial, cyclic:N, free:a,b, or a config file")
      ->capture_default_str();
  app.add_option("--max-leaves", cfg.max_leaves, "Largest tree size in sweeps")->check(CLI::PositiveNumber);
  app.add_option("--max-word", cfg.max_word, "Longest free-semigroup word sampled")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "List every tree with n+1 leaves");
  std::string kind;
  std::size_t n = 0;
  enumerate->add_option("kind", kind)->required()->check(CLI::IsMember({"binary", "schroder"}));
  enumerate->add_option("n", n)->required();

  auto* product = app.add_subcommand("product", "Apply prec, succ or dot to two terms");
  std::string op;
  std::vector<std::string> operands;
  std::string omega;
  product->add_option("op", op)->required()->check(CLI::IsMember({"prec", "succ", "dot"}));
  product->add_option("operands", operands, "[omega] lhs rhs")->required();
  product->add_option("--omega", omega, "Family index");

  auto* check = app.add_subcommand("check", "Run an exhaustive verification suite");
  std::string suite;
  std::string rb_file;
  std::string lambda;
  check->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember(
          {"dendriform", "tridendriform", "rb", "tensor-rb", "tensor-dend", "tensor-tridend", "diagram"}));
  check->add_option("--rb-file", rb_file, "Operator family file");
  check->add_option("--lambda", lambda, "Weight (overrides the file)");

  auto* extend = app.add_subcommand("extend", "Evaluate the morphism extending a generator map");
  std::string functor = "eta";
  std::string map_file;
  std::string term;
  extend->add_option("--rb-file", rb_file, "Operator family file")->required();
  extend->add_option("--lambda", lambda, "Weight (overrides the file)");
  extend->add_option("--functor", functor)->check(CLI::IsMember({"eta", "epsilon"}))->capture_default_str();
  extend->add_option("--map-file", map_file, "Generator images")->required();
  extend->add_option("term", term)->required();

  auto* express = app.add_subcommand("express", "Write a tree in the single-vertex generators");
  express->add_option("term", term)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Context ctx(cfg);
    if (*enumerate) return cmd_enumerate(ctx, kind, n, out);
    if (*product) return cmd_product(ctx, op, operands, omega, out);
    if (*check) return cmd_check(ctx, suite, rb_file, lambda, out, err);
    if (*extend) return cmd_extend(ctx, rb_file, lambda, functor, map_file, term, out);
    return cmd_express(ctx, term, out);
  } catch (const IdentityMisuse& e) {
    err << "error: " << e.what() << '\n';
    return kMisuse;
  } catch (const LeafArgument& e) {
    err << "error: " << e.what() << '\n';
    return kMisuse;
  } catch (const AxiomFailure& e) {
    err << "axiom failure: " << e.what() << '\n';
    return kCounterexample;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace dendrifam::cli
