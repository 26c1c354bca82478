#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "combalg/boundary.hpp"
#include "combalg/coproducts.hpp"
#include "combalg/io.hpp"
#include "combalg/primitives.hpp"
#include "combalg/products.hpp"
#include "combalg/verify.hpp"

namespace {

using namespace combalg;

struct Options {
  std::string format = "text";
  std::string theta = "default";
  int degree = 0;
  int max_degree = 0;
  std::uint64_t seed = 20080514;
};

ThetaTable the_table(const Options& o, int cap_hint) {
  if (o.theta == "default") return ThetaTable::default_xi(std::max(cap_hint, 8));
  return theta_from_file(o.theta);
}

int cmd_enum(const std::string& family, int degree, const std::string& format) {
  auto emit_words = [&](const std::vector<Word>& ws) {
    if (format == "json") {
      std::string out = "[";
      for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += ',';
        out += json_of(ws[i]);
      }
      std::cout << out << "]\n";
    } else {
      for (auto& w : ws) std::cout << to_string(w) << "\n";
    }
  };
  if (family == "surjections") {
    emit_words(enum_surjections(degree));
  } else if (family == "kwords") {
    emit_words(enum_kwords(degree));
  } else if (family == "parking") {
    emit_words(enum_parking(degree));
  } else if (family == "prime-parking") {
    emit_words(enum_prime_parking(degree));
  } else if (family == "perms") {
    for (auto& p : all_perms(degree)) std::cout << to_string(p) << "\n";
  } else if (family == "irr-perms") {
    for (auto& p : irr_perms(degree)) std::cout << to_string(p) << "\n";
  } else if (family == "binary-trees") {
    for (auto& t : enum_binary_trees(degree, {"c1"})) std::cout << to_string(t) << "\n";
  } else if (family == "trees") {
    ThetaTable t = ThetaTable::default_xi(std::max(degree, 1));
    // rename to the corolla color family for display
    ThetaTable ct;
    for (int k = 1; k <= std::max(degree, 1); ++k) ct.add_color("c" + std::to_string(k), k);
    for (auto& tr : enum_trees(degree, ct)) std::cout << to_string(tr) << "\n";
    (void)t;
  } else {
    std::cerr << "unknown family: " << family << "\n";
    return 2;
  }
  return 0;
}

int cmd_mul(const Options& o, const std::string& algebra, const std::string& op,
            const std::string& gamma_s, int i, const std::string& lhs, const std::string& rhs) {
  auto finish = [&](auto&& lin) {
    if (o.format == "json")
      std::cout << lin_to_json(lin) << "\n";
    else
      std::cout << lin_to_string(lin) << "\n";
    return 0;
  };
  if (algebra == "mr" || algebra == "as1") {
    Lin<Perm> x = parse_perm_lin(lhs), y = parse_perm_lin(rhs);
    AlgebraOps<Perm> ops = mr_ops();
    if (algebra == "as1") {
      if (op != "i") {
        std::cerr << "as1 supports only --op i\n";
        return 2;
      }
      return finish(bilinear_extend<Perm, Perm>(
          [&](const Perm& a, const Perm& b) { return Lin<Perm>(as1_mul(a, i, b)); }, x, y));
    }
    if (op == "gamma") return finish(ops.gamma(x, parse_perm(gamma_s), y));
    if (op == "i") return finish(ops.insert(x, i, y));
    if (op == "zero") return finish(ops.bottom(x, y));
    if (op == "top") return finish(ops.top(x, y));
    if (op == "star") return finish(star(x, y));
    if (op == "succ") return finish(dendriform_succ(x, y));
    if (op == "prec") return finish(dendriform_prec(x, y));
    if (op == "brace") return finish(brace(ops, x, y));
  } else if (algebra == "psh" || algebra == "kw" || algebra == "pqsym" || algebra == "fw") {
    Lin<Word> x = parse_word_lin(lhs, algebra == "pqsym");
    Lin<Word> y = parse_word_lin(rhs, algebra == "pqsym");
    AlgebraOps<Word> ops = word_ops();
    if (op == "gamma") return finish(ops.gamma(x, parse_perm(gamma_s), y));
    if (op == "i") return finish(ops.insert(x, i, y));
    if (op == "zero") return finish(ops.bottom(x, y));
    if (op == "top") return finish(ops.top(x, y));
    if (op == "star") return finish(star(x, y));
    if (op == "brace") return finish(brace(ops, x, y));
  } else if (algebra == "trees" || algebra == "ytrees") {
    Lin<Tree> x = parse_tree_lin(lhs), y = parse_tree_lin(rhs);
    AlgebraOps<Tree> ops = tree_ops();
    if (op == "i") return finish(ops.insert(x, i, y));
    if (op == "zero" || op == "over") return finish(duplicial_over(x, y));
    if (op == "top" || op == "under") return finish(duplicial_under(x, y));
    if (op == "brace") return finish(brace(ops, x, y));
    if (op == "gamma") {
      DeltaFn<Tree> d = [](const Tree& s) { return delta_pr(s); };
      return finish(shuffle_from_grafting(ops, d, x, parse_perm(gamma_s), y));
    }
  } else if (algebra == "2ass") {
    Lin<TWord> x = parse_tword_lin(lhs), y = parse_tword_lin(rhs);
    if (op == "dot")
      return finish(bilinear_extend<TWord, TWord>(
          [](const TWord& a, const TWord& b) { return Lin<TWord>(twoass_dot(a, b)); }, x, y));
    if (op == "circ")
      return finish(bilinear_extend<TWord, TWord>(
          [](const TWord& a, const TWord& b) { return Lin<TWord>(twoass_circ(a, b)); }, x, y));
    if (op == "mu") return finish(op_mu({x, y}));
  } else {
    std::cerr << "unknown algebra: " << algebra << "\n";
    return 2;
  }
  std::cerr << "unsupported op '" << op << "' for algebra '" << algebra << "'\n";
  return 2;
}

int cmd_comul(const Options& o, const std::string& algebra, const std::string& elem) {
  if (algebra == "mr") {
    Tensor<Perm> t = delta_lin<Perm>([](const Perm& p) { return delta_mr(p); },
                                     parse_perm_lin(elem));
    std::cout << (o.format == "json" ? tensor_to_json(t) : tensor_to_string(t)) << "\n";
    return 0;
  }
  if (algebra == "psh" || algebra == "kw") {
    ThetaTable table = the_table(o, 10);
    if (elem.find("colors=") != std::string::npos || !table.single_per_degree()) {
      Lin<CWord> u(parse_cword(elem, table));
      Tensor<CWord> t =
          delta_lin<CWord>([&](const CWord& f) { return delta_theta(f, table); }, u);
      std::cout << (o.format == "json" ? tensor_to_json(t) : tensor_to_string(t)) << "\n";
      return 0;
    }
    Tensor<Word> t = delta_lin<Word>([&](const Word& f) { return delta_theta(f, table); },
                                     parse_word_lin(elem));
    std::cout << (o.format == "json" ? tensor_to_json(t) : tensor_to_string(t)) << "\n";
    return 0;
  }
  if (algebra == "pqsym") {
    Tensor<Word> t = delta_lin<Word>([](const Word& f) { return delta_pqsym(f); },
                                     parse_word_lin(elem, true));
    std::cout << (o.format == "json" ? tensor_to_json(t) : tensor_to_string(t)) << "\n";
    return 0;
  }
  if (algebra == "ytrees") {
    Tensor<Tree> t = delta_lin<Tree>([](const Tree& s) { return delta_pr(s); },
                                     parse_tree_lin(elem));
    std::cout << (o.format == "json" ? tensor_to_json(t) : tensor_to_string(t)) << "\n";
    return 0;
  }
  if (algebra == "trees") {
    ThetaTable table = the_table(o, 10);
    Tensor<Tree> t = delta_lin<Tree>([&](const Tree& s) { return delta_theta_tree(s, table); },
                                     parse_tree_lin(elem));
    std::cout << (o.format == "json" ? tensor_to_json(t) : tensor_to_string(t)) << "\n";
    return 0;
  }
  if (algebra == "as1") {
    Tensor<Perm> t = delta_lin<Perm>([](const Perm& p) { return delta_as1(p); },
                                     parse_perm_lin(elem));
    std::cout << (o.format == "json" ? tensor_to_json(t) : tensor_to_string(t)) << "\n";
    return 0;
  }
  if (algebra == "2ass") {
    Tensor<TWord> t = delta_lin<TWord>([](const TWord& w) { return delta_twoass(w); },
                                       parse_tword_lin(elem));
    std::cout << (o.format == "json" ? tensor_to_json(t) : tensor_to_string(t)) << "\n";
    return 0;
  }
  std::cerr << "unknown algebra: " << algebra << "\n";
  return 2;
}

int cmd_prim(const Options& o, const std::string& algebra, int degree, const std::string& basis) {
  if (basis == "E") {
    if (algebra == "mr") {
      for (auto& s : irr_perms(degree))
        std::cout << "E[" << to_string(s) << "] = " << lin_to_string(E_sigma(s)) << "\n";
      return 0;
    }
    if (algebra == "psh") {
      ThetaTable table = the_table(o, std::max(degree, 2));
      for (auto& f : irr_surjections(degree))
        std::cout << "E[" << to_string(f) << "] = " << lin_to_string(E_theta(f, table)) << "\n";
      return 0;
    }
    std::cerr << "E-basis available for algebras mr and psh\n";
    return 2;
  }
  auto emit = [&](auto&& pb) {
    for (std::size_t k = 0; k < pb.elements.size(); ++k)
      std::cout << pb.provenance[k] << " " << lin_to_string(pb.elements[k]) << "\n";
    std::cout << "dim " << pb.elements.size() << "\n";
    return 0;
  };
  if (algebra == "mr") return emit(prim_basis(mr_view(), degree));
  if (algebra == "psh") {
    ThetaTable table = the_table(o, std::max(degree, 2));
    return emit(prim_basis(psym_view(table), degree));
  }
  if (algebra == "pqsym") return emit(prim_basis(pqsym_view(), degree));
  if (algebra == "ytrees") return emit(prim_basis(dup_view({"c1"}), degree));
  if (algebra == "2ass") return emit(prim_basis(twoass_view({"e"}), degree));
  std::cerr << "unknown algebra: " << algebra << "\n";
  return 2;
}

int cmd_boundary(const Options& o, int degree, bool check_square, bool report,
                 const std::string& elem) {
  ThetaTable table = the_table(o, std::max(degree + 1, 10));
  if (!elem.empty()) {
    Lin<Word> u = parse_word_lin(elem);
    Lin<Word> d = boundary(table, u);
    std::cout << (o.format == "json" ? lin_to_json(d) : lin_to_string(d)) << "\n";
    return 0;
  }
  if (check_square) {
    auto witness = d_squared_witness(table, degree);
    if (witness) {
      std::cout << "FAIL witness " << to_string(*witness) << "\n";
      return 1;
    }
    std::cout << "d.d = 0 on all of degree " << degree << "\n";
    return 0;
  }
  if (report) {
    ComplexReport rep = complex_report(table, degree);
    if (o.format == "json") {
      std::cout << to_json(rep) << "\n";
    } else {
      std::cout << "n = " << rep.n << "\n";
      for (std::size_t r = 0; r < rep.dims.size(); ++r)
        std::cout << "weight " << r + 1 << ": dim " << rep.dims[r] << " rank "
                  << rep.ranks[r] << " homology " << rep.homology[r] << "\n";
      std::cout << "euler " << rep.euler.str() << "\n";
    }
    return 0;
  }
  std::cerr << "boundary: need --elem, --check-square or --report\n";
  return 2;
}

int cmd_verify(const Options& o, const std::string& suite, int max_degree) {
  std::vector<SuiteReport> failed;
  auto emit = [&](const SuiteReport& rep) {
    if (o.format == "json") {
      std::cout << rep.to_json() << "\n";
    } else {
      std::cout << rep.name << ": " << (rep.passed() ? "pass" : "FAIL") << " (" << rep.cases
                << " cases, cap " << rep.cap << ", " << rep.millis << " ms"
                << (rep.report_only ? ", report-only" : "") << ")\n";
      for (auto& v : rep.violations)
        std::cout << "  violation " << v.case_id << ": " << v.detail << "\n";
    }
    if (!rep.report_only && !rep.passed()) failed.push_back(rep);
  };
  if (suite == "all") {
    for (auto& rep : run_battery(o.seed)) emit(rep);
  } else if (suite_exists(suite)) {
    emit(run_suite(suite, max_degree, o.seed));
  } else {
    std::cerr << "unknown suite: " << suite << "\n";
    return 2;
  }
  if (failed.empty()) return 0;
  std::ofstream out("verify-report.json");
  out << "[";
  for (std::size_t i = 0; i < failed.size(); ++i) {
    if (i) out << ',';
    out << failed[i].to_json();
  }
  out << "]\n";
  std::cerr << "verification failed; report written to verify-report.json\n";
  return 1;
}

int cmd_dims(const Options& o, int max_degree) {
  auto rows = dims_report(max_degree);
  if (o.format == "json") {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) out += ',';
      out += "{\"family\":\"" + rows[i].family + "\",\"degree\":" + std::to_string(rows[i].degree) +
             ",\"computed\":\"" + rows[i].computed.str() + "\",\"expected\":\"" +
             rows[i].expected.str() + "\",\"match\":" + (rows[i].match ? "true" : "false") + "}";
    }
    std::cout << out << "]\n";
  } else {
    for (auto& r : rows)
      std::cout << r.family << " n=" << r.degree << " computed=" << r.computed.str()
                << " expected=" << r.expected.str() << (r.match ? " ok" : " MISMATCH") << "\n";
  }
  for (auto& r : rows)
    if (!r.match) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorial (bi)algebras on permutations, words and trees"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  app.add_option("--theta", opt.theta, "theta table JSON file or 'default'");
  app.add_option("--seed", opt.seed);

  std::string family, algebra, op, gamma_s, lhs, rhs, elem, suite = "all", basis = "e";
  int i = 0;
  bool check_square = false, report = false;

  auto* c_enum = app.add_subcommand("enum", "enumerate a graded family");
  c_enum->fallthrough();
  c_enum->add_option("--family", family)->required();
  c_enum->add_option("--degree", opt.degree)->required();

  auto* c_mul = app.add_subcommand("mul", "multiply two elements");
  c_mul->fallthrough();
  c_mul->add_option("--algebra", algebra)->required();
  c_mul->add_option("--op", op)->required();
  c_mul->add_option("--gamma", gamma_s);
  c_mul->add_option("--i", i);
  c_mul->add_option("--lhs", lhs)->required();
  c_mul->add_option("--rhs", rhs)->required();

  auto* c_comul = app.add_subcommand("comul", "apply the reduced coproduct");
  c_comul->fallthrough();
  c_comul->add_option("--algebra", algebra)->required();
  c_comul->add_option("--elem", elem)->required();

  auto* c_prim = app.add_subcommand("prim", "primitive bases");
  c_prim->fallthrough();
  c_prim->add_option("--algebra", algebra)->required();
  c_prim->add_option("--degree", opt.degree)->required();
  c_prim->add_option("--basis", basis)->check(CLI::IsMember({"e", "E"}));

  auto* c_bnd = app.add_subcommand("boundary", "the twisted boundary operator");
  c_bnd->fallthrough();
  c_bnd->add_option("--degree", opt.degree);
  c_bnd->add_flag("--check-square", check_square);
  c_bnd->add_flag("--report", report);
  c_bnd->add_option("--elem", elem);

  auto* c_verify = app.add_subcommand("verify", "run verification suites");
  c_verify->fallthrough();
  c_verify->add_option("--suite", suite);
  c_verify->add_option("--max-degree", opt.max_degree);

  auto* c_dims = app.add_subcommand("dims", "primitive dimension tables");
  c_dims->fallthrough();
  c_dims->add_option("--max-degree", opt.max_degree)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_enum->parsed()) return cmd_enum(family, opt.degree, opt.format);
    if (c_mul->parsed()) return cmd_mul(opt, algebra, op, gamma_s, i, lhs, rhs);
    if (c_comul->parsed()) return cmd_comul(opt, algebra, elem);
    if (c_prim->parsed()) return cmd_prim(opt, algebra, opt.degree, basis);
    if (c_bnd->parsed()) return cmd_boundary(opt, opt.degree, check_square, report, elem);
    if (c_verify->parsed()) return cmd_verify(opt, suite, opt.max_degree);
    if (c_dims->parsed()) return cmd_dims(opt, opt.max_degree);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
