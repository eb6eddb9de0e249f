#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "z2z4/codefile.hpp"
#include "z2z4/structures.hpp"
#include "z2z4/verify.hpp"

namespace z2z4::cli {

namespace {

struct Usage : Error {
  using Error::Error;
};

CoordPermutation parse_perm(const std::string& text, unsigned n) {
  std::istringstream in(text);
  std::vector<unsigned> img;
  std::string tok;
  while (in >> tok) {
    unsigned v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) throw Usage("permutation entries must be integers: " + tok);
    img.push_back(v);
  }
  if (img.size() != n)
    throw Usage("permutation has " + std::to_string(img.size()) + " entries, expected " + std::to_string(n));
  return CoordPermutation(img);
}

Involution parse_involution(const std::string& text, unsigned n) {
  const CoordPermutation p = parse_perm(text, n);
  if (!p.is_involution()) throw Usage("permutation is not an involution");
  return Involution(p);
}

std::string type_str(const StructureType& t) {
  return "(" + std::to_string(t.alpha) + "," + std::to_string(t.beta) + ")";
}

void emit(const CodeFile& f, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << render(f);
  else
    write_codefile(path, f);
}

Family parse_family(const std::string& s) {
  if (s == "mixed") return Family::mixed;
  if (s == "z4") return Family::z4;
  throw Usage("family must be 'mixed' or 'z4'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Z2Z4-linear codes: constructions, symmetry groups and structures", "z2z4"};
  app.require_subcommand(1);
  std::uint64_t max_span = kDefaultMaxSpan;
  double timeout_s = 0;
  app.add_option("--max-span", max_span, "Largest code the tools will enumerate")->capture_default_str();
  app.add_option("--timeout-s", timeout_s, "Symmetry search budget in seconds, 0 for none")->capture_default_str();

  int r = 0, t = 0;
  std::string output, file, pi_text, tau_text, family = "mixed", kind, claim;
  auto add_rt = [&](CLI::App* s) {
    s->add_option("--r", r, "Parameter r");
    s->add_option("--t", t, "Parameter t");
  };

  auto* construct = app.add_subcommand("construct", "Build a code and write it as a code file");
  construct
      ->add_option("kind", kind, "perfect|eperfect|z4eperfect|hadamard|octacode|nr|hamming7")
      ->required()
      ->check(CLI::IsMember({"perfect", "eperfect", "z4eperfect", "hadamard", "octacode", "nr", "hamming7"}));
  add_rt(construct);
  construct->add_option("--family", family, "hadamard: dual of the mixed or z4 family")->capture_default_str();
  construct->add_option("-o", output, "Output file (default stdout)");

  auto file_cmd = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("file", file, "Code file")->required();
    return s;
  };
  auto* gray = file_cmd("gray", "Gray image of an additive code");
  gray->add_option("-o", output, "Output file (default stdout)");
  auto* ungray = file_cmd("ungray", "Additive code whose Gray image is the binary code");
  ungray->add_option("-o", output, "Output file (default stdout)");
  auto* dual_cmd = file_cmd("dual", "Dual of an additive code");
  dual_cmd->add_option("-o", output, "Output file (default stdout)");
  auto* rank_cmd = file_cmd("rank", "Dimension of the linear span");
  auto* classify_cmd = file_cmd("classify", "perfect, extended_perfect, preparata_like or none");
  auto* distance_cmd = file_cmd("distance", "Minimum distance");
  auto* sym = file_cmd("sym", "Symmetry group order and generators");
  sym->add_option("--pi", pi_text, "Involution as an image list; also prints |Sym_pi|");
  auto* structures = file_cmd("structures", "All Z2Z4 structures of the code");
  auto* witness = file_cmd("witness", "Weight-4 pair showing two structures conflict");
  witness->add_option("--pi", pi_text, "Structure the code is closed under")->required();
  witness->add_option("--tau", tau_text, "Second involution")->required();
  auto* complete = file_cmd("complete", "Extended 1-perfect code containing a Preparata-like code");
  complete->add_option("-o", output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Recompute a result and check it");
  verify->add_option("claim", claim, "Claim name")->required()->check(CLI::IsMember(verify_claims()));
  add_rt(verify);
  verify->add_option("--family", family, "theorem1: mixed or z4")->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto opt_rt = [&](CLI::App* s) {
    VerifyOptions v;
    if (s->count("--r")) v.r = r;
    if (s->count("--t")) v.t = t;
    return v;
  };
  auto params = [&](CLI::App* s) {
    if (!s->count("--r") || !s->count("--t")) throw Usage("--r and --t are required");
    return PerfectParams{r, t};
  };
  SymmetryOptions symopts;
  symopts.timeout_s = timeout_s;

  try {
    if (construct->parsed()) {
      CodeFile f;
      if (kind == "perfect") f = to_file(construct_perfect(params(construct)));
      else if (kind == "eperfect") f = to_file(construct_extended_perfect(params(construct)));
      else if (kind == "z4eperfect") f = to_file(construct_z4_extended_perfect(params(construct)));
      else if (kind == "hadamard") f = to_file(hadamard_dual(params(construct), parse_family(family)));
      else if (kind == "octacode") f = to_file(octacode());
      else if (kind == "nr") f = to_file(nordstrom_robinson(), 0, 8);
      else f = to_file(hamming7_fixture());
      emit(f, output, out);
      return 0;
    }
    if (verify->parsed()) {
      VerifyOptions v = opt_rt(verify);
      v.family = parse_family(family);
      v.sym = symopts;
      v.max_span = max_span;
      return run_verify(claim, v, out);
    }

    const CodeFile f = read_codefile(file);
    if (gray->parsed()) {
      if (f.kind != CodeFile::Kind::additive) throw Usage("gray expects an additive code file");
      emit(to_file(binary_from(f, max_span), f.alpha, f.beta), output, out);
      return 0;
    }
    if (ungray->parsed()) {
      if (f.kind != CodeFile::Kind::binary) throw Usage("ungray expects a binary code file");
      const BinaryCode c = binary_from(f);
      std::vector<Word> gens;
      if (!is_closed_under_star(c, standard_involution(f.alpha, f.beta), {}, &gens))
        throw PreconditionViolation("the words are not the Gray image of an additive code of this type");
      std::vector<MixedWord> rows;
      for (Word g : gens) rows.push_back(gray_inv(BinaryWord(f.n, g), f.alpha, f.beta));
      emit(to_file(AdditiveCode(f.alpha, f.beta, std::move(rows))), output, out);
      return 0;
    }
    if (dual_cmd->parsed()) {
      if (f.kind != CodeFile::Kind::additive) throw Usage("dual expects an additive code file");
      emit(to_file(dual(additive_from(f))), output, out);
      return 0;
    }

    const BinaryCode code = binary_from(f, max_span);
    const Involution standard = standard_involution(f.alpha, f.beta);
    MinDistanceOptions md;
    md.structure = &standard;
    if (rank_cmd->parsed()) {
      out << "rank " << rank(code) << '\n';
    } else if (classify_cmd->parsed()) {
      out << to_string(classify(code, md)) << '\n';
    } else if (distance_cmd->parsed()) {
      out << "distance " << min_distance(code, md) << '\n';
    } else if (sym->parsed()) {
      std::optional<Involution> pi;
      if (!pi_text.empty()) pi = parse_involution(pi_text, code.length());
      SymmetryOptions o = symopts;
      o.structure = pi ? &*pi : &standard;
      const SymmetryResult s = symmetry_group(code, o);
      out << "order " << s.group.order() << '\n';
      out << "certified " << (s.certified ? "yes" : "no") << '\n';
      out << "generators " << s.generators.size() << '\n';
      for (const auto& g : s.generators) out << "  " << g.to_string() << '\n';
      if (pi) out << "sym_pi order " << sym_pi(s.group, *pi).order() << '\n';
      if (!s.certified) {
        err << "error: symmetry search timed out; the group above is partial\n";
        return 2;
      }
    } else if (structures->parsed()) {
      SymmetryOptions o = symopts;
      o.structure = &standard;
      const SymmetryResult s = symmetry_group(code, o);
      if (!s.certified) throw BudgetExceeded("symmetry search timed out");
      const StructureReport rep = enumerate_structures(code, s.group, file);
      out << "code " << rep.code_id << '\n'
          << "sym order " << s.group.order() << '\n'
          << "involutions in sym " << rep.involutions_in_sym << '\n'
          << "conjugacy classes " << rep.conjugacy_classes << '\n'
          << "linear " << (rep.is_linear ? "yes" : "no") << '\n'
          << "structures " << rep.structures.size() << '\n';
      for (std::size_t k = 0; k < rep.structures.size(); ++k)
        out << "  " << rep.structures[k].perm().to_string() << "  type " << type_str(rep.types[k]) << "  "
            << rep.structures[k].perm().to_cycle_string() << '\n';
    } else if (witness->parsed()) {
      const Involution pi = parse_involution(pi_text, code.length());
      const Involution tau = parse_involution(tau_text, code.length());
      const auto w = conflict_witness(code, pi, tau);
      if (!w) {
        out << "NotFound\n";
      } else {
        out << "i " << w->i << '\n'
            << "v " << w->v.to_string() << '\n'
            << "u " << w->u.to_string() << '\n'
            << "v*pi u " << w->p1.to_string() << '\n'
            << "v*tau u " << w->p2.to_string() << '\n'
            << "distance " << distance(w->p1, w->p2) << '\n';
      }
    } else if (complete->parsed()) {
      emit(to_file(complete_to_extended_perfect(code), f.alpha, f.beta), output, out);
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace z2z4::cli
